#pragma once

#include "arrlocal/arrangement.hpp"
#include "arrlocal/matrix.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace arrlocal {

// Sorted 1-based hyperplane indices.
using IndexSet = std::vector<std::size_t>;

std::uint64_t to_mask(const IndexSet& s);
IndexSet from_mask(std::uint64_t mask);
std::string to_string(const IndexSet& s);

// Rank function of a family of vectors, memoized by subset bitmask. Not
// thread-safe; give each thread its own instance.
class VectorMatroid {
public:
    explicit VectorMatroid(std::vector<QVector> vectors);

    std::size_t size() const noexcept { return vectors_.size(); }
    // Bit i of mask selects vector i (0-based).
    std::size_t rank(std::uint64_t mask) const;
    std::uint64_t closure(std::uint64_t mask) const;
    std::uint64_t full_mask() const noexcept { return size() == 64 ? ~0ULL : (1ULL << size()) - 1; }

private:
    std::vector<QVector> vectors_;
    mutable std::unordered_map<std::uint64_t, std::size_t> memo_;
};

// An edge: the set of hyperplanes containing a nonempty intersection.
struct Flat {
    IndexSet indices;
    std::size_t codim = 0;
    std::size_t multiplicity = 0;
    long mobius = 0;
    bool dense = false;
    // Rows are the homogeneous vectors of the hyperplanes in `indices`.
    QMatrix equations;

    bool contained_in(std::size_t hyperplane) const;
    std::uint64_t mask() const { return to_mask(indices); }
};

struct LatticeLimits {
    std::size_t max_hyperplanes = 30;
    std::size_t max_dim = 4;
};

class IntersectionLattice {
public:
    IntersectionLattice(Arrangement arrangement, std::vector<Flat> flats);

    const Arrangement& arrangement() const noexcept { return arrangement_; }
    // Sorted by (codim, indices); flats()[0] is the ambient space.
    const std::vector<Flat>& flats() const noexcept { return flats_; }
    std::size_t max_codim() const noexcept { return flats_.back().codim; }
    std::vector<const Flat*> flats_of_codim(std::size_t codim) const;
    const Flat* find(const IndexSet& indices) const;
    // Position of each flat of codim+1 contained in flats()[i].
    const std::vector<std::size_t>& covered_by(std::size_t i) const { return cover_.at(i); }

private:
    Arrangement arrangement_;
    std::vector<Flat> flats_;
    std::unordered_map<std::uint64_t, std::size_t> by_mask_;
    std::vector<std::vector<std::size_t>> cover_;
};

// Throws ResourceError beyond the limits.
IntersectionLattice build_lattice(const Arrangement& a, const LatticeLimits& limits = {});

// Whitney numbers b_q = sum of |mu| over codim q flats. Projective
// arrangements are measured on their decone (default: last hyperplane).
std::vector<unsigned long> betti_numbers(const IntersectionLattice& lattice);
std::vector<unsigned long> betti_numbers(const Arrangement& a, std::optional<std::size_t> decone_at = std::nullopt);

// The hyperplanes through X as an essential central arrangement of rank
// codim X. Throws DomainError when X is not a flat of the lattice.
Arrangement localize(const IntersectionLattice& lattice, const Flat& x);

inline constexpr std::size_t max_irreducibility_size = 25;

// Connectedness of the vector matroid, via fundamental circuits of a basis.
bool is_irreducible(const Arrangement& central);
// Exhaustive bipartition search: no proper S with r(S) + r(S^c) = r.
bool is_irreducible_bruteforce(const Arrangement& central);

std::vector<Flat> dense_edges(const IntersectionLattice& lattice);

} // namespace arrlocal
