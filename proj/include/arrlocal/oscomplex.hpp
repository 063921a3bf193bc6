#pragma once

#include "arrlocal/arrangement.hpp"
#include "arrlocal/lattice.hpp"
#include "arrlocal/local_system.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace arrlocal {

// Minimal dependent sets of forms. For affine arrangements: minimal
// dependent sets with nonempty intersection, plus minimal sets with empty
// intersection. Throws ResourceError above 30 hyperplanes.
std::vector<IndexSet> circuits(const Arrangement& a);

struct NBCBasis {
    // 1-based hyperplane indices, earliest first.
    std::vector<std::size_t> ordering;
    // monomials[q]: degree-q basis monomials, each listed in ordering order.
    std::vector<std::vector<IndexSet>> monomials;

    std::vector<std::size_t> dims() const;
};

// Orlik-Solomon algebra of an affine or central arrangement, presented on
// its no-broken-circuit basis. Affine arrangements are handled through their
// projective closure with the hyperplane at infinity first in the order;
// monomials through infinity span the ideal that is factored out.
class OrlikSolomonAlgebra {
public:
    // `ordering` defaults to input order.
    explicit OrlikSolomonAlgebra(const Arrangement& a, std::optional<std::vector<std::size_t>> ordering = {});

    const NBCBasis& basis() const noexcept { return basis_; }
    std::size_t top_degree() const noexcept { return basis_.monomials.size() - 1; }

    // e_j * (basis monomial i of degree q) in the degree q+1 basis.
    std::vector<std::pair<std::size_t, Rational>> multiply(std::size_t hyperplane, std::size_t degree,
                                                           std::size_t i) const;

    // Expresses the exterior monomial e_{i1}...e_{ik} (given in this order)
    // in the NBC basis of degree k.
    std::vector<std::pair<std::size_t, Rational>> express(const std::vector<std::size_t>& monomial) const;

private:
    using Mask = std::uint64_t;
    using Combination = std::vector<std::pair<Mask, Rational>>;

    const Combination& straighten(Mask positions) const;
    std::vector<std::pair<std::size_t, Rational>> to_basis(const Combination& c, int sign) const;

    std::size_t offset_;               // 1 when position 0 is the hyperplane at infinity
    std::vector<std::size_t> position_; // hyperplane index -> position
    std::vector<std::size_t> hyperplane_at_; // position -> hyperplane index (0 for infinity)
    VectorMatroid matroid_;
    NBCBasis basis_;
    std::vector<std::unordered_map<Mask, std::size_t>> basis_index_;
    mutable std::unordered_map<Mask, Combination> memo_;
};

NBCBasis nbc_basis(const Arrangement& a, std::optional<std::vector<std::size_t>> ordering = {});

// (B, omega) with omega = sum_j e_j (x) P_j. Projective input is computed on
// decone(a, h), h = decone_choice (default last); the deconed hyperplane's
// residue is carried by the zero-sum constraint.
struct AomotoComplex {
    NBCBasis basis;
    std::size_t coefficient_rank = 1;
    // differentials[q]: matrix of omega from degree q to q+1, rows = target.
    std::vector<QMatrix> differentials;
    std::optional<std::size_t> decone_choice;
};

// Throws ShapeError on size mismatch, PreconditionError when r >= 2 and the
// system fails the flatness test.
AomotoComplex aomoto_complex(const Arrangement& a, const EndoSystem& s,
                             std::optional<std::size_t> decone_choice = std::nullopt,
                             std::optional<std::vector<std::size_t>> ordering = std::nullopt);
AomotoComplex aomoto_complex(const Arrangement& a, const WeightSystem& w,
                             std::optional<std::size_t> decone_choice = std::nullopt,
                             std::optional<std::vector<std::size_t>> ordering = std::nullopt);

// h^q = dim ker d^q - rank d^{q-1}.
std::vector<std::size_t> aomoto_cohomology(const AomotoComplex& c);

} // namespace arrlocal
