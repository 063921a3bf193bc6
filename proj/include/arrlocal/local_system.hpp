#pragma once

#include "arrlocal/lattice.hpp"
#include "arrlocal/matrix.hpp"
#include "arrlocal/rational.hpp"

#include <string_view>
#include <vector>

namespace arrlocal {

// Rank-one weights lambda_1..lambda_m with zero sum.
class WeightSystem {
public:
    // Throws PreconditionError when the weights do not sum to zero.
    explicit WeightSystem(std::vector<Rational> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    const Rational& operator[](std::size_t index) const { return weights_.at(index - 1); }

private:
    std::vector<Rational> weights_;
};

// Residue matrices P_1..P_m, each r x r, with zero sum.
class EndoSystem {
public:
    // Throws ShapeError / PreconditionError.
    EndoSystem(std::size_t rank, std::vector<QMatrix> matrices);
    explicit EndoSystem(const WeightSystem& w);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return matrices_.size(); }
    const std::vector<QMatrix>& matrices() const noexcept { return matrices_; }
    const QMatrix& operator[](std::size_t index) const { return matrices_.at(index - 1); }

    // P_j + k_j I for integers k with zero sum.
    EndoSystem translated(const std::vector<long>& shift) const;

private:
    std::size_t rank_;
    std::vector<QMatrix> matrices_;
};

// P_X: sum of P_j over the hyperplanes containing X.
QMatrix residue_matrix(const EndoSystem& s, const IndexSet& indices);

// One line of comma- or whitespace-separated rationals.
WeightSystem parse_weights(std::string_view text);
// JSON {"rank": r, "matrices": [m arrays of r x r rational strings]}.
EndoSystem parse_endos(std::string_view json_text);

struct FlatnessReport {
    bool flat = true;
    // (j, X) with [P_j, P_X] != 0, X a codim-2 edge inside H_j.
    std::vector<std::pair<std::size_t, IndexSet>> violations;
};

// Throws ShapeError when the system size differs from the arrangement.
FlatnessReport check_flat(const EndoSystem& s, const IntersectionLattice& lattice);

} // namespace arrlocal
