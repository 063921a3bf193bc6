#pragma once

#include "arrlocal/lattice.hpp"
#include "arrlocal/local_system.hpp"
#include "arrlocal/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrlocal {

// kohno: every edge, no integer eigenvalue of P_X.
// stv:   every dense edge, no eigenvalue in Z>=0.
// thm33: stv plus pairwise commuting residues.
// ah:    every dense edge inside H (H included), no integer eigenvalue.
enum class Condition { kohno, stv, ah, thm33 };

std::string_view to_string(Condition c);
// Throws ParseError for unknown names.
Condition parse_condition(std::string_view name);

struct Residue {
    IndexSet flat;
    QMatrix value;
};

// Throws DomainError when X is not an edge of the lattice.
Residue residue(const EndoSystem& s, const IntersectionLattice& lattice, const IndexSet& x);

struct MonodromyClass {
    IndexSet flat;
    QPolynomial charpoly;
    // Eigenvalues of P_X mod 1 in [0, 1), when P_X is triangular.
    std::optional<std::vector<Rational>> exponents;
    // T_X ~ exp(2 pi i P_X) has eigenvalue 1 iff P_X has an integer eigenvalue.
    bool admits_one = false;
};

MonodromyClass monodromy_class(const EndoSystem& s, const IntersectionLattice& lattice, const IndexSet& x);

struct Violation {
    IndexSet flat;
    Integer integer_root;
};

struct NonresReport {
    Condition condition = Condition::kohno;
    bool holds = false;
    std::optional<std::size_t> hyperplane;
    std::vector<Violation> violations;
    // thm33 only: failed commutativity hypotheses, "P_i,P_j".
    std::vector<std::string> hypothesis_failures;
};

// Throws PreconditionError when ah is asked without a hyperplane, DomainError
// for an out-of-range hyperplane, ShapeError on size mismatch.
NonresReport check_condition(const EndoSystem& s, Condition kind, const IntersectionLattice& lattice,
                             std::optional<std::size_t> hyperplane = std::nullopt);

struct ShiftResult {
    EndoSystem system;
    long q = 0;
};

// P_H + (m-1)q I and P_j - q I otherwise, q a positive integer beyond every
// eigenvalue modulus of P_Y over dense Y not inside H. Requires ah(H);
// the result is asserted stv-nonresonant (InvariantViolation otherwise).
ShiftResult prop4_shift(const EndoSystem& s, std::size_t hyperplane, const IntersectionLattice& lattice);

// Smallest H passing ah(H). Integer translates move every eigenvalue of P_X
// by an integer, so this also answers whether some translate passes.
std::optional<std::size_t> translate_exists(const EndoSystem& s, const IntersectionLattice& lattice);

} // namespace arrlocal
