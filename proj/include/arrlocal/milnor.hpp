#pragma once

#include "arrlocal/lattice.hpp"

#include <vector>

namespace arrlocal {

struct QualifyingPoint {
    IndexSet flat;
    std::size_t multiplicity = 0;
};

struct LineBound {
    std::size_t hyperplane = 0;
    std::vector<QualifyingPoint> points;
    std::size_t bound = 0;
};

struct EigenspaceBounds {
    long k = 0;
    std::vector<LineBound> per_line;
    std::size_t best_line = 0;
    std::size_t best = 0;
};

struct MilnorBoundReport {
    std::size_t m = 0;
    std::vector<EigenspaceBounds> by_k; // k = 1..m-1
};

// Sum of (m_x - 2) over points x on H with m_x > 2 and m | k m_x.
// Throws DomainError unless the arrangement is a projective line
// arrangement and 0 < k < m.
LineBound thm51_line_bound(const IntersectionLattice& lattice, std::size_t hyperplane, long k);
std::size_t thm51_bound(const Arrangement& a, std::size_t hyperplane, long k);

MilnorBoundReport spectrum_bounds(const Arrangement& a);

} // namespace arrlocal
