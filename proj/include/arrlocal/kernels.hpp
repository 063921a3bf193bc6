#pragma once

// Elimination kernels. The parallel versions (namespace kernels) distribute
// the row updates of each pivot step over OpenMP threads; the serial
// reference versions (namespace reference) are straightforward textbook
// elimination kept as an independent check in the tests and benchmarks.

#include "arrlocal/cyclotomic.hpp"
#include "arrlocal/matrix.hpp"

#include <cstddef>
#include <vector>

namespace arrlocal {

// Row echelon form of an integer matrix produced by fraction-free
// elimination: rows [0, rank) are nonzero, pivot i sits in column pivots[i].
struct IntegerEchelon {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> entries; // row-major
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
    const Integer& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

struct CycloEchelon {
    CycloMatrix echelon;
    std::vector<std::size_t> pivots;
};

namespace kernels {

// Rows below this count are eliminated without spawning threads.
inline constexpr std::size_t parallel_row_threshold = 16;

// Clears denominators row by row, then runs Bareiss elimination.
IntegerEchelon bareiss_echelon(const QMatrix& m);

std::size_t rank_bareiss(const QMatrix& m);

// Gauss elimination over Q(zeta_d) with inverses modulo Phi_d.
CycloEchelon cyclo_echelon(const CycloMatrix& m);

} // namespace kernels

namespace reference {

// Naive Gauss-Jordan over Q: first nonzero pivot, full rational arithmetic.
std::size_t rank_gauss(const QMatrix& m);

std::size_t rank_cyclo_gauss(const CycloMatrix& m);

} // namespace reference

} // namespace arrlocal
