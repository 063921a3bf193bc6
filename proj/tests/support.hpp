#pragma once

#include "arrlocal/matrix.hpp"
#include "arrlocal/rational.hpp"

#include <random>

namespace arrlocal::test {

inline QMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

inline QMatrix q(std::size_t rows, std::size_t cols, std::initializer_list<long> v) {
    std::vector<Rational> e;
    for (long x : v) e.emplace_back(x);
    return QMatrix(rows, cols, std::move(e));
}

inline Rational r(long p, long q = 1) {
    Rational x(p, q);
    x.canonicalize();
    return x;
}

// Small random rationals with zero sum.
inline std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t m, long den = 6) {
    std::uniform_int_distribution<long> num(-2 * den, 2 * den);
    std::vector<Rational> w(m);
    Rational total = 0;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        w[j] = r(num(rng), den);
        total += w[j];
    }
    w[m - 1] = -total;
    return w;
}

} // namespace arrlocal::test
