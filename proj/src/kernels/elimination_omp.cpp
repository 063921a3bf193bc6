#include "arrlocal/kernels.hpp"

#include <utility>

namespace arrlocal::kernels {

IntegerEchelon bareiss_echelon(const QMatrix& m) {
    IntegerEchelon out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.entries.resize(m.rows() * m.cols());
    const long rows = static_cast<long>(m.rows());
    const std::size_t cols = m.cols();

    // Scale each row by the lcm of its denominators.
#pragma omp parallel for schedule(static) if (m.rows() >= parallel_row_threshold)
    for (long i = 0; i < rows; ++i) {
        Integer l = 1;
        for (const auto& x : m.row(static_cast<std::size_t>(i)))
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& x = m(static_cast<std::size_t>(i), j);
            out.entries[static_cast<std::size_t>(i) * cols + j] = x.get_num() * (l / x.get_den());
        }
    }

    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return out.entries[i * cols + j]; };

    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));

        const Integer pivot = at(r, c);
        const long first = static_cast<long>(r + 1);
        // Each row below the pivot is updated independently:
        // a_ij <- (a_rc a_ij - a_ic a_rj) / prev, exact by Sylvester's identity.
#pragma omp parallel for schedule(dynamic, 4) if (m.rows() - r >= parallel_row_threshold)
        for (long ii = first; ii < rows; ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            const Integer factor = at(i, c);
            Integer tmp;
            for (std::size_t j = c + 1; j < cols; ++j) {
                tmp = pivot * at(i, j);
                if (factor != 0) tmp -= factor * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = pivot;
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank_bareiss(const QMatrix& m) { return bareiss_echelon(m).rank(); }

CycloEchelon cyclo_echelon(const CycloMatrix& m) {
    common_field(m);
    CycloEchelon out{m, {}};
    CycloMatrix& a = out.echelon;
    const long rows = static_cast<long>(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(a(p, j), a(r, j));

        const CycloElem inv = a(r, c).inverse();
        const long first = static_cast<long>(r + 1);
#pragma omp parallel for schedule(dynamic, 2) if (m.rows() - r >= parallel_row_threshold)
        for (long ii = first; ii < rows; ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            if (a(i, c).is_zero()) continue;
            const CycloElem f = a(i, c) * inv;
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                if (a(r, j).is_zero()) continue;
                a(i, j) = a(i, j) - f * a(r, j);
            }
            a(i, c) = CycloElem{};
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

} // namespace arrlocal::kernels
