#include "arrlocal/matrix.hpp"

#include "arrlocal/kernels.hpp"

#include <sstream>

namespace arrlocal {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

} // namespace

QMatrix identity(std::size_t n) { return scalar_matrix(n, Rational(1)); }

QMatrix scalar_matrix(std::size_t n, const Rational& s) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "add");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "subtract");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()));
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
    return out;
}

QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols() != v.size()) throw ShapeError("matrix-vector: length mismatch");
    QVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

bool is_zero(const QMatrix& a) {
    for (const auto& x : a.entries())
        if (x != 0) return false;
    return true;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("from_rows: ragged row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::string to_string(const QMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

RowEchelon rref(const QMatrix& m) {
    const IntegerEchelon ech = kernels::bareiss_echelon(m);
    const std::size_t r = ech.rank();
    QMatrix red(r, m.cols());
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& p = ech.at(i, ech.pivots[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v(ech.at(i, j), p);
            v.canonicalize();
            red(i, j) = v;
        }
    }
    // Back substitution: clear above each pivot, bottom up.
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = ech.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = red(i, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) red(i, j) -= f * red(k, j);
        }
    }
    return {std::move(red), ech.pivots};
}

RankKernel rank_and_kernel(const QMatrix& m) {
    RowEchelon e = rref(m);
    RankKernel out;
    out.rank = e.pivots.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const QMatrix& m) { return kernels::rank_bareiss(m); }

} // namespace arrlocal
