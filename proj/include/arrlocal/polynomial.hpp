#pragma once

#include "arrlocal/matrix.hpp"
#include "arrlocal/rational.hpp"

#include <string>
#include <vector>

namespace arrlocal {

// Univariate polynomial over Q, coefficients lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);

    static QPolynomial monomial(const Rational& c, std::size_t degree);
    static QPolynomial constant(const Rational& c) { return monomial(c, 0); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& t) const;

    QPolynomial operator-() const;
    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const Rational& s, const QPolynomial& a);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    QPolynomial monic() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    QPolynomial quotient;
    QPolynomial remainder;
};
DivMod divmod(const QPolynomial& a, const QPolynomial& b);

struct ExtendedGcd {
    QPolynomial gcd; // monic
    QPolynomial s;   // s*a + t*b = gcd
    QPolynomial t;
};
ExtendedGcd extended_gcd(const QPolynomial& a, const QPolynomial& b);

// det(tI - M). Throws ShapeError for non-square input.
QPolynomial charpoly(const QMatrix& m);

// p(M) by Horner's rule.
QMatrix evaluate(const QPolynomial& p, const QMatrix& m);

enum class RootMode { any_integer, nonneg_integer };

// Integer roots of p, sorted ascending, without multiplicity. Throws
// DomainError on the zero polynomial.
std::vector<Integer> integer_roots(const QPolynomial& p, RootMode mode);

// Smallest positive integer strictly greater than every |root| of p, from the
// Cauchy majorant t^n - sum |a_i/a_n| t^i. Constants give 1; the zero
// polynomial throws DomainError.
Integer cauchy_exceeding_integer(const QPolynomial& p);

std::string to_string(const QPolynomial& p, char var = 't');

} // namespace arrlocal
