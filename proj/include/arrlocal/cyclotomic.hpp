#pragma once

#include "arrlocal/matrix.hpp"
#include "arrlocal/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace arrlocal {

// Q(zeta_d) = Q[t] / Phi_d(t).
class CycloField {
public:
    // Throws DomainError for d == 0.
    explicit CycloField(unsigned long conductor);

    unsigned long conductor() const noexcept { return data_->conductor; }
    const QPolynomial& modulus() const noexcept { return data_->modulus; }
    std::size_t degree() const noexcept { return static_cast<std::size_t>(data_->modulus.degree()); }

    friend bool operator==(const CycloField& a, const CycloField& b) {
        return a.conductor() == b.conductor();
    }

private:
    friend class CycloElem;
    CycloField() = default;

    struct Data {
        unsigned long conductor;
        QPolynomial modulus;
    };
    std::shared_ptr<const Data> data_;
};

// Phi_d, by exact division of t^d - 1 by Phi_e for the proper divisors e of d.
QPolynomial cyclotomic_polynomial(unsigned long d);

unsigned long euler_phi(unsigned long d);

class CycloElem {
public:
    // Default-constructed elements are field-less zeros; they adopt the field
    // of whatever they are combined with. Matrix<CycloElem> relies on this.
    CycloElem() = default;
    CycloElem(const CycloField& field, const QPolynomial& representative);

    static CycloElem zero(const CycloField& f) { return CycloElem(f, QPolynomial{}); }
    static CycloElem one(const CycloField& f) { return CycloElem(f, QPolynomial::constant(1)); }
    static CycloElem generator(const CycloField& f) { return CycloElem(f, QPolynomial::monomial(1, 1)); }
    // zeta^e for any integer e.
    static CycloElem generator_power(const CycloField& f, long e);

    bool has_field() const noexcept { return field_.data_ != nullptr; }
    // Throws DomainError for field-less zeros.
    const CycloField& field() const;
    // Coefficients padded to the field degree.
    std::vector<Rational> coeffs() const;
    const QPolynomial& polynomial() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    CycloElem operator-() const;
    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    // Throws DomainError on zero.
    CycloElem inverse() const;

    friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.value_ == b.value_; }

private:
    CycloField field_;
    QPolynomial value_;
};

using CycloMatrix = Matrix<CycloElem>;

// The field shared by all entries that carry one; Q(zeta_1) = Q when none do.
// Throws FieldMismatchError for mixed fields.
CycloField common_field(const CycloMatrix& m);

std::string to_string(const CycloElem& e);

struct CycloRankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<CycloElem>> kernel_basis;
};

// Throws FieldMismatchError when entries live in different fields.
CycloRankKernel rank_and_kernel(const CycloMatrix& m);
std::size_t rank(const CycloMatrix& m);

} // namespace arrlocal
