#include "arrlocal/cyclotomic.hpp"

#include "arrlocal/error.hpp"
#include "arrlocal/kernels.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace arrlocal {

unsigned long euler_phi(unsigned long d) {
    unsigned long result = d;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

QPolynomial cyclotomic_polynomial(unsigned long d) {
    if (d == 0) throw DomainError("cyclotomic polynomial of conductor 0");
    static std::mutex mutex;
    static std::map<unsigned long, QPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    QPolynomial num = QPolynomial::monomial(1, d) - QPolynomial::constant(1);
    for (unsigned long e = 1; e < d; ++e) {
        if (d % e) continue;
        DivMod qr = divmod(num, cyclotomic_polynomial(e));
        if (!qr.remainder.is_zero())
            throw InvariantViolation("cyclotomic division left a remainder at d=" + std::to_string(d));
        num = std::move(qr.quotient);
    }
    std::lock_guard lock(mutex);
    cache.emplace(d, num);
    return num;
}

CycloField::CycloField(unsigned long conductor) {
    if (conductor == 0) throw DomainError("cyclotomic field of conductor 0");
    data_ = std::make_shared<const Data>(Data{conductor, cyclotomic_polynomial(conductor)});
}

namespace {

QPolynomial reduce(const QPolynomial& p, const QPolynomial& modulus) {
    if (p.degree() < modulus.degree()) return p;
    return divmod(p, modulus).remainder;
}

const CycloField& pick_field(const CycloElem& a, const CycloElem& b) {
    if (!a.has_field()) return b.field();
    if (b.has_field() && !(a.field() == b.field()))
        throw FieldMismatchError("cyclotomic elements over Q(zeta_" + std::to_string(a.field().conductor()) +
                                 ") and Q(zeta_" + std::to_string(b.field().conductor()) + ")");
    return a.field();
}

} // namespace

CycloElem::CycloElem(const CycloField& field, const QPolynomial& representative)
    : field_(field), value_(reduce(representative, field.modulus())) {}

CycloElem CycloElem::generator_power(const CycloField& f, long e) {
    const long d = static_cast<long>(f.conductor());
    const long r = ((e % d) + d) % d;
    return CycloElem(f, QPolynomial::monomial(1, static_cast<std::size_t>(r)));
}

const CycloField& CycloElem::field() const {
    if (!has_field()) throw DomainError("cyclotomic element without a field");
    return field_;
}

std::vector<Rational> CycloElem::coeffs() const {
    std::vector<Rational> out(field().degree());
    for (std::size_t i = 0; i < value_.coeffs().size(); ++i) out[i] = value_.coeffs()[i];
    return out;
}

CycloElem CycloElem::operator-() const {
    CycloElem out = *this;
    out.value_ = -value_;
    return out;
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    if (!a.has_field() && !b.has_field()) return {};
    CycloElem out;
    out.field_ = pick_field(a, b);
    out.value_ = a.value_ + b.value_;
    return out;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    if (!a.has_field() && !b.has_field()) return {};
    const CycloField& f = pick_field(a, b);
    return CycloElem(f, a.value_ * b.value_);
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(zeta_" + std::to_string(field().conductor()) + ")");
    // s*value + t*modulus = 1 since Phi_d is irreducible.
    ExtendedGcd g = extended_gcd(value_, field_.modulus());
    if (g.gcd.degree() != 0) throw InvariantViolation("non-invertible cyclotomic element");
    return CycloElem(field_, g.s);
}

CycloField common_field(const CycloMatrix& m) {
    const CycloField* found = nullptr;
    for (const auto& e : m.entries()) {
        if (!e.has_field()) continue;
        if (!found) found = &e.field();
        else if (!(*found == e.field()))
            throw FieldMismatchError("matrix mixes Q(zeta_" + std::to_string(found->conductor()) + ") and Q(zeta_" +
                                     std::to_string(e.field().conductor()) + ")");
    }
    return found ? *found : CycloField(1);
}

std::string to_string(const CycloElem& e) { return to_string(e.polynomial(), 'z'); }

CycloRankKernel rank_and_kernel(const CycloMatrix& m) {
    const CycloField field = common_field(m);
    CycloEchelon ech = kernels::cyclo_echelon(m);
    const std::size_t r = ech.pivots.size();
    CycloMatrix& a = ech.echelon;
    // Normalize pivots to one and clear above them.
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = ech.pivots[k];
        const CycloElem inv = a(k, pc).inverse();
        for (std::size_t j = pc; j < a.cols(); ++j) a(k, j) = a(k, j) * inv;
        for (std::size_t i = 0; i < k; ++i) {
            const CycloElem f = a(i, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    CycloRankKernel out;
    out.rank = r;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycloElem> v(m.cols());
        v[f] = CycloElem::one(field);
        for (std::size_t i = 0; i < r; ++i) v[ech.pivots[i]] = -a(i, f);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const CycloMatrix& m) { return kernels::cyclo_echelon(m).pivots.size(); }

} // namespace arrlocal
