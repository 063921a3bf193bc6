#include "arrlocal/polynomial.hpp"

#include "arrlocal/error.hpp"

#include <algorithm>
#include <sstream>

namespace arrlocal {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return QPolynomial(std::move(v));
}

Rational QPolynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(v));
}

QPolynomial operator*(const Rational& s, const QPolynomial& a) {
    std::vector<Rational> v = a.coeffs_;
    for (auto& c : v) c *= s;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::monic() const {
    if (is_zero()) return {};
    return Rational(1) / leading() * *this;
}

DivMod divmod(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db) return {QPolynomial{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv_lead = Rational(1) / b.leading();
    for (long k = a.degree() - db; k >= 0; --k) {
        const Rational c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
}

ExtendedGcd extended_gcd(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r0 = a, r1 = b;
    QPolynomial s0 = QPolynomial::constant(1), s1;
    QPolynomial t0, t1 = QPolynomial::constant(1);
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        r0 = std::exchange(r1, qr.remainder);
        s0 = std::exchange(s1, s0 - qr.quotient * s1);
        t0 = std::exchange(t1, t0 - qr.quotient * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

QPolynomial charpoly(const QMatrix& m) {
    if (!m.square())
        throw ShapeError("charpoly of non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        const QMatrix am = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return QPolynomial(std::move(c));
}

QMatrix evaluate(const QPolynomial& p, const QMatrix& m) {
    if (!m.square()) throw ShapeError("evaluate: non-square matrix");
    QMatrix acc(m.rows(), m.cols());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + scalar_matrix(m.rows(), *it);
    return acc;
}

namespace {

// Integer coefficients of a nonzero multiple of p.
std::vector<Integer> cleared(const QPolynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
    return out;
}

Integer evaluate_integer(const std::vector<Integer>& a, const Integer& x) {
    Integer acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline constexpr unsigned long root_search_limit = 100'000'000UL;

} // namespace

std::vector<Integer> integer_roots(const QPolynomial& p, RootMode mode) {
    if (p.is_zero()) throw DomainError("integer_roots: the zero polynomial has no finite root set");
    std::vector<Integer> a = cleared(p);
    std::vector<Integer> roots;
    std::size_t shift = 0;
    while (a[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<long>(shift));

    if (a.size() > 1) {
        const Integer a0 = abs(a.front());
        const Integer an = abs(a.back());
        Integer max_ratio = 0;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            Integer q;
            mpz_cdiv_q(q.get_mpz_t(), Integer(abs(a[i])).get_mpz_t(), an.get_mpz_t());
            if (q > max_ratio) max_ratio = q;
        }
        const Integer bound = max_ratio + 1;
        Integer root_a0;
        mpz_sqrt(root_a0.get_mpz_t(), a0.get_mpz_t());
        const Integer limit = bound < root_a0 ? bound : root_a0;
        if (limit > root_search_limit)
            throw ResourceError("integer_roots: divisor search bound " + limit.get_str() + " too large");

        auto consider = [&](const Integer& d) {
            if (d > bound) return;
            for (const Integer& cand : {Integer(d), Integer(-d)}) {
                if (mode == RootMode::nonneg_integer && cand < 0) continue;
                if (evaluate_integer(a, cand) == 0) roots.push_back(cand);
            }
        };
        const unsigned long lim = limit.get_ui();
        for (unsigned long d = 1; d <= lim; ++d) {
            if (!mpz_divisible_ui_p(a0.get_mpz_t(), d)) continue;
            consider(Integer(d));
            consider(Integer(a0 / d));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Integer cauchy_exceeding_integer(const QPolynomial& p) {
    if (p.is_zero()) throw DomainError("cauchy bound of the zero polynomial");
    if (p.degree() == 0) return 1;
    const QPolynomial q = p.monic();
    std::vector<Rational> maj(q.coeffs().size());
    for (std::size_t i = 0; i + 1 < maj.size(); ++i) maj[i] = -abs(q.coeffs()[i]);
    maj.back() = 1;
    const QPolynomial majorant(std::move(maj));
    // majorant(x) > 0 exactly for x beyond its unique positive root.
    auto exceeds = [&](const Integer& x) { return majorant(Rational(x)) > 0; };
    Integer hi = 1;
    while (!exceeds(hi)) hi *= 2;
    Integer lo = hi / 2; // lo == 0 or !exceeds(lo)
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (exceeds(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

std::string to_string(const QPolynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == 1 && i > 0;
        if (!unit) os << to_string(mag);
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

} // namespace arrlocal
