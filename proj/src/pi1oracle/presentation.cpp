#include "arrlocal/pi1oracle.hpp"

#include "arrlocal/error.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>

namespace arrlocal {

namespace {

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) x = -x;
    return out;
}

Word concat(std::initializer_list<const Word*> parts) {
    Word out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return free_reduce(out);
}

} // namespace

Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

std::vector<Word> GroupPresentation::relators() const {
    std::vector<Word> out;
    for (const auto& e : relators_by_event) out.insert(out.end(), e.begin(), e.end());
    return out;
}

GroupPresentation randell_presentation(const WiringDiagram& w) {
    const std::size_t s = w.lines.size();
    GroupPresentation out;
    out.generators = s;
    for (const auto& l : w.lines) out.names.push_back("x" + std::to_string(l.source));

    // Bottom-to-top order of lines far to the left, and the meridian word
    // carried at each position.
    const Rational x0 = w.events.empty() ? Rational(0) : w.events.front().x - 1;
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const auto &a = w.lines[i], &b = w.lines[j];
        const Rational ya = a.slope * x0 + a.intercept, yb = b.slope * x0 + b.intercept;
        return ya != yb ? ya < yb : i < j;
    });
    std::vector<Word> words(s);
    for (std::size_t p = 0; p < s; ++p) words[p] = Word{static_cast<int>(order[p]) + 1};

    for (const auto& e : w.events) {
        std::vector<std::size_t> pos;
        for (auto l : e.lines) pos.push_back(std::find(order.begin(), order.end(), l) - order.begin());
        std::sort(pos.begin(), pos.end());
        const std::size_t a = pos.front(), b = pos.back();
        if (b - a + 1 != pos.size()) throw InvariantViolation("lines through an event are not adjacent");
        for (std::size_t p = a, k = e.order_before.size(); p <= b; ++p)
            if (order[p] != e.order_before[--k]) throw InvariantViolation("local order disagrees with the sweep");

        Word delta;
        for (std::size_t p = b + 1; p-- > a;) delta.insert(delta.end(), words[p].begin(), words[p].end());
        delta = free_reduce(delta);
        const Word delta_inv = inverse(delta);
        std::vector<Word> rels;
        for (std::size_t p = a; p < b; ++p) {
            const Word wi = inverse(words[p]);
            rels.push_back(concat({&words[p], &delta, &wi, &delta_inv}));
        }
        out.relators_by_event.push_back(std::move(rels));

        // Positive half twist on the block, one adjacent swap at a time.
        for (std::size_t pass = 0; pass + 1 < pos.size(); ++pass)
            for (std::size_t p = a; p + 1 <= b - pass; ++p) {
                const Word lo = words[p], hi = words[p + 1];
                const Word lo_inv = inverse(lo);
                words[p] = concat({&lo_inv, &hi, &lo});
                words[p + 1] = lo;
                std::swap(order[p], order[p + 1]);
            }
    }

    for (const auto& r : out.relators()) {
        std::vector<long> exps(s + 1, 0);
        for (int x : r) exps[std::abs(x)] += x > 0 ? 1 : -1;
        if (std::any_of(exps.begin(), exps.end(), [](long v) { return v != 0; }))
            throw InvariantViolation("relator with nonzero exponent sum");
    }
    return out;
}

std::string to_text(const GroupPresentation& p) {
    std::ostringstream os;
    os << "generators:";
    for (const auto& n : p.names) os << ' ' << n;
    os << "\nrelators:\n";
    for (const auto& r : p.relators()) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? " " : "") << p.names[std::abs(r[i]) - 1] << (r[i] < 0 ? "^-1" : "");
        os << '\n';
    }
    return os.str();
}

CharacterSpec character_spec(std::size_t m, long k) {
    if (k < 0 || k >= static_cast<long>(m))
        throw DomainError("k = " + std::to_string(k) + " outside 0 <= k < " + std::to_string(m));
    const unsigned long d = m / std::gcd(m, static_cast<std::size_t>(k));
    CharacterSpec out{m, k, CycloField(d), {}};
    out.value = CycloElem::generator(out.field);
    return out;
}

CycloMatrix fox_jacobian(const GroupPresentation& p, const CharacterSpec& chi) {
    const auto rels = p.relators();
    const long d = static_cast<long>(chi.field.conductor());
    CycloMatrix out(rels.size(), p.generators);
    for (std::size_t i = 0; i < rels.size(); ++i) {
        // counts[g][e]: coefficient of zeta^e in d R / d x_g.
        std::vector<std::vector<long>> counts(p.generators, std::vector<long>(d, 0));
        long e = 0;
        auto idx = [d](long v) { return static_cast<std::size_t>(((v % d) + d) % d); };
        for (int x : rels[i]) {
            const std::size_t g = std::abs(x) - 1;
            if (x > 0) {
                ++counts[g][idx(e)];
                ++e;
            } else {
                --e;
                --counts[g][idx(e)];
            }
        }
        for (std::size_t g = 0; g < p.generators; ++g) {
            std::vector<Rational> c(counts[g].begin(), counts[g].end());
            out(i, g) = CycloElem(chi.field, QPolynomial(std::move(c)));
        }
    }
    return out;
}

std::size_t twisted_b1(const GroupPresentation& p, const CharacterSpec& chi) {
    const std::size_t rank_d1 = p.relators_by_event.empty() ? 0 : rank(fox_jacobian(p, chi));
    const std::size_t rank_d0 = chi.value == CycloElem::one(chi.field) || p.generators == 0 ? 0 : 1;
    return p.generators - rank_d1 - rank_d0;
}

std::size_t twisted_b1(const Arrangement& a, long k, std::optional<std::size_t> decone_choice,
                       const WiringOptions& options) {
    const auto chi = character_spec(a.size(), k);
    return twisted_b1(randell_presentation(wiring_diagram(a, decone_choice, options)), chi);
}

std::vector<std::size_t> milnor_spectrum_exact(const Arrangement& a, std::optional<std::size_t> decone_choice,
                                               const WiringOptions& options) {
    const auto pres = randell_presentation(wiring_diagram(a, decone_choice, options));
    const std::size_t m = a.size();
    std::vector<std::size_t> out(m);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < m; ++k) {
        try {
            out[k] = twisted_b1(pres, character_spec(m, static_cast<long>(k)));
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    if (out[0] != m - 1) throw InvariantViolation("b1(F)_0 = " + std::to_string(out[0]) + ", expected m - 1");
    for (std::size_t k = 1; k < m; ++k)
        if (out[k] != out[m - k]) throw InvariantViolation("eigenspace dimensions not symmetric at k = " + std::to_string(k));
    return out;
}

} // namespace arrlocal
