#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "arrlocal/error.hpp"
#include "arrlocal/nonres.hpp"
#include "arrlocal/oscomplex.hpp"

#include <algorithm>

using namespace arrlocal;
using arrlocal::test::q;
using arrlocal::test::r;
using arrlocal::test::diagonal_condition;
using arrlocal::test::diagonal_system;
using arrlocal::test::random_diagonal;

namespace {

EndoSystem weights(const char* text) { return EndoSystem(parse_weights(text)); }

const char* const paper_ex1 = "1/2 1/2 1/2 1/2 -2";
const char* const paper_ex2 = "-5/3 1/3 -5/3 1/3 7/3 1/3";
const char* const primed_ex1 = "1/3 1/3 1/3 1/3 -4/3";

bool has_violation(const NonresReport& rep, const IndexSet& flat, long root) {
    return std::any_of(rep.violations.begin(), rep.violations.end(),
                       [&](const Violation& v) { return v.flat == flat && v.integer_root == root; });
}

} // namespace

TEST_CASE("residues") {
    const auto l1 = build_lattice(builtin_arrangement("cdo-ex1"));
    CHECK(residue(weights(paper_ex1), l1, {1, 2, 5}).value == q(1, 1, {-1}));
    CHECK(residue(weights(paper_ex1), l1, {3}).value(0, 0) == r(1, 2));
    const auto l2 = build_lattice(builtin_arrangement("cdo-ex2"));
    CHECK(residue(weights(paper_ex2), l2, {1, 3, 5}).value == q(1, 1, {-1}));
    CHECK_THROWS_AS(residue(weights(paper_ex1), l1, {1, 2}), DomainError);
    CHECK_THROWS_AS(residue(weights(paper_ex1), l2, {1}), ShapeError);
}

TEST_CASE("monodromy classes") {
    const auto l = build_lattice(builtin_arrangement("cdo-ex1"));
    const auto a = monodromy_class(weights(paper_ex1), l, {1, 2, 5});
    CHECK(a.admits_one);
    CHECK(a.exponents == std::vector<Rational>{0});
    const auto b = monodromy_class(weights(primed_ex1), l, {1, 2, 5});
    CHECK_FALSE(b.admits_one);
    CHECK(b.exponents == std::vector<Rational>{r(1, 3)});
    CHECK(monodromy_class(weights("0 0 0 0 0"), l, {3}).admits_one);

    // irrational eigenvalues: charpoly t^2 - 2 at H_1
    const QMatrix s = q(2, 2, {0, 2, 1, 0});
    const EndoSystem e(2, {s, QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2), r(-1) * s});
    const auto c = monodromy_class(e, l, {1});
    CHECK_FALSE(c.exponents.has_value());
    CHECK_FALSE(c.admits_one);
    CHECK(c.charpoly == QPolynomial({-2, 0, 1}));
}

TEST_CASE("check_condition examples") {
    const auto l1 = build_lattice(builtin_arrangement("cdo-ex1"));
    CHECK(check_condition(weights(paper_ex1), Condition::stv, l1).holds);
    const auto ah = check_condition(weights(paper_ex1), Condition::ah, l1, 5);
    CHECK_FALSE(ah.holds);
    CHECK(ah.hyperplane == 5);
    CHECK(has_violation(ah, {1, 2, 5}, -1));
    CHECK(has_violation(ah, {3, 4, 5}, -1));
    CHECK(check_condition(weights(primed_ex1), Condition::ah, l1, 5).holds);
    CHECK_THROWS_AS(check_condition(weights(paper_ex1), Condition::ah, l1), PreconditionError);
    CHECK_THROWS_AS(check_condition(weights(paper_ex1), Condition::ah, l1, 6), DomainError);

    const auto l2 = build_lattice(builtin_arrangement("cdo-ex2"));
    CHECK(check_condition(weights(paper_ex2), Condition::stv, l2).holds);
    CHECK_FALSE(check_condition(weights(paper_ex2), Condition::kohno, l2).holds);

    CHECK(parse_condition("thm33") == Condition::thm33);
    CHECK_THROWS_AS(parse_condition("nope"), ParseError);
}

TEST_CASE("thm33 reports non-commuting residues as failed hypotheses") {
    const auto l = build_lattice(builtin_arrangement("cdo-ex1"));
    const QMatrix a = q(2, 2, {0, 1, 0, 0}), b = q(2, 2, {0, 0, 1, 0});
    const QMatrix shift = scalar_matrix(2, r(1, 3));
    const EndoSystem e(2, {a + shift, b + shift, shift, shift, r(-1) * (a + b) - r(4) * shift});
    const auto rep = check_condition(e, Condition::thm33, l);
    CHECK_FALSE(rep.hypothesis_failures.empty());
    CHECK(rep.hypothesis_failures.front() == "P_1,P_2");
    CHECK_FALSE(rep.holds);
    CHECK(check_condition(weights(paper_ex1), Condition::thm33, l).holds);
}

TEST_CASE("conditions agree with the diagonal-sum oracle") {
    std::mt19937_64 rng(41);
    for (const char* name : {"cdo-ex1", "cdo-ex2", "braid-a3"}) {
        const auto l = build_lattice(builtin_arrangement(name));
        const std::size_t m = l.arrangement().size();
        for (int trial = 0; trial < 40; ++trial) {
            const auto diag = random_diagonal(rng, m, 1 + trial % 2, 1 + trial % 4);
            const auto e = diagonal_system(diag);
            CHECK(check_condition(e, Condition::kohno, l).holds == diagonal_condition(diag, Condition::kohno, l, {}));
            CHECK(check_condition(e, Condition::stv, l).holds == diagonal_condition(diag, Condition::stv, l, {}));
            for (std::size_t h = 1; h <= m; ++h)
                CHECK(check_condition(e, Condition::ah, l, h).holds == diagonal_condition(diag, Condition::ah, l, h));
        }
    }
}

TEST_CASE("ah is invariant under integer translates") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> kd(-3, 3);
    for (const char* name : {"cdo-ex1", "cdo-ex2", "braid-a3"}) {
        const auto l = build_lattice(builtin_arrangement(name));
        const std::size_t m = l.arrangement().size();
        for (int trial = 0; trial < 25; ++trial) {
            const auto e = diagonal_system(random_diagonal(rng, m, 1 + trial % 2, 2 + trial % 3));
            std::vector<long> k(m);
            long total = 0;
            for (std::size_t j = 0; j + 1 < m; ++j) total += k[j] = kd(rng);
            k[m - 1] = -total;
            const auto t = e.translated(k);
            for (std::size_t h = 1; h <= m; ++h)
                CHECK(check_condition(t, Condition::ah, l, h).holds == check_condition(e, Condition::ah, l, h).holds);
            CHECK(check_condition(t, Condition::kohno, l).holds == check_condition(e, Condition::kohno, l).holds);
        }
    }
}

TEST_CASE("kohno implies ah for every hyperplane") {
    std::mt19937_64 rng(47);
    const auto l = build_lattice(builtin_arrangement("braid-a3"));
    int kohno_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto e = diagonal_system(random_diagonal(rng, 6, 1, 5));
        if (!check_condition(e, Condition::kohno, l).holds) continue;
        ++kohno_seen;
        for (std::size_t h = 1; h <= 6; ++h) CHECK(check_condition(e, Condition::ah, l, h).holds);
    }
    CHECK(kohno_seen > 0);
}

TEST_CASE("prop4_shift examples") {
    const auto l1 = build_lattice(builtin_arrangement("cdo-ex1"));
    const auto s = prop4_shift(weights(primed_ex1), 5, l1);
    CHECK(s.q == 1);
    std::vector<Rational> got;
    for (const auto& p : s.system.matrices()) got.push_back(p(0, 0));
    CHECK(got == std::vector<Rational>{r(-2, 3), r(-2, 3), r(-2, 3), r(-2, 3), r(8, 3)});
    CHECK(check_condition(s.system, Condition::stv, l1).holds);

    const auto g3 = build_lattice(builtin_arrangement("generic(3)"));
    CHECK_THROWS_AS(prop4_shift(weights("1/2 1/2 -1"), 3, g3), PreconditionError);
    CHECK_THROWS_AS(prop4_shift(weights(paper_ex1), 5, l1), PreconditionError);
}

TEST_CASE("prop4_shift roundtrip on random rank-1 and diagonal rank-2 systems") {
    std::mt19937_64 rng(53);
    int shifted = 0;
    for (const char* name : {"cdo-ex1", "cdo-ex2", "braid-a3", "generic(4)"}) {
        const auto l = build_lattice(builtin_arrangement(name));
        const std::size_t m = l.arrangement().size();
        for (int trial = 0; trial < 30; ++trial) {
            const auto e = diagonal_system(random_diagonal(rng, m, 1 + trial % 2, 2 + trial % 5));
            for (std::size_t h = 1; h <= m; ++h) {
                if (!check_condition(e, Condition::ah, l, h).holds) continue;
                const auto out = prop4_shift(e, h, l);
                CHECK(out.q >= 1);
                CHECK(check_condition(out.system, Condition::stv, l).holds);
                ++shifted;
            }
        }
    }
    CHECK(shifted > 50);
}

TEST_CASE("translate_exists") {
    const auto l1 = build_lattice(builtin_arrangement("cdo-ex1"));
    CHECK_FALSE(translate_exists(weights(paper_ex1), l1).has_value());
    CHECK(translate_exists(weights(primed_ex1), l1) == 1);
    CHECK(check_condition(weights(primed_ex1), Condition::ah, l1, 5).holds);
    const auto l2 = build_lattice(builtin_arrangement("cdo-ex2"));
    CHECK_FALSE(translate_exists(weights(paper_ex2), l2).has_value());
}

TEST_CASE("stv implies vanishing below the top degree") {
    std::mt19937_64 rng(59);
    for (const char* name : {"cdo-ex1", "cdo-ex2", "braid-a3"}) {
        const auto a = builtin_arrangement(name);
        const auto l = build_lattice(a);
        for (int trial = 0; trial < 12; ++trial) {
            const auto diag = random_diagonal(rng, a.size(), 1, 1 + trial % 3);
            const auto e = diagonal_system(diag);
            if (!check_condition(e, Condition::stv, l).holds) continue;
            for (std::size_t h = 1; h <= a.size(); ++h) {
                const auto c = aomoto_cohomology(aomoto_complex(a, e, h));
                CHECK(c[0] == 0);
                CHECK(c[1] == 0);
            }
        }
    }
}
