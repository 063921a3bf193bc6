#include "doctest.h"
#include "support.hpp"

#include "arrlocal/arrangement.hpp"
#include "arrlocal/error.hpp"
#include "arrlocal/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace arrlocal;

namespace {

// Independent oracle for line arrangements in P^2: each pair of lines meets
// in the point given by the cross product of their coefficient vectors; a
// point's index set is every line vanishing there.
std::set<IndexSet> points_by_cross_product(const Arrangement& a) {
    std::set<IndexSet> out;
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = i + 1; j <= a.size(); ++j) {
            const auto u = a.homogeneous(i), v = a.homogeneous(j);
            const QVector p{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
            IndexSet s;
            for (std::size_t k = 1; k <= a.size(); ++k) {
                const auto w = a.homogeneous(k);
                if (w[0] * p[0] + w[1] * p[1] + w[2] * p[2] == 0) s.push_back(k);
            }
            out.insert(s);
        }
    return out;
}

std::set<IndexSet> codim_sets(const IntersectionLattice& l, std::size_t c) {
    std::set<IndexSet> out;
    for (const auto* f : l.flats_of_codim(c)) out.insert(f->indices);
    return out;
}

std::set<IndexSet> dense_sets(const IntersectionLattice& l) {
    std::set<IndexSet> out;
    for (const auto& f : dense_edges(l)) out.insert(f.indices);
    return out;
}

Arrangement random_line_arrangement(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<long> c(-2, 2);
    for (;;) {
        std::vector<LinearForm> forms;
        for (std::size_t i = 0; i < m; ++i) forms.push_back(LinearForm{{c(rng), c(rng), c(rng)}});
        try {
            return Arrangement(Kind::projective, 2, std::move(forms));
        } catch (const ParseError&) {
        }
    }
}

} // namespace

TEST_CASE("build_lattice on cdo-ex1") {
    const auto l = build_lattice(builtin_arrangement("cdo-ex1"));
    CHECK(l.flats()[0].indices.empty());
    CHECK(l.flats()[0].codim == 0);
    CHECK(codim_sets(l, 2) == std::set<IndexSet>{{1, 2, 5}, {3, 4, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(l.max_codim() == 2);
    // deterministic ordering by (codim, indices)
    for (std::size_t i = 1; i < l.flats().size(); ++i) {
        const auto& a = l.flats()[i - 1];
        const auto& b = l.flats()[i];
        CHECK(std::tie(a.codim, a.indices) < std::tie(b.codim, b.indices));
    }
}

TEST_CASE("build_lattice on boolean(2) and braid-a3") {
    const auto b = build_lattice(builtin_arrangement("boolean(2)"));
    CHECK(codim_sets(b, 2) == std::set<IndexSet>{{1, 2}});
    const auto braid = build_lattice(builtin_arrangement("braid-a3"));
    CHECK(codim_sets(braid, 2) ==
          std::set<IndexSet>{{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}, {1, 6}, {2, 5}, {3, 4}});
}

TEST_CASE("lattice points agree with the cross-product oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_line_arrangement(rng, 3 + trial % 5);
        const auto l = build_lattice(a);
        CHECK(codim_sets(l, 2) == points_by_cross_product(a));
    }
    for (const char* name : {"cdo-ex1", "cdo-ex2", "braid-a3", "generic(6)"}) {
        const auto a = builtin_arrangement(name);
        CHECK(codim_sets(build_lattice(a), 2) == points_by_cross_product(a));
    }
}

TEST_CASE("Mobius and incidence invariants") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 3 + trial % 6;
        const auto a = random_line_arrangement(rng, m);
        const auto l = build_lattice(a);
        CHECK(l.flats()[0].mobius == 1);
        for (const auto& x : l.flats()) {
            if (x.indices.empty()) continue;
            long sum = 0;
            for (const auto& y : l.flats())
                if (std::includes(x.indices.begin(), x.indices.end(), y.indices.begin(), y.indices.end()))
                    sum += y.mobius;
            CHECK(sum == 0);
            CHECK(x.multiplicity >= x.codim);
            CHECK(rank(x.equations) == x.codim);
        }
        std::size_t pairs = 0;
        for (const auto* p : l.flats_of_codim(2)) pairs += p->multiplicity * (p->multiplicity - 1) / 2;
        CHECK(pairs == m * (m - 1) / 2);
        for (const auto* h : l.flats_of_codim(1)) CHECK(h->dense);
        for (const auto* p : l.flats_of_codim(2)) CHECK(p->dense == (p->multiplicity >= 3));
    }
}

TEST_CASE("betti numbers") {
    using B = std::vector<unsigned long>;
    CHECK(betti_numbers(builtin_arrangement("cdo-ex1")) == B{1, 4, 4});
    CHECK(betti_numbers(builtin_arrangement("cdo-ex2")) == B{1, 5, 7});
    CHECK(betti_numbers(builtin_arrangement("braid-a3")) == B{1, 5, 6});
    CHECK(betti_numbers(builtin_arrangement("boolean(3)")) == B{1, 3, 3, 1});
}

TEST_CASE("betti numbers are invariant under decone choice and input permutation") {
    std::mt19937_64 rng(14);
    for (const char* name : {"cdo-ex1", "cdo-ex2", "braid-a3"}) {
        const auto a = builtin_arrangement(name);
        const auto want = betti_numbers(a);
        for (std::size_t h = 1; h <= a.size(); ++h) CHECK(betti_numbers(a, h) == want);
        auto forms = a.forms();
        std::shuffle(forms.begin(), forms.end(), rng);
        CHECK(betti_numbers(Arrangement(Kind::projective, 2, forms)) == want);
    }
}

TEST_CASE("localize") {
    const auto l = build_lattice(builtin_arrangement("cdo-ex1"));
    const auto triple = localize(l, *l.find({1, 2, 5}));
    CHECK(triple.kind() == Kind::central);
    CHECK(triple.size() == 3);
    CHECK(triple.vector_dim() == 2);
    CHECK(is_irreducible(triple));

    const auto single = localize(l, *l.find({3}));
    CHECK(single.size() == 1);
    CHECK(single.vector_dim() == 1);
    CHECK(is_irreducible(single));

    const auto dbl = localize(l, *l.find({1, 3}));
    CHECK(dbl.size() == 2);
    CHECK(dbl.vector_dim() == 2);
    CHECK_FALSE(is_irreducible(dbl));

    Flat bogus;
    bogus.indices = {1, 2};
    CHECK_THROWS_AS(localize(l, bogus), DomainError);
}

TEST_CASE("fundamental-circuit irreducibility agrees with exhaustive bipartition search") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> c(-1, 1);
    std::uniform_int_distribution<int> dim(1, 4), size(1, 8);
    int checked = 0;
    while (checked < 300) {
        const std::size_t d = dim(rng), m = size(rng);
        std::vector<LinearForm> forms;
        for (std::size_t i = 0; i < m; ++i) {
            LinearForm f;
            for (std::size_t k = 0; k < d; ++k) f.coeffs.emplace_back(c(rng));
            forms.push_back(std::move(f));
        }
        try {
            const Arrangement a(Kind::central, d - 1, std::move(forms));
            CHECK(is_irreducible(a) == is_irreducible_bruteforce(a));
            ++checked;
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("dense edges") {
    CHECK(dense_sets(build_lattice(builtin_arrangement("cdo-ex1"))) ==
          std::set<IndexSet>{{1}, {2}, {3}, {4}, {5}, {1, 2, 5}, {3, 4, 5}});
    CHECK(dense_sets(build_lattice(builtin_arrangement("cdo-ex2"))) ==
          std::set<IndexSet>{{1}, {2}, {3}, {4}, {5}, {6}, {1, 2, 6}, {1, 3, 5}, {3, 4, 6}});
    CHECK(dense_sets(build_lattice(builtin_arrangement("braid-a3"))) ==
          std::set<IndexSet>{{1}, {2}, {3}, {4}, {5}, {6}, {1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}});
}

TEST_CASE("dense edges of a non-essential arrangement in P^3") {
    // Hyperplanes x_i - x_j of C^4 all contain the point [1:1:1:1], which is
    // a dense edge of codim 3 alongside the hyperplanes and 4 triple lines.
    const auto a = parse_arrangement("projective 3 6\n"
                                     "1 -1 0 0\n1 0 -1 0\n1 0 0 -1\n0 1 -1 0\n0 1 0 -1\n0 0 1 -1\n");
    const auto l = build_lattice(a);
    CHECK(l.max_codim() == 3);
    CHECK(dense_sets(l).size() == 11);
    CHECK(l.find({1, 2, 3, 4, 5, 6})->dense);
    CHECK(l.flats_of_codim(2).size() == 7);
}

TEST_CASE("size guards") {
    std::vector<LinearForm> forms;
    for (long t = 0; t < 31; ++t) forms.push_back(LinearForm{{1, t, t * t}});
    CHECK_THROWS_AS(build_lattice(Arrangement(Kind::projective, 2, forms)), ResourceError);
    LatticeLimits tight;
    tight.max_dim = 1;
    CHECK_THROWS_AS(build_lattice(builtin_arrangement("cdo-ex1"), tight), ResourceError);
}
