// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance          run all criteria
//   acceptance 4 7      run the listed criteria
//
// All comparisons are exact (zero tolerance). Each criterion also carries a
// wall-clock budget; exceeding it is a failure.

#include "oracles.hpp"
#include "support.hpp"

#include "arrlocal/lattice.hpp"
#include "arrlocal/milnor.hpp"
#include "arrlocal/nonres.hpp"
#include "arrlocal/oscomplex.hpp"
#include "arrlocal/pi1oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace arrlocal;
using namespace arrlocal::test;

namespace {

constexpr double time_budget_seconds = 60.0;
constexpr std::uint64_t master_seed = 20240607;

struct Outcome {
    bool pass = true;
    std::string first_failure;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            first_failure = what;
            pass = false;
        }
    }
};

using Sets = std::set<IndexSet>;

Sets dense_sets(const Arrangement& a) {
    Sets out;
    for (const auto& f : dense_edges(build_lattice(a))) out.insert(f.indices);
    return out;
}

// Residue of a rank-1 system at X, summed directly from the weights.
Rational weight_sum(const std::vector<Rational>& w, const IndexSet& x) {
    Rational s = 0;
    for (auto j : x) s += w[j - 1];
    return s;
}

std::vector<Rational> parse_list(const char* text) { return parse_weights(text).weights(); }

const char* const ex1_weights = "1/2 1/2 1/2 1/2 -2";
const char* const ex2_weights = "-5/3 1/3 -5/3 1/3 7/3 1/3";

const std::vector<std::string> corpus{"cdo-ex1", "cdo-ex2", "braid-a3", "generic(4)", "generic(5)", "generic(6)"};

// Weights with a denominator drawn from 1..6; denominator 1 gives integral,
// typically resonant, systems.
Diagonal random_system(std::mt19937_64& rng, std::size_t m, std::size_t rank) {
    std::uniform_int_distribution<long> den(1, 6);
    Diagonal d(m, std::vector<Rational>(rank));
    for (std::size_t c = 0; c < rank; ++c) {
        const auto w = random_weights(rng, m, den(rng));
        for (std::size_t j = 0; j < m; ++j) d[j][c] = w[j];
    }
    return d;
}

long euler(const std::vector<std::size_t>& h) {
    long s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += (i % 2 ? -1 : 1) * static_cast<long>(h[i]);
    return s;
}

// ---------------------------------------------------------------------------

void criterion_1(Outcome& o) {
    o.require(dense_sets(builtin_arrangement("cdo-ex1")) == Sets{{1}, {2}, {3}, {4}, {5}, {1, 2, 5}, {3, 4, 5}},
              "cdo-ex1 dense edges");
    o.require(dense_sets(builtin_arrangement("cdo-ex2")) ==
                  Sets{{1}, {2}, {3}, {4}, {5}, {6}, {1, 2, 6}, {1, 3, 5}, {3, 4, 6}},
              "cdo-ex2 dense edges");
    o.detail << "7 and 9 dense edges";
}

void criterion_2(Outcome& o) {
    const auto a = builtin_arrangement("cdo-ex1");
    const auto l = build_lattice(a);
    const auto w = parse_list(ex1_weights);
    const EndoSystem s{WeightSystem(w)};
    o.require(check_condition(s, Condition::stv, l).holds, "stv holds");
    o.require(!translate_exists(s, l).has_value(), "translate_exists is none");
    for (std::size_t h = 1; h <= a.size(); ++h) {
        const auto rep = check_condition(s, Condition::ah, l, h);
        bool minus_one = false;
        for (const auto& v : rep.violations)
            minus_one = minus_one || (v.integer_root == -1 && weight_sum(w, v.flat) == -1);
        o.require(!rep.holds && minus_one, "ah(H" + std::to_string(h) + ") fails at a residue -1");
    }
    if (o.pass) o.detail << "stv holds; ah fails at residue -1 for H1..H5; no translate";
}

void criterion_3(Outcome& o) {
    const auto a = builtin_arrangement("cdo-ex2");
    const auto l = build_lattice(a);
    const auto w = parse_list(ex2_weights);
    const EndoSystem s{WeightSystem(w)};
    o.require(check_condition(s, Condition::stv, l).holds, "stv holds");
    o.require(!translate_exists(s, l).has_value(), "translate_exists is none");
    for (const IndexSet& x : {IndexSet{1, 2, 6}, IndexSet{1, 3, 5}, IndexSet{3, 4, 6}}) {
        o.require(weight_sum(w, x) == -1, "direct sum at " + to_string(x));
        o.require(residue(s, l, x).value(0, 0) == -1, "residue at " + to_string(x));
    }
    if (o.pass) o.detail << "stv holds; residues -1 at {1,2,6},{1,3,5},{3,4,6}; no translate";
}

void criterion_4(Outcome& o) {
    std::mt19937_64 rng(master_seed + 4);
    std::size_t rank1 = 0, rank2 = 0, passed = 0, attempts = 0;
    std::size_t corpus_i = 0;
    while ((rank1 < 200 || rank2 < 50) && attempts < 100000) {
        ++attempts;
        const auto& name = corpus[corpus_i++ % corpus.size()];
        const auto a = builtin_arrangement(name);
        const auto l = build_lattice(a);
        const std::size_t rank = rank1 < 200 ? 1 : 2;
        const auto diag = random_system(rng, a.size(), rank);
        std::optional<std::size_t> h;
        for (std::size_t i = 1; i <= a.size() && !h; ++i)
            if (diagonal_condition(diag, Condition::ah, l, i)) h = i;
        if (!h) continue;
        (rank == 1 ? rank1 : rank2)++;
        const auto shifted = prop4_shift(diagonal_system(diag), *h, l);
        Diagonal out(a.size(), std::vector<Rational>(rank));
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t c = 0; c < rank; ++c) out[j][c] = shifted.system[j + 1](c, c);
        const bool ok = diagonal_condition(out, Condition::stv, l, std::nullopt);
        passed += ok;
        o.require(ok, "shift output fails stv on " + name);
    }
    o.require(rank1 == 200 && rank2 == 50, "enough qualifying systems");
    o.detail << "systems " << rank1 << " rank-1 + " << rank2 << " rank-2; stv after shift " << passed << "/"
             << rank1 + rank2 << " (required 100%)";
}

void criterion_5(Outcome& o) {
    std::mt19937_64 rng(master_seed + 5);
    const std::map<std::string, long> want_chi{{"cdo-ex1", 1}, {"braid-a3", 2}, {"cdo-ex2", 3}};
    std::size_t tested = 0, good = 0;
    for (const auto& [name, chi] : want_chi) {
        const auto a = builtin_arrangement(name);
        const auto l = build_lattice(a);
        o.require(euler(betti_numbers(a)) == chi, "Euler characteristic of " + name);
        std::size_t found = 0;
        for (int attempt = 0; attempt < 20000 && found < 40; ++attempt) {
            const std::size_t rank = found % 4 == 3 ? 2 : 1;
            const auto diag = random_system(rng, a.size(), rank);
            if (!diagonal_condition(diag, Condition::stv, l, std::nullopt)) continue;
            ++found;
            ++tested;
            const auto h = aomoto_cohomology(aomoto_complex(a, diagonal_system(diag)));
            const bool ok = h == std::vector<std::size_t>{0, 0, static_cast<std::size_t>(chi) * rank};
            good += ok;
            o.require(ok, name + " cohomology not concentrated in degree 2");
        }
    }
    o.require(tested == 120, "enough stv systems");
    o.detail << good << "/" << tested << " stv systems give (0,0,r*chi)";
}

void criterion_6(Outcome& o) {
    std::mt19937_64 rng(master_seed + 6);
    std::size_t good = 0, resonant = 0;
    const std::vector<std::string> names{"cdo-ex1", "cdo-ex2", "braid-a3", "generic(4)", "generic(5)"};
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = builtin_arrangement(names[trial % names.size()]);
        const auto diag = random_system(rng, a.size(), 1);
        std::vector<Rational> w;
        for (const auto& d : diag) w.push_back(d[0]);
        const auto h = aomoto_cohomology(aomoto_complex(a, WeightSystem(w)));
        resonant += h[0] + h[1] > 0;
        const bool ok = euler(h) == euler(betti_numbers(a));
        good += ok;
        o.require(ok, "Euler characteristic changed on " + names[trial % names.size()]);
    }
    o.detail << good << "/200 conserve chi (" << resonant << " with cohomology below top degree)";
}

void criterion_7(Outcome& o) {
    const std::map<std::string, std::vector<std::size_t>> want{
        {"cdo-ex1", {1, 4, 4}}, {"cdo-ex2", {1, 5, 7}}, {"braid-a3", {1, 5, 6}}};
    for (const auto& [name, dims] : want) {
        const auto a = builtin_arrangement(name);
        const auto b = betti_numbers(a);
        for (std::size_t h = 1; h <= a.size(); ++h) {
            const auto nbc = nbc_basis(decone(a, h)).dims();
            o.require(nbc == dims, name + " NBC dims, decone " + std::to_string(h));
            o.require(std::vector<unsigned long>(nbc.begin(), nbc.end()) == b, name + " Whitney agreement");
        }
    }
    for (const auto& name : corpus) {
        const auto a = builtin_arrangement(name);
        const auto nbc = nbc_basis(decone(a, a.size())).dims();
        o.require(std::vector<unsigned long>(nbc.begin(), nbc.end()) == betti_numbers(a), name + " Whitney");
    }
    if (o.pass) o.detail << "(1,4,4) (1,5,7) (1,5,6) for every decone; generic corpus agrees";
}

void criterion_8(Outcome& o) {
    auto best = [](const Arrangement& a) {
        std::vector<std::size_t> out;
        for (const auto& e : spectrum_bounds(a).by_k) out.push_back(e.best);
        return out;
    };
    const auto braid = builtin_arrangement("braid-a3");
    const auto bb = best(braid);
    o.require(bb == std::vector<std::size_t>{0, 2, 0, 2, 0}, "braid-a3 best bounds");
    o.require(best(builtin_arrangement("cdo-ex1")) == std::vector<std::size_t>(4, 0), "cdo-ex1 bounds");
    const auto b1 = milnor_spectrum_exact(braid);
    o.require(b1 == std::vector<std::size_t>{5, 0, 1, 0, 1, 0}, "braid-a3 oracle spectrum");
    for (std::size_t k = 1; k < 6; ++k) o.require(b1[k] <= bb[k - 1], "bound at k = " + std::to_string(k));
    o.require(b1[2] == 1 && bb[1] == 2, "k = 2 witness");
    if (o.pass) o.detail << "bounds (0,2,0,2,0); oracle (5,0,1,0,1,0); 1 <= 2 at k = 2";
}

void criterion_9(Outcome& o) {
    std::size_t checks = 0;
    for (const std::string name : {"cdo-ex1", "cdo-ex2", "braid-a3", "generic(3)", "generic(4)", "generic(5)"}) {
        const auto a = builtin_arrangement(name);
        const std::size_t m = a.size();
        const auto ref = milnor_spectrum_exact(a);
        o.require(ref[0] == m - 1, name + " b1(F)_0");
        for (std::size_t k = 1; k < m; ++k) o.require(ref[k] == ref[m - k], name + " symmetry");
        for (std::size_t h = 1; h <= m; ++h) {
            const auto p = randell_presentation(wiring_diagram(a, h));
            const auto j = fox_jacobian(p, character_spec(m, 0));
            for (const auto& x : j.entries()) o.require(x.is_zero(), name + " Fox Jacobian at k = 0");
            for (std::size_t skip : {0, 2, 5}) {
                WiringOptions opts;
                opts.shear_skip = skip;
                o.require(milnor_spectrum_exact(a, h, opts) == ref, name + " decone/shear stability");
                ++checks;
            }
        }
    }
    if (o.pass) o.detail << checks << " (decone, shear) recomputations agree";
}

void criterion_10(Outcome& o) {
    std::size_t forced = 0;
    for (const std::string name : {"cdo-ex1", "cdo-ex2", "braid-a3", "generic(4)", "generic(5)", "generic(6)"}) {
        const auto a = builtin_arrangement(name);
        const auto b1 = milnor_spectrum_exact(a);
        for (const auto& e : spectrum_bounds(a).by_k) {
            if (e.best != 0) continue;
            ++forced;
            o.require(b1[e.k] == 0, name + " k = " + std::to_string(e.k));
        }
    }
    o.require(milnor_spectrum_exact(builtin_arrangement("cdo-ex1")) == std::vector<std::size_t>{4, 0, 0, 0, 0},
              "cdo-ex1");
    const auto braid = milnor_spectrum_exact(builtin_arrangement("braid-a3"));
    o.require(braid[1] == 0 && braid[3] == 0 && braid[5] == 0, "braid-a3 odd k");
    o.detail << forced << " zero bounds, oracle 0 at each";
}

void criterion_11(Outcome& o) {
    std::mt19937_64 rng(master_seed + 11);
    std::uniform_int_distribution<long> kd(-3, 3);
    std::map<std::string, std::size_t> changed{{"kohno", 0}, {"stv", 0}, {"thm33", 0}, {"ah", 0}};
    std::optional<std::string> witness;
    for (int trial = 0; trial < 100; ++trial) {
        const auto& name = corpus[trial % corpus.size()];
        const auto a = builtin_arrangement(name);
        const auto l = build_lattice(a);
        const std::size_t m = a.size();
        const auto s = diagonal_system(random_system(rng, m, 1));
        std::vector<long> k(m);
        long total = 0;
        for (std::size_t j = 0; j + 1 < m; ++j) total += k[j] = kd(rng);
        k[m - 1] = -total;
        const auto t = s.translated(k);
        for (auto c : {Condition::kohno, Condition::stv, Condition::thm33}) {
            if (check_condition(s, c, l).holds == check_condition(t, c, l).holds) continue;
            ++changed[std::string(to_string(c))];
            if (!witness && c == Condition::stv) {
                std::ostringstream w;
                w << name << ": lambda =";
                for (const auto& p : s.matrices()) w << ' ' << to_string(p(0, 0));
                w << ", k =";
                for (auto x : k) w << ' ' << x;
                witness = w.str();
            }
        }
        for (std::size_t h = 1; h <= m; ++h)
            changed["ah"] += check_condition(s, Condition::ah, l, h).holds != check_condition(t, Condition::ah, l, h).holds;
    }
    for (const auto& [name, n] : changed) o.require(n == 0, name + " changed under translation");
    o.detail << "changed: kohno " << changed["kohno"] << ", stv " << changed["stv"]
             << ", thm33 " << changed["thm33"] << ", ah " << changed["ah"] << " (of 100 translates)";
    if (witness) o.detail << "; e.g. " << *witness;
}

// ---------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
};

const std::vector<Criterion> criteria{
    {1, "dense-edge golden lists", criterion_1},
    {2, "five-line example: stv, no translate, ah residue -1", criterion_2},
    {3, "six-line example: stv, no translate, residues -1", criterion_3},
    {4, "integer shift makes random ah-nonresonant systems stv", criterion_4},
    {5, "stv systems have cohomology only in top degree", criterion_5},
    {6, "Euler characteristic conservation", criterion_6},
    {7, "NBC dimensions equal Whitney numbers", criterion_7},
    {8, "Milnor eigenspace bounds and oracle values", criterion_8},
    {9, "oracle identities and stability", criterion_9},
    {10, "zero bound forces zero eigenspace", criterion_10},
    {11, "translate invariance of all four conditions", criterion_11},
};

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs <= time_budget_seconds, "time budget");
        failures += !o.pass;
        std::string detail = o.detail.str();
        if (!o.pass) detail = "first failure: " + o.first_failure + (detail.empty() ? "" : "; " + detail);
        std::printf("%s  criterion %2d  %-55s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
