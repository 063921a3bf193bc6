#include "arrlocal/arrangement.hpp"
#include "arrlocal/error.hpp"
#include "arrlocal/lattice.hpp"

#include <charconv>
#include <random>

namespace arrlocal {

namespace {

LinearForm form3(long x, long y, long z) { return LinearForm{{Rational(x), Rational(y), Rational(z)}}; }

// Parses `name(k)`, `name-k` or `namek`.
std::optional<std::size_t> parameter(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view rest = name.substr(prefix.size());
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    else if (!rest.empty() && rest.front() == '-') rest.remove_prefix(1);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
    return v;
}

} // namespace

std::vector<std::string> builtin_names() { return {"cdo-ex1", "cdo-ex2", "braid-a3", "generic(m)", "boolean(n)"}; }

bool is_builtin_name(std::string_view name) {
    return name == "cdo-ex1" || name == "cdo-ex2" || name == "braid-a3" || parameter(name, "generic") ||
           parameter(name, "boolean");
}

Arrangement builtin_arrangement(std::string_view name) {
    if (name == "cdo-ex1")
        return Arrangement(Kind::projective, 2,
                           {form3(1, 0, 0), form3(1, 0, -1), form3(0, 1, 0), form3(0, 1, -1), form3(0, 0, 1)},
                           {"x", "x-z", "y", "y-z", "z"});
    if (name == "cdo-ex2")
        return Arrangement(Kind::projective, 2,
                           {form3(1, 0, 0), form3(1, 0, -1), form3(0, 1, 0), form3(0, 1, -2), form3(1, -1, 0),
                            form3(0, 0, 1)},
                           {"x", "x-z", "y", "y-2z", "x-y", "z"});
    if (name == "braid-a3")
        return Arrangement(Kind::projective, 2,
                           {form3(1, 0, 0), form3(0, 1, 0), form3(0, 0, 1), form3(1, -1, 0), form3(1, 0, -1),
                            form3(0, 1, -1)},
                           {"x", "y", "z", "x-y", "x-z", "y-z"});
    if (auto m = parameter(name, "generic")) {
        if (*m == 0) throw DomainError("generic(m) needs m >= 1");
        // Rows (1, t, t^2) of a Vandermonde matrix: any three are independent.
        std::vector<LinearForm> forms;
        for (long t = 0; t < static_cast<long>(*m); ++t) forms.push_back(form3(1, t, t * t));
        return Arrangement(Kind::projective, 2, std::move(forms));
    }
    if (auto n = parameter(name, "boolean")) {
        if (*n == 0) throw DomainError("boolean(n) needs n >= 1");
        std::vector<LinearForm> forms;
        for (std::size_t i = 0; i < *n; ++i) {
            LinearForm f{QVector(*n + 1)};
            f.coeffs[i] = 1;
            forms.push_back(std::move(f));
        }
        return Arrangement(Kind::affine, *n, std::move(forms));
    }
    throw DomainError("unknown builtin arrangement '" + std::string(name) + "'");
}

namespace {

bool truncation_matches(const IntersectionLattice& original, const IntersectionLattice& slice, std::size_t c) {
    std::vector<IndexSet> want, got;
    for (const auto& f : original.flats())
        if (f.codim <= c) want.push_back(f.indices);
    for (const auto& f : slice.flats()) {
        if (f.codim > c) return false;
        const Flat* g = original.find(f.indices);
        if (!g || g->codim != f.codim) return false;
        got.push_back(f.indices);
    }
    return want == got;
}

} // namespace

Arrangement generic_slice(const Arrangement& a, std::size_t c, std::uint64_t seed, int max_attempts) {
    if (c < 1 || c > a.ambient_dim())
        throw DomainError("slice dimension " + std::to_string(c) + " outside 1.." + std::to_string(a.ambient_dim()));
    const IntersectionLattice original = build_lattice(a);
    std::mt19937_64 rng(seed);
    const std::size_t dim = a.vector_dim();
    // Projective/central: c+1 spanning vectors of a linear subspace. Affine:
    // a base point (homogeneous coordinate 1) plus c directions.
    const std::size_t nvec = c + 1;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const long height = 8 + 4L * attempt;
        std::uniform_int_distribution<long> coeff(-height, height);
        std::vector<QVector> span(nvec, QVector(dim));
        for (auto& v : span)
            for (auto& x : v) x = coeff(rng);
        if (a.kind() == Kind::affine) {
            span[0][0] = 1;
            for (std::size_t i = 1; i < nvec; ++i) span[i][0] = 0;
        }
        std::vector<LinearForm> forms;
        for (std::size_t j = 1; j <= a.size(); ++j) {
            const QVector f = a.homogeneous(j);
            std::vector<Rational> g(nvec);
            for (std::size_t i = 0; i < nvec; ++i)
                for (std::size_t k = 0; k < dim; ++k) g[i] += f[k] * span[i][k];
            if (a.kind() == Kind::affine) {
                // restricted form: sum_i g_i t_i + g_0 with t_0 = 1
                std::rotate(g.begin(), g.begin() + 1, g.end());
            }
            forms.push_back(LinearForm{std::move(g)});
        }
        try {
            Arrangement slice(a.kind(), c, std::move(forms), a.labels());
            if (truncation_matches(original, build_lattice(slice), c)) return slice;
        } catch (const ParseError&) {
            // degenerate draw (a form vanished or two became proportional)
        }
    }
    throw GenericityError("generic_slice: no generic " + std::to_string(c) + "-plane found after " +
                          std::to_string(max_attempts) + " draws (seed " + std::to_string(seed) + ")");
}

} // namespace arrlocal
