#include "arrlocal/nonres.hpp"

#include "arrlocal/error.hpp"

#include <algorithm>

namespace arrlocal {

namespace {

void require_size(const EndoSystem& s, const IntersectionLattice& lattice) {
    if (s.size() != lattice.arrangement().size())
        throw ShapeError("system has " + std::to_string(s.size()) + " residues for " +
                         std::to_string(lattice.arrangement().size()) + " hyperplanes");
}

bool is_triangular(const QMatrix& m) {
    bool upper = true, lower = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i > j && m(i, j) != 0) upper = false;
            if (i < j && m(i, j) != 0) lower = false;
        }
    return upper || lower;
}

Rational mod_one(const Rational& x) { return x - Rational(floor(x)); }

// The flats quantified over by a condition.
std::vector<const Flat*> quantified_flats(Condition kind, const IntersectionLattice& lattice,
                                          std::optional<std::size_t> hyperplane) {
    std::vector<const Flat*> out;
    for (const auto& f : lattice.flats()) {
        if (f.codim == 0) continue;
        switch (kind) {
        case Condition::kohno:
            out.push_back(&f);
            break;
        case Condition::stv:
        case Condition::thm33:
            if (f.dense) out.push_back(&f);
            break;
        case Condition::ah:
            if (f.dense && f.contained_in(*hyperplane)) out.push_back(&f);
            break;
        }
    }
    return out;
}

} // namespace

std::string_view to_string(Condition c) {
    switch (c) {
    case Condition::kohno: return "kohno";
    case Condition::stv: return "stv";
    case Condition::ah: return "ah";
    case Condition::thm33: return "thm33";
    }
    return "?";
}

Condition parse_condition(std::string_view name) {
    for (auto c : {Condition::kohno, Condition::stv, Condition::ah, Condition::thm33})
        if (name == to_string(c)) return c;
    throw ParseError("unknown condition '" + std::string(name) + "' (kohno, stv, ah, thm33)");
}

Residue residue(const EndoSystem& s, const IntersectionLattice& lattice, const IndexSet& x) {
    require_size(s, lattice);
    if (x.empty() || !lattice.find(x)) throw DomainError("not an edge: " + to_string(x));
    return Residue{x, residue_matrix(s, x)};
}

MonodromyClass monodromy_class(const EndoSystem& s, const IntersectionLattice& lattice, const IndexSet& x) {
    const auto res = residue(s, lattice, x);
    MonodromyClass out;
    out.flat = x;
    out.charpoly = charpoly(res.value);
    if (is_triangular(res.value)) {
        std::vector<Rational> e;
        for (std::size_t i = 0; i < res.value.rows(); ++i) e.push_back(mod_one(res.value(i, i)));
        std::sort(e.begin(), e.end());
        out.exponents = std::move(e);
    }
    out.admits_one = !integer_roots(out.charpoly, RootMode::any_integer).empty();
    return out;
}

NonresReport check_condition(const EndoSystem& s, Condition kind, const IntersectionLattice& lattice,
                             std::optional<std::size_t> hyperplane) {
    require_size(s, lattice);
    NonresReport out;
    out.condition = kind;
    if (kind == Condition::ah) {
        if (!hyperplane) throw PreconditionError("condition ah needs a hyperplane");
        if (*hyperplane < 1 || *hyperplane > s.size())
            throw DomainError("hyperplane " + std::to_string(*hyperplane) + " out of range 1.." +
                              std::to_string(s.size()));
        out.hyperplane = hyperplane;
    }
    const RootMode mode =
        kind == Condition::stv || kind == Condition::thm33 ? RootMode::nonneg_integer : RootMode::any_integer;

    const auto flats = quantified_flats(kind, lattice, out.hyperplane);
    std::vector<std::vector<Integer>> roots(flats.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < flats.size(); ++i) {
        try {
            roots[i] = integer_roots(charpoly(residue_matrix(s, flats[i]->indices)), mode);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < flats.size(); ++i)
        for (auto& z : roots[i]) out.violations.push_back(Violation{flats[i]->indices, std::move(z)});

    if (kind == Condition::thm33 && s.rank() > 1)
        for (std::size_t i = 1; i <= s.size(); ++i)
            for (std::size_t j = i + 1; j <= s.size(); ++j)
                if (!is_zero(commutator(s[i], s[j])))
                    out.hypothesis_failures.push_back("P_" + std::to_string(i) + ",P_" + std::to_string(j));

    out.holds = out.violations.empty() && out.hypothesis_failures.empty();
    return out;
}

ShiftResult prop4_shift(const EndoSystem& s, std::size_t hyperplane, const IntersectionLattice& lattice) {
    const auto pre = check_condition(s, Condition::ah, lattice, hyperplane);
    if (!pre.holds)
        throw PreconditionError("system is not (A,H)-nonresonant for H = " + std::to_string(hyperplane) +
                                ": integer eigenvalue " + pre.violations.front().integer_root.get_str() + " at " +
                                to_string(pre.violations.front().flat));

    Integer q = 1;
    for (const auto& f : dense_edges(lattice)) {
        if (f.contained_in(hyperplane)) continue;
        q = std::max(q, cauchy_exceeding_integer(charpoly(residue_matrix(s, f.indices))));
    }
    if (!q.fits_slong_p()) throw ResourceError("shift exceeds machine range");

    const long ql = q.get_si();
    const long m = static_cast<long>(s.size());
    std::vector<long> shift(s.size(), -ql);
    shift[hyperplane - 1] = (m - 1) * ql;
    ShiftResult out{s.translated(shift), ql};

    const auto post = check_condition(out.system, Condition::stv, lattice);
    if (!post.holds)
        throw InvariantViolation("shifted system fails stv at " + to_string(post.violations.front().flat) +
                                 " with eigenvalue " + post.violations.front().integer_root.get_str());
    return out;
}

std::optional<std::size_t> translate_exists(const EndoSystem& s, const IntersectionLattice& lattice) {
    for (std::size_t h = 1; h <= s.size(); ++h)
        if (check_condition(s, Condition::ah, lattice, h).holds) return h;
    return std::nullopt;
}

} // namespace arrlocal
