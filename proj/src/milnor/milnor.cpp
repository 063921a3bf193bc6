#include "arrlocal/milnor.hpp"

#include "arrlocal/error.hpp"

namespace arrlocal {

namespace {

void require_lines(const Arrangement& a) {
    if (a.kind() != Kind::projective || a.ambient_dim() != 2)
        throw DomainError("eigenspace bounds need a projective line arrangement (n = 2)");
}

void require_k(const Arrangement& a, long k) {
    const long m = static_cast<long>(a.size());
    if (k <= 0 || k >= m) throw DomainError("k = " + std::to_string(k) + " outside 0 < k < " + std::to_string(m));
}

} // namespace

LineBound thm51_line_bound(const IntersectionLattice& lattice, std::size_t hyperplane, long k) {
    const auto& a = lattice.arrangement();
    require_lines(a);
    require_k(a, k);
    if (hyperplane < 1 || hyperplane > a.size()) throw DomainError("hyperplane index out of range");
    const long m = static_cast<long>(a.size());
    LineBound out;
    out.hyperplane = hyperplane;
    for (const auto* x : lattice.flats_of_codim(2)) {
        if (!x->contained_in(hyperplane)) continue;
        const long mx = static_cast<long>(x->multiplicity);
        if (mx > 2 && (k * mx) % m == 0) {
            out.points.push_back(QualifyingPoint{x->indices, x->multiplicity});
            out.bound += x->multiplicity - 2;
        }
    }
    return out;
}

std::size_t thm51_bound(const Arrangement& a, std::size_t hyperplane, long k) {
    require_lines(a);
    require_k(a, k);
    return thm51_line_bound(build_lattice(a), hyperplane, k).bound;
}

MilnorBoundReport spectrum_bounds(const Arrangement& a) {
    require_lines(a);
    const auto lattice = build_lattice(a);
    MilnorBoundReport out;
    out.m = a.size();
    for (long k = 1; k < static_cast<long>(a.size()); ++k) {
        EigenspaceBounds e;
        e.k = k;
        for (std::size_t h = 1; h <= a.size(); ++h) {
            e.per_line.push_back(thm51_line_bound(lattice, h, k));
            if (h == 1 || e.per_line.back().bound < e.best) {
                e.best = e.per_line.back().bound;
                e.best_line = h;
            }
        }
        out.by_k.push_back(std::move(e));
    }
    return out;
}

} // namespace arrlocal
