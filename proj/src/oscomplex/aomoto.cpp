#include "arrlocal/oscomplex.hpp"

#include "arrlocal/error.hpp"

#include <numeric>

namespace arrlocal {

namespace {

void require_flat(const Arrangement& a, const EndoSystem& s) {
    if (s.rank() < 2) return;
    const auto report = check_flat(s, build_lattice(a));
    if (!report.flat) {
        const auto& [j, x] = report.violations.front();
        throw PreconditionError("flatness fails: [P_" + std::to_string(j) + ", P_X] != 0 for X = " + to_string(x));
    }
}

} // namespace

AomotoComplex aomoto_complex(const Arrangement& a, const EndoSystem& s, std::optional<std::size_t> decone_choice,
                             std::optional<std::vector<std::size_t>> ordering) {
    if (s.size() != a.size())
        throw ShapeError("system has " + std::to_string(s.size()) + " residues for " + std::to_string(a.size()) +
                         " hyperplanes");
    require_flat(a, s);

    AomotoComplex out;
    out.coefficient_rank = s.rank();

    // `source[j]`: index into the system of hyperplane j of the working
    // arrangement; `local_ordering` translates the caller's ordering.
    std::optional<Arrangement> deconed;
    std::vector<std::size_t> source(a.size() + 1);
    std::iota(source.begin(), source.end(), 0);
    std::optional<std::vector<std::size_t>> local_ordering = ordering;
    if (a.kind() == Kind::projective) {
        const std::size_t h = decone_choice.value_or(a.size());
        deconed = decone(a, h);
        out.decone_choice = h;
        source.assign(deconed->size() + 1, 0);
        std::vector<std::size_t> to_local(a.size() + 1, 0);
        for (std::size_t j = 1; j <= deconed->size(); ++j) {
            source[j] = deconed->source_indices[j - 1];
            to_local[source[j]] = j;
        }
        if (ordering) {
            std::vector<std::size_t> local;
            for (auto j : *ordering) {
                if (j < 1 || j > a.size()) throw DomainError("ordering entry out of range");
                if (j != h) local.push_back(to_local[j]);
            }
            local_ordering = std::move(local);
        }
    } else if (decone_choice) {
        throw DomainError("decone choice applies to projective arrangements only");
    }
    const Arrangement& work = deconed ? *deconed : a;

    const OrlikSolomonAlgebra os(work, local_ordering);
    out.basis = os.basis();
    if (deconed) {
        for (auto& j : out.basis.ordering) j = source[j];
        for (auto& level : out.basis.monomials)
            for (auto& m : level)
                for (auto& j : m) j = source[j];
    }

    const std::size_t r = s.rank();
    const auto dims = os.basis().dims();
    for (std::size_t q = 0; q + 1 < dims.size(); ++q) {
        QMatrix d(dims[q + 1] * r, dims[q] * r);
        for (std::size_t i = 0; i < dims[q]; ++i)
            for (std::size_t j = 1; j <= work.size(); ++j) {
                const QMatrix& p = s[source[j]];
                for (const auto& [t, c] : os.multiply(j, q, i))
                    for (std::size_t u = 0; u < r; ++u)
                        for (std::size_t v = 0; v < r; ++v) d(t * r + u, i * r + v) += c * p(u, v);
            }
        out.differentials.push_back(std::move(d));
    }
    for (std::size_t q = 0; q + 1 < out.differentials.size(); ++q)
        if (!is_zero(out.differentials[q + 1] * out.differentials[q]))
            throw InvariantViolation("omega does not square to zero in degree " + std::to_string(q));
    return out;
}

AomotoComplex aomoto_complex(const Arrangement& a, const WeightSystem& w, std::optional<std::size_t> decone_choice,
                             std::optional<std::vector<std::size_t>> ordering) {
    return aomoto_complex(a, EndoSystem(w), decone_choice, std::move(ordering));
}

std::vector<std::size_t> aomoto_cohomology(const AomotoComplex& c) {
    const std::size_t top = c.basis.monomials.size();
    std::vector<std::size_t> ranks(c.differentials.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t q = 0; q < ranks.size(); ++q) ranks[q] = rank(c.differentials[q]);
    std::vector<std::size_t> h(top);
    for (std::size_t q = 0; q < top; ++q) {
        const std::size_t chains = c.basis.monomials[q].size() * c.coefficient_rank;
        const std::size_t out_rank = q < ranks.size() ? ranks[q] : 0;
        const std::size_t in_rank = q > 0 ? ranks[q - 1] : 0;
        h[q] = chains - out_rank - in_rank;
    }
    return h;
}

} // namespace arrlocal
