#include "arrlocal/lattice.hpp"

#include "arrlocal/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace arrlocal {

std::uint64_t to_mask(const IndexSet& s) {
    std::uint64_t m = 0;
    for (auto i : s) m |= 1ULL << (i - 1);
    return m;
}

IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) s.push_back(i + 1);
    return s;
}

std::string to_string(const IndexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

VectorMatroid::VectorMatroid(std::vector<QVector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.size() > 64) throw ResourceError("vector matroid limited to 64 elements");
}

std::size_t VectorMatroid::rank(std::uint64_t mask) const {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < vectors_.size(); ++i)
        if (mask >> i & 1) rows.push_back(vectors_[i]);
    const std::size_t r = arrlocal::rank(from_rows(rows, vectors_.front().size()));
    memo_.emplace(mask, r);
    return r;
}

std::uint64_t VectorMatroid::closure(std::uint64_t mask) const {
    const std::size_t r = rank(mask);
    std::uint64_t out = mask;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        const std::uint64_t bit = 1ULL << i;
        if (!(mask & bit) && rank(mask | bit) == r) out |= bit;
    }
    return out;
}

bool Flat::contained_in(std::size_t hyperplane) const {
    return std::binary_search(indices.begin(), indices.end(), hyperplane);
}

IntersectionLattice::IntersectionLattice(Arrangement arrangement, std::vector<Flat> flats)
    : arrangement_(std::move(arrangement)), flats_(std::move(flats)), cover_(flats_.size()) {
    for (std::size_t i = 0; i < flats_.size(); ++i) by_mask_.emplace(flats_[i].mask(), i);
    for (std::size_t i = 0; i < flats_.size(); ++i)
        for (std::size_t j = 0; j < flats_.size(); ++j) {
            if (flats_[j].codim != flats_[i].codim + 1) continue;
            const auto mi = flats_[i].mask(), mj = flats_[j].mask();
            if ((mi & mj) == mi) cover_[i].push_back(j);
        }
}

std::vector<const Flat*> IntersectionLattice::flats_of_codim(std::size_t codim) const {
    std::vector<const Flat*> out;
    for (const auto& f : flats_)
        if (f.codim == codim) out.push_back(&f);
    return out;
}

const Flat* IntersectionLattice::find(const IndexSet& indices) const {
    auto it = by_mask_.find(to_mask(indices));
    return it == by_mask_.end() ? nullptr : &flats_[it->second];
}

namespace {

std::vector<QVector> homogeneous_vectors(const Arrangement& a) {
    std::vector<QVector> v;
    for (std::size_t j = 1; j <= a.size(); ++j) v.push_back(a.homogeneous(j));
    return v;
}

std::vector<QVector> linear_vectors(const Arrangement& a) {
    std::vector<QVector> v;
    for (std::size_t j = 1; j <= a.size(); ++j) v.push_back(a.linear_part(j));
    return v;
}

} // namespace

IntersectionLattice build_lattice(const Arrangement& a, const LatticeLimits& limits) {
    if (a.size() > limits.max_hyperplanes)
        throw ResourceError("lattice: " + std::to_string(a.size()) + " hyperplanes exceeds the guard of " +
                            std::to_string(limits.max_hyperplanes));
    if (a.ambient_dim() > limits.max_dim)
        throw ResourceError("lattice: dimension " + std::to_string(a.ambient_dim()) + " exceeds the guard of " +
                            std::to_string(limits.max_dim));

    const VectorMatroid homog(homogeneous_vectors(a));
    const VectorMatroid linear(linear_vectors(a));
    auto nonempty = [&](std::uint64_t mask) {
        switch (a.kind()) {
        case Kind::projective: return homog.rank(mask) <= a.ambient_dim();
        case Kind::central: return true;
        case Kind::affine: return homog.rank(mask) == linear.rank(mask);
        }
        return false;
    };

    // codim -> set of closed masks (ordered for determinism)
    std::vector<std::vector<std::uint64_t>> levels{{0}};
    std::vector<std::uint64_t> level;
    for (std::size_t j = 0; j < a.size(); ++j) level.push_back(homog.closure(1ULL << j));
    while (!level.empty()) {
        std::sort(level.begin(), level.end(),
                  [](auto x, auto y) { return from_mask(x) < from_mask(y); });
        level.erase(std::unique(level.begin(), level.end()), level.end());
        levels.push_back(level);
        std::vector<std::uint64_t> next;
        for (auto f : level)
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (f >> j & 1) continue;
                const std::uint64_t t = homog.closure(f | 1ULL << j);
                if (nonempty(t)) next.push_back(t);
            }
        level = std::move(next);
    }

    std::vector<Flat> flats;
    for (std::size_t c = 0; c < levels.size(); ++c)
        for (auto mask : levels[c]) {
            Flat f;
            f.indices = from_mask(mask);
            f.codim = c;
            f.multiplicity = f.indices.size();
            std::vector<QVector> rows;
            for (auto j : f.indices) rows.push_back(a.homogeneous(j));
            f.equations = from_rows(rows, a.vector_dim());
            flats.push_back(std::move(f));
        }

    flats[0].mobius = 1;
    for (std::size_t i = 1; i < flats.size(); ++i) {
        const auto mi = flats[i].mask();
        long sum = 0;
        for (std::size_t k = 0; k < i; ++k) {
            const auto mk = flats[k].mask();
            if ((mk & mi) == mk && mk != mi) sum += flats[k].mobius;
        }
        flats[i].mobius = -sum;
    }

    IntersectionLattice provisional(a, flats);
    for (std::size_t i = 1; i < flats.size(); ++i)
        flats[i].dense = is_irreducible(localize(provisional, provisional.flats()[i]));
    return IntersectionLattice(a, std::move(flats));
}

std::vector<unsigned long> betti_numbers(const IntersectionLattice& lattice) {
    if (lattice.arrangement().kind() == Kind::projective) return betti_numbers(lattice.arrangement());
    std::vector<unsigned long> b(lattice.max_codim() + 1, 0);
    for (const auto& f : lattice.flats()) b[f.codim] += static_cast<unsigned long>(std::labs(f.mobius));
    return b;
}

std::vector<unsigned long> betti_numbers(const Arrangement& a, std::optional<std::size_t> decone_at) {
    if (a.kind() == Kind::projective) {
        const IntersectionLattice affine = build_lattice(decone(a, decone_at.value_or(a.size())));
        return betti_numbers(affine);
    }
    return betti_numbers(build_lattice(a));
}

Arrangement localize(const IntersectionLattice& lattice, const Flat& x) {
    const Flat* found = lattice.find(x.indices);
    if (!found || x.indices.empty())
        throw DomainError("flat " + to_string(x.indices) + " is not an edge of the lattice");
    const Arrangement& a = lattice.arrangement();
    const std::size_t len = a.kind() == Kind::affine ? a.ambient_dim() : a.vector_dim();
    // Columns are the (linear parts of the) forms through X; reduced columns
    // give coordinates in the basis formed by the pivot columns.
    QMatrix cols(len, x.indices.size());
    for (std::size_t k = 0; k < x.indices.size(); ++k) {
        const QVector v = a.linear_part(x.indices[k]);
        for (std::size_t i = 0; i < len; ++i) cols(i, k) = v[i];
    }
    const RowEchelon e = rref(cols);
    const std::size_t r = e.pivots.size();
    std::vector<LinearForm> forms;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < x.indices.size(); ++k) {
        LinearForm f;
        for (std::size_t i = 0; i < r; ++i) f.coeffs.push_back(e.reduced(i, k));
        forms.push_back(std::move(f));
        labels.push_back(a.label(x.indices[k]));
    }
    Arrangement out(Kind::central, r - 1, std::move(forms), std::move(labels));
    out.source_indices = x.indices;
    return out;
}

namespace {

std::vector<QVector> central_vectors(const Arrangement& c) {
    if (c.kind() != Kind::central) throw DomainError("irreducibility test needs a central arrangement");
    if (c.size() > max_irreducibility_size)
        throw ResourceError("irreducibility: " + std::to_string(c.size()) + " hyperplanes exceeds the guard of " +
                            std::to_string(max_irreducibility_size));
    return homogeneous_vectors(c);
}

} // namespace

bool is_irreducible(const Arrangement& central) {
    const auto vectors = central_vectors(central);
    const std::size_t k = vectors.size();
    QMatrix cols(central.vector_dim(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < central.vector_dim(); ++i) cols(i, j) = vectors[j][i];
    const RowEchelon e = rref(cols);

    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    // The fundamental circuit of a non-basis column joins it with every basis
    // column carrying a nonzero coefficient in its expansion.
    std::vector<bool> is_pivot(k, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < k; ++j) {
        if (is_pivot[j]) continue;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced(i, j) != 0) parent[root(j)] = root(e.pivots[i]);
    }
    for (std::size_t j = 1; j < k; ++j)
        if (root(j) != root(0)) return false;
    return true;
}

bool is_irreducible_bruteforce(const Arrangement& central) {
    const VectorMatroid m(central_vectors(central));
    const std::uint64_t all = m.full_mask();
    const std::size_t total = m.rank(all);
    // Element 0 always sits in S; S ranges over proper subsets.
    const std::uint64_t others = all & ~1ULL;
    for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
        const std::uint64_t s = sub | 1ULL;
        if (s != all && m.rank(s) + m.rank(all & ~s) == total) return false;
        if (sub == 0) break;
    }
    return true;
}

std::vector<Flat> dense_edges(const IntersectionLattice& lattice) {
    std::vector<Flat> out;
    for (const auto& f : lattice.flats())
        if (f.dense) out.push_back(f);
    return out;
}

} // namespace arrlocal
