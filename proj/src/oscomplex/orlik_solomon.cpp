#include "arrlocal/oscomplex.hpp"

#include "arrlocal/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace arrlocal {

namespace {

using Mask = std::uint64_t;

inline Mask bit(std::size_t p) { return Mask{1} << p; }
inline Mask above(std::size_t p) { return p >= 63 ? 0 : ~((bit(p + 1)) - 1); }
inline Mask below(std::size_t p) { return bit(p) - 1; }

// Sign of the shuffle sorting the concatenation a ++ b of sorted disjoint sets.
int shuffle_sign(Mask a, Mask b) {
    std::size_t inversions = 0;
    for (Mask rest = b; rest; rest &= rest - 1) inversions += std::popcount(a & above(std::countr_zero(rest)));
    return inversions % 2 ? -1 : 1;
}

// Cone vectors: the hyperplane at infinity first for affine input.
std::vector<QVector> cone_vectors(const Arrangement& a, const std::vector<std::size_t>& ordering, bool with_infinity) {
    std::vector<QVector> out;
    if (with_infinity) {
        QVector inf(a.vector_dim());
        inf[0] = 1;
        out.push_back(std::move(inf));
    }
    for (auto j : ordering) out.push_back(a.homogeneous(j));
    return out;
}

std::vector<std::size_t> checked_ordering(const Arrangement& a, std::optional<std::vector<std::size_t>> ordering) {
    std::vector<std::size_t> out;
    if (!ordering) {
        out.resize(a.size());
        std::iota(out.begin(), out.end(), 1);
        return out;
    }
    out = std::move(*ordering);
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == a.size();
    for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i + 1;
    if (!ok) throw DomainError("ordering is not a permutation of 1.." + std::to_string(a.size()));
    return out;
}

} // namespace

std::vector<std::size_t> NBCBasis::dims() const {
    std::vector<std::size_t> out;
    for (const auto& level : monomials) out.push_back(level.size());
    return out;
}

std::vector<IndexSet> circuits(const Arrangement& a) {
    if (a.size() > 30) throw ResourceError("circuit enumeration limited to 30 hyperplanes");
    const bool affine = a.kind() == Kind::affine;
    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), 1);
    const VectorMatroid mat(cone_vectors(a, order, affine));
    const std::size_t off = affine ? 1 : 0;

    std::vector<IndexSet> out;
    // Depth-first over independent sets in increasing order; every circuit is
    // an independent set plus one larger element.
    std::vector<Mask> stack{0};
    while (!stack.empty()) {
        const Mask s = stack.back();
        stack.pop_back();
        const std::size_t start = s ? 64 - std::countl_zero(s) : 0;
        for (std::size_t e = start; e < mat.size(); ++e) {
            const Mask t = s | bit(e);
            if (mat.rank(t) == static_cast<std::size_t>(std::popcount(t))) {
                stack.push_back(t);
                continue;
            }
            bool minimal = true;
            for (Mask rest = s; minimal && rest; rest &= rest - 1)
                minimal = mat.rank(t & ~(rest & -rest)) == static_cast<std::size_t>(std::popcount(t)) - 1;
            if (!minimal) continue;
            Mask hyper = t;
            if (affine) {
                // Through infinity: a minimal set with empty intersection.
                // Otherwise keep it only when the set actually meets.
                if (t & 1) {
                    hyper = t >> 1;
                } else {
                    if (mat.rank(t | 1) == mat.rank(t)) continue;
                    hyper = t >> off;
                }
            }
            out.push_back(from_mask(hyper));
        }
    }
    std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

OrlikSolomonAlgebra::OrlikSolomonAlgebra(const Arrangement& a, std::optional<std::vector<std::size_t>> ordering)
    : offset_(a.kind() == Kind::affine ? 1 : 0),
      matroid_([&] {
          if (a.kind() == Kind::projective)
              throw DomainError("Orlik-Solomon algebra needs an affine or central arrangement; decone first");
          if (a.size() + 1 > 31) throw ResourceError("Orlik-Solomon algebra limited to 30 hyperplanes");
          return VectorMatroid(cone_vectors(a, checked_ordering(a, ordering), a.kind() == Kind::affine));
      }()) {
    basis_.ordering = checked_ordering(a, ordering);
    position_.assign(a.size() + 1, 0);
    hyperplane_at_.assign(a.size() + offset_, 0);
    for (std::size_t k = 0; k < basis_.ordering.size(); ++k) {
        position_[basis_.ordering[k]] = k + offset_;
        hyperplane_at_[k + offset_] = basis_.ordering[k];
    }

    const std::size_t n = matroid_.size();
    auto is_nbc = [&](Mask s) {
        if (matroid_.rank(s) != static_cast<std::size_t>(std::popcount(s))) return false;
        const std::size_t top = 63 - std::countl_zero(s);
        for (std::size_t c = 0; c < top; ++c) {
            if (s & bit(c)) continue;
            const Mask tail = s & above(c);
            if (matroid_.rank(tail | bit(c)) == matroid_.rank(tail)) return false;
        }
        return true;
    };

    std::vector<std::vector<Mask>> levels{{0}};
    while (true) {
        std::vector<Mask> next;
        for (Mask s : levels.back()) {
            const std::size_t start = s ? 64 - std::countl_zero(s) : offset_;
            for (std::size_t e = std::max(start, offset_); e < n; ++e)
                if (is_nbc(s | bit(e))) next.push_back(s | bit(e));
        }
        if (next.empty()) break;
        levels.push_back(std::move(next));
    }
    basis_index_.resize(levels.size());
    for (std::size_t q = 0; q < levels.size(); ++q) {
        std::sort(levels[q].begin(), levels[q].end(), [&](Mask x, Mask y) {
            // lexicographic on position sequences
            while (x && y) {
                const auto bx = std::countr_zero(x), by = std::countr_zero(y);
                if (bx != by) return bx < by;
                x &= x - 1;
                y &= y - 1;
            }
            return !x && y;
        });
        std::vector<IndexSet> mons;
        for (std::size_t i = 0; i < levels[q].size(); ++i) {
            basis_index_[q].emplace(levels[q][i], i);
            IndexSet m;
            for (Mask rest = levels[q][i]; rest; rest &= rest - 1) m.push_back(hyperplane_at_[std::countr_zero(rest)]);
            mons.push_back(std::move(m));
        }
        basis_.monomials.push_back(std::move(mons));
    }
}

const OrlikSolomonAlgebra::Combination& OrlikSolomonAlgebra::straighten(Mask t) const {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    Combination result;
    const std::size_t size = std::popcount(t);
    if (matroid_.rank(t) == size) {
        // Find c outside t in the closure of the elements of t above it.
        std::optional<std::size_t> broken;
        const std::size_t top = t ? 63 - std::countl_zero(t) : 0;
        for (std::size_t c = 0; c < top && !broken; ++c) {
            if (t & bit(c)) continue;
            const Mask tail = t & above(c);
            if (matroid_.rank(tail | bit(c)) == matroid_.rank(tail)) broken = c;
        }
        if (!broken) {
            result.emplace_back(t, Rational(1));
        } else {
            const std::size_t c = *broken;
            Mask b = t & above(c);
            for (Mask rest = b; rest; rest &= rest - 1) {
                const Mask smaller = b & ~(rest & -rest);
                if (matroid_.rank(smaller | bit(c)) == matroid_.rank(smaller)) b = smaller;
            }
            const Mask r = t & ~b;
            const int sign_br = shuffle_sign(b, r);
            // e_B = -sum_{i>=1} (-1)^i e_{C - c_i}, C = {c} u B sorted.
            const Mask circuit = b | bit(c);
            std::vector<std::pair<Mask, Rational>> acc;
            std::size_t i = 1;
            for (Mask rest = b; rest; rest &= rest - 1, ++i) {
                const Mask drop = circuit & ~(rest & -rest);
                const int coeff = -(i % 2 ? -1 : 1) * sign_br * shuffle_sign(drop, r);
                for (const auto& [m, x] : straighten(drop | r)) acc.emplace_back(m, x * coeff);
            }
            std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [m, x] : acc) {
                if (!result.empty() && result.back().first == m)
                    result.back().second += x;
                else
                    result.emplace_back(m, std::move(x));
            }
            std::erase_if(result, [](const auto& e) { return e.second == 0; });
        }
    }
    return memo_.emplace(t, std::move(result)).first->second;
}

std::vector<std::pair<std::size_t, Rational>> OrlikSolomonAlgebra::to_basis(const Combination& c, int sign) const {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (const auto& [m, x] : c) {
        if (offset_ && (m & 1)) continue; // in the ideal generated by infinity
        const std::size_t q = std::popcount(m);
        auto it = basis_index_.at(q).find(m);
        if (it == basis_index_[q].end()) throw InvariantViolation("straightening left a non-NBC monomial");
        out.emplace_back(it->second, x * sign);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::vector<std::pair<std::size_t, Rational>> OrlikSolomonAlgebra::multiply(std::size_t hyperplane,
                                                                             std::size_t degree,
                                                                             std::size_t i) const {
    if (hyperplane < 1 || hyperplane >= position_.size()) throw DomainError("hyperplane index out of range");
    const auto& level = basis_.monomials.at(degree);
    Mask s = 0;
    for (auto j : level.at(i)) s |= bit(position_[j]);
    const std::size_t p = position_[hyperplane];
    if (s & bit(p)) return {};
    if (degree + 1 >= basis_.monomials.size()) return {};
    const int sign = std::popcount(s & below(p)) % 2 ? -1 : 1;
    return to_basis(straighten(s | bit(p)), sign);
}

std::vector<std::pair<std::size_t, Rational>> OrlikSolomonAlgebra::express(
    const std::vector<std::size_t>& monomial) const {
    std::vector<std::size_t> pos;
    for (auto j : monomial) {
        if (j < 1 || j >= position_.size()) throw DomainError("hyperplane index out of range");
        pos.push_back(position_[j]);
    }
    std::size_t inversions = 0;
    for (std::size_t x = 0; x < pos.size(); ++x)
        for (std::size_t y = x + 1; y < pos.size(); ++y) {
            if (pos[x] == pos[y]) return {};
            inversions += pos[x] > pos[y];
        }
    if (pos.size() >= basis_.monomials.size()) return {};
    Mask m = 0;
    for (auto p : pos) m |= bit(p);
    return to_basis(straighten(m), inversions % 2 ? -1 : 1);
}

NBCBasis nbc_basis(const Arrangement& a, std::optional<std::vector<std::size_t>> ordering) {
    return OrlikSolomonAlgebra(a, std::move(ordering)).basis();
}

} // namespace arrlocal
