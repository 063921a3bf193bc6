#include "arrlocal/pi1oracle.hpp"

#include "arrlocal/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace arrlocal {

namespace {

struct AffineLine {
    Rational a, b, c; // a x + b y + c = 0
};

using Point = std::pair<Rational, Rational>;

// 0, 1, -1, 2, -2, 1/2, -1/2, 3, ... : rationals p/q by height max(|p|, q).
class ShearEnumeration {
public:
    Rational next() {
        if (!started_) {
            started_ = true;
            return 0;
        }
        if (queue_.empty()) fill(++height_);
        auto x = queue_.front();
        queue_.erase(queue_.begin());
        return x;
    }

private:
    void fill(long h) {
        for (long q = 1; q <= h; ++q)
            for (long p = 1; p <= h; ++p) {
                if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
                Rational x(p, q);
                x.canonicalize();
                queue_.push_back(x);
                queue_.push_back(-x);
            }
    }

    bool started_ = false;
    long height_ = 0;
    std::vector<Rational> queue_;
};

} // namespace

WiringDiagram wiring_diagram(const Arrangement& a, std::optional<std::size_t> decone_choice,
                             const WiringOptions& options) {
    if (a.kind() != Kind::projective || a.ambient_dim() != 2)
        throw DomainError("wiring diagrams need a projective line arrangement (n = 2)");
    const std::size_t h = decone_choice.value_or(a.size());
    const Arrangement d = decone(a, h);

    std::vector<AffineLine> lines;
    for (const auto& f : d.forms()) lines.push_back(AffineLine{f.coeffs[0], f.coeffs[1], f.coeffs[2]});

    std::map<Point, std::set<std::size_t>> points;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto &u = lines[i], &v = lines[j];
            const Rational det = u.a * v.b - u.b * v.a;
            if (det == 0) continue; // parallel
            const Rational x = (u.b * v.c - u.c * v.b) / det;
            const Rational y = (u.c * v.a - u.a * v.c) / det;
            auto& s = points[{x, y}];
            s.insert(i);
            s.insert(j);
        }

    ShearEnumeration shears;
    std::size_t admissible = 0;
    std::optional<Rational> chosen;
    for (std::size_t attempt = 0; attempt < options.max_shear_attempts; ++attempt) {
        const Rational t = shears.next();
        bool ok = std::all_of(lines.begin(), lines.end(), [&](const AffineLine& l) { return l.b - l.a * t != 0; });
        if (ok) {
            std::set<Rational> xs;
            for (const auto& [p, _] : points) ok = ok && xs.insert(p.first + t * p.second).second;
        }
        if (ok && admissible++ == options.shear_skip) {
            chosen = t;
            break;
        }
    }
    if (!chosen) throw GenericityError("shear search exhausted after " + std::to_string(options.max_shear_attempts) +
                                       " candidates");

    WiringDiagram out;
    out.m = a.size();
    out.decone_choice = h;
    out.shear = *chosen;
    const Rational& t = *chosen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const Rational bt = l.b - l.a * t;
        out.lines.push_back(WiringLine{d.source_indices[i], -l.a / bt, -l.c / bt});
    }
    for (const auto& [p, s] : points) {
        WiringEvent e;
        e.x = p.first + t * p.second;
        e.y = p.second;
        e.lines.assign(s.begin(), s.end());
        out.events.push_back(std::move(e));
    }
    std::sort(out.events.begin(), out.events.end(), [](const auto& x, const auto& y) { return x.x < y.x; });

    for (auto& e : out.events) {
        e.order_before = e.lines;
        // All lines meet at the event, so just left of it the higher line is
        // the one with the smaller slope.
        std::sort(e.order_before.begin(), e.order_before.end(),
                  [&](std::size_t i, std::size_t j) { return out.lines[i].slope < out.lines[j].slope; });
    }
    return out;
}

} // namespace arrlocal
