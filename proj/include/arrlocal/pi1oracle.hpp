#pragma once

#include "arrlocal/arrangement.hpp"
#include "arrlocal/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrlocal {

// Real affine line y = slope x + intercept after the shear.
struct WiringLine {
    std::size_t source = 0; // hyperplane index in the projective arrangement
    Rational slope;
    Rational intercept;
};

struct WiringEvent {
    Rational x, y;
    // 0-based line indices through the point, sorted.
    std::vector<std::size_t> lines;
    // The same lines top to bottom just left of the point.
    std::vector<std::size_t> order_before;
};

struct WiringDiagram {
    std::size_t m = 0; // lines of the projective arrangement
    std::size_t decone_choice = 0;
    Rational shear; // (x, y) -> (x + shear y, y)
    std::vector<WiringLine> lines;
    std::vector<WiringEvent> events; // strictly increasing x
};

struct WiringOptions {
    // Take the (shear_skip + 1)-th admissible shear; lets tests vary it.
    std::size_t shear_skip = 0;
    std::size_t max_shear_attempts = 4096;
};

// Decones (default: last line), then shears by the first admissible rational
// in a fixed enumeration so that no line is vertical and distinct points have
// distinct x. Parallel lines are allowed. Throws DomainError unless the input
// is a projective line arrangement, GenericityError when the search runs out.
WiringDiagram wiring_diagram(const Arrangement& a, std::optional<std::size_t> decone_choice = std::nullopt,
                             const WiringOptions& options = {});

// Letters are +g / -g for generator g (1-based).
using Word = std::vector<int>;

Word free_reduce(const Word& w);

struct GroupPresentation {
    std::size_t generators = 0;
    std::vector<std::string> names;
    // r - 1 relators per event of multiplicity r.
    std::vector<std::vector<Word>> relators_by_event;

    std::vector<Word> relators() const;
};

// One meridian per line; at each event, with w_a..w_b the current meridian
// words bottom to top, delta = w_b ... w_a and the relators [w_j, delta] for
// j < b. Meridians then pass through a positive half twist.
GroupPresentation randell_presentation(const WiringDiagram& w);

// `generators: ...` and `relators:` one word per line.
std::string to_text(const GroupPresentation& p);

struct CharacterSpec {
    std::size_t m = 0;
    long k = 0;
    CycloField field; // conductor m / gcd(m, k)
    CycloElem value;  // image of every meridian
};

// Throws DomainError unless 0 <= k < m.
CharacterSpec character_spec(std::size_t m, long k);

// Rows: relators; columns: generators.
CycloMatrix fox_jacobian(const GroupPresentation& p, const CharacterSpec& chi);

// dim ker d1 - rank d0 for the presentation 2-complex.
std::size_t twisted_b1(const GroupPresentation& p, const CharacterSpec& chi);
std::size_t twisted_b1(const Arrangement& a, long k, std::optional<std::size_t> decone_choice = std::nullopt,
                       const WiringOptions& options = {});

// b1(F)_k for k = 0..m-1, computed concurrently over k. Asserts b1(F)_0 = m-1
// and b1(F)_k = b1(F)_{m-k}.
std::vector<std::size_t> milnor_spectrum_exact(const Arrangement& a,
                                               std::optional<std::size_t> decone_choice = std::nullopt,
                                               const WiringOptions& options = {});

} // namespace arrlocal
