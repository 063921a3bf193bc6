#pragma once

#include "arrlocal/matrix.hpp"
#include "arrlocal/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrlocal {

enum class Kind { projective, affine, central };

std::string_view to_string(Kind kind);

// Coefficients of one hyperplane. Projective and central forms carry the
// n+1 homogeneous coefficients of x_0..x_n; affine forms carry n linear
// coefficients followed by the constant term.
struct LinearForm {
    std::vector<Rational> coeffs;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// An ordered hyperplane arrangement with exact rational coefficients.
//
// Hyperplanes are addressed by 1-based index in file order throughout the
// public API; internal containers are 0-based. For projective and central
// arrangements `ambient_dim` is the projective dimension n (vector space
// C^{n+1}); for affine arrangements it is the dimension of C^n.
class Arrangement {
public:
    // Validates: consistent lengths, no zero form (nonzero linear part for
    // affine forms), no two proportional forms. Throws ParseError naming the
    // offending 1-based indices.
    Arrangement(Kind kind, std::size_t ambient_dim, std::vector<LinearForm> forms,
                std::vector<std::string> labels = {});

    Kind kind() const noexcept { return kind_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return forms_.size(); }
    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    const LinearForm& form(std::size_t index) const { return forms_.at(index - 1); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(std::size_t index) const;

    // Length of homogeneous vectors: n+1 in every kind.
    std::size_t vector_dim() const noexcept { return n_ + 1; }

    // The form as a vector in the homogeneous coordinates x_0..x_n. For an
    // affine form a.x + c this is (c, a_1, ..., a_n).
    QVector homogeneous(std::size_t index) const;
    // Linear part only (length n for affine, n+1 otherwise).
    QVector linear_part(std::size_t index) const;

    // Set when produced by decone(): the 1-based projective index sent to
    // infinity, and for each affine hyperplane its original index.
    std::optional<std::size_t> decone_hyperplane;
    std::vector<std::size_t> source_indices;

private:
    Kind kind_;
    std::size_t n_;
    std::vector<LinearForm> forms_;
    std::vector<std::string> labels_;
};

// `.arr` text: `<kind> <n> <m>` then m rows of rationals, `#` comments.
Arrangement parse_arrangement(std::string_view text);
std::string to_arr_text(const Arrangement& a);

// Sends hyperplane h (1-based) of a projective arrangement to infinity by an
// exact change of coordinates and sets that coordinate to 1.
Arrangement decone(const Arrangement& a, std::size_t h);

// Inverse of decone up to projective equivalence: the projective closure of
// an affine arrangement with the hyperplane at infinity inserted at 1-based
// position `at` (default: last).
Arrangement projective_closure(const Arrangement& affine, std::optional<std::size_t> at = std::nullopt);

// cdo-ex1, cdo-ex2, braid-a3, generic(m), boolean(n). Throws DomainError for
// unknown names.
Arrangement builtin_arrangement(std::string_view name);
bool is_builtin_name(std::string_view name);
std::vector<std::string> builtin_names();

// Restriction to a pseudo-random rational c-plane, redrawn until the slice's
// intersection poset equals the codim <= c truncation of the original.
// Throws GenericityError after `max_attempts` draws.
Arrangement generic_slice(const Arrangement& a, std::size_t c, std::uint64_t seed, int max_attempts = 64);

} // namespace arrlocal
