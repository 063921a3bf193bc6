#include "arrlocal/arrangement.hpp"

#include "arrlocal/error.hpp"
#include "arrlocal/matrix.hpp"

#include <charconv>
#include <sstream>

namespace arrlocal {

std::string_view to_string(Kind kind) {
    switch (kind) {
    case Kind::projective: return "projective";
    case Kind::affine: return "affine";
    case Kind::central: return "central";
    }
    return "?";
}

namespace {

struct FormProblem {
    std::size_t first; // 1-based
    std::size_t second; // 0 when the problem concerns one form
    std::string message;
};

bool all_zero(const std::vector<Rational>& v, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
        if (v[i] != 0) return false;
    return true;
}

bool proportional(const QVector& a, const QVector& b) {
    QMatrix m(2, a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        m(0, j) = a[j];
        m(1, j) = b[j];
    }
    return rank(m) < 2;
}

std::optional<FormProblem> find_problem(Kind kind, std::size_t n, const std::vector<LinearForm>& forms) {
    const std::size_t len = n + 1;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const auto& c = forms[i].coeffs;
        if (c.size() != len)
            return FormProblem{i + 1, 0, "form " + std::to_string(i + 1) + " has " + std::to_string(c.size()) +
                                             " coefficients, expected " + std::to_string(len)};
        if (all_zero(c, 0, len)) return FormProblem{i + 1, 0, "zero form"};
        if (kind == Kind::affine && all_zero(c, 0, n))
            return FormProblem{i + 1, 0, "affine form " + std::to_string(i + 1) + " has zero linear part"};
    }
    auto vec = [&](std::size_t i) {
        const auto& c = forms[i].coeffs;
        if (kind != Kind::affine) return QVector(c.begin(), c.end());
        QVector v;
        v.push_back(c[n]);
        v.insert(v.end(), c.begin(), c.begin() + static_cast<long>(n));
        return v;
    };
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (proportional(vec(i), vec(j)))
                return FormProblem{i + 1, j + 1,
                                   "proportional forms " + std::to_string(i + 1) + "," + std::to_string(j + 1)};
    return std::nullopt;
}

} // namespace

Arrangement::Arrangement(Kind kind, std::size_t ambient_dim, std::vector<LinearForm> forms,
                         std::vector<std::string> labels)
    : kind_(kind), n_(ambient_dim), forms_(std::move(forms)), labels_(std::move(labels)) {
    if (forms_.empty()) throw ParseError("arrangement needs at least one hyperplane");
    if (kind_ == Kind::affine && n_ == 0) throw ParseError("affine arrangement in dimension 0");
    if (!labels_.empty() && labels_.size() != forms_.size()) throw ParseError("label count differs from form count");
    if (auto problem = find_problem(kind_, n_, forms_)) throw ParseError(problem->message);
}

std::string Arrangement::label(std::size_t index) const {
    if (!labels_.empty()) return labels_.at(index - 1);
    return "H" + std::to_string(index);
}

QVector Arrangement::homogeneous(std::size_t index) const {
    const auto& c = form(index).coeffs;
    if (kind_ != Kind::affine) return c;
    QVector v;
    v.reserve(c.size());
    v.push_back(c[n_]);
    v.insert(v.end(), c.begin(), c.begin() + static_cast<long>(n_));
    return v;
}

QVector Arrangement::linear_part(std::size_t index) const {
    const auto& c = form(index).coeffs;
    if (kind_ != Kind::affine) return c;
    return QVector(c.begin(), c.begin() + static_cast<long>(n_));
}

Arrangement parse_arrangement(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<Kind> kind;
    std::size_t n = 0, m = 0;
    std::vector<LinearForm> forms;
    std::vector<std::size_t> form_lines;

    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) words.push_back(w);

        if (!kind) {
            if (words.size() != 3) throw ParseError(lineno, "header must be `<kind> <n> <m>`");
            if (words[0] == "projective") kind = Kind::projective;
            else if (words[0] == "affine") kind = Kind::affine;
            else if (words[0] == "central") kind = Kind::central;
            else throw ParseError(lineno, "unknown kind '" + words[0] + "'");
            auto to_size = [&](const std::string& w) {
                std::size_t v = 0;
                auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
                if (ec != std::errc{} || ptr != w.data() + w.size())
                    throw ParseError(lineno, "expected a natural number, got '" + w + "'");
                return v;
            };
            n = to_size(words[1]);
            m = to_size(words[2]);
            if (m == 0) throw ParseError(lineno, "arrangement needs at least one hyperplane");
            continue;
        }
        if (forms.size() == m) throw ParseError(lineno, "more than " + std::to_string(m) + " forms");
        if (words.size() != n + 1)
            throw ParseError(lineno, "ragged row: expected " + std::to_string(n + 1) + " coefficients, got " +
                                         std::to_string(words.size()));
        LinearForm f;
        for (const auto& w : words) {
            try {
                f.coeffs.push_back(parse_rational(w));
            } catch (const ParseError& e) {
                throw ParseError(lineno, e.what());
            }
        }
        forms.push_back(std::move(f));
        form_lines.push_back(lineno);
    }
    if (!kind) throw ParseError(lineno, "missing header");
    if (forms.size() != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " forms, found " + std::to_string(forms.size()));
    if (auto problem = find_problem(*kind, n, forms)) {
        const std::size_t at = form_lines[(problem->second ? problem->second : problem->first) - 1];
        throw ParseError(at, problem->message);
    }
    return Arrangement(*kind, n, std::move(forms));
}

std::string to_arr_text(const Arrangement& a) {
    std::ostringstream os;
    os << to_string(a.kind()) << ' ' << a.ambient_dim() << ' ' << a.size() << '\n';
    for (const auto& f : a.forms()) {
        for (std::size_t j = 0; j < f.coeffs.size(); ++j) os << (j ? " " : "") << to_string(f.coeffs[j]);
        os << '\n';
    }
    return os.str();
}

Arrangement decone(const Arrangement& a, std::size_t h) {
    if (a.kind() != Kind::projective) throw DomainError("decone needs a projective arrangement");
    if (h < 1 || h > a.size())
        throw DomainError("decone index " + std::to_string(h) + " outside 1.." + std::to_string(a.size()));
    const std::size_t dim = a.vector_dim();
    const QVector fh = a.homogeneous(h);
    std::size_t pivot = 0;
    while (fh[pivot] == 0) ++pivot;

    // New coordinates: y_0 = f_h(x), y_i = the remaining x's in order. The
    // change of basis has rows (f_h, e_c for c != pivot); a form f becomes
    // alpha with basis^T alpha = f.
    QMatrix basis(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) basis(0, j) = fh[j];
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < dim; ++c)
        if (c != pivot) rest.push_back(c);
    for (std::size_t i = 0; i < rest.size(); ++i) basis(i + 1, rest[i]) = 1;

    std::vector<LinearForm> forms;
    std::vector<std::string> labels;
    std::vector<std::size_t> sources;
    for (std::size_t j = 1; j <= a.size(); ++j) {
        if (j == h) continue;
        const QVector f = a.homogeneous(j);
        // Solve basis^T alpha = f: alpha_0 = f[pivot]/fh[pivot], alpha_i = f[rest_i] - alpha_0 fh[rest_i].
        const Rational alpha0 = f[pivot] / fh[pivot];
        LinearForm g;
        for (std::size_t i = 0; i < rest.size(); ++i) g.coeffs.push_back(f[rest[i]] - alpha0 * fh[rest[i]]);
        g.coeffs.push_back(alpha0);
        forms.push_back(std::move(g));
        if (!a.labels().empty()) labels.push_back(a.labels()[j - 1]);
        sources.push_back(j);
    }
    Arrangement out(Kind::affine, a.ambient_dim(), std::move(forms), std::move(labels));
    out.decone_hyperplane = h;
    out.source_indices = std::move(sources);
    return out;
}

Arrangement projective_closure(const Arrangement& affine, std::optional<std::size_t> at) {
    if (affine.kind() != Kind::affine) throw DomainError("projective_closure needs an affine arrangement");
    const std::size_t pos = at.value_or(affine.size() + 1);
    if (pos < 1 || pos > affine.size() + 1) throw DomainError("projective_closure position out of range");
    std::vector<LinearForm> forms;
    for (std::size_t j = 1; j <= affine.size(); ++j) forms.push_back(LinearForm{affine.homogeneous(j)});
    LinearForm infinity{QVector(affine.vector_dim())};
    infinity.coeffs[0] = 1;
    forms.insert(forms.begin() + static_cast<long>(pos - 1), std::move(infinity));
    return Arrangement(Kind::projective, affine.ambient_dim(), std::move(forms));
}

} // namespace arrlocal
