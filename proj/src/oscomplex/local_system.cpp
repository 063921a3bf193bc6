#include "arrlocal/local_system.hpp"

#include "arrlocal/error.hpp"

#include <json.hpp>

#include <sstream>

namespace arrlocal {

namespace {

Rational sum_of(const std::vector<Rational>& xs) {
    Rational s = 0;
    for (const auto& x : xs) s += x;
    return s;
}

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    throw ParseError("matrix entries must be integers or rational strings");
}

} // namespace

WeightSystem::WeightSystem(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw ShapeError("empty weight system");
    const Rational s = sum_of(weights_);
    if (s != 0) throw PreconditionError("weights sum to " + to_string(s) + ", expected 0");
}

EndoSystem::EndoSystem(std::size_t rank, std::vector<QMatrix> matrices)
    : rank_(rank), matrices_(std::move(matrices)) {
    if (rank_ == 0 || matrices_.empty()) throw ShapeError("empty endomorphism system");
    QMatrix total(rank_, rank_);
    for (std::size_t j = 0; j < matrices_.size(); ++j) {
        const auto& p = matrices_[j];
        if (p.rows() != rank_ || p.cols() != rank_)
            throw ShapeError("P_" + std::to_string(j + 1) + " is not " + std::to_string(rank_) + "x" +
                             std::to_string(rank_));
        total = total + p;
    }
    if (!is_zero(total)) throw PreconditionError("residues do not sum to zero");
}

EndoSystem::EndoSystem(const WeightSystem& w) : rank_(1) {
    for (const auto& x : w.weights()) matrices_.push_back(scalar_matrix(1, x));
}

EndoSystem EndoSystem::translated(const std::vector<long>& shift) const {
    if (shift.size() != matrices_.size()) throw ShapeError("shift length differs from system size");
    std::vector<QMatrix> out;
    out.reserve(matrices_.size());
    for (std::size_t j = 0; j < matrices_.size(); ++j)
        out.push_back(matrices_[j] + scalar_matrix(rank_, Rational(shift[j])));
    return EndoSystem(rank_, std::move(out));
}

QMatrix residue_matrix(const EndoSystem& s, const IndexSet& indices) {
    QMatrix p(s.rank(), s.rank());
    for (auto j : indices) {
        if (j < 1 || j > s.size()) throw ShapeError("hyperplane " + std::to_string(j) + " outside the system");
        p = p + s[j];
    }
    return p;
}

WeightSystem parse_weights(std::string_view text) {
    std::string cleaned(text);
    for (auto& c : cleaned)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream is(cleaned);
    std::vector<Rational> out;
    for (std::string tok; is >> tok;) {
        if (tok[0] == '#') break;
        out.push_back(parse_rational(tok));
    }
    if (out.empty()) throw ParseError("no weights given");
    return WeightSystem(std::move(out));
}

EndoSystem parse_endos(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("endomorphism JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rank") || !doc.contains("matrices"))
        throw ParseError("endomorphism JSON needs \"rank\" and \"matrices\"");
    if (!doc["rank"].is_number_unsigned() && !doc["rank"].is_number_integer())
        throw ParseError("rank must be a positive integer");
    const long r = doc["rank"].get<long>();
    if (r <= 0) throw ParseError("rank must be a positive integer");
    std::vector<QMatrix> mats;
    for (const auto& m : doc["matrices"]) {
        if (!m.is_array() || m.size() != static_cast<std::size_t>(r))
            throw ShapeError("matrix " + std::to_string(mats.size() + 1) + " has wrong row count");
        QMatrix p(r, r);
        for (long i = 0; i < r; ++i) {
            if (!m[i].is_array() || m[i].size() != static_cast<std::size_t>(r))
                throw ShapeError("matrix " + std::to_string(mats.size() + 1) + " row " + std::to_string(i + 1) +
                                 " has wrong length");
            for (long j = 0; j < r; ++j) p(i, j) = json_rational(m[i][j]);
        }
        mats.push_back(std::move(p));
    }
    return EndoSystem(static_cast<std::size_t>(r), std::move(mats));
}

FlatnessReport check_flat(const EndoSystem& s, const IntersectionLattice& lattice) {
    if (s.size() != lattice.arrangement().size())
        throw ShapeError("system has " + std::to_string(s.size()) + " residues for " +
                         std::to_string(lattice.arrangement().size()) + " hyperplanes");
    FlatnessReport out;
    for (const auto* x : lattice.flats_of_codim(2)) {
        const QMatrix px = residue_matrix(s, x->indices);
        for (auto j : x->indices)
            if (!is_zero(commutator(s[j], px))) out.violations.emplace_back(j, x->indices);
    }
    out.flat = out.violations.empty();
    return out;
}

} // namespace arrlocal
