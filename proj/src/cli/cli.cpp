#include "arrlocal/cli.hpp"

#include "arrlocal/error.hpp"
#include "arrlocal/lattice.hpp"
#include "arrlocal/milnor.hpp"
#include "arrlocal/nonres.hpp"
#include "arrlocal/oscomplex.hpp"
#include "arrlocal/pi1oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace arrlocal::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Arrangement load_arrangement(const std::string& source) {
    if (is_builtin_name(source)) return builtin_arrangement(source);
    if (!std::filesystem::exists(source))
        throw ParseError("'" + source + "' is neither a file nor a builtin arrangement");
    return parse_arrangement(read_file(source));
}

std::optional<EndoSystem> load_system(const CommandRequest& r) {
    if (r.weights && r.endos) throw PreconditionError("give either --weights or --endos, not both");
    if (r.weights) {
        const bool file = std::filesystem::is_regular_file(*r.weights);
        return EndoSystem(parse_weights(file ? read_file(*r.weights) : *r.weights));
    }
    if (r.endos) {
        const bool inline_json = !r.endos->empty() && r.endos->front() == '{';
        return parse_endos(inline_json ? *r.endos : read_file(*r.endos));
    }
    return std::nullopt;
}

EndoSystem require_system(const CommandRequest& r) {
    auto s = load_system(r);
    if (!s) throw PreconditionError(r.command + " needs --weights or --endos");
    return *s;
}

json flat_json(const Flat& f) {
    return json{{"indices", f.indices}, {"codim", f.codim}, {"multiplicity", f.multiplicity},
                {"mobius", f.mobius}, {"dense", f.dense}};
}

json system_json(const EndoSystem& s) {
    json mats = json::array();
    for (const auto& p : s.matrices()) {
        json rows = json::array();
        for (std::size_t i = 0; i < p.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(to_string(p(i, j)));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    json out{{"rank", s.rank()}, {"matrices", mats}};
    if (s.rank() == 1) {
        json w = json::array();
        for (const auto& p : s.matrices()) w.push_back(to_string(p(0, 0)));
        out["weights"] = w;
    }
    return out;
}

std::string join(const json& arr, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : arr) {
        os << (first ? "" : sep) << (x.is_string() ? x.get<std::string>() : x.dump());
        first = false;
    }
    return os.str();
}

std::string set_text(const json& indices) { return "{" + join(indices, ",") + "}"; }

// ---- commands: each returns the JSON document; text is rendered from it.

json cmd_lattice(const CommandRequest& r, bool dense_only) {
    const auto lattice = build_lattice(load_arrangement(r.source));
    json flats = json::array();
    if (dense_only)
        for (const auto& f : dense_edges(lattice)) flats.push_back(flat_json(f));
    else
        for (const auto& f : lattice.flats()) flats.push_back(flat_json(f));
    return json{{"flats", flats}};
}

std::string text_lattice(const json& j) {
    std::ostringstream os;
    os << "codim  mult  mobius  dense  flat\n";
    for (const auto& f : j["flats"])
        os << std::left << std::setw(7) << f["codim"].get<long>() << std::setw(6) << f["multiplicity"].get<long>()
           << std::setw(8) << f["mobius"].get<long>() << std::setw(7) << (f["dense"].get<bool>() ? "yes" : "no")
           << set_text(f["indices"]) << '\n';
    return os.str();
}

json cmd_betti(const CommandRequest& r) {
    const auto a = load_arrangement(r.source);
    json out{{"betti", betti_numbers(a, r.decone)}};
    if (a.kind() == Kind::projective) out["decone"] = r.decone.value_or(a.size());
    return out;
}

json cmd_aomoto(const CommandRequest& r) {
    const auto a = load_arrangement(r.source);
    const auto c = aomoto_complex(a, require_system(r), r.decone);
    json out{{"label", "combinatorial Aomoto cohomology"},
             {"coefficient_rank", c.coefficient_rank},
             {"basis_dims", c.basis.dims()},
             {"cohomology", aomoto_cohomology(c)}};
    out["decone"] = c.decone_choice ? json(*c.decone_choice) : json(nullptr);
    return out;
}

std::string text_aomoto(const json& j) {
    std::ostringstream os;
    os << j["label"].get<std::string>();
    if (!j["decone"].is_null()) os << " (decone at H" << j["decone"].get<long>() << ")";
    os << "\nbasis dims: " << join(j["basis_dims"]) << "\nh: " << join(j["cohomology"]) << '\n';
    return os.str();
}

json report_json(const NonresReport& rep) {
    json v = json::array();
    for (const auto& x : rep.violations) v.push_back(json{{"flat", x.flat}, {"integer_root", x.integer_root.get_str()}});
    json out{{"condition", std::string(to_string(rep.condition))},
             {"holds", rep.holds},
             {"hyperplane", rep.hyperplane ? json(*rep.hyperplane) : json(nullptr)},
             {"violations", v}};
    if (rep.condition == Condition::thm33) out["hypothesis_failures"] = rep.hypothesis_failures;
    return out;
}

json cmd_check(const CommandRequest& r) {
    if (!r.condition) throw PreconditionError("check needs --condition kohno|stv|thm33|ah");
    const Condition c = parse_condition(*r.condition);
    if (c == Condition::ah && !r.hyperplane) throw PreconditionError("usage: check --condition ah --hyperplane <i>");
    const auto a = load_arrangement(r.source);
    const auto s = require_system(r);
    return report_json(check_condition(s, c, build_lattice(a), r.hyperplane));
}

std::string text_check(const json& j) {
    std::ostringstream os;
    os << "condition " << j["condition"].get<std::string>();
    if (!j["hyperplane"].is_null()) os << " (H" << j["hyperplane"].get<long>() << ")";
    os << ": " << (j["holds"].get<bool>() ? "holds" : "fails") << '\n';
    for (const auto& v : j["violations"])
        os << "  " << set_text(v["flat"]) << ": integer eigenvalue " << v["integer_root"].get<std::string>() << '\n';
    if (j.contains("hypothesis_failures"))
        for (const auto& f : j["hypothesis_failures"]) os << "  non-commuting: " << f.get<std::string>() << '\n';
    return os.str();
}

json cmd_shift(const CommandRequest& r) {
    if (!r.hyperplane) throw PreconditionError("shift needs --hyperplane <i>");
    const auto a = load_arrangement(r.source);
    const auto lattice = build_lattice(a);
    const auto out = prop4_shift(require_system(r), *r.hyperplane, lattice);
    return json{{"hyperplane", *r.hyperplane},
                {"q", out.q},
                {"system", system_json(out.system)},
                {"stv", check_condition(out.system, Condition::stv, lattice).holds}};
}

std::string text_shift(const json& j) {
    std::ostringstream os;
    os << "H = " << j["hyperplane"].get<long>() << ", q = " << j["q"].get<long>() << '\n';
    const auto& s = j["system"];
    if (s.contains("weights")) {
        os << "shifted weights: " << join(s["weights"], ",") << '\n';
    } else {
        std::size_t i = 1;
        for (const auto& m : s["matrices"]) {
            os << "P_" << i++ << " =";
            for (const auto& row : m) os << " [" << join(row) << "]";
            os << '\n';
        }
    }
    os << "stv: " << (j["stv"].get<bool>() ? "holds" : "fails") << '\n';
    return os.str();
}

json cmd_translate(const CommandRequest& r) {
    const auto a = load_arrangement(r.source);
    const auto h = translate_exists(require_system(r), build_lattice(a));
    return json{{"hyperplane", h ? json(*h) : json(nullptr)}};
}

std::string text_translate(const json& j) {
    if (j["hyperplane"].is_null()) return "no integer translate is (A,H)-nonresonant for any H\n";
    return "translate exists: H" + std::to_string(j["hyperplane"].get<long>()) + '\n';
}

json cmd_milnor_bound(const CommandRequest& r) {
    const auto a = load_arrangement(r.source);
    const auto rep = spectrum_bounds(a);
    json ks = json::array();
    for (const auto& e : rep.by_k) {
        if (r.k && e.k != *r.k) continue;
        json lines = json::array();
        for (const auto& l : e.per_line) {
            if (r.hyperplane && l.hyperplane != *r.hyperplane) continue;
            json pts = json::array();
            for (const auto& p : l.points) pts.push_back(json{{"flat", p.flat}, {"multiplicity", p.multiplicity}});
            lines.push_back(json{{"hyperplane", l.hyperplane}, {"bound", l.bound}, {"points", pts}});
        }
        ks.push_back(json{{"k", e.k}, {"per_line", lines}, {"best", e.best}, {"best_line", e.best_line}});
    }
    if (r.k && ks.empty()) throw DomainError("k = " + std::to_string(*r.k) + " outside 0 < k < m");
    if (r.hyperplane && (*r.hyperplane < 1 || *r.hyperplane > a.size())) throw DomainError("hyperplane out of range");
    return json{{"m", rep.m}, {"bounds", ks}};
}

std::string text_milnor_bound(const json& j) {
    std::ostringstream os;
    os << "k  best (line)  per-line bounds\n";
    for (const auto& e : j["bounds"]) {
        os << std::left << std::setw(3) << e["k"].get<long>() << std::setw(5) << e["best"].get<long>() << "(H"
           << e["best_line"].get<long>() << ")  ";
        for (const auto& l : e["per_line"]) os << " H" << l["hyperplane"].get<long>() << ':' << l["bound"].get<long>();
        os << '\n';
    }
    return os.str();
}

json cmd_milnor_exact(const CommandRequest& r) {
    const auto a = load_arrangement(r.source);
    WiringOptions opts;
    opts.shear_skip = static_cast<std::size_t>(r.seed % 16);
    const auto w = wiring_diagram(a, r.decone, opts);
    const auto pres = randell_presentation(w);
    json spec = json::array();
    if (r.k) {
        const auto chi = character_spec(a.size(), *r.k);
        spec.push_back(json{{"k", *r.k}, {"d", chi.field.conductor()}, {"b1", twisted_b1(pres, chi)}});
    } else {
        const auto b = milnor_spectrum_exact(a, r.decone, opts);
        for (std::size_t k = 0; k < b.size(); ++k)
            spec.push_back(json{{"k", k}, {"d", character_spec(a.size(), static_cast<long>(k)).field.conductor()},
                                {"b1", b[k]}});
    }
    json out{{"m", a.size()}, {"decone", w.decone_choice}, {"shear", to_string(w.shear)}, {"spectrum", spec}};
    if (r.presentation) out["presentation"] = to_text(pres);
    return out;
}

std::string text_milnor_exact(const json& j) {
    std::ostringstream os;
    if (j["spectrum"].size() == 1) {
        os << "b1 = " << j["spectrum"][0]["b1"].get<long>() << '\n';
    } else {
        os << "k  d  b1\n";
        for (const auto& e : j["spectrum"])
            os << std::left << std::setw(3) << e["k"].get<long>() << std::setw(3) << e["d"].get<long>()
               << e["b1"].get<long>() << '\n';
    }
    if (j.contains("presentation")) os << j["presentation"].get<std::string>();
    return os.str();
}

json cmd_examples() {
    json out = json::array();
    for (auto name : builtin_names()) {
        // parametric families are shown at a small instance
        if (name == "generic(m)") name = "generic(4)";
        if (name == "boolean(n)") name = "boolean(3)";
        const auto a = builtin_arrangement(name);
        out.push_back(json{{"name", name}, {"kind", std::string(to_string(a.kind()))}, {"n", a.ambient_dim()},
                           {"m", a.size()}, {"arr", to_arr_text(a)}});
    }
    return json{{"examples", out}};
}

std::string text_examples(const json& j) {
    std::ostringstream os;
    for (const auto& e : j["examples"])
        os << e["name"].get<std::string>() << ": " << e["kind"].get<std::string>() << " n=" << e["n"].get<long>()
           << " m=" << e["m"].get<long>() << '\n';
    return os.str();
}

struct Rendered {
    json doc;
    std::string text;
};

Rendered dispatch(const CommandRequest& r) {
    const std::string& c = r.command;
    if (c == "lattice" || c == "dense") {
        auto j = cmd_lattice(r, c == "dense");
        return {j, text_lattice(j)};
    }
    if (c == "betti") {
        auto j = cmd_betti(r);
        return {j, "betti: " + join(j["betti"]) + '\n'};
    }
    if (c == "aomoto") {
        auto j = cmd_aomoto(r);
        return {j, text_aomoto(j)};
    }
    if (c == "check") {
        auto j = cmd_check(r);
        return {j, text_check(j)};
    }
    if (c == "shift") {
        auto j = cmd_shift(r);
        return {j, text_shift(j)};
    }
    if (c == "translate-exists") {
        auto j = cmd_translate(r);
        return {j, text_translate(j)};
    }
    if (c == "milnor-bound") {
        auto j = cmd_milnor_bound(r);
        return {j, text_milnor_bound(j)};
    }
    if (c == "milnor-exact") {
        auto j = cmd_milnor_exact(r);
        return {j, text_milnor_exact(j)};
    }
    if (c == "examples") {
        auto j = cmd_examples();
        return {j, text_examples(j)};
    }
    throw PreconditionError("unknown command '" + c + "'");
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"lattice", "dense",        "betti",        "aomoto",
                                                "check",   "shift",        "translate-exists",
                                                "milnor-bound", "milnor-exact", "examples"};
    return names;
}

CommandResult execute(const CommandRequest& request) {
    CommandResult out;
    try {
        if (request.format != "text" && request.format != "json")
            throw PreconditionError("--format must be text or json");
        auto rendered = dispatch(request);
        out.out = request.format == "json" ? rendered.doc.dump(2) + '\n' : rendered.text;
    } catch (const ResourceError& e) {
        out = {exit_resource, "", std::string("resource limit: ") + e.what() + '\n'};
    } catch (const GenericityError& e) {
        out = {exit_resource, "", std::string("genericity: ") + e.what() + '\n'};
    } catch (const InvariantViolation& e) {
        out = {exit_internal, "", std::string("internal invariant violated: ") + e.what() + '\n'};
    } catch (const Error& e) {
        out = {exit_input, "", std::string("error: ") + e.what() + '\n'};
    } catch (const std::exception& e) {
        out = {exit_internal, "", std::string("unexpected: ") + e.what() + '\n'};
    }
    return out;
}

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Exact nonresonance, Aomoto cohomology and Milnor fiber tools for hyperplane arrangements", "arrlocal"};
    app.require_subcommand(1);
    CommandRequest req;
    std::optional<std::size_t> hyperplane, decone;
    std::optional<long> k;

    const std::map<std::string, std::string> help{
        {"lattice", "intersection lattice with Mobius values"},
        {"dense", "dense edges"},
        {"betti", "Betti numbers of the complement"},
        {"aomoto", "combinatorial Aomoto cohomology"},
        {"check", "decide a nonresonance condition"},
        {"shift", "integer shift to an stv-nonresonant system"},
        {"translate-exists", "smallest H with an (A,H)-nonresonant integer translate"},
        {"milnor-bound", "eigenspace bounds for the Milnor fiber"},
        {"milnor-exact", "exact eigenspace dimensions via Fox calculus"},
        {"examples", "list builtin arrangements"}};
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name, help.at(name));
        if (name == "examples") {
            sub->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));
            continue;
        }
        sub->add_option("source", req.source, "arrangement file or builtin name")->required();
        sub->add_option("--weights", req.weights, "weight file or inline comma-separated rationals");
        sub->add_option("--endos", req.endos, "endomorphism JSON file");
        sub->add_option("--condition", req.condition, "kohno | stv | thm33 | ah");
        sub->add_option("--hyperplane", hyperplane, "1-based hyperplane index");
        sub->add_option("--k", k, "eigenspace index");
        sub->add_option("--decone", decone, "1-based hyperplane sent to infinity");
        sub->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", req.seed, "selects among admissible shears (milnor-exact)");
        sub->add_flag("--presentation", req.presentation, "print the group presentation (milnor-exact)");
    }

    std::ostringstream cli_out, cli_err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, cli_out, cli_err);
        return {code == 0 ? exit_ok : exit_input, cli_out.str(), cli_err.str()};
    }
    for (auto* sub : app.get_subcommands()) req.command = sub->get_name();
    req.hyperplane = hyperplane;
    req.decone = decone;
    req.k = k;
    return execute(req);
}

} // namespace arrlocal::cli
