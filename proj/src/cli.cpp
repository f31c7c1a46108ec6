#include "tableau_orbits/cli.hpp"

#include "tableau_orbits/enumerate.hpp"
#include "tableau_orbits/errors.hpp"
#include "tableau_orbits/mdiagram.hpp"
#include "tableau_orbits/orbit.hpp"
#include "tableau_orbits/report_json.hpp"
#include "tableau_orbits/ssyt.hpp"
#include "tableau_orbits/text_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace tableau_orbits {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string kind = "standard";
    std::uint64_t k = 1;
    std::string svg_path;
    bool text = false;
    std::string method;
    std::optional<std::uint64_t> syt_orbit;
    std::string shape;
    std::optional<int> limit;
};

Tableau load_tableau(const Options& opt, std::istream& in) {
    if (opt.input.empty() || opt.input == "-")
        return read_tableau(in);
    std::ifstream file(opt.input);
    if (!file)
        throw DomainError("cannot read input file '" + opt.input + "'");
    return read_tableau(file);
}

int census_limit(const Options& opt) {
    if (opt.limit)
        return *opt.limit;
    if (const char* env = std::getenv("TABLEAU_ORBITS_LIMIT")) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(env, &used);
            if (used == std::string(env).size() && value > 0)
                return value;
        } catch (const std::exception&) {
        }
        throw UsageError("TABLEAU_ORBITS_LIMIT must be a positive integer");
    }
    return kDefaultCensusLimit;
}

Method orbit_method(const std::string& name, Method fallback) {
    if (name.empty())
        return fallback;
    if (auto m = parse_method(name))
        return *m;
    throw UsageError("unknown method '" + name + "' (expected oracle, fast or both)");
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
    auto kind = parse_kind(opt.kind);
    if (!kind)
        throw UsageError("unknown kind '" + opt.kind + "' (expected standard, skew-standard or column-ssyt)");
    const Tableau t = load_tableau(opt, in);
    Json j;
    j["kind"] = std::string(kind_name(*kind));
    j["valid"] = validate(t, *kind);
    out << json_line(j);
    return kExitOk;
}

int cmd_promote(const Options& opt, std::istream& in, std::ostream& out) {
    out << format_tableau(promote_k(load_tableau(opt, in), opt.k));
    return kExitOk;
}

int cmd_mdiagram(const Options& opt, std::istream& in, std::ostream& out) {
    const MDiagram m = build_mdiagram(load_tableau(opt, in));
    if (!opt.svg_path.empty()) {
        const std::string svg = render_svg(m);
        if (opt.svg_path == "-") {
            out << svg;
        } else {
            std::ofstream file(opt.svg_path, std::ios::binary);
            if (!file || !(file << svg))
                throw DomainError("cannot write SVG file '" + opt.svg_path + "'");
        }
        return kExitOk;
    }
    out << format_layers(m);
    return kExitOk;
}

int cmd_components(const Options& opt, std::istream& in, std::ostream& out) {
    out << json_line(components_json(build_mdiagram(load_tableau(opt, in))));
    return kExitOk;
}

int cmd_orbit(const Options& opt, std::istream& in, std::ostream& out) {
    const Method method = orbit_method(opt.method, Method::Fast);
    out << json_line(to_json(orbit_length(load_tableau(opt, in), method)));
    return kExitOk;
}

int cmd_ssyt_orbit(const Options& opt, std::istream& in, std::ostream& out) {
    SsytMethod method = SsytMethod::Formula;
    if (!opt.method.empty()) {
        auto m = parse_ssyt_method(opt.method);
        if (!m)
            throw UsageError("unknown method '" + opt.method + "' (expected formula, oracle or both)");
        method = *m;
    }
    if (opt.syt_orbit && method != SsytMethod::Formula)
        throw UsageError("--syt-orbit only applies to --method formula");
    const Tableau t = load_tableau(opt, in);
    const auto report = opt.syt_orbit ? orbit_length_ssyt(t, opt.syt_orbit) : orbit_length_ssyt(t, method);
    out << json_line(to_json(report));
    return kExitOk;
}

int cmd_census(const Options& opt, std::ostream& out, std::ostream& err) {
    const Shape shape = Shape::parse_rectangle(opt.shape);
    const Method method = orbit_method(opt.method, Method::Oracle);
    err << "census " << shape.to_string() << " (" << method_name(method) << ")\n";
    out << json_line(to_json(census(shape, method, census_limit(opt))));
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const Shape shape = Shape::parse_rectangle(opt.shape);
    const Method method = orbit_method(opt.method, Method::Both);
    const int limit = census_limit(opt);
    if (static_cast<long long>(shape.size()) > limit)
        throw DomainError("shape " + shape.to_string() + " has " + std::to_string(shape.size()) +
                          " boxes, above the limit of " + std::to_string(limit));
    const auto n = static_cast<std::uint64_t>(shape.size());

    std::uint64_t checked = 0;
    std::optional<Tableau> counterexample;
    std::string failure;
    for_each_syt(shape, [&](const Tableau& t) {
        if (counterexample)
            return;
        ++checked;
        std::string problem;
        try {
            std::optional<OrbitReport> fast, oracle;
            if (method != Method::Oracle)
                fast = orbit_length_fast(t);
            if (method != Method::Fast)
                oracle = orbit_length_oracle(t);
            const auto length = fast ? fast->orbit_length : oracle->orbit_length;
            if (fast && oracle && fast->orbit_length != oracle->orbit_length)
                problem = "fast " + std::to_string(fast->orbit_length) + " != oracle " +
                          std::to_string(oracle->orbit_length);
            else if (n % length != 0)
                problem = "orbit length " + std::to_string(length) + " does not divide " + std::to_string(n);
            else if (fast && length % static_cast<std::uint64_t>(*fast->symmetry_order) != 0)
                problem = "symmetry order does not divide the orbit length";
            else if (promote_k(t, n) != t)
                problem = "promotion applied |T| times is not the identity";
        } catch (const std::exception& e) {
            problem = e.what();
        }
        if (!problem.empty()) {
            counterexample = t;
            failure = problem;
        }
    });

    Json j;
    j["shape"] = to_json(shape);
    j["method"] = std::string(method_name(method));
    j["checked"] = checked;
    j["expected"] = hook_length_count(shape);
    j["status"] = counterexample ? "fail" : "ok";
    j["failure"] = counterexample ? Json(failure) : Json(nullptr);
    out << json_line(j);
    if (counterexample) {
        out << format_tableau(*counterexample);
        err << "verify failed: " << failure << "\n";
        return kExitDomain;
    }
    if (checked != hook_length_count(shape)) {
        err << "verify failed: enumerated " << checked << " tableaux, hook-length formula gives "
            << hook_length_count(shape) << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Promotion orbits of rectangular standard and column semistandard tableaux", "tableau-orbits"};
    app.require_subcommand(1, 1);
    Options opt;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", opt.input, "Tableau text file (default: standard input)");
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check a tableau against a validity predicate");
    add_input(validate_cmd);
    validate_cmd->add_option("--kind", opt.kind, "standard | skew-standard | column-ssyt");

    auto* promote_cmd = app.add_subcommand("promote", "Apply promotion k times to a standard tableau");
    add_input(promote_cmd);
    promote_cmd->add_option("-k", opt.k, "Number of promotions (default 1)");

    auto* mdiagram_cmd = app.add_subcommand("mdiagram", "Print or draw the m-diagram of a standard tableau");
    add_input(mdiagram_cmd);
    auto* svg_opt = mdiagram_cmd->add_option("--svg", opt.svg_path, "Write an SVG drawing to PATH ('-' for stdout)");
    auto* text_opt = mdiagram_cmd->add_flag("--text", opt.text, "Print layers as text (default)");
    svg_opt->excludes(text_opt);

    auto* components_cmd = app.add_subcommand("components", "Components of the m-diagram as JSON");
    add_input(components_cmd);

    auto* orbit_cmd = app.add_subcommand("orbit", "Promotion orbit length of a standard tableau");
    add_input(orbit_cmd);
    orbit_cmd->add_option("--method", opt.method, "oracle | fast | both (default fast)");

    auto* ssyt_cmd = app.add_subcommand("ssyt-orbit", "Promotion orbit length of a column semistandard tableau");
    add_input(ssyt_cmd);
    ssyt_cmd->add_option("--method", opt.method, "formula | oracle | both (default formula)");
    ssyt_cmd->add_option("--syt-orbit", opt.syt_orbit, "Known orbit length of the standardized tableau");

    auto* census_cmd = app.add_subcommand("census", "Orbit census of all SYT of a rectangular shape");
    census_cmd->add_option("--shape", opt.shape, "RxC")->required();
    census_cmd->add_option("--method", opt.method, "oracle | fast | both (default oracle)");
    census_cmd->add_option("--limit", opt.limit, "Largest accepted number of boxes");

    auto* verify_cmd = app.add_subcommand("verify", "Check fast against oracle on every SYT of a shape");
    verify_cmd->add_option("--shape", opt.shape, "RxC")->required();
    verify_cmd->add_option("--method", opt.method, "oracle | fast | both (default both)");
    verify_cmd->add_option("--limit", opt.limit, "Largest accepted number of boxes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(opt, in, out);
        if (*promote_cmd)
            return cmd_promote(opt, in, out);
        if (*mdiagram_cmd)
            return cmd_mdiagram(opt, in, out);
        if (*components_cmd)
            return cmd_components(opt, in, out);
        if (*orbit_cmd)
            return cmd_orbit(opt, in, out);
        if (*ssyt_cmd)
            return cmd_ssyt_orbit(opt, in, out);
        if (*census_cmd)
            return cmd_census(opt, out, err);
        if (*verify_cmd)
            return cmd_verify(opt, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

} // namespace tableau_orbits
