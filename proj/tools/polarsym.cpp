// Command-line front end: parse a representation, run the analyses, verify
// and export the tables. Exit status 0 on success, 1 when a verification
// fails, 2 on input errors.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarsym/dsl.hpp"
#include "polarsym/errors.hpp"
#include "polarsym/report.hpp"

using namespace polarsym;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Common {
    bool json = false;
    std::string policy = "highest";
    bool allow_symplectic_t = false;
};

ChoicePolicy parse_policy(const std::string& s) {
    if (s == "highest") return ChoicePolicy::highest();
    if (s == "lex" || s == "lexicographic") return ChoicePolicy::lexicographic();
    if (s.rfind("random:", 0) == 0) {
        try {
            return ChoicePolicy::random(std::stoull(s.substr(7)));
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::PreconditionViolated, "unknown policy '" + s + "' (highest, lex or random:SEED)");
}

TableBudget parse_budget(const std::string& text) {
    TableBudget b;
    if (text.empty()) return b;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        int v = 0;
        try {
            if (eq == std::string::npos) throw std::invalid_argument("no '='");
            std::size_t used = 0;
            v = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            throw Error(ErrorCode::PreconditionViolated, "budget items look like p=9, got '" + item + "'");
        }
        const auto key = item.substr(0, eq);
        if (v < 1) throw Error(ErrorCode::PreconditionViolated, "budget values must be positive");
        if (key == "p") b.max_p = v;
        else if (key == "m") b.max_m = v;
        else if (key == "n") b.max_n = v;
        else throw Error(ErrorCode::PreconditionViolated, "unknown budget parameter '" + key + "' (p, m or n)");
    }
    return b;
}

std::vector<Rational> parse_coeffs(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

// POLARSYM_GROUP_CAP overrides the Weyl group enumeration cap.
std::uint64_t group_cap() {
    const char* env = std::getenv("POLARSYM_GROUP_CAP");
    if (!env || !*env) return kDefaultGroupCap;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::PreconditionViolated, std::string("POLARSYM_GROUP_CAP must be a positive integer, got '") + env + "'");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int error_exit(const Common& c, const Error& e) {
    if (c.json) {
        Json j;
        j["schema"] = "polarsym.error.v1";
        j["error"] = std::string(error_code_name(e.code()));
        j["message"] = e.what();
        if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
            j["position"] = pe->position();
            j["expected"] = pe->expected();
        }
        emit(j);
    }
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knop reduction, coisotropy, rank and polarity of symplectic representations"};
    app.require_subcommand(1);
    Common c;
    app.add_flag("--json", c.json, "Machine-readable output");
    app.add_option("--policy", c.policy, "Reduction choice policy: highest, lex or random:SEED");
    app.add_flag("--allow-symplectic-t", c.allow_symplectic_t, "Accept T(U) for symplectic U, with a note");
    app.fallthrough();

    std::string spec_text;
    auto* analyze = app.add_subcommand("analyze", "Full analysis report");
    analyze->add_option("spec", spec_text, "Representation, e.g. \"SL(2): sym(3,std)\"")->required();

    bool trace = false;
    auto* reduce = app.add_subcommand("reduce", "Knop reduction to the terminal decomposition");
    reduce->add_option("spec", spec_text)->required();
    reduce->add_flag("--trace", trace, "Show every reduction step");

    std::string coeffs;
    auto* moment = app.add_subcommand("moment", "Moment map on the Cartan subspace: sum of a_j^2 lambda_j");
    moment->add_option("spec", spec_text)->required();
    moment->add_option("--coeffs", coeffs, "a1,...,ar (integers or fractions)")->required();

    std::size_t samples = 25;
    std::uint64_t seed = 1;
    auto* orbit = app.add_subcommand("orbit-check", "Weyl orbits on the moment image against the normalizer quotient");
    orbit->add_option("spec", spec_text)->required();
    orbit->add_option("--samples", samples, "Number of rational sample points")->capture_default_str();
    orbit->add_option("--seed", seed, "Sampling seed")->capture_default_str();

    std::string budget_text;
    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify-tables", "Recompute every table row");
    verify->add_option("--budget", budget_text, "Sweep bounds, e.g. p=9,m=4,n=6");
    verify->add_option("--orbit-samples", vopt.orbit_samples, "Orbit separation samples per Table B instance (0 skips)")
        ->capture_default_str();
    verify->add_option("--random-policies", vopt.random_policies, "Random reduction policies per instance")
        ->capture_default_str();
    verify->add_option("--seed", vopt.seed, "Orbit sampling seed")->capture_default_str();
    verify->add_option("--threads", vopt.threads, "Worker threads (0: hardware concurrency)");

    auto* export_tables = app.add_subcommand("export-tables", "Dump the embedded tables");
    export_tables->add_option("--budget", budget_text, "Sweep bounds for the listed instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        const auto policy = parse_policy(c.policy);
        if (verify->parsed()) {
            const auto budget = parse_budget(budget_text);
            vopt.group_cap = group_cap();
            const auto report = verify_all(budget, vopt);
            if (c.json) emit(to_json(report, budget));
            else std::cout << report.to_text();
            return report.passed() ? kOk : kFailed;
        }
        if (export_tables->parsed()) {
            const auto j = tables_json(parse_budget(budget_text));
            if (c.json) {
                emit(j);
            } else {
                for (const auto& row : j["rows"])
                    std::cout << row["key"].get<std::string>() << "  " << row["group"].get<std::string>() << "  "
                              << row["representation"].get<std::string>() << "  rank " << row["rank"].get<std::string>()
                              << "  (" << row["instances"].size() << " instances)\n";
            }
            return kOk;
        }

        const auto parsed = parse_spec(spec_text, c.allow_symplectic_t);
        const auto& spec = parsed.spec;
        for (const auto& a : parsed.annotations)
            if (!c.json) std::cerr << "note: " << a << "\n";

        if (analyze->parsed()) {
            auto r = polarsym::analyze(spec, policy);
            r.input = spec_text;
            r.annotations = parsed.annotations;
            if (c.json) emit(to_json(r));
            else std::cout << to_text(r);
            return kOk;
        }
        if (reduce->parsed()) {
            const auto red = reduce_to_terminal(spec, policy);
            if (c.json) {
                auto j = trace_json(print_spec(spec), red, policy);
                if (!trace) j["steps"] = Json::array();
                j["step_count"] = red.trace().size();
                emit(j);
            } else if (trace) {
                std::cout << trace_text(red, spec.algebra());
            } else {
                std::cout << "terminal after " << red.trace().size() << " steps: "
                          << red.terminal.toroidal_pairs.size() << " toroidal pairs, "
                          << red.terminal.singular_blocks.size() << " singular blocks, rank " << rank(red.terminal)
                          << ", " << (coisotropy_test(red.terminal).coisotropic ? "coisotropic" : "not coisotropic")
                          << "\n";
            }
            return kOk;
        }
        if (moment->parsed()) {
            const auto mi = moment_image(spec, policy);
            const auto a = parse_coeffs(coeffs);
            const auto value = moment_on_cartan(mi, a);
            if (c.json) {
                emit(moment_json(print_spec(spec), mi, a, value));
            } else {
                std::cout << "mu(a) =";
                for (const auto& q : value) std::cout << " " << to_string(q);
                std::cout << "\n";
            }
            return kOk;
        }
        if (orbit->parsed()) {
            const auto mi = moment_image(spec, policy);
            const auto r = orbit_separation_check(mi, build_root_system(spec.algebra()), samples, seed, group_cap());
            if (c.json) {
                emit(orbit_json(print_spec(spec), r, samples, seed));
            } else {
                std::cout << (r.verified ? "verified" : "FAILED") << ": " << r.samples_checked << " samples, |W| = "
                          << r.weyl_order << ", |Gamma| = " << r.gamma_order << ", " << r.resampled << " resampled\n";
            }
            return r.verified ? kOk : kFailed;
        }
    } catch (const Error& e) {
        return error_exit(c, e);
    }
    return kInputError;
}
