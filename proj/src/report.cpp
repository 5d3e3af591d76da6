#include "polarsym/report.hpp"

#include <sstream>

#include "polarsym/dsl.hpp"
#include "polarsym/errors.hpp"

namespace polarsym {

namespace {

constexpr const char* kVersion = "1";

Json header(const char* name) {
    Json j;
    j["schema"] = std::string("polarsym.") + name + ".v" + kVersion;
    return j;
}

Json weights_json(const std::vector<Weight>& ws) {
    Json a = Json::array();
    for (const auto& w : ws) a.push_back(weight_json(w));
    return a;
}

Json multiset_json(const WeightMultiset& ms) {
    Json a = Json::array();
    for (const auto& [w, m] : ms) a.push_back({{"weight", weight_json(w)}, {"multiplicity", m}});
    return a;
}

Json params_json(const Params& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

Json rationals_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

std::string rationals_text(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::string wtext(const Weight& w, const ReductiveAlgebra& alg) { return w.to_string(alg.torus_offset()); }

}  // namespace

AnalysisReport analyze(const RepSpec& spec, const ChoicePolicy& policy) {
    AnalysisReport r;
    r.input = print_spec(spec);
    r.spec = spec;
    r.saturated = saturate(spec).algebra() == spec.algebra();
    r.policy = policy.name();
    const auto red = reduce_to_terminal(spec, policy);
    r.steps = red.trace().size();
    r.terminal = red.terminal;
    r.coisotropic = coisotropy_test(red.terminal).coisotropic;
    r.rank = rank(red.terminal);
    if (r.coisotropic) {
        r.moment_image = moment_image(red.terminal, spec.algebra());
        r.strong_orthogonal = strong_orthogonality_check(*r.moment_image, red.final_state.root_system());
    }
    r.wmf = wmf_check(spec);
    r.polarity = classify_polarity(spec, policy);
    return r;
}

Json weight_json(const Weight& w) { return Json(w.coords()); }

Json algebra_json(const ReductiveAlgebra& alg) {
    Json f = Json::array();
    for (const auto& s : alg.factors()) f.push_back(s.name());
    return {{"factors", f}, {"torus_rank", alg.torus_rank()}, {"text", alg.to_string()}};
}

Json terminal_json(const TerminalDecomposition& td, const RootSystemData& rsd) {
    Json pairs = Json::array();
    for (const auto& p : td.toroidal_pairs)
        pairs.push_back({{"representative", weight_json(p.representative)}, {"multiplicity", p.multiplicity}});
    Json blocks = Json::array();
    for (const auto& b : td.singular_blocks)
        blocks.push_back({{"highest", weight_json(b.highest)}, {"dimension", b.dimension}, {"weights", weights_json(b.weights)}});
    Json roots = Json::array();
    for (auto i : td.residual_roots) roots.push_back(weight_json(rsd.root(i).weight));
    return {{"toroidal", pairs}, {"zero_multiplicity", td.zero_multiplicity}, {"singular_blocks", blocks},
            {"residual_roots", roots}};
}

Json to_json(const AnalysisReport& r) {
    auto j = header("analysis");
    j["input"] = r.input;
    j["normalized"] = print_spec(r.spec);
    j["algebra"] = algebra_json(r.spec.algebra());
    j["dimension"] = r.spec.dimension();
    Json comps = Json::array();
    for (const auto& c : r.spec.components())
        comps.push_back({{"type", c.kind == ComponentKind::Type1 ? 1 : 2}, {"highest_weight", weight_json(c.highest_weight)},
                         {"dimension", c.weights.total()}});
    j["components"] = comps;
    j["annotations"] = r.annotations;
    j["saturated"] = r.saturated;
    j["policy"] = r.policy;
    j["steps"] = r.steps;
    j["terminal"] = terminal_json(r.terminal, *build_root_system(r.spec.algebra()));
    j["coisotropic"] = r.coisotropic;
    j["rank"] = r.rank;
    j["moment_image"] = r.moment_image ? Json{{"basis", weights_json(r.moment_image->lambdas)}} : Json(nullptr);
    j["strong_orthogonal"] = r.strong_orthogonal ? Json(*r.strong_orthogonal) : Json(nullptr);
    j["wmf"] = r.wmf;
    Json matches = Json::array();
    for (const auto& m : r.polarity.matches)
        matches.push_back({{"key", m.key}, {"params", params_json(m.params)}, {"component", m.component}});
    j["polarity"] = {{"status", to_string(r.polarity.status)},
                     {"evidence", r.polarity.evidence},
                     {"computed_for_saturation", !r.polarity.saturated_input},
                     {"matches", matches}};
    return j;
}

std::string to_text(const AnalysisReport& r) {
    const auto& alg = r.spec.algebra();
    std::ostringstream out;
    out << "input:        " << r.input << "\n";
    out << "normalized:   " << print_spec(r.spec) << "\n";
    out << "algebra:      " << alg.to_string() << ", dim V = " << r.spec.dimension() << "\n";
    for (std::size_t c = 0; c < r.spec.components().size(); ++c) {
        const auto& comp = r.spec.components()[c];
        out << "component " << c << ":  type " << (comp.kind == ComponentKind::Type1 ? 1 : 2) << ", highest weight "
            << wtext(comp.highest_weight, alg) << ", dim " << comp.weights.total() << "\n";
    }
    for (const auto& a : r.annotations) out << "note:         " << a << "\n";
    out << "saturated:    " << (r.saturated ? "yes" : "no") << "\n";
    out << "reduction:    " << r.steps << " steps (" << r.policy << " policy)\n";
    out << "terminal:     " << r.terminal.toroidal_pairs.size() << " toroidal pairs, "
        << r.terminal.singular_blocks.size() << " singular blocks, " << r.terminal.residual_roots.size()
        << " residual roots\n";
    for (const auto& p : r.terminal.toroidal_pairs)
        out << "  toroidal    +-" << wtext(p.representative, alg) << (p.multiplicity > 1 ? " x" + std::to_string(p.multiplicity) : "")
            << "\n";
    for (const auto& b : r.terminal.singular_blocks)
        out << "  singular    " << wtext(b.highest, alg) << " (Sp_" << b.dimension << ")\n";
    out << "coisotropic:  " << (r.coisotropic ? "yes" : "no") << "\n";
    out << "rank:         " << r.rank << "\n";
    if (r.moment_image) {
        out << "moment image:";
        for (const auto& l : r.moment_image->lambdas) out << " " << wtext(l, alg);
        out << "\n";
        out << "strongly orthogonal: " << (*r.strong_orthogonal ? "yes" : "no") << "\n";
    }
    out << "wmf:          " << (r.wmf ? "yes" : "no") << "\n";
    out << "polarity:     " << to_string(r.polarity.status) << "\n";
    out << "evidence:     " << r.polarity.evidence << "\n";
    return out.str();
}

Json trace_json(const std::string& input, const ReductionResult& result, const ChoicePolicy& policy) {
    auto j = header("trace");
    j["input"] = input;
    j["policy"] = policy.name();
    Json steps = Json::array();
    for (const auto& s : result.trace())
        steps.push_back({{"lambda", weight_json(s.lambda)}, {"P", weights_json(s.P)}, {"Q", weights_json(s.Q)},
                         {"removed", multiset_json(s.removed)}});
    j["steps"] = steps;
    j["terminal"] = terminal_json(result.terminal, result.final_state.root_system());
    return j;
}

std::string trace_text(const ReductionResult& result, const ReductiveAlgebra& alg) {
    std::ostringstream out;
    std::size_t n = 0;
    for (const auto& s : result.trace()) {
        out << "step " << ++n << ": lambda = " << wtext(s.lambda, alg) << ", |P| = " << s.P.size() << ", removed "
            << s.removed.total() << " weights\n";
        out << "  P:";
        for (const auto& a : s.P) out << " " << wtext(a, alg);
        out << "\n  Q:";
        for (const auto& q : s.Q) out << " " << wtext(q, alg);
        out << "\n";
    }
    out << "terminal after " << n << " steps:\n";
    for (const auto& p : result.terminal.toroidal_pairs)
        out << "  toroidal +-" << wtext(p.representative, alg)
            << (p.multiplicity > 1 ? " x" + std::to_string(p.multiplicity) : "") << "\n";
    for (const auto& b : result.terminal.singular_blocks)
        out << "  singular " << wtext(b.highest, alg) << " (Sp_" << b.dimension << ")\n";
    out << "  " << result.terminal.residual_roots.size() << " residual roots\n";
    return out.str();
}

Json moment_json(const std::string& input, const MomentImage& mi, const std::vector<Rational>& coeffs,
                 const RationalVector& value) {
    auto j = header("moment");
    j["input"] = input;
    j["basis"] = weights_json(mi.lambdas);
    j["coefficients"] = rationals_json(coeffs);
    j["value"] = rationals_json(value);
    j["value_text"] = rationals_text(value);
    return j;
}

Json orbit_json(const std::string& input, const OrbitSeparationResult& r, std::size_t samples, std::uint64_t seed) {
    auto j = header("orbit");
    j["input"] = input;
    j["samples"] = samples;
    j["seed"] = seed;
    j["verified"] = r.verified;
    j["samples_checked"] = r.samples_checked;
    j["resampled"] = r.resampled;
    j["gamma_order"] = r.gamma_order;
    j["weyl_order"] = r.weyl_order;
    if (r.counterexample) {
        Json w = Json::array(), g = Json::array();
        for (const auto& v : r.counterexample->weyl_intersection) w.push_back(rationals_json(v));
        for (const auto& v : r.counterexample->gamma_orbit) g.push_back(rationals_json(v));
        j["counterexample"] = {{"xi", rationals_json(r.counterexample->xi)}, {"weyl_intersection", w}, {"gamma_orbit", g}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json to_json(const VerificationReport& r, const TableBudget& budget) {
    auto j = header("verification");
    j["budget"] = {{"p", budget.max_p}, {"m", budget.max_m}, {"n", budget.max_n}};
    j["passed"] = r.passed();
    j["instance_count"] = r.instance_count();
    j["seconds"] = r.seconds;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json inst = Json::array();
        for (const auto& i : e.instances) {
            Json checks = Json::array();
            for (const auto& c : i.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            inst.push_back({{"params", params_json(i.params)},
                            {"dimension", i.dimension},
                            {"expected_rank", i.expected_rank ? Json(*i.expected_rank) : Json(nullptr)},
                            {"computed_rank", i.computed_rank},
                            {"coisotropic", i.coisotropic},
                            {"passed", i.passed()},
                            {"checks", checks}});
        }
        entries.push_back({{"key", e.key}, {"table", to_string(e.table)}, {"passed", e.passed()}, {"instances", inst}});
    }
    j["entries"] = entries;
    return j;
}

Json tables_json(const TableBudget& budget) {
    auto j = header("tables");
    j["budget"] = {{"p", budget.max_p}, {"m", budget.max_m}, {"n", budget.max_n}};
    Json rows = Json::array();
    for (const auto& e : table_entries()) {
        Json inst = Json::array();
        for (const auto& p : sweep_params(e, budget)) {
            const auto recipe = make_recipe(e, p);
            const auto rank = e.rank_formula(p);
            const auto ce = e.center_essential(p);
            inst.push_back({{"params", params_json(p)},
                            {"algebra", algebra_json(recipe.base)},
                            {"type", recipe.kind == ComponentKind::Type1 ? 1 : 2},
                            {"highest_weight", weight_json(recipe.highest)},
                            {"rank", rank ? Json(*rank) : Json(nullptr)},
                            {"stable", e.stable(p)},
                            {"center_essential", ce ? Json(*ce) : Json(nullptr)},
                            {"link_slots", e.link_slots(p)}});
        }
        rows.push_back({{"key", e.key},
                        {"table", to_string(e.table)},
                        {"group", e.group},
                        {"representation", e.representation},
                        {"params", e.params},
                        {"conditions", e.conditions_text},
                        {"rank", e.rank_text},
                        {"stable", e.stable_text},
                        {"center_essential", e.center_essential_text},
                        {"theta_group", e.theta_group},
                        {"instances", inst}});
    }
    j["rows"] = rows;
    return j;
}

}  // namespace polarsym
