#include "polarsym/tables.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "polarsym/errors.hpp"
#include "polarsym/polar.hpp"

namespace polarsym {

std::string to_string(TableId t) {
    switch (t) {
        case TableId::A: return "A";
        case TableId::B: return "B";
        case TableId::Sprime: return "S'";
    }
    return "";
}

std::string to_string(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += ",";
        out += k + "=" + std::to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Standard modules

namespace {

Weight unit(std::size_t dim, std::size_t i, int c = 1) {
    Weight w(dim);
    w[i] = c;
    return w;
}

FactorModule single(Family f, int rank, std::size_t node, int c = 1) {
    return {{SimpleFactor::make(f, rank)}, unit(static_cast<std::size_t>(rank), node, c)};
}

}  // namespace

FactorModule so_standard(int p) {
    if (p < 3) throw Error(ErrorCode::PreconditionViolated, "SO_" + std::to_string(p) + " is not semisimple");
    if (p == 3) return single(Family::A, 1, 0, 2);
    if (p == 4) return {{SimpleFactor::make(Family::A, 1), SimpleFactor::make(Family::A, 1)}, Weight{1, 1}};
    if (p % 2) return single(Family::B, (p - 1) / 2, 0);
    return single(Family::D, p / 2, 0);
}

FactorModule sp_standard(int m) {
    if (m < 1) throw Error(ErrorCode::PreconditionViolated, "Sp_" + std::to_string(2 * m) + " is not semisimple");
    if (m == 1) return single(Family::A, 1, 0);
    return single(Family::C, m, 0);
}

FactorModule sl_standard(int n) {
    if (n < 1) throw Error(ErrorCode::PreconditionViolated, "SL_" + std::to_string(n) + " is not defined");
    if (n == 1) return {{}, Weight{}};
    return single(Family::A, n - 1, 0);
}

FactorModule tensor(const FactorModule& a, const FactorModule& b) {
    FactorModule out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    auto c = a.highest.coords();
    c.insert(c.end(), b.highest.begin(), b.highest.end());
    out.highest = Weight(std::move(c));
    return out;
}

// ---------------------------------------------------------------------------
// Entries

namespace {

RepRecipe type1(const FactorModule& m) {
    return {ReductiveAlgebra(m.factors, 0), ComponentKind::Type1, m.highest, false};
}

RepRecipe type2(const FactorModule& m, bool symplectic_u = false) {
    return {ReductiveAlgebra(m.factors, 0), ComponentKind::Type2, m.highest, symplectic_u};
}

std::function<std::optional<int>(const Params&)> constant_rank(int r) {
    return [r](const Params&) { return std::optional<int>(r); };
}

std::function<bool(const Params&)> always() {
    return [](const Params&) { return true; };
}

std::function<std::vector<ParamSweep>(const TableBudget&)> no_params() {
    return [](const TableBudget&) { return std::vector<ParamSweep>{}; };
}

TableEntry fixed(std::string key, TableId table, std::string group, std::string rep, RepRecipe r,
                 std::optional<int> rank) {
    TableEntry e;
    e.key = std::move(key);
    e.table = table;
    e.group = std::move(group);
    e.representation = std::move(rep);
    e.conditions_text = "-";
    e.conditions = always();
    e.recipe = [r](const Params&) { return r; };
    e.rank_text = rank ? std::to_string(*rank) : "";
    e.rank_formula = [rank](const Params&) { return rank; };
    e.stable_text = "yes";
    e.stable = always();
    e.sweep = no_params();
    return e;
}

std::vector<TableEntry> table_a() {
    std::vector<TableEntry> t;
    {
        TableEntry e;
        e.key = "A1";
        e.table = TableId::A;
        e.group = "SO_p x Sp_2m";
        e.representation = "C^p (x) C^2m";
        e.params = {"p", "m"};
        e.conditions_text = "m >= 1, p >= 3";
        e.conditions = [](const Params& p) { return p.at("m") >= 1 && p.at("p") >= 3; };
        e.recipe = [](const Params& p) { return type1(tensor(so_standard(p.at("p")), sp_standard(p.at("m")))); };
        e.rank_text = "min{[p/2], m}";
        e.rank_formula = [](const Params& p) { return std::optional<int>(std::min(p.at("p") / 2, p.at("m"))); };
        e.stable_text = "no iff p odd and 3 <= p < 2m";
        e.stable = [](const Params& p) { return !(p.at("p") % 2 == 1 && p.at("p") < 2 * p.at("m")); };
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"m", 1, b.max_m}, {"p", 3, b.max_p}}; };
        t.push_back(std::move(e));
    }
    {
        TableEntry e;
        e.key = "A2";
        e.table = TableId::A;
        e.group = "Sp_2m";
        e.representation = "C^2m";
        e.params = {"m"};
        e.conditions_text = "m >= 1";
        e.conditions = [](const Params& p) { return p.at("m") >= 1; };
        e.recipe = [](const Params& p) { return type1(sp_standard(p.at("m"))); };
        e.rank_text = "0";
        e.rank_formula = constant_rank(0);
        e.stable_text = "no";
        e.stable = [](const Params&) { return false; };
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"m", 1, b.max_m}}; };
        t.push_back(std::move(e));
    }
    const FactorModule sl2 = single(Family::A, 1, 0);
    t.push_back(fixed("A3", TableId::A, "SL_2 x Spin_7", "C^2 (x) C^8", type1(tensor(sl2, single(Family::B, 3, 2))), 1));
    t.push_back(fixed("A4", TableId::A, "SL_2 x Spin_9", "C^2 (x) C^16", type1(tensor(sl2, single(Family::B, 4, 3))), 2));
    t.back().theta_group = false;
    t.push_back(fixed("A5", TableId::A, "Spin_11", "C^32", type1(single(Family::B, 5, 4)), 1));
    t.back().theta_group = false;
    t.push_back(fixed("A6", TableId::A, "Spin_12", "C^32", type1(single(Family::D, 6, 5)), 1));
    t.push_back(fixed("A7", TableId::A, "Spin_13", "C^64", type1(single(Family::B, 6, 5)), 2));
    t.back().theta_group = false;
    t.push_back(fixed("A8", TableId::A, "SL_2", "S^3(C^2)", type1(single(Family::A, 1, 0, 3)), 1));
    t.push_back(fixed("A9", TableId::A, "SL_6", "Lambda^3(C^6)", type1(single(Family::A, 5, 2)), 1));
    t.push_back(fixed("A10", TableId::A, "Sp_6", "Lambda^3(C^6) - C^6", type1(single(Family::C, 3, 2)), 1));
    t.push_back(fixed("A11", TableId::A, "SL_2 x G_2", "C^2 (x) C^7", type1(tensor(sl2, single(Family::G, 2, 0))), 1));
    t.back().theta_group = false;
    t.push_back(fixed("A12", TableId::A, "E_7", "C^56", type1(single(Family::E, 7, 6)), 1));
    return t;
}

void mark_center(TableEntry& e, std::string text, std::function<std::optional<bool>(const Params&)> f) {
    e.center_essential_text = std::move(text);
    e.center_essential = std::move(f);
}

std::vector<TableEntry> table_b() {
    std::vector<TableEntry> t;
    {
        TableEntry e;
        e.key = "B1";
        e.table = TableId::B;
        e.group = "C^x x SL_m x SL_n";
        e.representation = "C^m (x) C^n + (C^m (x) C^n)*";
        e.params = {"m", "n"};
        e.conditions_text = "m >= n >= 2";
        e.conditions = [](const Params& p) { return p.at("m") >= p.at("n") && p.at("n") >= 2; };
        e.recipe = [](const Params& p) { return type2(tensor(sl_standard(p.at("m")), sl_standard(p.at("n")))); };
        e.rank_text = "n";
        e.rank_formula = [](const Params& p) { return std::optional<int>(p.at("n")); };
        mark_center(e, "yes iff m = n", [](const Params& p) { return std::optional<bool>(p.at("m") == p.at("n")); });
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"m", 2, b.max_n}, {"n", 2, b.max_n}}; };
        t.push_back(std::move(e));
    }
    {
        TableEntry e;
        e.key = "B2";
        e.table = TableId::B;
        e.group = "GL_n";
        e.representation = "Lambda^2(C^n) + Lambda^2(C^n)*";
        e.params = {"n"};
        e.conditions_text = "n >= 4";
        e.conditions = [](const Params& p) { return p.at("n") >= 4; };
        e.recipe = [](const Params& p) { return type2(single(Family::A, p.at("n") - 1, 1)); };
        e.rank_text = "[n/2]";
        e.rank_formula = [](const Params& p) { return std::optional<int>(p.at("n") / 2); };
        mark_center(e, "yes iff n even", [](const Params& p) { return std::optional<bool>(p.at("n") % 2 == 0); });
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"n", 4, b.max_n}}; };
        t.push_back(std::move(e));
    }
    {
        TableEntry e;
        e.key = "B3";
        e.table = TableId::B;
        e.group = "GL_n";
        e.representation = "S^2(C^n) + S^2(C^n)*";
        e.params = {"n"};
        e.conditions_text = "n >= 2";
        e.conditions = [](const Params& p) { return p.at("n") >= 2; };
        e.recipe = [](const Params& p) { return type2(single(Family::A, p.at("n") - 1, 0, 2)); };
        e.rank_text = "n";
        e.rank_formula = [](const Params& p) { return std::optional<int>(p.at("n")); };
        mark_center(e, "yes", [](const Params&) { return std::optional<bool>(true); });
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"n", 2, b.max_n}}; };
        t.push_back(std::move(e));
    }
    {
        TableEntry e;
        e.key = "B4";
        e.table = TableId::B;
        e.group = "GL_n";
        e.representation = "C^n + C^n*";
        e.params = {"n"};
        e.conditions_text = "n >= 1";
        e.conditions = [](const Params& p) { return p.at("n") >= 1; };
        e.recipe = [](const Params& p) { return type2(sl_standard(p.at("n")), p.at("n") == 2); };
        e.rank_text = "1";
        e.rank_formula = constant_rank(1);
        mark_center(e, "yes iff n = 1", [](const Params& p) { return std::optional<bool>(p.at("n") == 1); });
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"n", 1, b.max_n}}; };
        t.push_back(std::move(e));
    }
    {
        TableEntry e;
        e.key = "B5";
        e.table = TableId::B;
        e.group = "C^x x Sp_2m";
        e.representation = "C^2m + C^2m*";
        e.params = {"m"};
        e.conditions_text = "m >= 2";
        e.conditions = [](const Params& p) { return p.at("m") >= 2; };
        e.recipe = [](const Params& p) { return type2(sp_standard(p.at("m")), true); };
        e.rank_text = "1";
        e.rank_formula = constant_rank(1);
        mark_center(e, "no", [](const Params&) { return std::optional<bool>(false); });
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"m", 2, b.max_n}}; };
        t.push_back(std::move(e));
    }
    {
        TableEntry e;
        e.key = "B6";
        e.table = TableId::B;
        e.group = "C^x x SO_m";
        e.representation = "C^m + C^m*";
        e.params = {"m"};
        e.conditions_text = "m >= 5";
        e.conditions = [](const Params& p) { return p.at("m") >= 5; };
        e.recipe = [](const Params& p) { return type2(so_standard(p.at("m"))); };
        e.rank_text = "2";
        e.rank_formula = constant_rank(2);
        mark_center(e, "yes", [](const Params&) { return std::optional<bool>(true); });
        e.sweep = [](const TableBudget& b) { return std::vector<ParamSweep>{{"m", 5, std::max(b.max_n, b.max_p)}}; };
        t.push_back(std::move(e));
    }
    auto exceptional = [&](std::string key, std::string group, std::string rep, FactorModule m, int rank, bool ce) {
        TableEntry e = fixed(std::move(key), TableId::B, std::move(group), std::move(rep), type2(m), rank);
        mark_center(e, ce ? "yes" : "no", [ce](const Params&) { return std::optional<bool>(ce); });
        t.push_back(std::move(e));
    };
    exceptional("B7", "C^x x Spin_7", "C^8 + C^8*", single(Family::B, 3, 2), 2, true);
    exceptional("B8", "C^x x Spin_10", "C^16 + C^16*", single(Family::D, 5, 4), 2, false);
    exceptional("B9", "C^x x G_2", "C^7 + C^7*", single(Family::G, 2, 0), 2, true);
    exceptional("B10", "C^x x E_6", "C^27 + C^27*", single(Family::E, 6, 0), 3, true);
    return t;
}

std::vector<TableEntry> table_s() {
    std::vector<TableEntry> t;
    const FactorModule sl2 = single(Family::A, 1, 0);
    auto add = [&](std::string key, std::string rep, std::vector<std::string> params, std::string cond,
                   std::function<bool(const Params&)> cond_f, std::function<RepRecipe(const Params&)> recipe,
                   std::function<std::vector<ParamSweep>(const TableBudget&)> sweep) {
        TableEntry e;
        e.key = std::move(key);
        e.table = TableId::Sprime;
        e.group = "";
        e.representation = std::move(rep);
        e.params = std::move(params);
        e.conditions_text = std::move(cond);
        e.conditions = std::move(cond_f);
        e.recipe = std::move(recipe);
        e.rank_formula = [](const Params&) { return std::optional<int>(); };
        e.stable_text = "yes";
        e.stable = always();
        // The underlined sl2 is the last factor unless stated otherwise.
        e.link_slots = [recipe = e.recipe](const Params& p) {
            return std::vector<std::size_t>{recipe(p).base.factors().size() - 1};
        };
        e.sweep = std::move(sweep);
        t.push_back(std::move(e));
    };
    auto by_m = [](int lo) {
        return [lo](const TableBudget& b) { return std::vector<ParamSweep>{{"m", lo, b.max_m}}; };
    };
    auto m_at_least = [](int lo) { return [lo](const Params& p) { return p.at("m") >= lo; }; };

    add("S.1", "sl2 (x) sp2m (x) sl2", {"m"}, "m >= 1", m_at_least(1),
        [sl2](const Params& p) { return type1(tensor(tensor(sl2, sp_standard(p.at("m"))), sl2)); }, by_m(1));
    t.back().link_slots = [](const Params&) { return std::vector<std::size_t>{0, 2}; };
    t.back().group = "SL_2 x Sp_2m x SL_2";
    add("S.3", "so_n (x) sl2", {"n"}, "n >= 3", [](const Params& p) { return p.at("n") >= 3; },
        [sl2](const Params& p) { return type1(tensor(so_standard(p.at("n")), sl2)); }, [](const TableBudget& b) {
            return std::vector<ParamSweep>{{"n", 3, b.max_p}};
        });
    t.back().group = "SO_n x SL_2";
    add("S.5", "spin9 (x) sl2", {}, "-", always(), [sl2](const Params&) { return type1(tensor(single(Family::B, 4, 3), sl2)); },
        no_params());
    t.back().group = "Spin_9 x SL_2";
    add("S.7", "spin7 (x) sl2", {}, "-", always(), [sl2](const Params&) { return type1(tensor(single(Family::B, 3, 2), sl2)); },
        no_params());
    t.back().group = "Spin_7 x SL_2";
    add("S.9", "sl2", {}, "-", always(), [sl2](const Params&) { return type1(sl2); }, no_params());
    t.back().group = "SL_2";
    t.back().stable_text = "no";
    t.back().stable = [](const Params&) { return false; };
    add("S.10", "T(sl2)", {}, "-", always(), [sl2](const Params&) { return type2(sl2, true); }, no_params());
    t.back().group = "GL_2";
    t.back().rank_text = "1";
    t.back().rank_formula = constant_rank(1);
    add("S.11", "T(sl_m (x) sl2)", {"m"}, "m >= 2", m_at_least(2),
        [sl2](const Params& p) { return type2(tensor(sl_standard(p.at("m")), sl2)); }, by_m(2));
    t.back().group = "C^x x SL_m x SL_2";
    add("S.13", "sp2m (x) S^2 sl2", {"m"}, "m >= 1", m_at_least(1),
        [](const Params& p) { return type1(tensor(sp_standard(p.at("m")), single(Family::A, 1, 0, 2))); }, by_m(1));
    t.back().group = "Sp_2m x SL_2";
    t.back().rank_text = "1";
    t.back().rank_formula = constant_rank(1);
    t.back().stable_text = "no iff m >= 2";
    t.back().stable = [](const Params& p) { return p.at("m") < 2; };
    add("S.16", "g2 (x) sl2", {}, "-", always(), [sl2](const Params&) { return type1(tensor(single(Family::G, 2, 0), sl2)); },
        no_params());
    t.back().group = "G_2 x SL_2";
    return t;
}

}  // namespace

const std::vector<TableEntry>& table_entries() {
    static const std::vector<TableEntry> entries = [] {
        std::vector<TableEntry> all = table_a();
        for (auto& part : {table_b(), table_s()}) all.insert(all.end(), part.begin(), part.end());
        // Columns a table does not have get neutral values.
        for (auto& e : all) {
            if (!e.stable) {
                e.stable_text = "yes";
                e.stable = always();
            }
            if (!e.center_essential) e.center_essential = [](const Params&) { return std::optional<bool>(); };
            if (!e.link_slots) e.link_slots = [](const Params&) { return std::vector<std::size_t>{}; };
        }
        return all;
    }();
    return entries;
}

const TableEntry& find_entry(const std::string& key) {
    for (const auto& e : table_entries())
        if (e.key == key) return e;
    throw Error(ErrorCode::PreconditionViolated, "unknown table entry " + key);
}

RepRecipe make_recipe(const TableEntry& entry, const Params& params) {
    if (params.size() != entry.params.size())
        throw Error(ErrorCode::ConditionViolated, entry.key + " takes " + std::to_string(entry.params.size()) +
                                                      " parameters, got " + std::to_string(params.size()));
    for (const auto& name : entry.params)
        if (!params.count(name)) throw Error(ErrorCode::ConditionViolated, entry.key + " needs parameter " + name);
    if (!entry.conditions(params))
        throw Error(ErrorCode::ConditionViolated,
                    entry.key + " requires " + entry.conditions_text + ", got " + to_string(params));
    return entry.recipe(params);
}

RepSpec materialize(const RepRecipe& r) {
    if (r.kind == ComponentKind::Type1) return RepSpec(r.base, {make_type1(r.base, r.highest)}, true);
    auto t = make_type2(r.base, r.highest, r.symplectic_u);
    return RepSpec(t.algebra, {t.component}, true);
}

RepSpec instantiate(const TableEntry& entry, const Params& params) {
    return materialize(make_recipe(entry, params));
}

std::vector<Params> sweep_params(const TableEntry& entry, const TableBudget& budget) {
    const auto ranges = entry.sweep(budget);
    std::vector<Params> out;
    Params cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ranges.size()) {
            if (entry.conditions(cur)) out.push_back(cur);
            return;
        }
        for (int v = ranges[i].min; v <= ranges[i].max; ++v) {
            cur[ranges[i].name] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

RepSpec link_sl2(const RepSpec& a, std::size_t slot_a, const RepSpec& b, std::size_t slot_b) {
    const auto& fa = a.algebra().factors();
    const auto& fb = b.algebra().factors();
    const SimpleFactor a1{Family::A, 1};
    if (slot_a >= fa.size() || slot_b >= fb.size() || !(fa[slot_a] == a1) || !(fb[slot_b] == a1))
        throw Error(ErrorCode::AlgebraMismatch, "link slots must name sl2 factors");
    std::vector<SimpleFactor> factors = fa;
    std::vector<int> map_a(fa.size()), map_b(fb.size());
    for (std::size_t i = 0; i < fa.size(); ++i) map_a[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < fb.size(); ++i) {
        if (i == slot_b) {
            map_b[i] = static_cast<int>(slot_a);
        } else {
            map_b[i] = static_cast<int>(factors.size());
            factors.push_back(fb[i]);
        }
    }
    const int ta = a.algebra().torus_rank(), tb = b.algebra().torus_rank();
    std::vector<int> tor_a(ta), tor_b(tb);
    for (int k = 0; k < ta; ++k) tor_a[k] = k;
    for (int k = 0; k < tb; ++k) tor_b[k] = ta + k;
    const ReductiveAlgebra alg(factors, ta + tb);
    auto out = direct_sum(embed(a, alg, map_a, tor_a), embed(b, alg, map_b, tor_b));
    // The torus coordinates stay disjoint, so exclusive ones remain exclusive.
    out.set_saturated(a.saturated() && b.saturated());
    return out;
}

// ---------------------------------------------------------------------------
// Verification

bool InstanceReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

bool EntryReport::passed() const {
    return std::all_of(instances.begin(), instances.end(), [](const InstanceReport& i) { return i.passed(); });
}

bool VerificationReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.passed(); });
}

std::size_t VerificationReport::instance_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.instances.size();
    return n;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& e : entries) {
        out << (e.passed() ? "PASS " : "FAIL ") << e.key << " (Table " << to_string(e.table) << ", "
            << e.instances.size() << " instances)\n";
        for (const auto& i : e.instances) {
            if (i.passed()) continue;
            ++failed;
            out << "  " << (i.params.empty() ? "-" : to_string(i.params)) << ":";
            for (const auto& c : i.checks)
                if (!c.passed) out << " " << c.name << " [" << c.detail << "]";
            out << "\n";
        }
    }
    out << instance_count() << " instances, " << failed << " failed\n";
    return out.str();
}

namespace {

CheckOutcome check(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, std::move(detail)};
}

}  // namespace

InstanceReport verify_instance(const TableEntry& entry, const Params& params, const VerifyOptions& options) {
    InstanceReport rep;
    rep.key = entry.key;
    rep.params = params;
    try {
        const auto recipe = make_recipe(entry, params);
        const auto spec = materialize(recipe);
        const auto& comp = spec.components().at(0);
        rep.dimension = spec.dimension();
        rep.expected_rank = entry.rank_formula(params);

        // Frobenius-Schur type of the component.
        if (recipe.kind == ComponentKind::Type1) {
            bool torus_zero = true;
            for (int k = spec.algebra().torus_offset(); k < spec.algebra().dimension(); ++k)
                torus_zero = torus_zero && comp.highest_weight[k] == 0;
            rep.checks.push_back(check("fs-type",
                                       torus_zero && fs_classification(spec.algebra(), comp.highest_weight) ==
                                                         FsType::Symplectic,
                                       "type 1 must be a symplectic irreducible with zero torus block"));
            rep.checks.push_back(check("self-dual", dual(comp.weights) == comp.weights));
        } else {
            const auto fs_u = fs_classification(spec.algebra(), comp.highest_weight);
            rep.checks.push_back(check("fs-type", fs_u != FsType::Symplectic && comp.symplectic_u == recipe.symplectic_u,
                                       "U is " + to_string(fs_u) + ", semisimple part " +
                                           (comp.symplectic_u ? "symplectic" : "not symplectic")));
            const auto u = irrep_weights(spec.algebra(), comp.highest_weight);
            rep.checks.push_back(check("u-plus-dual", u + dual(u) == comp.weights));
        }

        // Freudenthal total against the Weyl dimension formula.
        BigInt expected_dim = weyl_dimension(spec.algebra(), comp.highest_weight);
        if (recipe.kind == ComponentKind::Type2) expected_dim *= 2;
        rep.checks.push_back(check("dimension", BigInt(rep.dimension) == expected_dim,
                                   "Freudenthal " + std::to_string(rep.dimension) + ", Weyl " + expected_dim.str()));

        const auto result = reduce_to_terminal(spec);
        rep.computed_rank = rank(result.terminal);
        rep.coisotropic = coisotropy_test(result.terminal).coisotropic;
        if (rep.expected_rank)
            rep.checks.push_back(check("rank", rep.computed_rank == *rep.expected_rank,
                                       "computed " + std::to_string(rep.computed_rank) + ", table " +
                                           std::to_string(*rep.expected_rank)));
        rep.checks.push_back(check("coisotropic", rep.coisotropic));
        rep.checks.push_back(check("wmf", wmf_check(spec)));

        if (rep.coisotropic) {
            const auto mi = moment_image(result.terminal, spec.algebra());
            rep.checks.push_back(
                check("strong-orthogonality", strong_orthogonality_check(mi, result.final_state.root_system())));
            if (options.orbit_samples > 0 && spec.algebra().weyl_group_order() <= options.group_cap &&
                entry.table == TableId::B) {
                const auto orbit = orbit_separation_check(mi, result.final_state.root_system_ptr(),
                                                          options.orbit_samples, options.seed, options.group_cap);
                rep.checks.push_back(check("orbit-separation", orbit.verified,
                                           std::to_string(orbit.samples_checked) + " samples, |Gamma| = " +
                                               std::to_string(orbit.gamma_order)));
            }
        }

        // Verdicts must not depend on the choice of extremal weights.
        std::vector<ChoicePolicy> policies{ChoicePolicy::lexicographic()};
        for (int s = 1; s <= options.random_policies; ++s)
            policies.push_back(ChoicePolicy::random(options.seed + static_cast<std::uint64_t>(s) - 1));
        std::string bad;
        for (const auto& p : policies) {
            const auto r = reduce_to_terminal(spec, p);
            if (rank(r.terminal) != rep.computed_rank || coisotropy_test(r.terminal).coisotropic != rep.coisotropic)
                bad += (bad.empty() ? "" : ", ") + p.name();
        }
        rep.checks.push_back(check("choice-invariance", bad.empty(), bad.empty() ? "" : "differs under " + bad));
    } catch (const Error& e) {
        rep.checks.push_back(check("error", false, e.what()));
    }
    return rep;
}

VerificationReport verify_all(const TableBudget& budget, const VerifyOptions& options,
                              std::span<const TableEntry> entries) {
    const auto start = std::chrono::steady_clock::now();
    struct Job {
        std::size_t entry;
        Params params;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (auto& p : sweep_params(entries[i], budget)) jobs.push_back({i, std::move(p)});

    std::vector<InstanceReport> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();)
            results[j] = verify_instance(entries[jobs[j].entry], jobs[j].params, options);
    };
    unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    VerificationReport report;
    for (std::size_t i = 0; i < entries.size(); ++i) report.entries.push_back({entries[i].key, entries[i].table, {}});
    for (std::size_t j = 0; j < jobs.size(); ++j) report.entries[jobs[j].entry].instances.push_back(std::move(results[j]));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace polarsym
