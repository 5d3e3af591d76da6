#pragma once

// The tables of indecomposable polar symplectic representations (type 1,
// type 2 and the sl2-linked list S') as code-level data, with the harness
// that recomputes every checkable column.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarsym/knop.hpp"
#include "polarsym/rep.hpp"

namespace polarsym {

enum class TableId { A, B, Sprime };
std::string to_string(TableId t);

using Params = std::map<std::string, int>;
std::string to_string(const Params& p);

/// One indecomposable component over a semisimple base algebra. Type 2
/// recipes describe U; instantiation adds the torus coordinate of T(U).
struct RepRecipe {
    ReductiveAlgebra base;
    ComponentKind kind = ComponentKind::Type1;
    Weight highest;
    bool symplectic_u = false;  // type 2 with a symplectic U (GL_2, C^x x Sp_2m, T(sl2))
};

struct ParamSweep {
    std::string name;
    int min = 1;
    int max = 1;
};

/// Sweep bounds: Table A uses p (orthogonal size) and m (symplectic rank),
/// Table B uses n for every parameter, S' uses m.
struct TableBudget {
    int max_p = 9;
    int max_m = 4;
    int max_n = 6;
};

struct TableEntry {
    std::string key;  // "A1", "B10", "S.13"
    TableId table = TableId::A;
    std::string group;
    std::string representation;
    std::vector<std::string> params;
    std::string conditions_text;
    std::function<bool(const Params&)> conditions;
    std::function<RepRecipe(const Params&)> recipe;
    std::string rank_text;  // empty when the table has no rank column
    std::function<std::optional<int>(const Params&)> rank_formula;
    std::string stable_text;
    std::function<bool(const Params&)> stable;
    std::string center_essential_text;  // Table B only
    std::function<std::optional<bool>(const Params&)> center_essential;
    bool theta_group = true;                // Table A only
    /// Factor indices of the underlined sl2's in the base algebra (S' only).
    std::function<std::vector<std::size_t>(const Params&)> link_slots;
    /// Parameter ranges swept under a budget.
    std::function<std::vector<ParamSweep>(const TableBudget&)> sweep;
};

const std::vector<TableEntry>& table_entries();
/// Throws PreconditionViolated for an unknown key.
const TableEntry& find_entry(const std::string& key);

/// ConditionViolated unless `params` names exactly the entry's parameters and
/// satisfies its conditions.
RepRecipe make_recipe(const TableEntry& entry, const Params& params);
RepSpec materialize(const RepRecipe& recipe);
RepSpec instantiate(const TableEntry& entry, const Params& params);

/// Every admissible parameter tuple within the budget, in lexicographic order.
std::vector<Params> sweep_params(const TableEntry& entry, const TableBudget& budget);

/// Amalgamates two representations over a shared sl2: factor `slot_b` of b
/// is identified with factor `slot_a` of a (both must be A1).
RepSpec link_sl2(const RepSpec& a, std::size_t slot_a, const RepSpec& b, std::size_t slot_b);

/// Standard modules of the classical groups in the encoding used by the
/// tables (low ranks via the exceptional isomorphisms).
struct FactorModule {
    std::vector<SimpleFactor> factors;
    Weight highest;
};
FactorModule so_standard(int p);     // p >= 3
FactorModule sp_standard(int m);     // Sp_2m, m >= 1
FactorModule sl_standard(int n);     // n >= 1; SL_1 has no factors
FactorModule tensor(const FactorModule& a, const FactorModule& b);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct InstanceReport {
    std::string key;
    Params params;
    std::int64_t dimension = 0;
    std::optional<int> expected_rank;
    int computed_rank = 0;
    bool coisotropic = false;
    std::vector<CheckOutcome> checks;

    bool passed() const;
};

struct EntryReport {
    std::string key;
    TableId table = TableId::A;
    std::vector<InstanceReport> instances;

    bool passed() const;
};

struct VerificationReport {
    std::vector<EntryReport> entries;
    double seconds = 0;

    bool passed() const;
    std::size_t instance_count() const;
    std::string to_text() const;
};

struct VerifyOptions {
    int random_policies = 20;         // seeds 1..k, plus the lexicographic policy
    std::size_t orbit_samples = 0;    // 0 skips the orbit separation check
    std::uint64_t seed = 1;
    std::uint64_t group_cap = kDefaultGroupCap;
    unsigned threads = 0;             // 0: hardware concurrency
};

/// Recomputes rank, coisotropy, weight multiplicity freeness, strong
/// orthogonality, Frobenius-Schur type, the dimension formula, choice
/// invariance and (optionally) orbit separation for every swept instance.
/// Instances run on a worker pool; the report is ordered by entry and params.
VerificationReport verify_all(const TableBudget& budget, const VerifyOptions& options = {},
                              std::span<const TableEntry> entries = table_entries());

InstanceReport verify_instance(const TableEntry& entry, const Params& params, const VerifyOptions& options);

}  // namespace polarsym
