#include "polarsym/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polarsym/errors.hpp"
#include "polarsym/polar.hpp"

namespace polarsym {

std::string to_string(PolarityStatus s) {
    switch (s) {
        case PolarityStatus::Polar: return "polar";
        case PolarityStatus::NotPolar: return "not polar";
        case PolarityStatus::CoisotropicUndetermined: return "coisotropic, polarity undetermined";
        case PolarityStatus::NotCoisotropic: return "not coisotropic";
    }
    return "";
}

std::vector<std::size_t> support(const RepSpec& spec, std::size_t component) {
    const auto& alg = spec.algebra();
    const auto& hw = spec.components().at(component).highest_weight;
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < alg.factors().size(); ++f) {
        const int off = alg.factor_offset(f);
        for (int k = 0; k < alg.factors()[f].rank; ++k)
            if (hw[off + k] != 0) {
                out.push_back(f);
                break;
            }
    }
    return out;
}

std::vector<std::vector<std::size_t>> connected_blocks(const RepSpec& spec) {
    const std::size_t n = spec.components().size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::size_t> owner(spec.algebra().factors().size(), n);
    for (std::size_t c = 0; c < n; ++c)
        for (auto f : support(spec, c)) {
            if (owner[f] == n) {
                owner[f] = c;
            } else {
                const auto a = find(owner[f]), b = find(c);
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> index(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto r = find(c);
        if (index[r] == n) {
            index[r] = blocks.size();
            blocks.emplace_back();
        }
        blocks[index[r]].push_back(c);
    }
    return blocks;
}

namespace {

// Low-rank coincidences: B2 = C2 and D3 = A3. Node k of the normalized
// factor is node perm[k] of the original one.
struct NormalFactor {
    SimpleFactor type;
    std::vector<int> perm;
};

NormalFactor normalize(const SimpleFactor& f) {
    if (f == SimpleFactor{Family::B, 2}) return {{Family::C, 2}, {1, 0}};
    if (f == SimpleFactor{Family::D, 3}) return {{Family::A, 3}, {1, 0, 2}};
    std::vector<int> id(static_cast<std::size_t>(f.rank));
    std::iota(id.begin(), id.end(), 0);
    return {f, id};
}

struct Block {
    SimpleFactor type;
    Weight coords;
};

std::vector<Block> normalized_blocks(const ReductiveAlgebra& alg, const Weight& hw,
                                     std::span<const std::size_t> factors) {
    std::vector<Block> out;
    for (auto f : factors) {
        const auto nf = normalize(alg.factors()[f]);
        Weight b(nf.perm.size());
        for (std::size_t k = 0; k < nf.perm.size(); ++k) b[k] = hw[alg.factor_offset(f) + nf.perm[k]];
        out.push_back({nf.type, b});
    }
    return out;
}

bool equivalent_block(const Block& x, const Block& y) {
    if (!(x.type == y.type)) return false;
    for (const auto& sigma : diagram_automorphisms(x.type)) {
        Weight z(x.coords.size());
        for (std::size_t k = 0; k < sigma.size(); ++k) z[k] = x.coords[sigma[k]];
        if (z == y.coords) return true;
    }
    return false;
}

Block dual_block(const Block& b) {
    return {b.type, dual_highest_weight(ReductiveAlgebra({b.type}, 0), b.coords)};
}

// Spec factor i corresponds to recipe factor perm[i].
std::optional<std::vector<std::size_t>> match_blocks(const std::vector<Block>& spec, const std::vector<Block>& recipe,
                                                     bool allow_dual) {
    const std::size_t k = spec.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool types = true;
        for (std::size_t i = 0; i < k && types; ++i) types = spec[i].type == recipe[perm[i]].type;
        if (!types) continue;
        for (int flip = 0; flip <= (allow_dual ? 1 : 0); ++flip) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                ok = equivalent_block(flip ? dual_block(spec[i]) : spec[i], recipe[perm[i]]);
            if (ok) return perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<SimpleFactor> sorted_types(const std::vector<Block>& blocks) {
    std::vector<SimpleFactor> t;
    for (const auto& b : blocks) t.push_back(b.type);
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

std::optional<TableMatch> match_component(const RepSpec& spec, std::size_t component) {
    const auto& comp = spec.components().at(component);
    const auto supp = support(spec, component);
    const auto blocks = normalized_blocks(spec.algebra(), comp.highest_weight, supp);
    const auto types = sorted_types(blocks);
    int ss_rank = 0;
    for (const auto& b : blocks) ss_rank += b.type.rank;
    // Every table parameter is at most twice the semisimple rank plus two.
    const int bound = 2 * ss_rank + 2;
    const TableBudget budget{bound, bound, bound};

    for (const auto& entry : table_entries()) {
        if (entry.table == TableId::Sprime) continue;
        for (const auto& params : sweep_params(entry, budget)) {
            const auto recipe = entry.recipe(params);
            if (recipe.kind != comp.kind) break;
            if (recipe.base.factors().size() != supp.size()) continue;
            std::vector<std::size_t> all(recipe.base.factors().size());
            std::iota(all.begin(), all.end(), 0);
            const auto rblocks = normalized_blocks(recipe.base, recipe.highest, all);
            if (sorted_types(rblocks) != types) continue;
            const auto perm = match_blocks(blocks, rblocks, comp.kind == ComponentKind::Type2);
            if (!perm) continue;
            TableMatch m{entry.key, params, component, std::vector<std::size_t>(supp.size())};
            for (std::size_t i = 0; i < supp.size(); ++i) m.factor_map[(*perm)[i]] = supp[i];
            return m;
        }
    }
    return std::nullopt;
}

namespace {

std::string describe(const TableMatch& m) {
    const auto& e = find_entry(m.key);
    std::string s = "Table " + to_string(e.table) + " row " + m.key + " (" + e.group + ", " + e.representation;
    if (!m.params.empty()) s += "; " + to_string(m.params);
    return s + ")";
}

struct BlockVerdict {
    PolarityStatus status = PolarityStatus::CoisotropicUndetermined;
    std::string evidence;
};

bool is_a1(const TableMatch& m, int p) {
    return m.key == "A1" && m.params.at("p") == p;
}

bool shares(const std::vector<std::size_t>& shared, std::size_t f) {
    return shared.size() == 1 && shared[0] == f;
}

// Patterns of two linked summands known not to be polar.
std::optional<std::string> known_pattern(const TableMatch& a, const TableMatch& b,
                                         const std::vector<std::size_t>& shared) {
    // so_p (x) sp_2m + sp_2m, identified over sp_2m, p odd, 3 <= p < 2m.
    if (a.key == "A1" && b.key == "A2") {
        const int p = a.params.at("p"), m = a.params.at("m");
        if (p % 2 == 1 && p >= 3 && p < 2 * m && b.params.at("m") == m && shares(shared, a.factor_map[1]) &&
            b.factor_map[0] == a.factor_map[1])
            return "so_" + std::to_string(p) + " (x) sp_" + std::to_string(2 * m) + " + sp_" + std::to_string(2 * m) +
                   " linked over sp_" + std::to_string(2 * m) + " is not polar for p odd, 3 <= p < 2m";
    }
    // sp_2m (x) so_5 + sp_4, identified over so_5 = sp_4, m >= 3.
    if (is_a1(a, 5) && a.params.at("m") >= 3 && b.key == "A2" && b.params.at("m") == 2 &&
        shares(shared, a.factor_map[0]) && b.factor_map[0] == a.factor_map[0])
        return "sp_" + std::to_string(2 * a.params.at("m")) +
               " (x) so_5 + sp_4 linked over so_5 = sp_4 is not polar for m >= 3";
    // sp_2m (x) S^2 sl2 linked over its sl2 with another copy or with sl2 itself.
    if (is_a1(a, 3) && shares(shared, a.factor_map[0])) {
        if (is_a1(b, 3) && b.factor_map[0] == a.factor_map[0])
            return "two copies of sp_2m (x) S^2 sl2 linked over sl2 are not polar";
        if (b.key == "A2" && b.params.at("m") == 1)
            return "sp_2m (x) S^2 sl2 linked with sl2 over sl2 is not polar";
    }
    return std::nullopt;
}

BlockVerdict pair_verdict(const RepSpec& sat, std::size_t ci, const TableMatch& mi, std::size_t cj,
                          const TableMatch& mj, const ChoicePolicy& policy) {
    const auto si = support(sat, ci), sj = support(sat, cj);
    std::vector<std::size_t> shared;
    std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(shared));
    const std::string names = "components " + std::to_string(ci) + " and " + std::to_string(cj);

    if (auto why = known_pattern(mi, mj, shared)) return {PolarityStatus::NotPolar, names + ": " + *why};
    if (auto why = known_pattern(mj, mi, shared)) return {PolarityStatus::NotPolar, names + ": " + *why};

    const bool stable_i = find_entry(mi.key).stable(mi.params);
    const bool stable_j = find_entry(mj.key).stable(mj.params);
    if (!stable_i && !stable_j)
        return {PolarityStatus::CoisotropicUndetermined, names + ": no stable summand, no known pattern"};

    const std::size_t both[] = {ci, cj};
    const auto pair = sub_representation(sat, both);
    const std::vector<std::vector<std::size_t>> parts{{0}, {1}};
    const bool stable[] = {stable_i, stable_j};
    const auto rc = rank_condition_check(pair, parts, stable, policy);
    std::ostringstream rc_text;
    rc_text << "ranks " << rc.ranks[0] << " + " << rc.ranks[1] << ", sum has rank " << rc.combined_rank;
    if (rc.status == RankConditionStatus::Violated)
        return {PolarityStatus::NotPolar, names + ": rank condition violated with a stable summand (" + rc_text.str() + ")"};

    const bool sl2_link = std::any_of(shared.begin(), shared.end(), [&](std::size_t f) {
        return sat.algebra().factors()[f] == SimpleFactor{Family::A, 1};
    });
    if (sl2_link)
        return {PolarityStatus::NotPolar,
                names + ": sl2-linked sum with a stable summand; the closed orbits of the linked sl2 and of its "
                        "maximal torus on the other summand would have to coincide (" + rc_text.str() + ")"};
    return {PolarityStatus::CoisotropicUndetermined, names + ": rank condition holds (" + rc_text.str() + ")"};
}

BlockVerdict linked_block(const RepSpec& sat, const std::vector<std::size_t>& block, const ChoicePolicy& policy) {
    std::vector<TableMatch> matches;
    for (auto c : block) {
        auto m = match_component(sat, c);
        if (!m)
            return {PolarityStatus::NotPolar, "component " + std::to_string(c) +
                                                  " is not polar on its own (no table row), and summands of polar "
                                                  "representations are polar"};
        matches.push_back(std::move(*m));
    }
    std::string pending;
    for (std::size_t a = 0; a < block.size(); ++a)
        for (std::size_t b = a + 1; b < block.size(); ++b) {
            const auto sa = support(sat, block[a]), sb = support(sat, block[b]);
            std::vector<std::size_t> shared;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
            if (shared.empty()) continue;
            auto v = pair_verdict(sat, block[a], matches[a], block[b], matches[b], policy);
            if (v.status == PolarityStatus::NotPolar) return v;
            pending += (pending.empty() ? "" : "; ") + v.evidence;
        }
    return {PolarityStatus::CoisotropicUndetermined, "linked components, no rule applies: " + pending};
}

}  // namespace

PolarityVerdict classify_polarity(const RepSpec& spec, const ChoicePolicy& policy) {
    PolarityVerdict v;
    const RepSpec sat = saturate(spec);
    v.saturated_input = sat.algebra() == spec.algebra();
    const std::string label = v.saturated_input ? "" : " (computed for the saturation)";

    const auto red = reduce_to_terminal(sat, policy);
    const auto cois = coisotropy_test(red.terminal);
    if (!cois.coisotropic) {
        v.status = PolarityStatus::NotCoisotropic;
        v.evidence = "toroidal weights are linearly dependent, so the representation is not coisotropic; a polar "
                     "symplectic representation is coisotropic, hence not polar" + label;
        return v;
    }

    std::vector<std::string> undetermined;
    for (const auto& block : connected_blocks(sat)) {
        if (block.size() == 1) {
            if (auto m = match_component(sat, block[0])) {
                v.matches.push_back(std::move(*m));
                continue;
            }
            v.status = PolarityStatus::NotPolar;
            v.evidence = "component " + std::to_string(block[0]) +
                         " is indecomposable and saturated but equivalent to no row of Tables A and B" + label;
            return v;
        }
        auto b = linked_block(sat, block, policy);
        if (b.status == PolarityStatus::NotPolar) {
            v.status = PolarityStatus::NotPolar;
            v.evidence = b.evidence + label;
            return v;
        }
        undetermined.push_back(b.evidence);
    }
    if (!undetermined.empty()) {
        v.status = PolarityStatus::CoisotropicUndetermined;
        v.evidence = "coisotropic; " + undetermined.front() + label;
        return v;
    }
    v.status = PolarityStatus::Polar;
    std::string rows;
    for (const auto& m : v.matches) rows += (rows.empty() ? "" : "; ") + describe(m);
    v.evidence = (v.matches.size() == 1 ? "matches " : "outer product of ") + rows + label;
    return v;
}

}  // namespace polarsym
