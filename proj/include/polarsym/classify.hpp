#pragma once

// Polarity verdicts: split a saturated representation into connected blocks,
// match indecomposable blocks against Tables A and B, and apply the
// non-polarity rules for linked sums.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarsym/knop.hpp"
#include "polarsym/rep.hpp"
#include "polarsym/tables.hpp"

namespace polarsym {

enum class PolarityStatus { Polar, NotPolar, CoisotropicUndetermined, NotCoisotropic };
std::string to_string(PolarityStatus s);

struct TableMatch {
    std::string key;
    Params params;
    std::size_t component = 0;
    /// factor_map[i]: factor of the spec playing the role of factor i of the entry's base algebra.
    std::vector<std::size_t> factor_map;
};

struct PolarityVerdict {
    PolarityStatus status = PolarityStatus::CoisotropicUndetermined;
    std::string evidence;
    /// False when the verdict was computed for saturate(spec).
    bool saturated_input = true;
    std::vector<TableMatch> matches;

    /// NotCoisotropic implies NotPolar.
    bool not_polar() const {
        return status == PolarityStatus::NotPolar || status == PolarityStatus::NotCoisotropic;
    }
};

/// Indices of the simple factors acting nontrivially on a component.
std::vector<std::size_t> support(const RepSpec& spec, std::size_t component);

/// Components grouped by shared simple factors, each group ascending; groups
/// ordered by their first component.
std::vector<std::vector<std::size_t>> connected_blocks(const RepSpec& spec);

/// Table A or B row equivalent to one component (up to low-rank
/// isomorphisms, diagram automorphisms and duality of U), if any.
std::optional<TableMatch> match_component(const RepSpec& spec, std::size_t component);

PolarityVerdict classify_polarity(const RepSpec& spec, const ChoicePolicy& policy = default_policy());

}  // namespace polarsym
