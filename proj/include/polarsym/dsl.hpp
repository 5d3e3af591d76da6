#pragma once

// Text notation for representations:
//
//   spec   := groups ":" rep
//   groups := factor ("x" factor)*
//   factor := GL(n) | SL(n) | SO(n) | Sp(2m) | Spin(n) | G2 | F4 | E6 | E7 | E8 | Cx
//   rep    := term ("+" term)*
//   term   := atom | "T(" atom ")" | "dual(" atom ")"
//   atom   := piece ("*" piece)*          one piece per factor, in order
//   piece  := std | spin | spin+ | spin- | wedge(k,std) | sym(k,std) | irrep(c1,...,cr) | triv
//
// GL(n) is C^x x SL(n) with the centre acting on a piece by its degree. A Cx
// piece is triv, std (weight 1) or irrep(k). Terms are irreducible modules:
// symplectic ones become type 1 components, the others must pair with a dual
// term (or be written T(...)) to form type 2 components. T(U) adds a fresh
// torus coordinate when U carries no torus weight. "spin+" and "spin-" are
// single tokens: write "spin + ..." for a sum.

#include <string>
#include <string_view>
#include <vector>

#include "polarsym/rep.hpp"

namespace polarsym {

struct ParsedSpec {
    RepSpec spec;
    /// Non-fatal notes, e.g. T(U) with a symplectic U (then T(U) = U + U).
    std::vector<std::string> annotations;
};

/// ParseError with a byte position on malformed text; SemanticError on
/// well-formed text that does not describe a symplectic representation.
/// T(U) with a symplectic U is a SemanticError (U alone is already
/// symplectic) unless `allow_symplectic_t`, which accepts it with an annotation.
ParsedSpec parse_spec(std::string_view text, bool allow_symplectic_t = false);

/// Text that parse_spec maps back to an equal RepSpec. Factors print by
/// family (SL, SO, Sp, ...), torus coordinates as Cx, pieces as irrep(...),
/// type 2 components as "U + dual(U)".
std::string print_spec(const RepSpec& spec);

}  // namespace polarsym
