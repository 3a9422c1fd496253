#pragma once

// WS2S source (MONA syntax) for formulas built from =, ⊕ and right
// multiplication by unary trees. A tree is a second-order variable holding
// the antichain of paths to its black leaves; multiplying by the unary tree
// with path w appends w to every path.

#include <string>

#include "treeshare/formula.hpp"

namespace treeshare {

// Predicate library shared by every emitted unit, starting with "ws2s;".
const std::string& ws2s_library();

// Closed formula to a WS2S unit: the library, one sub_w / pathMul_w pair per
// multiplier path longer than one letter, and the sentence. Variables become
// X, X', X'', ... in binding order; auxiliaries for t ⋈ (* o), t ⋈ (o *),
// longer paths and ⊕ are XL, XR, XM and XU (then XL2, ...). A universal
// prefix over an implication between conjunctions of equations is emitted as
// one all2 block with the auxiliaries in the hypothesis; an undefined ⊕ in
// the conclusion then makes the implication hold vacuously.
//
// Throws UnsupportedConstant for a non-unary multiplier, UnsupportedSymbol
// for ⊔, ⊓, complement, left multiplication, ⊑, ⊏ and constants, and
// FragmentError on free variables.
std::string emit_ws2s(const FormulaPtr& f);

}  // namespace treeshare
