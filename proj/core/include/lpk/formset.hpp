#ifndef LPK_FORMSET_HPP
#define LPK_FORMSET_HPP

#include <string>
#include <vector>

#include "lpk/formula.hpp"

namespace lpk {

// Form sets are equivalence classes of diversified, negation-free formulas
// modulo associativity and commutativity of both binary connectives and
// congruence under quantifiers. A class is represented by its canonical
// member: AC-runs flattened, children sorted by their letter sequence,
// rebuilt right-nested.
//
// Sorting keys ignore variables, so canonicalization commutes with
// substitution and renaming.

// Throws NotDiversified / SystemViolation (negation) on bad input.
FormulaPtr canonFormSet(const FormulaPtr& a);

bool isCanonFormSet(const FormulaPtr& a);

// Equality of form sets named by arbitrary representatives.
bool fsEqual(const FormulaPtr& a, const FormulaPtr& b);

// Maximal run of `op`-children in left-to-right order.
std::vector<FormulaPtr> flattenChildren(const FormulaPtr& a, BinOp op);

// In-order sequence of predicate letters.
std::vector<std::string> letterSeq(const FormulaPtr& a);

FormulaPtr joinRight(const std::vector<FormulaPtr>& children, BinOp op);

// Splits a canonical `whole` into the sub-form-set with exactly the letters
// of `part` and the remaining context (null when no context remains).
// Throws TypeError when `part` does not embed into `whole` this way.
struct FormSetSplit {
  FormulaPtr part;  // canonical; fsEqual to the requested part
  FormulaPtr rest;  // canonical context or null
};
FormSetSplit splitFormSet(const FormulaPtr& whole, const FormulaPtr& part, BinOp op);

// canon(a op b) where either side may be null (treated as absent).
FormulaPtr fsJoin(const FormulaPtr& a, const FormulaPtr& b, BinOp op);

}  // namespace lpk

#endif
