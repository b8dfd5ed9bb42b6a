#include "lpk/formset.hpp"

#include <algorithm>
#include <set>

namespace lpk {

std::vector<FormulaPtr> flattenChildren(const FormulaPtr& a, BinOp op) {
  if (a->tag == Formula::Tag::Bin && a->op == op) {
    auto l = flattenChildren(a->left, op);
    auto r = flattenChildren(a->right, op);
    l.insert(l.end(), r.begin(), r.end());
    return l;
  }
  return {a};
}

std::vector<std::string> letterSeq(const FormulaPtr& a) {
  std::vector<std::string> out;
  for (const auto& occ : atomProfile(a)) out.push_back(occ.letter);
  return out;
}

FormulaPtr joinRight(const std::vector<FormulaPtr>& children, BinOp op) {
  if (children.empty()) return nullptr;
  FormulaPtr acc = children.back();
  for (size_t i = children.size() - 1; i-- > 0;) acc = mkBin(op, children[i], acc);
  return acc;
}

FormulaPtr canonFormSet(const FormulaPtr& a) {
  switch (a->tag) {
    case Formula::Tag::Atom:
      return a;
    case Formula::Tag::Meta:
    case Formula::Tag::Neg:
      throw SystemViolation("form sets live in the negation-free language");
    case Formula::Tag::Quant: {
      if (!isDiversified(a)) throw NotDiversified(printFormula(a));
      auto b = canonFormSet(a->left);
      return b.get() == a->left.get() ? a : mkQuant(a->q, a->var, b);
    }
    case Formula::Tag::Bin: {
      if (!isDiversified(a)) throw NotDiversified(printFormula(a));
      auto children = flattenChildren(a, a->op);
      for (auto& c : children) c = canonFormSet(c);
      std::stable_sort(children.begin(), children.end(),
                       [](const FormulaPtr& l, const FormulaPtr& r) {
                         return letterSeq(l) < letterSeq(r);
                       });
      return joinRight(children, a->op);
    }
  }
  return a;
}

bool isCanonFormSet(const FormulaPtr& a) { return equal(a, canonFormSet(a)); }

bool fsEqual(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  return equal(canonFormSet(a), canonFormSet(b));
}

FormSetSplit splitFormSet(const FormulaPtr& whole, const FormulaPtr& part, BinOp op) {
  FormulaPtr w = canonFormSet(whole);
  FormulaPtr p = canonFormSet(part);
  if (equal(w, p)) return {p, nullptr};
  if (w->tag != Formula::Tag::Bin || w->op != op)
    throw TypeError("form set " + printFormula(part) + " does not occur in " +
                    printFormula(whole));
  std::set<std::string> partLetters;
  for (auto& l : letterSeq(p)) partLetters.insert(l);
  std::vector<FormulaPtr> inPart, rest;
  for (const auto& c : flattenChildren(w, op)) {
    auto ls = letterSeq(c);
    bool inside = !ls.empty() && partLetters.count(ls.front());
    for (const auto& l : ls) {
      if (partLetters.count(l) != (inside ? 1u : 0u))
        throw TypeError("form set " + printFormula(part) + " straddles components of " +
                        printFormula(whole));
    }
    (inside ? inPart : rest).push_back(c);
  }
  FormulaPtr rebuilt = joinRight(inPart, op);
  if (!rebuilt || !equal(canonFormSet(rebuilt), p))
    throw TypeError("form set " + printFormula(part) + " does not occur in " +
                    printFormula(whole));
  return {p, rest.empty() ? nullptr : joinRight(rest, op)};
}

FormulaPtr fsJoin(const FormulaPtr& a, const FormulaPtr& b, BinOp op) {
  if (!a) return b ? canonFormSet(b) : nullptr;
  if (!b) return canonFormSet(a);
  return canonFormSet(mkBin(op, a, b));
}

}  // namespace lpk
