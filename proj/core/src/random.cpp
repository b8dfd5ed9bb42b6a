#include "lpk/random.hpp"

#include <cassert>

#include "lpk/derived.hpp"

namespace lpk {

TermGen::TermGen(SystemId system, GenOptions opt, uint64_t seed)
    : system_(system), opt_(opt), rng_(seed) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  int n = std::min(opt_.maxVars, 6);
  for (int i = 0; i < n; ++i) vars_.push_back(Var{names[i]});
}

int TermGen::dice(int n) {
  return (int)(rng_() % (uint64_t)n);
}

Var TermGen::pickVar() { return vars_[dice((int)vars_.size())]; }

Var TermGen::pickVarNotFreeIn(const FormulaPtr& f) {
  for (int tries = 0; tries < 16; ++tries) {
    Var v = pickVar();
    if (!isFreeIn(v, f)) return v;
  }
  return Var{"w$" + std::to_string(rng_() % 1000)};
}

FormulaPtr TermGen::atomish() {
  std::string letter;
  int arity;
  if (opt_.diversified) {
    letter = "D" + std::to_string(freshLetters_++);
    arity = dice(3);
  } else {
    // fixed arities per pool letter
    static const std::pair<const char*, int> pool[] = {{"P", 1}, {"Q", 0}, {"R", 2}, {"S", 1}};
    auto [l, a] = pool[dice(4)];
    letter = l;
    arity = a;
  }
  std::vector<Var> args;
  for (int i = 0; i < arity; ++i) args.push_back(pickVar());
  FormulaPtr atom = mkAtom(letter, std::move(args));
  if (negGrammar(system_) != NegGrammar::None && dice(4) == 0) return mkNeg(atom);
  return atom;
}

FormulaPtr TermGen::formula(int maxSize) {
  if (maxSize <= 1) return atomish();
  switch (dice(negGrammar(system_) == NegGrammar::Full ? 8 : 7)) {
    case 0:
    case 1:
      return atomish();
    case 2:
    case 3: {
      int ls = 1 + dice(maxSize - 1);
      return mkAnd(formula(ls), formula(maxSize - ls));
    }
    case 4:
    case 5: {
      int ls = 1 + dice(maxSize - 1);
      return mkOr(formula(ls), formula(maxSize - ls));
    }
    case 6:
      return mkQuant(dice(2) ? Quantifier::All : Quantifier::Ex, pickVar(),
                     formula(maxSize - 1));
    default:
      return mkNeg(formula(maxSize - 1));
  }
}

// A single primitive (or short derived) arrow whose source is `at`,
// or null when nothing applies at this shape.
ArrowPtr TermGen::rootStep(const FormulaPtr& at) {
  std::vector<ArrowPtr> candidates;
  // Steps applicable at every shape.
  candidates.push_back(aGamma(Quantifier::All, pickVarNotFreeIn(at), at));
  candidates.push_back(aIota(Quantifier::Ex, pickVar(), at));
  if (hasDeltaSigma(system_)) {
    FormulaPtr crown = atomicCrownOnly(system_)
                           ? atomish()
                           : formula(1 + dice(std::max(1, opt_.maxFormulaSize / 2)));
    if (crown->tag == Formula::Tag::Neg) crown = crown->left;
    candidates.push_back(aDeltaAll(crown, at));
  }
  if (at->tag == Formula::Tag::Bin && at->op == BinOp::And) {
    const FormulaPtr l = at->left, r = at->right;
    candidates.push_back(aCHat(l, r));
    if (hasMix(system_)) candidates.push_back(aMix(l, r));
    if (r->tag == Formula::Tag::Bin && r->op == BinOp::Or)
      candidates.push_back(aD(l, r->left, r->right));
    if (r->tag == Formula::Tag::Bin && r->op == BinOp::And)
      candidates.push_back(aBHat(true, l, r->left, r->right));
    if (l->tag == Formula::Tag::Bin && l->op == BinOp::And)
      candidates.push_back(aBHat(false, l->left, l->right, r));
    if (l->tag == Formula::Tag::Bin && l->op == BinOp::Or)
      candidates.push_back(deriveDR(l->left, l->right, r));
    if (l->tag == Formula::Tag::Quant && l->q == Quantifier::Ex && !isFreeIn(l->var, r))
      candidates.push_back(aThetaExL(l->var, l->left, r));
    if (l->tag == Formula::Tag::Quant && l->q == Quantifier::All && !isFreeIn(l->var, r))
      candidates.push_back(deriveTheta(ThetaVariant::AllAnd, l->var, l->left, r));
  }
  if (at->tag == Formula::Tag::Bin && at->op == BinOp::Or) {
    const FormulaPtr l = at->left, r = at->right;
    candidates.push_back(aCCheck(r, l));
    if (r->tag == Formula::Tag::Bin && r->op == BinOp::Or)
      candidates.push_back(aBCheck(true, l, r->left, r->right));
    if (l->tag == Formula::Tag::Bin && l->op == BinOp::Or)
      candidates.push_back(aBCheck(false, l->left, l->right, r));
    if (l->tag == Formula::Tag::Quant && l->q == Quantifier::All && !isFreeIn(l->var, r))
      candidates.push_back(deriveTheta(ThetaVariant::AllOr, l->var, l->left, r));
    if (hasDeltaSigma(system_) && l->tag == Formula::Tag::Quant) {
      // Try to read the left disjunct as an existential crown closure.
      FormulaPtr body = l;
      while (body->tag == Formula::Tag::Quant && body->q == Quantifier::Ex)
        body = body->left;
      if (body->tag == Formula::Tag::Bin && body->op == BinOp::And &&
          body->right->tag == Formula::Tag::Neg &&
          equal(body->left, body->right->left) &&
          (!atomicCrownOnly(system_) || body->left->tag == Formula::Tag::Atom)) {
        ArrowPtr sig = aSigmaEx(body->left, r);
        if (typechecks(sig, system_) && equal(typecheck(sig, system_).src, at))
          candidates.push_back(sig);
      }
    }
  }
  if (at->tag == Formula::Tag::Quant && at->q == Quantifier::All) {
    candidates.push_back(aIota(Quantifier::All, at->var, at->left));
    const FormulaPtr body = at->left;
    if (body->tag == Formula::Tag::Bin && body->op == BinOp::Or &&
        !isFreeIn(at->var, body->right))
      candidates.push_back(aThetaAllR(at->var, body->left, body->right));
  }
  if (at->tag == Formula::Tag::Quant && at->q == Quantifier::Ex) {
    if (!isFreeIn(at->var, at->left))
      candidates.push_back(aGamma(Quantifier::Ex, at->var, at->left));
    const FormulaPtr body = at->left;
    if (body->tag == Formula::Tag::Bin && body->op == BinOp::And &&
        !isFreeIn(at->var, body->right))
      candidates.push_back(deriveTheta(ThetaVariant::ExAnd, at->var, body->left,
                                       body->right));
    if (body->tag == Formula::Tag::Bin && body->op == BinOp::Or &&
        !isFreeIn(at->var, body->right))
      candidates.push_back(deriveTheta(ThetaVariant::ExOr, at->var, body->left,
                                       body->right));
  }
  if (candidates.empty()) return nullptr;
  return candidates[dice((int)candidates.size())];
}

ArrowPtr TermGen::step(const FormulaPtr& at) {
  // Either act at the root or descend into one component.
  if (at->tag == Formula::Tag::Bin && dice(3) == 0) {
    bool leftSide = dice(2) == 0;
    ArrowPtr inner = step(leftSide ? at->left : at->right);
    if (!inner) return nullptr;
    return leftSide ? aTensor(at->op, inner, aId(at->right))
                    : aTensor(at->op, aId(at->left), inner);
  }
  if (at->tag == Formula::Tag::Quant && dice(3) == 0) {
    ArrowPtr inner = step(at->left);
    if (!inner) return nullptr;
    return aQuant(at->q, at->var, inner);
  }
  return rootStep(at);
}

ArrowPtr TermGen::arrowFrom(const FormulaPtr& src, int budget) {
  ArrowPtr acc = aId(src);
  FormulaPtr cur = src;
  Typechecker tc(system_, TypeMode::Formula);
  while (budget > 0) {
    if (dice(4) == 0) break;
    ArrowPtr s = step(cur);
    if (!s) break;
    acc = aComp(s, acc);
    cur = tc.type(s).tgt;
    --budget;
  }
  return acc;
}

ArrowPtr TermGen::arrow(int budget) {
  if (budget <= 1) return aId(formula(1 + dice(2)));
  if (hasDeltaSigma(system_) && dice(8) == 0) {
    // seed a sigma step; its source shape rarely appears by chance
    ArrowPtr inner = arrow(budget - 1);
    FormulaPtr crown = atomicCrownOnly(system_) ? atomish() : formula(1 + dice(3));
    while (crown->tag == Formula::Tag::Neg) crown = crown->left;
    return aComp(inner, aSigmaEx(crown, typecheck(inner, system_).src));
  }
  switch (dice(10)) {
    case 0:
    case 1:
    case 2: {  // forward chain from a random source
      FormulaPtr src = formula(1 + dice(opt_.maxFormulaSize));
      return arrowFrom(src, budget);
    }
    case 3:
    case 4: {  // tensor of two smaller terms
      int lb = 1 + dice(budget - 1);
      return aTensor(dice(2) ? BinOp::And : BinOp::Or, arrow(lb), arrow(budget - lb));
    }
    case 5: {  // quantifier functor
      return aQuant(dice(2) ? Quantifier::All : Quantifier::Ex, pickVar(),
                    arrow(budget - 1));
    }
    case 6: {  // renaming, when the endpoints admit it
      ArrowPtr inner = arrow(budget - 1);
      SequentType ty = typecheck(inner, system_);
      for (int tries = 0; tries < 8; ++tries) {
        Var x = pickVar(), y = pickVar();
        if (substDefined(ty.src, x, y) && substDefined(ty.tgt, x, y))
          return aRen(x, y, inner);
      }
      return inner;
    }
    case 7: {  // composition of independently generated halves
      ArrowPtr f = arrow(budget / 2);
      SequentType ty = typecheck(f, system_);
      ArrowPtr g = arrowFrom(ty.tgt, budget - budget / 2);
      return aComp(g, f);
    }
    default: {  // a single random step over a random source
      FormulaPtr src = formula(1 + dice(opt_.maxFormulaSize));
      ArrowPtr s = step(src);
      if (!s) return aId(src);
      if (budget > 2 && dice(2)) {
        SequentType ty = typecheck(s, system_);
        return aComp(arrowFrom(ty.tgt, budget - 2), s);
      }
      return s;
    }
  }
}

ArrowPtr genRandomArrow(SystemId system, int sizeBudget, uint64_t seed) {
  GenOptions opt;
  opt.sizeBudget = sizeBudget;
  TermGen gen(system, opt, seed);
  return gen.arrow(sizeBudget);
}

ArrowPtr genRandomArrowDiversified(SystemId system, int sizeBudget, uint64_t seed) {
  GenOptions opt;
  opt.sizeBudget = sizeBudget;
  opt.diversified = true;
  TermGen gen(system, opt, seed);
  return gen.arrow(sizeBudget);
}

}  // namespace lpk
