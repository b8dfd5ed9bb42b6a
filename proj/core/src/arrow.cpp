#include "lpk/arrow.hpp"

#include <sstream>

namespace lpk {

namespace {

std::shared_ptr<Arrow> node(ATag tag) {
  auto p = std::make_shared<Arrow>();
  p->tag = tag;
  return p;
}

}  // namespace

ArrowPtr aId(FormulaPtr a) {
  auto p = node(ATag::Id);
  p->a = std::move(a);
  return p;
}

ArrowPtr aBHat(bool fwd, FormulaPtr a, FormulaPtr b, FormulaPtr c) {
  auto p = node(ATag::BHat);
  p->fwd = fwd;
  p->a = std::move(a);
  p->b = std::move(b);
  p->c = std::move(c);
  return p;
}

ArrowPtr aBCheck(bool fwd, FormulaPtr a, FormulaPtr b, FormulaPtr c) {
  auto p = node(ATag::BCheck);
  p->fwd = fwd;
  p->a = std::move(a);
  p->b = std::move(b);
  p->c = std::move(c);
  return p;
}

ArrowPtr aCHat(FormulaPtr a, FormulaPtr b) {
  auto p = node(ATag::CHat);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

ArrowPtr aCCheck(FormulaPtr a, FormulaPtr b) {
  auto p = node(ATag::CCheck);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

ArrowPtr aD(FormulaPtr a, FormulaPtr b, FormulaPtr c) {
  auto p = node(ATag::D);
  p->a = std::move(a);
  p->b = std::move(b);
  p->c = std::move(c);
  return p;
}

ArrowPtr aIota(Quantifier q, Var x, FormulaPtr a) {
  auto p = node(q == Quantifier::All ? ATag::IotaAll : ATag::IotaEx);
  p->q = q;
  p->x = std::move(x);
  p->a = std::move(a);
  return p;
}

ArrowPtr aGamma(Quantifier q, Var x, FormulaPtr d) {
  auto p = node(q == Quantifier::All ? ATag::GammaAll : ATag::GammaEx);
  p->q = q;
  p->x = std::move(x);
  p->a = std::move(d);
  return p;
}

ArrowPtr aThetaAllR(Var x, FormulaPtr a, FormulaPtr d) {
  auto p = node(ATag::ThetaAllR);
  p->x = std::move(x);
  p->a = std::move(a);
  p->b = std::move(d);
  return p;
}

ArrowPtr aThetaExL(Var x, FormulaPtr a, FormulaPtr d) {
  auto p = node(ATag::ThetaExL);
  p->x = std::move(x);
  p->a = std::move(a);
  p->b = std::move(d);
  return p;
}

ArrowPtr aDeltaAll(FormulaPtr crown, FormulaPtr stem) {
  auto p = node(ATag::DeltaAll);
  p->a = std::move(crown);
  p->b = std::move(stem);
  return p;
}

ArrowPtr aSigmaEx(FormulaPtr crown, FormulaPtr stem) {
  auto p = node(ATag::SigmaEx);
  p->a = std::move(crown);
  p->b = std::move(stem);
  return p;
}

ArrowPtr aMix(FormulaPtr a, FormulaPtr b) {
  auto p = node(ATag::Mix);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

ArrowPtr aComp(ArrowPtr g, ArrowPtr f) {
  auto p = node(ATag::Comp);
  p->g = std::move(g);
  p->f = std::move(f);
  return p;
}

ArrowPtr aCompChain(const std::vector<ArrowPtr>& firstToLast) {
  ArrowPtr acc;
  for (const auto& step : firstToLast) acc = acc ? aComp(step, acc) : step;
  return acc;
}

ArrowPtr aTensor(BinOp op, ArrowPtr f1, ArrowPtr f2) {
  auto p = node(ATag::Tensor);
  p->op = op;
  p->f = std::move(f1);
  p->g = std::move(f2);
  return p;
}

ArrowPtr aQuant(Quantifier q, Var x, ArrowPtr f) {
  auto p = node(ATag::Quant);
  p->q = q;
  p->x = std::move(x);
  p->f = std::move(f);
  return p;
}

ArrowPtr aRen(Var x, Var y, ArrowPtr f) {
  auto p = node(ATag::Ren);
  p->x = std::move(x);
  p->y = std::move(y);
  p->f = std::move(f);
  return p;
}

ArrowPtr aMeta(std::string slot) {
  auto p = node(ATag::Meta);
  p->meta = std::move(slot);
  return p;
}

ArrowPtr mkRename(const Var& x, const Var& y, const ArrowPtr& f, SystemId system) {
  ArrowPtr r = aRen(x, y, f);
  typecheck(r, system);
  return r;
}

bool sequentEqual(const SequentType& a, const SequentType& b) {
  return equal(a.src, b.src) && equal(a.tgt, b.tgt);
}

std::string printSequent(const SequentType& t) {
  return printFormula(t.src) + " |- " + printFormula(t.tgt);
}

bool arrowEqual(const ArrowPtr& a, const ArrowPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag || a->fwd != b->fwd || a->op != b->op || a->q != b->q ||
      a->x != b->x || a->y != b->y || a->meta != b->meta)
    return false;
  if (!((a->a == nullptr) == (b->a == nullptr) && (!a->a || equal(a->a, b->a)))) return false;
  if (!((a->b == nullptr) == (b->b == nullptr) && (!a->b || equal(a->b, b->b)))) return false;
  if (!((a->c == nullptr) == (b->c == nullptr) && (!a->c || equal(a->c, b->c)))) return false;
  if ((a->f == nullptr) != (b->f == nullptr) || (a->g == nullptr) != (b->g == nullptr))
    return false;
  if (a->f && !arrowEqual(a->f, b->f)) return false;
  if (a->g && !arrowEqual(a->g, b->g)) return false;
  return true;
}

int arrowSize(const ArrowPtr& t) {
  int n = 1;
  if (t->f) n += arrowSize(t->f);
  if (t->g) n += arrowSize(t->g);
  return n;
}

std::vector<ArrowPtr> arrowChildren(const ArrowPtr& t) {
  std::vector<ArrowPtr> out;
  if (t->f) out.push_back(t->f);
  if (t->g) out.push_back(t->g);
  return out;
}

ArrowPtr withChildren(const ArrowPtr& t, const std::vector<ArrowPtr>& ch) {
  auto p = std::make_shared<Arrow>(*t);
  size_t i = 0;
  if (p->f) p->f = ch.at(i++);
  if (p->g) p->g = ch.at(i++);
  if (i != ch.size()) throw TypeError("child count mismatch");
  return p;
}

FormulaPtr Typechecker::norm(const FormulaPtr& f) {
  return mode_ == TypeMode::FormSet ? canonFormSet(f) : f;
}

bool Typechecker::sameObject(const FormulaPtr& a, const FormulaPtr& b) {
  return equal(a, b);  // both sides already normalized
}

void Typechecker::requireLegal(const FormulaPtr& f, const char* what) {
  if (!inLanguage(f, system_))
    throw SystemViolation(std::string(what) + " " + printFormula(f) +
                          " is not in the language of " + systemName(system_));
}

SequentType Typechecker::type(const ArrowPtr& t) {
  auto it = memo_.find(t.get());
  if (it != memo_.end()) return it->second;
  SequentType ty = compute(t);
  memo_.emplace(t.get(), ty);
  return ty;
}

SequentType Typechecker::compute(const ArrowPtr& t) {
  switch (t->tag) {
    case ATag::Id: {
      requireLegal(t->a, "index");
      FormulaPtr a = norm(t->a);
      return {a, a};
    }
    case ATag::BHat:
    case ATag::BCheck: {
      requireLegal(t->a, "index");
      requireLegal(t->b, "index");
      requireLegal(t->c, "index");
      BinOp op = t->tag == ATag::BHat ? BinOp::And : BinOp::Or;
      FormulaPtr nest = mkBin(op, t->a, mkBin(op, t->b, t->c));
      FormulaPtr flat = mkBin(op, mkBin(op, t->a, t->b), t->c);
      return t->fwd ? SequentType{norm(nest), norm(flat)}
                    : SequentType{norm(flat), norm(nest)};
    }
    case ATag::CHat: {
      requireLegal(t->a, "index");
      requireLegal(t->b, "index");
      return {norm(mkAnd(t->a, t->b)), norm(mkAnd(t->b, t->a))};
    }
    case ATag::CCheck: {
      requireLegal(t->a, "index");
      requireLegal(t->b, "index");
      return {norm(mkOr(t->b, t->a)), norm(mkOr(t->a, t->b))};
    }
    case ATag::D: {
      requireLegal(t->a, "index");
      requireLegal(t->b, "index");
      requireLegal(t->c, "index");
      return {norm(mkAnd(t->a, mkOr(t->b, t->c))), norm(mkOr(mkAnd(t->a, t->b), t->c))};
    }
    case ATag::IotaAll:
      requireLegal(t->a, "index");
      return {norm(mkForall(t->x, t->a)), norm(t->a)};
    case ATag::IotaEx:
      requireLegal(t->a, "index");
      return {norm(t->a), norm(mkExists(t->x, t->a))};
    case ATag::GammaAll:
      requireLegal(t->a, "index");
      if (isFreeIn(t->x, t->a))
        throw ProvisoViolation("gamma-all: " + t->x.name + " is free in " +
                               printFormula(t->a));
      return {norm(t->a), norm(mkForall(t->x, t->a))};
    case ATag::GammaEx:
      requireLegal(t->a, "index");
      if (isFreeIn(t->x, t->a))
        throw ProvisoViolation("gamma-ex: " + t->x.name + " is free in " +
                               printFormula(t->a));
      return {norm(mkExists(t->x, t->a)), norm(t->a)};
    case ATag::ThetaAllR: {
      requireLegal(t->a, "index");
      requireLegal(t->b, "index");
      if (isFreeIn(t->x, t->b))
        throw ProvisoViolation("theta-all: " + t->x.name + " is free in " +
                               printFormula(t->b));
      return {norm(mkForall(t->x, mkOr(t->a, t->b))),
              norm(mkOr(mkForall(t->x, t->a), t->b))};
    }
    case ATag::ThetaExL: {
      requireLegal(t->a, "index");
      requireLegal(t->b, "index");
      if (isFreeIn(t->x, t->b))
        throw ProvisoViolation("theta-ex: " + t->x.name + " is free in " +
                               printFormula(t->b));
      return {norm(mkAnd(mkExists(t->x, t->a), t->b)),
              norm(mkExists(t->x, mkAnd(t->a, t->b)))};
    }
    case ATag::DeltaAll: {
      if (!hasDeltaSigma(system_))
        throw SystemViolation("delta-all is not a primitive of " + systemName(system_));
      if (atomicCrownOnly(system_) && t->a->tag != Formula::Tag::Atom)
        throw SystemViolation("delta-all crown must be atomic in " + systemName(system_));
      requireLegal(t->a, "crown");
      requireLegal(t->b, "stem");
      FormulaPtr crown =
          quantClosure(Quantifier::All, freeVarSequence(t->a), mkOr(mkNeg(t->a), t->a));
      return {norm(t->b), norm(mkAnd(t->b, crown))};
    }
    case ATag::SigmaEx: {
      if (!hasDeltaSigma(system_))
        throw SystemViolation("sigma-ex is not a primitive of " + systemName(system_));
      if (atomicCrownOnly(system_) && t->a->tag != Formula::Tag::Atom)
        throw SystemViolation("sigma-ex crown must be atomic in " + systemName(system_));
      requireLegal(t->a, "crown");
      requireLegal(t->b, "stem");
      FormulaPtr crown =
          quantClosure(Quantifier::Ex, freeVarSequence(t->a), mkAnd(t->a, mkNeg(t->a)));
      return {norm(mkOr(crown, t->b)), norm(t->b)};
    }
    case ATag::Mix:
      if (!hasMix(system_))
        throw SystemViolation("mix is not a primitive of " + systemName(system_));
      requireLegal(t->a, "index");
      requireLegal(t->b, "index");
      return {norm(mkAnd(t->a, t->b)), norm(mkOr(t->a, t->b))};
    case ATag::Comp: {
      SequentType tf = type(t->f);
      SequentType tg = type(t->g);
      if (!sameObject(tf.tgt, tg.src))
        throw TypeError("composition mismatch: " + printFormula(tf.tgt) + " vs " +
                        printFormula(tg.src));
      return {tf.src, tg.tgt};
    }
    case ATag::Tensor: {
      SequentType t1 = type(t->f);
      SequentType t2 = type(t->g);
      return {norm(mkBin(t->op, t1.src, t2.src)), norm(mkBin(t->op, t1.tgt, t2.tgt))};
    }
    case ATag::Quant: {
      SequentType tf = type(t->f);
      return {norm(mkQuant(t->q, t->x, tf.src)), norm(mkQuant(t->q, t->x, tf.tgt))};
    }
    case ATag::Ren: {
      SequentType tf = type(t->f);
      FormulaPtr s = subst(tf.src, t->x, t->y);
      FormulaPtr g = subst(tf.tgt, t->x, t->y);
      if (!s || !g)
        throw UndefinedSubstitution("renaming [" + t->x.name + ":=" + t->y.name +
                                    "] undefined on " + printSequent(tf));
      return {norm(s), norm(g)};
    }
    case ATag::Meta:
      throw TypeError("uninstantiated schema slot ?" + t->meta);
  }
  throw TypeError("unknown arrow node");
}

SequentType typecheck(const ArrowPtr& t, SystemId system) {
  Typechecker tc(system, TypeMode::Formula);
  return tc.type(t);
}

SequentType typecheckFS(const ArrowPtr& t, SystemId system) {
  Typechecker tc(system, TypeMode::FormSet);
  return tc.type(t);
}

bool typechecks(const ArrowPtr& t, SystemId system) {
  try {
    typecheck(t, system);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace lpk
