#include "lpk/schema.hpp"

#include <algorithm>

#include "lpk/derived.hpp"

namespace lpk {

FormulaPtr patF(const std::string& slot) { return mkMetaFormula(slot); }
Var patV(const std::string& slot) { return Var{"?" + slot}; }
ArrowPtr patA(const std::string& slot) { return aMeta(slot); }
bool isPatternVar(const Var& v) { return !v.name.empty() && v.name[0] == '?'; }

namespace {

Var resolveVar(const Var& v, const Binding& b) {
  if (!isPatternVar(v)) return v;
  auto it = b.vars.find(v.name.substr(1));
  if (it == b.vars.end()) throw TypeError("unbound variable slot " + v.name);
  return it->second;
}

}  // namespace

FormulaPtr instantiateFormula(const FormulaPtr& p, const Binding& b) {
  switch (p->tag) {
    case Formula::Tag::Meta: {
      auto it = b.formulas.find(p->pred);
      if (it == b.formulas.end()) throw TypeError("unbound formula slot ?" + p->pred);
      return it->second;
    }
    case Formula::Tag::Atom: {
      std::vector<Var> args;
      for (const auto& v : p->args) args.push_back(resolveVar(v, b));
      return mkAtom(p->pred, std::move(args));
    }
    case Formula::Tag::Neg:
      return mkNeg(instantiateFormula(p->left, b));
    case Formula::Tag::Bin:
      return mkBin(p->op, instantiateFormula(p->left, b), instantiateFormula(p->right, b));
    case Formula::Tag::Quant:
      return mkQuant(p->q, resolveVar(p->var, b), instantiateFormula(p->left, b));
  }
  return p;
}

ArrowPtr instantiateArrow(const ArrowPtr& p, const Binding& b) {
  if (p->tag == ATag::Meta) {
    auto it = b.arrows.find(p->meta);
    if (it == b.arrows.end()) throw TypeError("unbound arrow slot ?" + p->meta);
    return it->second;
  }
  auto n = std::make_shared<Arrow>(*p);
  if (n->a) n->a = instantiateFormula(n->a, b);
  if (n->b) n->b = instantiateFormula(n->b, b);
  if (n->c) n->c = instantiateFormula(n->c, b);
  n->x = resolveVar(n->x, b);
  n->y = resolveVar(n->y, b);
  if (n->f) n->f = instantiateArrow(n->f, b);
  if (n->g) n->g = instantiateArrow(n->g, b);
  return n;
}

namespace {

bool bindVar(const Var& term, const Var& pat, Binding& b) {
  if (!isPatternVar(pat)) return term == pat;
  auto [it, fresh] = b.vars.emplace(pat.name.substr(1), term);
  return fresh || it->second == term;
}

}  // namespace

bool matchFormula(const FormulaPtr& term, const FormulaPtr& pat, Binding& b) {
  if (pat->tag == Formula::Tag::Meta) {
    auto [it, fresh] = b.formulas.emplace(pat->pred, term);
    return fresh || equal(it->second, term);
  }
  if (term->tag != pat->tag) return false;
  switch (pat->tag) {
    case Formula::Tag::Atom: {
      if (term->pred != pat->pred || term->args.size() != pat->args.size()) return false;
      for (size_t i = 0; i < pat->args.size(); ++i)
        if (!bindVar(term->args[i], pat->args[i], b)) return false;
      return true;
    }
    case Formula::Tag::Neg:
      return matchFormula(term->left, pat->left, b);
    case Formula::Tag::Bin:
      return term->op == pat->op && matchFormula(term->left, pat->left, b) &&
             matchFormula(term->right, pat->right, b);
    case Formula::Tag::Quant:
      return term->q == pat->q && bindVar(term->var, pat->var, b) &&
             matchFormula(term->left, pat->left, b);
    default:
      return false;
  }
}

bool matchArrow(const ArrowPtr& term, const ArrowPtr& pat, Binding& b) {
  if (pat->tag == ATag::Meta) {
    auto [it, fresh] = b.arrows.emplace(pat->meta, term);
    return fresh || arrowEqual(it->second, term);
  }
  if (term->tag != pat->tag || term->fwd != pat->fwd || term->op != pat->op ||
      term->q != pat->q)
    return false;
  if ((term->a == nullptr) != (pat->a == nullptr) ||
      (term->b == nullptr) != (pat->b == nullptr) ||
      (term->c == nullptr) != (pat->c == nullptr) ||
      (term->f == nullptr) != (pat->f == nullptr) ||
      (term->g == nullptr) != (pat->g == nullptr))
    return false;
  if (pat->a && !matchFormula(term->a, pat->a, b)) return false;
  if (pat->b && !matchFormula(term->b, pat->b, b)) return false;
  if (pat->c && !matchFormula(term->c, pat->c, b)) return false;
  if (!bindVar(term->x, pat->x, b)) return false;
  if (!bindVar(term->y, pat->y, b)) return false;
  if (pat->f && !matchArrow(term->f, pat->f, b)) return false;
  if (pat->g && !matchArrow(term->g, pat->g, b)) return false;
  return true;
}

ArrowPtr AxiomSchema::lhs(const Binding& b, SystemId s) const {
  return lhsBuild ? lhsBuild(b, s) : instantiateArrow(lhsPat, b);
}

ArrowPtr AxiomSchema::rhs(const Binding& b, SystemId s) const {
  return rhsBuild ? rhsBuild(b, s) : instantiateArrow(rhsPat, b);
}

bool AxiomSchema::ok(Binding& b, SystemId s) const {
  try {
    if (complete && !complete(b, s)) return false;
    if (proviso && !proviso(b, s)) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::optional<SchemaInstance> sampleInstance(const AxiomSchema& schema, SystemId system,
                                             TermGen& gen, int maxAttempts) {
  for (int i = 0; i < maxAttempts; ++i) {
    Binding b;
    try {
      if (schema.sample && !schema.sample(b, gen)) continue;
      if (!schema.ok(b, system)) continue;
      ArrowPtr l = schema.lhs(b, system);
      ArrowPtr r = schema.rhs(b, system);
      SequentType tl = typecheck(l, system);
      SequentType tr = typecheck(r, system);
      if (!sequentEqual(tl, tr)) continue;
      return SchemaInstance{std::move(b), l, r};
    } catch (const std::exception&) {
      continue;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The table.

namespace {

const FormulaPtr A = patF("A"), B = patF("B"), C = patF("C"), D = patF("D"),
                 E = patF("E"), F = patF("F"), K = patF("K");
const Var X = patV("x"), Y = patV("y"), Z = patV("z"), V = patV("v");
const ArrowPtr mf = patA("f"), mg = patA("g"), mh = patA("h");
const ArrowPtr f1 = patA("f1"), f2 = patA("f2"), g1 = patA("g1"), g2 = patA("g2");

bool anySystem(SystemId) { return true; }
bool mixSystems(SystemId s) { return hasMix(s); }
bool pnSystems(SystemId s) { return hasDeltaSigma(s); }
bool pnNegSystems(SystemId s) { return negGrammar(s) == NegGrammar::Full; }

FormulaPtr crownAllOf(const FormulaPtr& b) {
  return quantClosure(Quantifier::All, freeVarSequence(b), mkOr(mkNeg(b), b));
}
FormulaPtr crownExOf(const FormulaPtr& b) {
  return quantClosure(Quantifier::Ex, freeVarSequence(b), mkAnd(b, mkNeg(b)));
}

// --- samplers ---------------------------------------------------------------

int small(TermGen& g, int n) { return 1 + (int)(g.rng()() % (uint64_t)n); }

FormulaPtr fAvoiding(TermGen& g, const std::vector<Var>& avoid, int maxSize = 4) {
  for (int i = 0; i < 24; ++i) {
    FormulaPtr f = g.formula(small(g, maxSize));
    bool ok = true;
    for (const auto& v : avoid)
      if (isFreeIn(v, f)) ok = false;
    if (ok) return f;
  }
  return mkAtom("Q");
}

bool sampleFormulas(Binding& b, TermGen& g, std::initializer_list<const char*> slots,
                    int maxSize = 4) {
  for (const char* s : slots) b.formulas[s] = g.formula(small(g, maxSize));
  return true;
}

bool sampleVarsDistinct(Binding& b, TermGen& g, std::initializer_list<const char*> slots) {
  static const char* pool[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<int> perm = {0, 1, 2, 3, 4, 5};
  for (int i = 5; i > 0; --i) std::swap(perm[i], perm[(int)(g.rng()() % (uint64_t)(i + 1))]);
  int k = 0;
  for (const char* s : slots) b.vars[s] = Var{pool[perm[k++]]};
  return true;
}

bool sampleArrow(Binding& b, TermGen& g, const char* slot, int budget = 4) {
  b.arrows[slot] = g.arrow(small(g, budget));
  return true;
}

bool endpoints(Binding& b, SystemId s, const char* arrowSlot, const char* srcSlot,
               const char* tgtSlot) {
  auto it = b.arrows.find(arrowSlot);
  if (it == b.arrows.end()) return false;
  SequentType ty = typecheck(it->second, s);
  auto put = [&](const char* slot, const FormulaPtr& f) {
    if (!slot) return true;
    auto [jt, fresh] = b.formulas.emplace(slot, f);
    return fresh || equal(jt->second, f);
  };
  return put(srcSlot, ty.src) && put(tgtSlot, ty.tgt);
}

bool sampleArrowFromTgt(Binding& b, TermGen& g, const char* slot, const char* after,
                        int budget = 3) {
  SequentType ty = typecheck(b.arrows.at(after), g.system());
  b.arrows[slot] = g.arrowFrom(ty.tgt, small(g, budget));
  return true;
}

AxiomSchema mk(std::string name, bool derived, std::function<bool(SystemId)> applies) {
  AxiomSchema s;
  s.name = std::move(name);
  s.derived = derived;
  s.applies = std::move(applies);
  return s;
}

ArrowPtr tens(BinOp op, ArrowPtr a, ArrowPtr b) {
  return aTensor(op, std::move(a), std::move(b));
}
ArrowPtr idF(FormulaPtr a) { return aId(std::move(a)); }

void addCategorial(std::vector<AxiomSchema>& out) {
  {
    auto s = mk("(cat 1) right", false, anySystem);
    s.lhsPat = aComp(mf, aId(A));
    s.rhsPat = mf;
    s.sample = [](Binding& b, TermGen& g) { return sampleArrow(b, g, "f"); };
    s.complete = [](Binding& b, SystemId sys) { return endpoints(b, sys, "f", "A", nullptr); };
    out.push_back(s);
  }
  {
    auto s = mk("(cat 1) left", false, anySystem);
    s.lhsPat = aComp(aId(B), mf);
    s.rhsPat = mf;
    s.sample = [](Binding& b, TermGen& g) { return sampleArrow(b, g, "f"); };
    s.complete = [](Binding& b, SystemId sys) { return endpoints(b, sys, "f", nullptr, "B"); };
    out.push_back(s);
  }
  {
    auto s = mk("(cat 2)", false, anySystem);
    s.lhsPat = aComp(mh, aComp(mg, mf));
    s.rhsPat = aComp(aComp(mh, mg), mf);
    s.sample = [](Binding& b, TermGen& g) {
      sampleArrow(b, g, "f");
      sampleArrowFromTgt(b, g, "g", "f");
      return sampleArrowFromTgt(b, g, "h", "g");
    };
    out.push_back(s);
  }
}

void addDS(std::vector<AxiomSchema>& out) {
  for (BinOp op : {BinOp::And, BinOp::Or}) {
    std::string o = op == BinOp::And ? "\u2227" : "\u2228";
    {
      auto s = mk("(" + o + " 1)", false, anySystem);
      s.lhsPat = tens(op, aId(A), aId(B));
      s.rhsPat = aId(mkBin(op, A, B));
      s.sample = [](Binding& b, TermGen& g) { return sampleFormulas(b, g, {"A", "B"}); };
      out.push_back(s);
    }
    {
      auto s = mk("(" + o + " 2)", false, anySystem);
      s.lhsPat = tens(op, aComp(g1, f1), aComp(g2, f2));
      s.rhsPat = aComp(tens(op, g1, g2), tens(op, f1, f2));
      s.sample = [](Binding& b, TermGen& g) {
        sampleArrow(b, g, "f1");
        sampleArrow(b, g, "f2");
        return sampleArrowFromTgt(b, g, "g1", "f1") &&
               sampleArrowFromTgt(b, g, "g2", "f2");
      };
      out.push_back(s);
    }
  }
  auto sampleFGH = [](Binding& b, TermGen& g) {
    sampleArrow(b, g, "f", 3);
    sampleArrow(b, g, "g", 3);
    return sampleArrow(b, g, "h", 3);
  };
  auto endpointsFGH = [](Binding& b, SystemId s) {
    return endpoints(b, s, "f", "A", "D") && endpoints(b, s, "g", "B", "E") &&
           endpoints(b, s, "h", "C", "F");
  };
  {
    auto s = mk("(b\u0302\u2192 nat)", false, anySystem);
    s.lhsPat = aComp(tens(BinOp::And, tens(BinOp::And, mf, mg), mh), aBHat(true, A, B, C));
    s.rhsPat = aComp(aBHat(true, D, E, F), tens(BinOp::And, mf, tens(BinOp::And, mg, mh)));
    s.sample = sampleFGH;
    s.complete = endpointsFGH;
    out.push_back(s);
  }
  {
    auto s = mk("(b\u030C\u2192 nat)", false, anySystem);
    s.lhsPat = aComp(tens(BinOp::Or, tens(BinOp::Or, mf, mg), mh), aBCheck(true, A, B, C));
    s.rhsPat = aComp(aBCheck(true, D, E, F), tens(BinOp::Or, mf, tens(BinOp::Or, mg, mh)));
    s.sample = sampleFGH;
    s.complete = endpointsFGH;
    out.push_back(s);
  }
  auto sampleFG = [](Binding& b, TermGen& g) {
    sampleArrow(b, g, "f", 3);
    return sampleArrow(b, g, "g", 3);
  };
  auto endpointsFG = [](Binding& b, SystemId s) {
    return endpoints(b, s, "f", "A", "D") && endpoints(b, s, "g", "B", "E");
  };
  {
    auto s = mk("(c\u0302 nat)", false, anySystem);
    s.lhsPat = aComp(tens(BinOp::And, mg, mf), aCHat(A, B));
    s.rhsPat = aComp(aCHat(D, E), tens(BinOp::And, mf, mg));
    s.sample = sampleFG;
    s.complete = endpointsFG;
    out.push_back(s);
  }
  {
    auto s = mk("(c\u030C nat)", false, anySystem);
    s.lhsPat = aComp(tens(BinOp::Or, mg, mf), aCCheck(B, A));
    s.rhsPat = aComp(aCCheck(E, D), tens(BinOp::Or, mf, mg));
    s.sample = sampleFG;
    s.complete = endpointsFG;
    out.push_back(s);
  }
  {
    auto s = mk("(d nat)", false, anySystem);
    s.lhsPat = aComp(tens(BinOp::Or, tens(BinOp::And, mf, mg), mh), aD(A, B, C));
    s.rhsPat = aComp(aD(D, E, F), tens(BinOp::And, mf, tens(BinOp::Or, mg, mh)));
    s.sample = sampleFGH;
    s.complete = endpointsFGH;
    out.push_back(s);
  }
  auto s3 = [](Binding& b, TermGen& g) { return sampleFormulas(b, g, {"A", "B", "C"}); };
  auto s4 = [](Binding& b, TermGen& g) {
    return sampleFormulas(b, g, {"A", "B", "C", "D"}, 3);
  };
  {
    auto s = mk("(b\u0302b\u0302) a", false, anySystem);
    s.lhsPat = aComp(aBHat(true, A, B, C), aBHat(false, A, B, C));
    s.rhsPat = aId(mkAnd(mkAnd(A, B), C));
    s.sample = s3;
    out.push_back(s);
    auto t = mk("(b\u0302b\u0302) b", false, anySystem);
    t.lhsPat = aComp(aBHat(false, A, B, C), aBHat(true, A, B, C));
    t.rhsPat = aId(mkAnd(A, mkAnd(B, C)));
    t.sample = s3;
    out.push_back(t);
  }
  {
    auto s = mk("(b\u030Cb\u030C) a", false, anySystem);
    s.lhsPat = aComp(aBCheck(true, A, B, C), aBCheck(false, A, B, C));
    s.rhsPat = aId(mkOr(mkOr(A, B), C));
    s.sample = s3;
    out.push_back(s);
    auto t = mk("(b\u030Cb\u030C) b", false, anySystem);
    t.lhsPat = aComp(aBCheck(false, A, B, C), aBCheck(true, A, B, C));
    t.rhsPat = aId(mkOr(A, mkOr(B, C)));
    t.sample = s3;
    out.push_back(t);
  }
  {
    auto s = mk("(b\u0302 5)", false, anySystem);
    s.lhsPat = aComp(aBHat(false, A, B, mkAnd(C, D)), aBHat(false, mkAnd(A, B), C, D));
    s.rhsPat = aCompChain({tens(BinOp::And, aBHat(false, A, B, C), idF(D)),
                           aBHat(false, A, mkAnd(B, C), D),
                           tens(BinOp::And, idF(A), aBHat(false, B, C, D))});
    s.sample = s4;
    out.push_back(s);
  }
  {
    auto s = mk("(b\u030C 5)", false, anySystem);
    s.lhsPat = aComp(aBCheck(false, A, B, mkOr(C, D)), aBCheck(false, mkOr(A, B), C, D));
    s.rhsPat = aCompChain({tens(BinOp::Or, aBCheck(false, A, B, C), idF(D)),
                           aBCheck(false, A, mkOr(B, C), D),
                           tens(BinOp::Or, idF(A), aBCheck(false, B, C, D))});
    s.sample = s4;
    out.push_back(s);
  }
  {
    auto s = mk("(c\u0302c\u0302)", false, anySystem);
    s.lhsPat = aComp(aCHat(B, A), aCHat(A, B));
    s.rhsPat = aId(mkAnd(A, B));
    s.sample = [](Binding& b, TermGen& g) { return sampleFormulas(b, g, {"A", "B"}); };
    out.push_back(s);
  }
  {
    auto s = mk("(c\u030Cc\u030C)", false, anySystem);
    s.lhsPat = aComp(aCCheck(A, B), aCCheck(B, A));
    s.rhsPat = aId(mkOr(A, B));
    s.sample = [](Binding& b, TermGen& g) { return sampleFormulas(b, g, {"A", "B"}); };
    out.push_back(s);
  }
  {
    auto s = mk("(b\u0302c\u0302)", false, anySystem);
    s.lhsPat = aCompChain({tens(BinOp::And, aCHat(B, A), idF(C)), aBHat(false, A, B, C),
                           aCHat(A, mkAnd(B, C)), aBHat(false, B, C, A),
                           tens(BinOp::And, idF(B), aCHat(C, A))});
    s.rhsPat = aBHat(false, B, A, C);
    s.sample = s3;
    out.push_back(s);
  }
  {
    auto s = mk("(b\u030Cc\u030C)", false, anySystem);
    s.lhsPat = aCompChain({tens(BinOp::Or, aCCheck(A, B), idF(C)), aBCheck(false, A, B, C),
                           aCCheck(mkOr(B, C), A), aBCheck(false, B, C, A),
                           tens(BinOp::Or, idF(B), aCCheck(A, C))});
    s.rhsPat = aBCheck(false, B, A, C);
    s.sample = s3;
    out.push_back(s);
  }
  {
    auto s = mk("(d\u2227)", false, anySystem);
    s.lhsPat = aComp(tens(BinOp::Or, aBHat(false, A, B, C), idF(D)), aD(mkAnd(A, B), C, D));
    s.rhsPat = aCompChain({aBHat(false, A, B, mkOr(C, D)),
                           tens(BinOp::And, idF(A), aD(B, C, D)), aD(A, mkAnd(B, C), D)});
    s.sample = s4;
    out.push_back(s);
  }
  {
    auto s = mk("(d\u2228)", false, anySystem);
    s.lhsPat = aComp(aD(D, C, mkOr(B, A)), tens(BinOp::And, idF(D), aBCheck(false, C, B, A)));
    s.rhsPat = aCompChain({aD(D, mkOr(C, B), A), tens(BinOp::Or, aD(D, C, B), idF(A)),
                           aBCheck(false, mkAnd(D, C), B, A)});
    s.sample = s4;
    out.push_back(s);
  }
  {
    auto s = mk("(db\u0302)", false, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      auto A_ = b.formulas.at("A"), B_ = b.formulas.at("B"), C_ = b.formulas.at("C"),
           D_ = b.formulas.at("D");
      return aComp(deriveDR(mkAnd(A_, B_), C_, D_),
                   tens(BinOp::And, aD(A_, B_, C_), idF(D_)));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      auto A_ = b.formulas.at("A"), B_ = b.formulas.at("B"), C_ = b.formulas.at("C"),
           D_ = b.formulas.at("D");
      return aCompChain({aBHat(false, A_, mkOr(B_, C_), D_),
                         tens(BinOp::And, idF(A_), deriveDR(B_, C_, D_)),
                         aD(A_, B_, mkAnd(C_, D_))});
    };
    s.sample = s4;
    out.push_back(s);
  }
  {
    auto s = mk("(db\u030C)", false, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      auto A_ = b.formulas.at("A"), B_ = b.formulas.at("B"), C_ = b.formulas.at("C"),
           D_ = b.formulas.at("D");
      return aComp(tens(BinOp::Or, idF(D_), aD(C_, B_, A_)),
                   deriveDR(D_, C_, mkOr(B_, A_)));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      auto A_ = b.formulas.at("A"), B_ = b.formulas.at("B"), C_ = b.formulas.at("C"),
           D_ = b.formulas.at("D");
      return aCompChain({aD(mkOr(D_, C_), B_, A_),
                         tens(BinOp::Or, deriveDR(D_, C_, B_), idF(A_)),
                         aBCheck(false, D_, mkAnd(C_, B_), A_)});
    };
    s.sample = s4;
    out.push_back(s);
  }
}

void addQuantificational(std::vector<AxiomSchema>& out) {
  for (Quantifier q : {Quantifier::All, Quantifier::Ex}) {
    std::string o = q == Quantifier::All ? "\u2200" : "\u2203";
    {
      auto s = mk("(" + o + " 1)", false, anySystem);
      s.lhsPat = aQuant(q, X, aId(A));
      s.rhsPat = aId(mkQuant(q, X, A));
      s.sample = [](Binding& b, TermGen& g) {
        sampleVarsDistinct(b, g, {"x"});
        return sampleFormulas(b, g, {"A"});
      };
      out.push_back(s);
    }
    {
      auto s = mk("(" + o + " 2)", false, anySystem);
      s.lhsPat = aQuant(q, X, aComp(mg, mf));
      s.rhsPat = aComp(aQuant(q, X, mg), aQuant(q, X, mf));
      s.sample = [](Binding& b, TermGen& g) {
        sampleVarsDistinct(b, g, {"x"});
        sampleArrow(b, g, "f");
        return sampleArrowFromTgt(b, g, "g", "f");
      };
      out.push_back(s);
    }
  }
  auto sampleXF = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    return sampleArrow(b, g, "f");
  };
  auto endpointsF = [](Binding& b, SystemId s) { return endpoints(b, s, "f", "A", "B"); };
  {
    auto s = mk("(\u2200\u03B9 nat)", false, anySystem);
    s.lhsPat = aComp(mf, aIota(Quantifier::All, X, A));
    s.rhsPat = aComp(aIota(Quantifier::All, X, B), aQuant(Quantifier::All, X, mf));
    s.sample = sampleXF;
    s.complete = endpointsF;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B9 nat)", false, anySystem);
    s.lhsPat = aComp(aQuant(Quantifier::Ex, X, mf), aIota(Quantifier::Ex, X, A));
    s.rhsPat = aComp(aIota(Quantifier::Ex, X, B), mf);
    s.sample = sampleXF;
    s.complete = endpointsF;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2200\u03B3 nat)", false, anySystem);
    s.lhsPat = aComp(aQuant(Quantifier::All, X, mf), aGamma(Quantifier::All, X, A));
    s.rhsPat = aComp(aGamma(Quantifier::All, X, B), mf);
    s.sample = sampleXF;
    s.complete = endpointsF;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B3 nat)", false, anySystem);
    s.lhsPat = aComp(mf, aGamma(Quantifier::Ex, X, A));
    s.rhsPat = aComp(aGamma(Quantifier::Ex, X, B), aQuant(Quantifier::Ex, X, mf));
    s.sample = sampleXF;
    s.complete = endpointsF;
    out.push_back(s);
  }
  auto sampleXA = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    b.formulas["A"] = fAvoiding(g, {b.vars["x"]});
    return true;
  };
  {
    auto s = mk("(\u2200\u03B2)", false, anySystem);
    s.lhsPat = aComp(aIota(Quantifier::All, X, A), aGamma(Quantifier::All, X, A));
    s.rhsPat = aId(A);
    s.sample = sampleXA;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B2)", false, anySystem);
    s.lhsPat = aComp(aGamma(Quantifier::Ex, X, A), aIota(Quantifier::Ex, X, A));
    s.rhsPat = aId(A);
    s.sample = sampleXA;
    out.push_back(s);
  }
  auto sampleXAany = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    return sampleFormulas(b, g, {"A"});
  };
  {
    auto s = mk("(\u2200\u03B7)", false, anySystem);
    s.lhsPat = aComp(aQuant(Quantifier::All, X, aIota(Quantifier::All, X, A)),
                     aGamma(Quantifier::All, X, mkForall(X, A)));
    s.rhsPat = aId(mkForall(X, A));
    s.sample = sampleXAany;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B7)", false, anySystem);
    s.lhsPat = aComp(aGamma(Quantifier::Ex, X, mkExists(X, A)),
                     aQuant(Quantifier::Ex, X, aIota(Quantifier::Ex, X, A)));
    s.rhsPat = aId(mkExists(X, A));
    s.sample = sampleXAany;
    out.push_back(s);
  }
  auto sampleXAD = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    b.formulas["A"] = g.formula(small(g, 4));
    b.formulas["D"] = fAvoiding(g, {b.vars["x"]});
    return true;
  };
  {
    auto s = mk("(\u2200\u03B8\u03B8) a", false, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aComp(deriveTheta(ThetaVariant::AllOr, b.vars.at("x"), b.formulas.at("A"),
                               b.formulas.at("D")),
                   aThetaAllR(b.vars.at("x"), b.formulas.at("A"), b.formulas.at("D")));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aId(mkForall(b.vars.at("x"), mkOr(b.formulas.at("A"), b.formulas.at("D"))));
    };
    s.sample = sampleXAD;
    out.push_back(s);
    auto t = mk("(\u2200\u03B8\u03B8) b", false, anySystem);
    t.lhsBuild = [](const Binding& b, SystemId) {
      return aComp(aThetaAllR(b.vars.at("x"), b.formulas.at("A"), b.formulas.at("D")),
                   deriveTheta(ThetaVariant::AllOr, b.vars.at("x"), b.formulas.at("A"),
                               b.formulas.at("D")));
    };
    t.rhsBuild = [](const Binding& b, SystemId) {
      return aId(mkOr(mkForall(b.vars.at("x"), b.formulas.at("A")), b.formulas.at("D")));
    };
    t.sample = sampleXAD;
    out.push_back(t);
  }
  {
    auto s = mk("(\u2203\u03B8\u03B8) a", false, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aComp(deriveTheta(ThetaVariant::ExAnd, b.vars.at("x"), b.formulas.at("A"),
                               b.formulas.at("D")),
                   aThetaExL(b.vars.at("x"), b.formulas.at("A"), b.formulas.at("D")));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aId(mkAnd(mkExists(b.vars.at("x"), b.formulas.at("A")), b.formulas.at("D")));
    };
    s.sample = sampleXAD;
    out.push_back(s);
    auto t = mk("(\u2203\u03B8\u03B8) b", false, anySystem);
    t.lhsBuild = [](const Binding& b, SystemId) {
      return aComp(aThetaExL(b.vars.at("x"), b.formulas.at("A"), b.formulas.at("D")),
                   deriveTheta(ThetaVariant::ExAnd, b.vars.at("x"), b.formulas.at("A"),
                               b.formulas.at("D")));
    };
    t.rhsBuild = [](const Binding& b, SystemId) {
      return aId(mkExists(b.vars.at("x"), mkAnd(b.formulas.at("A"), b.formulas.at("D"))));
    };
    t.sample = sampleXAD;
    out.push_back(t);
  }
}

void addRenaming(std::vector<AxiomSchema>& out) {
  auto substOrThrow = [](const FormulaPtr& f, const Binding& b) {
    FormulaPtr r = subst(f, b.vars.at("x"), b.vars.at("y"));
    if (!r) throw UndefinedSubstitution("ren alpha");
    return r;
  };
  auto sampleABC = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x", "y"});
    return sampleFormulas(b, g, {"A", "B", "C"});
  };
  auto sampleZABC = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x", "y", "z"});
    return sampleFormulas(b, g, {"A", "B", "C"});
  };
  struct AlphaCase {
    const char* suffix;
    std::function<ArrowPtr(const Binding&)> prim;
    std::function<ArrowPtr(const Binding&)> substed;
    std::function<bool(Binding&, TermGen&)> sample;
    std::function<bool(SystemId)> applies;
  };
  std::vector<AlphaCase> cases;
  cases.push_back({"1",
                   [](const Binding& b) { return aId(b.formulas.at("A")); },
                   [substOrThrow](const Binding& b) {
                     return aId(substOrThrow(b.formulas.at("A"), b));
                   },
                   sampleABC, anySystem});
  for (bool fwd : {true, false}) {
    cases.push_back({fwd ? "b\u0302\u2192" : "b\u0302\u2190",
                     [fwd](const Binding& b) {
                       return aBHat(fwd, b.formulas.at("A"), b.formulas.at("B"),
                                    b.formulas.at("C"));
                     },
                     [substOrThrow, fwd](const Binding& b) {
                       return aBHat(fwd, substOrThrow(b.formulas.at("A"), b),
                                    substOrThrow(b.formulas.at("B"), b),
                                    substOrThrow(b.formulas.at("C"), b));
                     },
                     sampleABC, anySystem});
    cases.push_back({fwd ? "b\u030C\u2192" : "b\u030C\u2190",
                     [fwd](const Binding& b) {
                       return aBCheck(fwd, b.formulas.at("A"), b.formulas.at("B"),
                                      b.formulas.at("C"));
                     },
                     [substOrThrow, fwd](const Binding& b) {
                       return aBCheck(fwd, substOrThrow(b.formulas.at("A"), b),
                                      substOrThrow(b.formulas.at("B"), b),
                                      substOrThrow(b.formulas.at("C"), b));
                     },
                     sampleABC, anySystem});
  }
  cases.push_back({"c\u0302",
                   [](const Binding& b) {
                     return aCHat(b.formulas.at("A"), b.formulas.at("B"));
                   },
                   [substOrThrow](const Binding& b) {
                     return aCHat(substOrThrow(b.formulas.at("A"), b),
                                  substOrThrow(b.formulas.at("B"), b));
                   },
                   sampleABC, anySystem});
  cases.push_back({"c\u030C",
                   [](const Binding& b) {
                     return aCCheck(b.formulas.at("A"), b.formulas.at("B"));
                   },
                   [substOrThrow](const Binding& b) {
                     return aCCheck(substOrThrow(b.formulas.at("A"), b),
                                    substOrThrow(b.formulas.at("B"), b));
                   },
                   sampleABC, anySystem});
  cases.push_back({"d",
                   [](const Binding& b) {
                     return aD(b.formulas.at("A"), b.formulas.at("B"), b.formulas.at("C"));
                   },
                   [substOrThrow](const Binding& b) {
                     return aD(substOrThrow(b.formulas.at("A"), b),
                               substOrThrow(b.formulas.at("B"), b),
                               substOrThrow(b.formulas.at("C"), b));
                   },
                   sampleABC, anySystem});
  for (Quantifier q : {Quantifier::All, Quantifier::Ex}) {
    std::string iq = q == Quantifier::All ? "\u03B9\u2200" : "\u03B9\u2203";
    std::string gq = q == Quantifier::All ? "\u03B3\u2200" : "\u03B3\u2203";
    cases.push_back({iq == "\u03B9\u2200" ? "\u03B9\u2200" : "\u03B9\u2203",
                     [q](const Binding& b) {
                       return aIota(q, b.vars.at("z"), b.formulas.at("A"));
                     },
                     [substOrThrow, q](const Binding& b) {
                       return aIota(q, b.vars.at("z"), substOrThrow(b.formulas.at("A"), b));
                     },
                     sampleZABC, anySystem});
    cases.push_back({gq == "\u03B3\u2200" ? "\u03B3\u2200" : "\u03B3\u2203",
                     [q](const Binding& b) {
                       return aGamma(q, b.vars.at("z"), b.formulas.at("A"));
                     },
                     [substOrThrow, q](const Binding& b) {
                       return aGamma(q, b.vars.at("z"), substOrThrow(b.formulas.at("A"), b));
                     },
                     sampleZABC, anySystem});
  }
  cases.push_back({"\u03B8\u030C\u2200",
                   [](const Binding& b) {
                     return aThetaAllR(b.vars.at("z"), b.formulas.at("A"),
                                       b.formulas.at("B"));
                   },
                   [substOrThrow](const Binding& b) {
                     return aThetaAllR(b.vars.at("z"), substOrThrow(b.formulas.at("A"), b),
                                       substOrThrow(b.formulas.at("B"), b));
                   },
                   sampleZABC, anySystem});
  cases.push_back({"\u03B8\u0302\u2203",
                   [](const Binding& b) {
                     return aThetaExL(b.vars.at("z"), b.formulas.at("A"),
                                      b.formulas.at("B"));
                   },
                   [substOrThrow](const Binding& b) {
                     return aThetaExL(b.vars.at("z"), substOrThrow(b.formulas.at("A"), b),
                                      substOrThrow(b.formulas.at("B"), b));
                   },
                   sampleZABC, anySystem});
  cases.push_back({"m",
                   [](const Binding& b) {
                     return aMix(b.formulas.at("A"), b.formulas.at("B"));
                   },
                   [substOrThrow](const Binding& b) {
                     return aMix(substOrThrow(b.formulas.at("A"), b),
                                 substOrThrow(b.formulas.at("B"), b));
                   },
                   sampleABC, mixSystems});
  for (auto& c : cases) {
    auto s = mk(std::string("(ren \u03B1:") + c.suffix + ")", false, c.applies);
    auto prim = c.prim;
    auto sub = c.substed;
    s.lhsBuild = [prim](const Binding& b, SystemId) {
      return aRen(b.vars.at("x"), b.vars.at("y"), prim(b));
    };
    s.rhsBuild = [sub](const Binding& b, SystemId) { return sub(b); };
    s.sample = c.sample;
    out.push_back(s);
  }
  {
    auto s = mk("(ren \u2218)", false, anySystem);
    s.lhsPat = aRen(X, Y, aComp(mg, mf));
    s.rhsPat = aComp(aRen(X, Y, mg), aRen(X, Y, mf));
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y"});
      sampleArrow(b, g, "f");
      return sampleArrowFromTgt(b, g, "g", "f");
    };
    out.push_back(s);
  }
  for (BinOp op : {BinOp::And, BinOp::Or}) {
    std::string o = op == BinOp::And ? "\u2227" : "\u2228";
    auto s = mk("(ren " + o + ")", false, anySystem);
    s.lhsPat = aRen(X, Y, aTensor(op, f1, f2));
    s.rhsPat = aTensor(op, aRen(X, Y, f1), aRen(X, Y, f2));
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y"});
      sampleArrow(b, g, "f1");
      return sampleArrow(b, g, "f2");
    };
    out.push_back(s);
  }
  for (Quantifier q : {Quantifier::All, Quantifier::Ex}) {
    std::string o = q == Quantifier::All ? "\u2200" : "\u2203";
    auto s = mk("(ren " + o + ")", false, anySystem);
    s.lhsPat = aRen(X, Y, aQuant(q, Z, mf));
    s.rhsPat = aQuant(q, Z, aRen(X, Y, mf));
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y", "z"});
      return sampleArrow(b, g, "f");
    };
    s.proviso = [](const Binding& b, SystemId) {
      return b.vars.at("z") != b.vars.at("x") && b.vars.at("z") != b.vars.at("y");
    };
    out.push_back(s);
  }
  {
    auto s = mk("(ren 1)", false, anySystem);
    s.lhsPat = aRen(X, X, mf);
    s.rhsPat = mf;
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x"});
      return sampleArrow(b, g, "f");
    };
    out.push_back(s);
  }
  {
    auto s = mk("(ren 2)", false, anySystem);
    s.lhsPat = aRen(X, Y, mf);
    s.rhsPat = mf;
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y"});
      return sampleArrow(b, g, "f");
    };
    s.proviso = [](const Binding& b, SystemId s) {
      SequentType ty = typecheck(b.arrows.at("f"), s);
      return !isFreeIn(b.vars.at("x"), ty.src) && !isFreeIn(b.vars.at("x"), ty.tgt);
    };
    out.push_back(s);
  }
  {
    auto s = mk("(ren 3)", false, anySystem);
    s.lhsPat = aRen(X, Y, aRen(Z, V, mf));
    s.rhsPat = aRen(Z, V, aRen(X, Y, mf));
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y", "z", "v"});
      return sampleArrow(b, g, "f");
    };
    out.push_back(s);
  }
  {
    auto s = mk("(ren 4)", false, anySystem);
    s.lhsPat = aRen(X, Y, aRen(Z, Y, mf));
    s.rhsPat = aRen(Z, Y, aRen(X, Y, mf));
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y", "z"});
      return sampleArrow(b, g, "f");
    };
    out.push_back(s);
  }
  {
    auto s = mk("(ren 5)", false, anySystem);
    s.lhsPat = aRen(X, Y, aRen(Z, X, mf));
    s.rhsPat = aRen(X, Y, aRen(Z, Y, mf));
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y", "z"});
      return sampleArrow(b, g, "f");
    };
    out.push_back(s);
  }
  {
    auto s = mk("(ren 6)", false, anySystem);
    s.lhsPat = aRen(X, Y, aRen(Y, X, mf));
    s.rhsPat = aRen(X, Y, mf);
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x", "y"});
      return sampleArrow(b, g, "f");
    };
    out.push_back(s);
  }
}

void addDerivedQDS(std::vector<AxiomSchema>& out) {
  auto sampleXA = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    b.formulas["A"] = fAvoiding(g, {b.vars["x"]});
    return true;
  };
  auto sampleXAany = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    return sampleFormulas(b, g, {"A"});
  };
  {
    auto s = mk("(\u2200\u03B3\u03B9)", true, anySystem);
    s.lhsPat = aComp(aGamma(Quantifier::All, X, A), aIota(Quantifier::All, X, A));
    s.rhsPat = aId(mkForall(X, A));
    s.sample = sampleXA;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B3\u03B9)", true, anySystem);
    s.lhsPat = aComp(aIota(Quantifier::Ex, X, A), aGamma(Quantifier::Ex, X, A));
    s.rhsPat = aId(mkExists(X, A));
    s.sample = sampleXA;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2200\u03B9)", true, anySystem);
    s.lhsPat = aQuant(Quantifier::All, X, aIota(Quantifier::All, X, A));
    s.rhsPat = aIota(Quantifier::All, X, mkForall(X, A));
    s.sample = sampleXAany;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B9)", true, anySystem);
    s.lhsPat = aQuant(Quantifier::Ex, X, aIota(Quantifier::Ex, X, A));
    s.rhsPat = aIota(Quantifier::Ex, X, mkExists(X, A));
    s.sample = sampleXAany;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2200\u03B3)", true, anySystem);
    s.lhsPat = aQuant(Quantifier::All, X, aGamma(Quantifier::All, X, A));
    s.rhsPat = aGamma(Quantifier::All, X, mkForall(X, A));
    s.sample = sampleXA;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B3)", true, anySystem);
    s.lhsPat = aQuant(Quantifier::Ex, X, aGamma(Quantifier::Ex, X, A));
    s.rhsPat = aGamma(Quantifier::Ex, X, mkExists(X, A));
    s.sample = sampleXA;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2200 ext)", true, anySystem);
    s.lhsPat = aComp(aQuant(Quantifier::All, X, aComp(aIota(Quantifier::All, X, A), mf)),
                     aGamma(Quantifier::All, X, B));
    s.rhsPat = mf;
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x"});
      Var x = b.vars["x"];
      FormulaPtr src = fAvoiding(g, {x});
      ArrowPtr f0 = g.arrowFrom(src, small(g, 3));
      FormulaPtr mid = typecheck(f0, g.system()).tgt;
      b.arrows["f"] = aComp(aGamma(Quantifier::All, x, mid), f0);
      b.formulas["A"] = mid;
      b.formulas["B"] = src;
      return !isFreeIn(x, mid);
    };
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203 ext)", true, anySystem);
    s.lhsPat = aComp(aGamma(Quantifier::Ex, X, B),
                     aQuant(Quantifier::Ex, X, aComp(mg, aIota(Quantifier::Ex, X, A))));
    s.rhsPat = mg;
    s.sample = [](Binding& b, TermGen& g) {
      sampleVarsDistinct(b, g, {"x"});
      Var x = b.vars["x"];
      b.formulas["A"] = g.formula(small(g, 4));
      ArrowPtr garr = g.arrowFrom(mkExists(x, b.formulas["A"]), small(g, 3));
      FormulaPtr tgt = typecheck(garr, g.system()).tgt;
      if (isFreeIn(x, tgt)) return false;
      b.arrows["g"] = garr;
      b.formulas["B"] = tgt;
      return true;
    };
    out.push_back(s);
  }
}

void addTauFamily(std::vector<AxiomSchema>& out) {
  auto tauSample = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x", "u", "v", "w"});
    b.formulas["A"] = fAvoiding(g, {b.vars["u"], b.vars["v"], b.vars["w"]}, 4);
    return true;
  };
  for (Quantifier q : {Quantifier::All, Quantifier::Ex}) {
    std::string o = q == Quantifier::All ? "\u2200" : "\u2203";
    {
      auto s = mk("(" + o + "\u03C4 ren)", true, anySystem);
      s.lhsBuild = [q](const Binding& b, SystemId) {
        return aRen(b.vars.at("y"), b.vars.at("z"),
                    deriveTau(b.formulas.at("A"), b.vars.at("x"), b.vars.at("u"),
                              b.vars.at("v"), q));
      };
      s.rhsBuild = [q](const Binding& b, SystemId) {
        FormulaPtr az = subst(b.formulas.at("A"), b.vars.at("y"), b.vars.at("z"));
        if (!az) throw UndefinedSubstitution("tau ren");
        return deriveTau(az, b.vars.at("x"), b.vars.at("u"), b.vars.at("v"), q);
      };
      s.sample = [](Binding& b, TermGen& g) {
        sampleVarsDistinct(b, g, {"x", "u", "v", "y", "z"});
        b.formulas["A"] = fAvoiding(g, {b.vars["u"], b.vars["v"], b.vars["z"]}, 4);
        return true;
      };
      out.push_back(s);
    }
    {
      auto s = mk("(" + o + "\u03C4 nat)", true, anySystem);
      s.lhsBuild = [q](const Binding& b, SystemId) {
        const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
        return aComp(aQuant(q, v, aRen(x, v, b.arrows.at("f"))),
                     deriveTau(b.formulas.at("A"), x, u, v, q));
      };
      s.rhsBuild = [q](const Binding& b, SystemId) {
        const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
        return aComp(deriveTau(b.formulas.at("B"), x, u, v, q),
                     aQuant(q, u, aRen(x, u, b.arrows.at("f"))));
      };
      s.sample = [](Binding& b, TermGen& g) {
        sampleVarsDistinct(b, g, {"x", "u", "v"});
        return sampleArrow(b, g, "f", 3);
      };
      s.complete = [](Binding& b, SystemId s) {
        if (!endpoints(b, s, "f", "A", "B")) return false;
        return !isFreeIn(b.vars.at("u"), b.formulas.at("A")) &&
               !isFreeIn(b.vars.at("v"), b.formulas.at("A")) &&
               !isFreeIn(b.vars.at("u"), b.formulas.at("B")) &&
               !isFreeIn(b.vars.at("v"), b.formulas.at("B"));
      };
      out.push_back(s);
    }
    {
      auto s = mk("(" + o + "\u03C4 ref)", true, anySystem);
      s.lhsBuild = [q](const Binding& b, SystemId) {
        return deriveTau(b.formulas.at("A"), b.vars.at("x"), b.vars.at("u"),
                         b.vars.at("u"), q);
      };
      s.rhsBuild = [q](const Binding& b, SystemId) {
        FormulaPtr au = subst(b.formulas.at("A"), b.vars.at("x"), b.vars.at("u"));
        return aId(mkQuant(q, b.vars.at("u"), au));
      };
      s.sample = tauSample;
      out.push_back(s);
    }
    {
      auto s = mk("(" + o + "\u03C4 sym)", true, anySystem);
      s.lhsBuild = [q](const Binding& b, SystemId) {
        const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
        return aComp(deriveTau(b.formulas.at("A"), x, v, u, q),
                     deriveTau(b.formulas.at("A"), x, u, v, q));
      };
      s.rhsBuild = [q](const Binding& b, SystemId) {
        FormulaPtr au = subst(b.formulas.at("A"), b.vars.at("x"), b.vars.at("u"));
        return aId(mkQuant(q, b.vars.at("u"), au));
      };
      s.sample = tauSample;
      out.push_back(s);
    }
    {
      auto s = mk("(" + o + "\u03C4 trans)", true, anySystem);
      s.lhsBuild = [q](const Binding& b, SystemId) {
        const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v"),
                  &w = b.vars.at("w");
        return aComp(deriveTau(b.formulas.at("A"), x, v, w, q),
                     deriveTau(b.formulas.at("A"), x, u, v, q));
      };
      s.rhsBuild = [q](const Binding& b, SystemId) {
        return deriveTau(b.formulas.at("A"), b.vars.at("x"), b.vars.at("u"),
                         b.vars.at("w"), q);
      };
      s.sample = tauSample;
      out.push_back(s);
    }
  }
  {
    auto s = mk("(\u2200\u03C4\u03B9)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      FormulaPtr av = subst(b.formulas.at("A"), x, v);
      return aComp(aIota(Quantifier::All, v, av),
                   deriveTau(b.formulas.at("A"), x, u, v, Quantifier::All));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      FormulaPtr au = subst(b.formulas.at("A"), x, u);
      return aRen(u, v, aIota(Quantifier::All, u, au));
    };
    s.sample = tauSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03C4\u03B9)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      FormulaPtr av = subst(b.formulas.at("A"), x, v);
      return aComp(deriveTau(b.formulas.at("A"), x, v, u, Quantifier::Ex),
                   aIota(Quantifier::Ex, v, av));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      FormulaPtr au = subst(b.formulas.at("A"), x, u);
      return aRen(u, v, aIota(Quantifier::Ex, u, au));
    };
    s.sample = tauSample;
    out.push_back(s);
  }
  auto tauGammaSample = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x", "u", "v"});
    b.formulas["A"] = fAvoiding(g, {b.vars["x"], b.vars["u"], b.vars["v"]}, 4);
    return true;
  };
  {
    auto s = mk("(\u2200\u03C4\u03B3)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      return aComp(deriveTau(b.formulas.at("A"), x, u, v, Quantifier::All),
                   aGamma(Quantifier::All, u, b.formulas.at("A")));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aGamma(Quantifier::All, b.vars.at("v"), b.formulas.at("A"));
    };
    s.sample = tauGammaSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03C4\u03B3)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      return aComp(aGamma(Quantifier::Ex, u, b.formulas.at("A")),
                   deriveTau(b.formulas.at("A"), x, v, u, Quantifier::Ex));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aGamma(Quantifier::Ex, b.vars.at("v"), b.formulas.at("A"));
    };
    s.sample = tauGammaSample;
    out.push_back(s);
  }
  auto tauThetaSample = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x", "u", "v"});
    b.formulas["A"] = fAvoiding(g, {b.vars["u"], b.vars["v"]}, 4);
    b.formulas["D"] = fAvoiding(g, {b.vars["x"], b.vars["u"], b.vars["v"]}, 3);
    return true;
  };
  {
    auto s = mk("(\u2200\u03C4\u03B8\u030C)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      FormulaPtr au = subst(A_, x, u);
      return aComp(aTensor(BinOp::Or, deriveTau(A_, x, u, v, Quantifier::All), aId(D_)),
                   aThetaAllR(u, au, D_));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      FormulaPtr av = subst(A_, x, v);
      return aComp(aThetaAllR(v, av, D_),
                   deriveTau(mkOr(A_, D_), x, u, v, Quantifier::All));
    };
    s.sample = tauThetaSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03C4\u03B8\u0302)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      FormulaPtr au = subst(A_, x, u);
      return aComp(deriveTau(mkAnd(A_, D_), x, u, v, Quantifier::Ex),
                   aThetaExL(u, au, D_));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var &x = b.vars.at("x"), &u = b.vars.at("u"), &v = b.vars.at("v");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      FormulaPtr av = subst(A_, x, v);
      return aComp(aThetaExL(v, av, D_),
                   aTensor(BinOp::And, deriveTau(A_, x, u, v, Quantifier::Ex), aId(D_)));
    };
    s.sample = tauThetaSample;
    out.push_back(s);
  }
  auto thetaIotaSample = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    b.formulas["A"] = g.formula(small(g, 4));
    b.formulas["D"] = fAvoiding(g, {b.vars["x"]}, 3);
    return true;
  };
  {
    auto s = mk("(\u2200\u03B8\u03B9) a", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      return aComp(aIota(Quantifier::All, x, mkOr(A_, D_)),
                   deriveTheta(ThetaVariant::AllOr, x, A_, D_));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aTensor(BinOp::Or, aIota(Quantifier::All, b.vars.at("x"), b.formulas.at("A")),
                     aId(b.formulas.at("D")));
    };
    s.sample = thetaIotaSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B8\u03B9) b", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      return aComp(deriveTheta(ThetaVariant::ExAnd, x, A_, D_),
                   aIota(Quantifier::Ex, x, mkAnd(A_, D_)));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aTensor(BinOp::And, aIota(Quantifier::Ex, b.vars.at("x"), b.formulas.at("A")),
                     aId(b.formulas.at("D")));
    };
    s.sample = thetaIotaSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2200\u03B8\u030C\u03B9)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      return aComp(aTensor(BinOp::Or, aIota(Quantifier::All, x, A_), aId(D_)),
                   aThetaAllR(x, A_, D_));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aIota(Quantifier::All, b.vars.at("x"),
                   mkOr(b.formulas.at("A"), b.formulas.at("D")));
    };
    s.sample = thetaIotaSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03B8\u0302\u03B9)", true, anySystem);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      return aComp(aThetaExL(x, A_, D_),
                   aTensor(BinOp::And, aIota(Quantifier::Ex, x, A_), aId(D_)));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return aIota(Quantifier::Ex, b.vars.at("x"),
                   mkAnd(b.formulas.at("A"), b.formulas.at("D")));
    };
    s.sample = thetaIotaSample;
    out.push_back(s);
  }
}

void addProofNet(std::vector<AxiomSchema>& out) {
  auto sampleCrown = [](TermGen& g) -> FormulaPtr {
    if (atomicCrownOnly(g.system())) {
      FormulaPtr c = g.formula(1);
      while (c->tag != Formula::Tag::Atom)
        c = c->tag == Formula::Tag::Neg ? c->left : g.formula(1);
      return c;
    }
    return g.formula(small(g, 3));
  };
  auto sampleCrownStem = [sampleCrown](Binding& b, TermGen& g) {
    b.formulas["B"] = sampleCrown(g);
    b.formulas["A"] = g.formula(small(g, 4));
    return true;
  };
  {
    auto s = mk("(\u0394\u2200 nat)", false, pnSystems);
    s.lhsPat = aComp(tens(BinOp::And, mf, aId(K)), aDeltaAll(B, A));
    s.rhsPat = aComp(aDeltaAll(B, D), mf);
    s.sample = [sampleCrown](Binding& b, TermGen& g) {
      b.formulas["B"] = sampleCrown(g);
      b.arrows["f"] = g.arrow(small(g, 4));
      return true;
    };
    s.complete = [](Binding& b, SystemId s) {
      if (!endpoints(b, s, "f", "A", "D")) return false;
      FormulaPtr k = crownAllOf(b.formulas.at("B"));
      auto [it, fresh] = b.formulas.emplace("K", k);
      return fresh || equal(it->second, k);
    };
    out.push_back(s);
  }
  {
    auto s = mk("(\u03A3\u2203 nat)", false, pnSystems);
    s.lhsPat = aComp(mf, aSigmaEx(B, A));
    s.rhsPat = aComp(aSigmaEx(B, D), tens(BinOp::Or, aId(K), mf));
    s.sample = [sampleCrown](Binding& b, TermGen& g) {
      b.formulas["B"] = sampleCrown(g);
      b.arrows["f"] = g.arrow(small(g, 4));
      return true;
    };
    s.complete = [](Binding& b, SystemId s) {
      if (!endpoints(b, s, "f", "A", "D")) return false;
      FormulaPtr k = crownExOf(b.formulas.at("B"));
      auto [it, fresh] = b.formulas.emplace("K", k);
      return fresh || equal(it->second, k);
    };
    out.push_back(s);
  }
  auto sampleCrownAB = [sampleCrown](Binding& b, TermGen& g) {
    b.formulas["C"] = sampleCrown(g);
    b.formulas["A"] = g.formula(small(g, 3));
    b.formulas["B"] = g.formula(small(g, 3));
    return true;
  };
  {
    auto s = mk("(b\u0302\u0394\u2200)", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B"),
                       &C_ = b.formulas.at("C");
      return aComp(aBHat(false, A_, B_, crownAllOf(C_)), aDeltaAll(C_, mkAnd(A_, B_)));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return tens(BinOp::And, aId(b.formulas.at("A")),
                  aDeltaAll(b.formulas.at("C"), b.formulas.at("B")));
    };
    s.sample = sampleCrownAB;
    out.push_back(s);
  }
  {
    auto s = mk("(b\u030C\u03A3\u2203)", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B"),
                       &C_ = b.formulas.at("C");
      return aComp(aSigmaEx(C_, mkOr(B_, A_)), aBCheck(false, crownExOf(C_), B_, A_));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return tens(BinOp::Or, aSigmaEx(b.formulas.at("C"), b.formulas.at("B")),
                  aId(b.formulas.at("A")));
    };
    s.sample = sampleCrownAB;
    out.push_back(s);
  }
  auto sampleCrownBC = [sampleCrown](Binding& b, TermGen& g) {
    b.formulas["A"] = sampleCrown(g);
    b.formulas["B"] = g.formula(small(g, 3));
    b.formulas["C"] = g.formula(small(g, 3));
    return true;
  };
  {
    auto s = mk("(d\u03A3\u2200)", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B"),
                       &C_ = b.formulas.at("C");
      return aComp(aD(crownAllOf(A_), B_, C_), deriveXi(Xi::SigmaAll, A_, mkOr(B_, C_)));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return tens(BinOp::Or, deriveXi(Xi::SigmaAll, b.formulas.at("A"), b.formulas.at("B")),
                  aId(b.formulas.at("C")));
    };
    s.sample = sampleCrownBC;
    out.push_back(s);
  }
  {
    auto s = mk("(d\u0394\u2203)", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B"),
                       &C_ = b.formulas.at("C");
      return aComp(deriveXi(Xi::DeltaEx, A_, mkAnd(C_, B_)), aD(C_, B_, crownExOf(A_)));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      return tens(BinOp::And, aId(b.formulas.at("C")),
                  deriveXi(Xi::DeltaEx, b.formulas.at("A"), b.formulas.at("B")));
    };
    s.sample = sampleCrownBC;
    out.push_back(s);
  }
  auto sampleA = [sampleCrown](Binding& b, TermGen& g) {
    b.formulas["A"] = sampleCrown(g);
    return true;
  };
  {
    auto s = mk("(\u03A3\u0302\u0394\u030C)", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr& A_ = b.formulas.at("A");
      return aCompChain({deriveXi(Xi::DeltaCheck, A_, A_), aD(A_, mkNeg(A_), A_),
                         deriveXi(Xi::SigmaHat, A_, A_)});
    };
    s.rhsBuild = [](const Binding& b, SystemId) { return aId(b.formulas.at("A")); };
    s.sample = sampleA;
    out.push_back(s);
  }
  {
    auto s = mk("(\u03A3\u0302'\u0394\u030C')", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr& A_ = b.formulas.at("A");
      const FormulaPtr nA = mkNeg(A_);
      return aCompChain({deriveXi(Xi::DeltaCheckP, A_, nA), aD(nA, A_, nA),
                         deriveXi(Xi::SigmaHatP, A_, nA)});
    };
    s.rhsBuild = [](const Binding& b, SystemId) { return aId(mkNeg(b.formulas.at("A"))); };
    s.sample = sampleA;
    out.push_back(s);
  }
  {
    auto s = mk("(ren \u039E:\u0394\u2200)", false, pnSystems);
    s.lhsPat = aRen(X, Y, aDeltaAll(B, A));
    s.rhsBuild = [](const Binding& b, SystemId) {
      FormulaPtr ay = subst(b.formulas.at("A"), b.vars.at("x"), b.vars.at("y"));
      if (!ay) throw UndefinedSubstitution("ren Xi");
      return aDeltaAll(b.formulas.at("B"), ay);
    };
    s.sample = [sampleCrownStem](Binding& b, TermGen& g) {
      sampleCrownStem(b, g);
      return sampleVarsDistinct(b, g, {"x", "y"});
    };
    out.push_back(s);
  }
  {
    auto s = mk("(ren \u039E:\u03A3\u2203)", false, pnSystems);
    s.lhsPat = aRen(X, Y, aSigmaEx(B, A));
    s.rhsBuild = [](const Binding& b, SystemId) {
      FormulaPtr ay = subst(b.formulas.at("A"), b.vars.at("x"), b.vars.at("y"));
      if (!ay) throw UndefinedSubstitution("ren Xi");
      return aSigmaEx(b.formulas.at("B"), ay);
    };
    s.sample = [sampleCrownStem](Binding& b, TermGen& g) {
      sampleCrownStem(b, g);
      return sampleVarsDistinct(b, g, {"x", "y"});
    };
    out.push_back(s);
  }
  auto xiTauSample = [sampleCrown](Binding& b, TermGen& g) {
    b.formulas["B"] = sampleCrown(g);
    b.formulas["A"] = g.formula(small(g, 3));
    return true;
  };
  {
    auto s = mk("(\u0394\u03C4)", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr& B_ = b.formulas.at("B");
      auto xs = freeVarSequence(B_);
      FormulaPtr bv = B_;
      for (size_t i = 0; i < xs.size(); ++i)
        bv = subst(bv, xs[i], Var{"v$" + std::to_string(i + 1)});
      return aDeltaAll(bv, b.formulas.at("A"));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr& B_ = b.formulas.at("B");
      auto xs = freeVarSequence(B_);
      std::vector<Var> usv, vsv;
      for (size_t i = 0; i < xs.size(); ++i) {
        usv.push_back(Var{"u$" + std::to_string(i + 1)});
        vsv.push_back(Var{"v$" + std::to_string(i + 1)});
      }
      FormulaPtr bu = B_;
      for (size_t i = 0; i < xs.size(); ++i) bu = subst(bu, xs[i], usv[i]);
      ArrowPtr tau = deriveTauSeq(mkOr(mkNeg(B_), B_), xs, usv, vsv, Quantifier::All);
      return aComp(aTensor(BinOp::And, aId(b.formulas.at("A")), tau),
                   aDeltaAll(bu, b.formulas.at("A")));
    };
    s.sample = xiTauSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u03A3\u03C4)", false, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr& B_ = b.formulas.at("B");
      auto xs = freeVarSequence(B_);
      FormulaPtr bv = B_;
      for (size_t i = 0; i < xs.size(); ++i)
        bv = subst(bv, xs[i], Var{"v$" + std::to_string(i + 1)});
      return aSigmaEx(bv, b.formulas.at("A"));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr& B_ = b.formulas.at("B");
      auto xs = freeVarSequence(B_);
      std::vector<Var> usv, vsv;
      for (size_t i = 0; i < xs.size(); ++i) {
        usv.push_back(Var{"u$" + std::to_string(i + 1)});
        vsv.push_back(Var{"v$" + std::to_string(i + 1)});
      }
      FormulaPtr bu = B_;
      for (size_t i = 0; i < xs.size(); ++i) bu = subst(bu, xs[i], usv[i]);
      ArrowPtr tau = deriveTauSeq(mkAnd(B_, mkNeg(B_)), xs, vsv, usv, Quantifier::Ex);
      return aComp(aSigmaEx(bu, b.formulas.at("A")),
                   aTensor(BinOp::Or, tau, aId(b.formulas.at("A"))));
    };
    s.sample = xiTauSample;
    out.push_back(s);
  }
  auto stemSample = [sampleCrownStem](Binding& b, TermGen& g) {
    sampleCrownStem(b, g);
    sampleVarsDistinct(b, g, {"x"});
    return true;
  };
  {
    auto s = mk("(\u2200\u0394\u2200)", true, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aQuant(Quantifier::All, b.vars.at("x"),
                    aDeltaAll(b.formulas.at("B"), b.formulas.at("A")));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B");
      FormulaPtr k = crownAllOf(B_);
      return aCompChain(
          {aDeltaAll(B_, mkForall(x, A_)),
           aGamma(Quantifier::All, x, mkAnd(mkForall(x, A_), k)),
           aQuant(Quantifier::All, x,
                  aTensor(BinOp::And, aIota(Quantifier::All, x, A_), aId(k)))});
    };
    s.sample = stemSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u0394\u2200)", true, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aQuant(Quantifier::Ex, b.vars.at("x"),
                    aDeltaAll(b.formulas.at("B"), b.formulas.at("A")));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B");
      return aComp(aThetaExL(x, A_, crownAllOf(B_)), aDeltaAll(B_, mkExists(x, A_)));
    };
    s.sample = stemSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2200\u03A3\u2203)", true, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aQuant(Quantifier::All, b.vars.at("x"),
                    aSigmaEx(b.formulas.at("B"), b.formulas.at("A")));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B");
      FormulaPtr k = crownExOf(B_);
      return aCompChain({aQuant(Quantifier::All, x, aCCheck(A_, k)),
                         aThetaAllR(x, A_, k), aCCheck(k, mkForall(x, A_)),
                         aSigmaEx(B_, mkForall(x, A_))});
    };
    s.sample = stemSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u2203\u03A3\u2203)", true, pnSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aQuant(Quantifier::Ex, b.vars.at("x"),
                    aSigmaEx(b.formulas.at("B"), b.formulas.at("A")));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B");
      FormulaPtr k = crownExOf(B_);
      return aCompChain({aQuant(Quantifier::Ex, x,
                                aTensor(BinOp::Or, aId(k), aIota(Quantifier::Ex, x, A_))),
                         aGamma(Quantifier::Ex, x, mkOr(k, mkExists(x, A_))),
                         aSigmaEx(B_, mkExists(x, A_))});
    };
    s.sample = stemSample;
    out.push_back(s);
  }
  auto thetaDefSample = [](Binding& b, TermGen& g) {
    sampleVarsDistinct(b, g, {"x"});
    b.formulas["A"] = g.formula(small(g, 3));
    b.formulas["D"] = fAvoiding(g, {b.vars["x"]}, 3);
    return true;
  };
  {
    auto s = mk("(\u03B8\u030C def)", true, pnNegSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aThetaAllR(b.vars.at("x"), b.formulas.at("A"), b.formulas.at("D"));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      const FormulaPtr nD = mkNeg(D_);
      const FormulaPtr AoD = mkOr(A_, D_);
      ArrowPtr inner = aComp(deriveXi(Xi::DeltaHat, D_, A_), deriveDR(A_, D_, nD));
      ArrowPtr left = aComp(aQuant(Quantifier::All, x, inner),
                            deriveTheta(ThetaVariant::AllAnd, x, AoD, nD));
      return aCompChain({deriveXi(Xi::DeltaCheck, D_, mkForall(x, AoD)),
                         aD(mkForall(x, AoD), nD, D_),
                         aTensor(BinOp::Or, left, aId(D_))});
    };
    s.sample = thetaDefSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u03B8\u0302 def)", true, pnNegSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aThetaExL(b.vars.at("x"), b.formulas.at("A"), b.formulas.at("D"));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const Var& x = b.vars.at("x");
      const FormulaPtr &A_ = b.formulas.at("A"), &D_ = b.formulas.at("D");
      const FormulaPtr nD = mkNeg(D_);
      const FormulaPtr AaD = mkAnd(A_, D_);
      ArrowPtr left = aComp(deriveTheta(ThetaVariant::ExOr, x, AaD, nD),
                            aQuant(Quantifier::Ex, x,
                                   aComp(aD(A_, D_, nD), deriveXi(Xi::DeltaCheckP, D_, A_))));
      return aCompChain({aTensor(BinOp::And, left, aId(D_)),
                         deriveDR(mkExists(x, AaD), nD, D_),
                         deriveXi(Xi::DeltaHatP, D_, mkExists(x, AaD))});
    };
    s.sample = thetaDefSample;
    out.push_back(s);
  }
  {
    auto s = mk("(\u0394\u2200 n)", true, pnNegSystems);
    s.lhsBuild = [](const Binding& b, SystemId) {
      return aDeltaAll(mkNeg(b.formulas.at("B")), b.formulas.at("A"));
    };
    s.rhsBuild = [](const Binding& b, SystemId) {
      const FormulaPtr &A_ = b.formulas.at("A"), &B_ = b.formulas.at("B");
      ArrowPtr adj = aTensor(BinOp::Or, buildDoubleNeg(B_), aId(mkNeg(B_)));
      for (const auto& v : freeVarSequence(B_)) adj = aQuant(Quantifier::All, v, adj);
      return aComp(aTensor(BinOp::And, aId(A_), adj), deriveXi(Xi::DeltaAllP, B_, A_));
    };
    s.sample = [](Binding& b, TermGen& g) { return sampleFormulas(b, g, {"A", "B"}, 3); };
    out.push_back(s);
  }
}

void addMix(std::vector<AxiomSchema>& out) {
  {
    auto s = mk("(m nat)", false, mixSystems);
    s.lhsPat = aComp(tens(BinOp::Or, mf, mg), aMix(A, B));
    s.rhsPat = aComp(aMix(D, E), tens(BinOp::And, mf, mg));
    s.sample = [](Binding& b, TermGen& g) {
      sampleArrow(b, g, "f", 3);
      return sampleArrow(b, g, "g", 3);
    };
    s.complete = [](Binding& b, SystemId s) {
      return endpoints(b, s, "f", "A", "D") && endpoints(b, s, "g", "B", "E");
    };
    out.push_back(s);
  }
  auto s3 = [](Binding& b, TermGen& g) { return sampleFormulas(b, g, {"A", "B", "C"}); };
  {
    auto s = mk("(b\u0302 m)", false, mixSystems);
    s.lhsPat = aComp(aMix(mkAnd(A, B), C), aBHat(true, A, B, C));
    s.rhsPat = aComp(aD(A, B, C), tens(BinOp::And, aId(A), aMix(B, C)));
    s.sample = s3;
    out.push_back(s);
  }
  {
    auto s = mk("(b\u030C m)", false, mixSystems);
    s.lhsPat = aComp(aBCheck(true, C, B, A), aMix(C, mkOr(B, A)));
    s.rhsPat = aComp(tens(BinOp::Or, aMix(C, B), aId(A)), aD(C, B, A));
    s.sample = s3;
    out.push_back(s);
  }
  {
    auto s = mk("(c m)", false, mixSystems);
    s.lhsPat = aComp(aMix(B, A), aCHat(A, B));
    s.rhsPat = aComp(aCCheck(B, A), aMix(A, B));
    s.sample = [](Binding& b, TermGen& g) { return sampleFormulas(b, g, {"A", "B"}); };
    out.push_back(s);
  }
}

std::vector<AxiomSchema> buildAll() {
  std::vector<AxiomSchema> out;
  addCategorial(out);
  addDS(out);
  addQuantificational(out);
  addRenaming(out);
  addDerivedQDS(out);
  addTauFamily(out);
  addProofNet(out);
  addMix(out);
  return out;
}

}  // namespace

const std::vector<AxiomSchema>& axiomSchemas(SystemId system) {
  static const std::vector<AxiomSchema> all = buildAll();
  static std::map<SystemId, std::vector<AxiomSchema>> cache;
  auto it = cache.find(system);
  if (it != cache.end()) return it->second;
  std::vector<AxiomSchema> filtered;
  for (const auto& s : all)
    if (s.applies(system)) filtered.push_back(s);
  return cache.emplace(system, std::move(filtered)).first->second;
}

}  // namespace lpk
