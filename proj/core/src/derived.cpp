#include "lpk/derived.hpp"

#include <algorithm>
#include <set>

namespace lpk {

ArrowPtr deriveDR(const FormulaPtr& c, const FormulaPtr& b, const FormulaPtr& a) {
  // check_{C,B&A} . (chat_{A,B} | 1_C) . d_{A,B,C} . (1_A & check_{B,C}) . chat_{C|B,A}
  return aCompChain({
      aCHat(mkOr(c, b), a),
      aTensor(BinOp::And, aId(a), aCCheck(b, c)),
      aD(a, b, c),
      aTensor(BinOp::Or, aCHat(a, b), aId(c)),
      aCCheck(c, mkAnd(b, a)),
  });
}

ArrowPtr deriveTau(const FormulaPtr& a, const Var& x, const Var& s, const Var& t,
                   Quantifier q) {
  if (isFreeIn(s, a) || isFreeIn(t, a))
    throw ProvisoViolation("tau: " + s.name + " or " + t.name + " free in " +
                           printFormula(a));
  FormulaPtr as = subst(a, x, s);
  FormulaPtr at = subst(a, x, t);
  if (!as || !at) throw ProvisoViolation("tau: substitution undefined");
  if (q == Quantifier::All) {
    // forall_t [iota^{forall_s}_{A^x_s}]^s_t . gamma^{forall_t}_{forall_s A^x_s}
    return aComp(aQuant(Quantifier::All, t, aRen(s, t, aIota(Quantifier::All, s, as))),
                 aGamma(Quantifier::All, t, mkForall(s, as)));
  }
  // gamma^{some_s}_{some_t A^x_t} . some_s [iota^{some_t}_{A^x_t}]^t_s
  return aComp(aGamma(Quantifier::Ex, s, mkExists(t, at)),
               aQuant(Quantifier::Ex, s, aRen(t, s, aIota(Quantifier::Ex, t, at))));
}

ArrowPtr deriveTauSeq(const FormulaPtr& a, const std::vector<Var>& xs,
                      const std::vector<Var>& ss, const std::vector<Var>& ts,
                      Quantifier q) {
  if (xs.size() != ss.size() || xs.size() != ts.size())
    throw ProvisoViolation("tau-seq: variable vectors differ in length");
  for (const auto& v : ss)
    if (isFreeIn(v, a)) throw ProvisoViolation("tau-seq: " + v.name + " free in template");
  for (const auto& v : ts)
    if (isFreeIn(v, a)) throw ProvisoViolation("tau-seq: " + v.name + " free in template");
  FormulaPtr as = a, at = a;
  for (size_t i = 0; i < xs.size(); ++i) {
    as = as ? subst(as, xs[i], ss[i]) : nullptr;
    at = at ? subst(at, xs[i], ts[i]) : nullptr;
  }
  if (!as || !at) throw ProvisoViolation("tau-seq: substitution undefined");
  if (q == Quantifier::All) {
    ArrowPtr inner = renClosure(ss, ts, deriveClosure(ClosureKind::Iota, q, ss, as));
    for (auto it = ts.begin(); it != ts.end(); ++it)
      inner = aQuant(Quantifier::All, *it, inner);
    return aComp(inner, deriveClosure(ClosureKind::Gamma, Quantifier::All, ts,
                                      quantClosure(Quantifier::All, ss, as)));
  }
  ArrowPtr inner = renClosure(ts, ss, deriveClosure(ClosureKind::Iota, q, ts, at));
  for (auto it = ss.begin(); it != ss.end(); ++it) inner = aQuant(Quantifier::Ex, *it, inner);
  return aComp(deriveClosure(ClosureKind::Gamma, Quantifier::Ex, ss,
                             quantClosure(Quantifier::Ex, ts, at)),
               inner);
}

ArrowPtr deriveTheta(ThetaVariant variant, const Var& x, const FormulaPtr& a,
                     const FormulaPtr& d) {
  if (isFreeIn(x, d))
    throw ProvisoViolation("theta: " + x.name + " free in " + printFormula(d));
  switch (variant) {
    case ThetaVariant::AllOr:
      return aComp(aQuant(Quantifier::All, x,
                          aTensor(BinOp::Or, aIota(Quantifier::All, x, a), aId(d))),
                   aGamma(Quantifier::All, x, mkOr(mkForall(x, a), d)));
    case ThetaVariant::ExAnd:
      return aComp(aGamma(Quantifier::Ex, x, mkAnd(mkExists(x, a), d)),
                   aQuant(Quantifier::Ex, x,
                          aTensor(BinOp::And, aIota(Quantifier::Ex, x, a), aId(d))));
    case ThetaVariant::AllAnd:
      return aComp(aQuant(Quantifier::All, x,
                          aTensor(BinOp::And, aIota(Quantifier::All, x, a), aId(d))),
                   aGamma(Quantifier::All, x, mkAnd(mkForall(x, a), d)));
    case ThetaVariant::ExOr:
      return aComp(aGamma(Quantifier::Ex, x, mkOr(mkExists(x, a), d)),
                   aQuant(Quantifier::Ex, x,
                          aTensor(BinOp::Or, aIota(Quantifier::Ex, x, a), aId(d))));
  }
  throw ProvisoViolation("theta: bad variant");
}

ArrowPtr deriveClosure(ClosureKind kind, Quantifier q, const std::vector<Var>& vars,
                       const FormulaPtr& b) {
  if (vars.empty()) return aId(b);
  std::vector<Var> init(vars.begin(), vars.end() - 1);
  const Var& last = vars.back();
  FormulaPtr inner = quantClosure(q, init, b);
  ArrowPtr rest = deriveClosure(kind, q, init, b);
  if (kind == ClosureKind::Iota) {
    if (q == Quantifier::All)  // forall_{Xn} B |- B
      return aComp(rest, aIota(Quantifier::All, last, inner));
    // B |- some_{Xn} B
    return aComp(aIota(Quantifier::Ex, last, inner), rest);
  }
  if (q == Quantifier::All)  // B |- forall_{Xn} B
    return aComp(aGamma(Quantifier::All, last, inner), rest);
  // some_{Xn} B |- B
  return aComp(rest, aGamma(Quantifier::Ex, last, inner));
}

ArrowPtr renClosure(const std::vector<Var>& xs, const std::vector<Var>& ys, ArrowPtr f) {
  if (xs.size() != ys.size()) throw ProvisoViolation("ren closure: length mismatch");
  for (size_t i = 0; i < xs.size(); ++i) f = aRen(xs[i], ys[i], f);
  return f;
}

namespace {

FormulaPtr crownAll(const FormulaPtr& b) {
  return quantClosure(Quantifier::All, freeVarSequence(b), mkOr(mkNeg(b), b));
}

FormulaPtr crownEx(const FormulaPtr& b) {
  return quantClosure(Quantifier::Ex, freeVarSequence(b), mkAnd(b, mkNeg(b)));
}

}  // namespace

ArrowPtr deriveXi(Xi which, const FormulaPtr& b, const FormulaPtr& a) {
  const auto xs = freeVarSequence(b);
  switch (which) {
    case Xi::SigmaAll:  // chat_{A,crown} . DeltaAll
      return aComp(aCHat(a, crownAll(b)), aDeltaAll(b, a));
    case Xi::DeltaEx:  // SigmaEx . ccheck_{crown,A}
      return aComp(aSigmaEx(b, a), aCCheck(crownEx(b), a));
    case Xi::DeltaCheck:  // (1_A & iota-closure) . DeltaAll
      return aComp(aTensor(BinOp::And, aId(a),
                           deriveClosure(ClosureKind::Iota, Quantifier::All, xs,
                                         mkOr(mkNeg(b), b))),
                   aDeltaAll(b, a));
    case Xi::SigmaHat:  // SigmaEx . (iota-closure | 1_A)
      return aComp(aSigmaEx(b, a),
                   aTensor(BinOp::Or,
                           deriveClosure(ClosureKind::Iota, Quantifier::Ex, xs,
                                         mkAnd(b, mkNeg(b))),
                           aId(a)));
    case Xi::DeltaCheckP:  // (1_A & ccheck_{B,~B}) . DeltaCheck
      return aComp(aTensor(BinOp::And, aId(a), aCCheck(b, mkNeg(b))),
                   deriveXi(Xi::DeltaCheck, b, a));
    case Xi::SigmaHatP:  // SigmaHat . (chat_{~B,B} | 1_A)
      return aComp(deriveXi(Xi::SigmaHat, b, a),
                   aTensor(BinOp::Or, aCHat(mkNeg(b), b), aId(a)));
    case Xi::DeltaAllP: {  // (1_A & forall-closure(ccheck_{B,~B})) . DeltaAll
      ArrowPtr sw = aCCheck(b, mkNeg(b));
      for (const auto& v : xs) sw = aQuant(Quantifier::All, v, sw);
      return aComp(aTensor(BinOp::And, aId(a), sw), aDeltaAll(b, a));
    }
    case Xi::SigmaExP: {  // SigmaEx . (some-closure(chat_{~B,B}) | 1_A)
      ArrowPtr sw = aCHat(mkNeg(b), b);
      for (const auto& v : xs) sw = aQuant(Quantifier::Ex, v, sw);
      return aComp(aSigmaEx(b, a), aTensor(BinOp::Or, sw, aId(a)));
    }
    case Xi::SigmaAllP:
      return aComp(aCHat(a, quantClosure(Quantifier::All, xs, mkOr(b, mkNeg(b)))),
                   deriveXi(Xi::DeltaAllP, b, a));
    case Xi::DeltaExP:
      return aComp(deriveXi(Xi::SigmaExP, b, a),
                   aCCheck(quantClosure(Quantifier::Ex, xs, mkAnd(mkNeg(b), b)), a));
    case Xi::SigmaCheck:
      return aComp(aCHat(a, mkOr(mkNeg(b), b)), deriveXi(Xi::DeltaCheck, b, a));
    case Xi::DeltaHat:
      return aComp(deriveXi(Xi::SigmaHat, b, a), aCCheck(mkAnd(b, mkNeg(b)), a));
    case Xi::SigmaCheckP:
      return aComp(aCHat(a, mkOr(b, mkNeg(b))), deriveXi(Xi::DeltaCheckP, b, a));
    case Xi::DeltaHatP:
      return aComp(deriveXi(Xi::SigmaHatP, b, a), aCCheck(mkAnd(mkNeg(b), b), a));
  }
  throw ProvisoViolation("xi: bad selector");
}

FormulaPtr applyPrefix(const PrefixSeq& s, FormulaPtr b) {
  for (auto it = s.rbegin(); it != s.rend(); ++it) b = mkQuant(it->first, it->second, b);
  return b;
}

bool prefixForeignTo(const PrefixSeq& s, const FormulaPtr& b) {
  for (const auto& [q, v] : s)
    if (isFreeIn(v, b)) return false;
  return true;
}

ArrowPtr jIso(bool intro, const PrefixSeq& s, const FormulaPtr& b) {
  if (!prefixForeignTo(s, b))
    throw ProvisoViolation("j: prefix not foreign to " + printFormula(b));
  if (intro) {
    // B |- SB from gamma^forall and iota^some, innermost prefix first
    ArrowPtr acc = aId(b);
    FormulaPtr cur = b;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      ArrowPtr step = it->first == Quantifier::All ? aGamma(Quantifier::All, it->second, cur)
                                                   : aIota(Quantifier::Ex, it->second, cur);
      acc = aComp(step, acc);
      cur = mkQuant(it->first, it->second, cur);
    }
    return acc;
  }
  // SB |- B from iota^forall and gamma^some, outermost prefix first
  ArrowPtr acc = aId(applyPrefix(s, b));
  for (size_t i = 0; i < s.size(); ++i) {
    FormulaPtr inner = applyPrefix(PrefixSeq(s.begin() + i + 1, s.end()), b);
    ArrowPtr step = s[i].first == Quantifier::All ? aIota(Quantifier::All, s[i].second, inner)
                                                  : aGamma(Quantifier::Ex, s[i].second, inner);
    acc = aComp(step, acc);
  }
  return acc;
}

ArrowPtr deriveXiI(XiI which, const XiIndex& idx) {
  if (idx.atom->tag != Formula::Tag::Atom)
    throw ProvisoViolation("xi-I: crown index must be atomic");
  if (!prefixForeignTo(idx.sLeft, idx.atom) || !prefixForeignTo(idx.sRight, idx.atom))
    throw ProvisoViolation("xi-I: prefixes must be foreign to the atom");
  const FormulaPtr p = idx.atom;
  const FormulaPtr np = mkNeg(p);
  const auto xs = freeVarSequence(p);
  switch (which) {
    case XiI::DeltaAll: {
      // (1_A & (forall_{Ym}((j_{Sneg,~P} | j_{S,P}) . iota-closure) . gamma-closure))
      //   . DeltaAll_{P,A}
      ArrowPtr inner =
          aComp(aTensor(BinOp::Or, jIso(true, idx.sRight, np), jIso(true, idx.sLeft, p)),
                deriveClosure(ClosureKind::Iota, Quantifier::All, xs, mkOr(np, p)));
      for (const auto& v : idx.outerVars) inner = aQuant(Quantifier::All, v, inner);
      ArrowPtr adjust =
          aComp(inner, deriveClosure(ClosureKind::Gamma, Quantifier::All, idx.outerVars,
                                     crownAll(p)));
      return aComp(aTensor(BinOp::And, aId(idx.stem), adjust), aDeltaAll(p, idx.stem));
    }
    case XiI::SigmaEx: {
      ArrowPtr inner =
          aComp(deriveClosure(ClosureKind::Iota, Quantifier::Ex, xs, mkAnd(p, np)),
                aTensor(BinOp::And, jIso(false, idx.sLeft, p), jIso(false, idx.sRight, np)));
      for (const auto& v : idx.outerVars) inner = aQuant(Quantifier::Ex, v, inner);
      ArrowPtr adjust =
          aComp(deriveClosure(ClosureKind::Gamma, Quantifier::Ex, idx.outerVars,
                              crownEx(p)),
                inner);
      return aComp(aSigmaEx(p, idx.stem), aTensor(BinOp::Or, adjust, aId(idx.stem)));
    }
    case XiI::SigmaAll: {
      FormulaPtr crown = quantClosure(Quantifier::All, idx.outerVars,
                                      mkOr(applyPrefix(idx.sRight, np),
                                           applyPrefix(idx.sLeft, p)));
      return aComp(aCHat(idx.stem, crown), deriveXiI(XiI::DeltaAll, idx));
    }
    case XiI::DeltaEx: {
      FormulaPtr crown = quantClosure(Quantifier::Ex, idx.outerVars,
                                      mkAnd(applyPrefix(idx.sLeft, p),
                                            applyPrefix(idx.sRight, np)));
      return aComp(deriveXiI(XiI::SigmaEx, idx), aCCheck(crown, idx.stem));
    }
    case XiI::DeltaAllP: {
      ArrowPtr sw = aCCheck(applyPrefix(idx.sLeft, p), applyPrefix(idx.sRight, np));
      for (const auto& v : idx.outerVars) sw = aQuant(Quantifier::All, v, sw);
      return aComp(aTensor(BinOp::And, aId(idx.stem), sw), deriveXiI(XiI::DeltaAll, idx));
    }
    case XiI::SigmaExP: {
      ArrowPtr sw = aCHat(applyPrefix(idx.sRight, np), applyPrefix(idx.sLeft, p));
      for (const auto& v : idx.outerVars) sw = aQuant(Quantifier::Ex, v, sw);
      return aComp(deriveXiI(XiI::SigmaEx, idx), aTensor(BinOp::Or, sw, aId(idx.stem)));
    }
    case XiI::SigmaAllP: {
      FormulaPtr crown = quantClosure(Quantifier::All, idx.outerVars,
                                      mkOr(applyPrefix(idx.sLeft, p),
                                           applyPrefix(idx.sRight, np)));
      return aComp(aCHat(idx.stem, crown), deriveXiI(XiI::DeltaAllP, idx));
    }
    case XiI::DeltaExP: {
      FormulaPtr crown = quantClosure(Quantifier::Ex, idx.outerVars,
                                      mkAnd(applyPrefix(idx.sRight, np),
                                            applyPrefix(idx.sLeft, p)));
      return aComp(deriveXiI(XiI::SigmaExP, idx), aCCheck(crown, idx.stem));
    }
  }
  throw ProvisoViolation("xi-I: bad selector");
}

ArrowPtr quantSwap(Quantifier q, const Var& u, const Var& v, const FormulaPtr& c) {
  if (q == Quantifier::All) {
    // forall_u forall_v C |- forall_v forall_u C
    return aComp(aQuant(Quantifier::All, v,
                        aQuant(Quantifier::All, u, aIota(Quantifier::All, v, c))),
                 aGamma(Quantifier::All, v, mkForall(u, mkForall(v, c))));
  }
  // some_u some_v C |- some_v some_u C
  return aComp(aGamma(Quantifier::Ex, u, mkExists(v, mkExists(u, c))),
               aQuant(Quantifier::Ex, u,
                      aQuant(Quantifier::Ex, v, aIota(Quantifier::Ex, u, c))));
}

namespace {

ArrowPtr tensorL(BinOp op, ArrowPtr f, const FormulaPtr& right) {
  return aTensor(op, std::move(f), aId(right));
}

ArrowPtr tensorR(BinOp op, const FormulaPtr& left, ArrowPtr f) {
  return aTensor(op, aId(left), std::move(f));
}

ArrowPtr swapSides(BinOp op, const FormulaPtr& l, const FormulaPtr& r) {
  // L op R |- R op L
  return op == BinOp::And ? aCHat(l, r) : aCCheck(r, l);
}

std::set<std::string> letterSet(const FormulaPtr& f) {
  std::set<std::string> out;
  for (auto& l : letterSeq(f)) out.insert(l);
  return out;
}

// Extraction: given op-rooted A and a letter set S naming some of its
// AC-children, returns an arrow A |- A1 op A2 with letters(A1) = S, along
// with the two parts.
struct Extracted {
  ArrowPtr iso;
  FormulaPtr a1, a2;
};

Extracted extract(const FormulaPtr& a, BinOp op, const std::set<std::string>& s);

// A1 in the left subtree case helper: not needed separately, see extract.

Extracted extract(const FormulaPtr& a, BinOp op, const std::set<std::string>& s) {
  if (a->tag != Formula::Tag::Bin || a->op != op)
    throw TypeError("extract: not an op node");
  const FormulaPtr l = a->left, r = a->right;
  auto ls = letterSet(l), rs = letterSet(r);
  bool allOfL = std::includes(s.begin(), s.end(), ls.begin(), ls.end());
  bool allOfR = std::includes(s.begin(), s.end(), rs.begin(), rs.end());
  bool sInL = std::includes(ls.begin(), ls.end(), s.begin(), s.end());
  bool sInR = std::includes(rs.begin(), rs.end(), s.begin(), s.end());
  if (sInL && ls == s) return {aId(a), l, r};
  if (sInR && rs == s) {
    return {swapSides(op, l, r), r, l};
  }
  if (sInL) {
    // (extract(L) op 1_R) then reassociate (L1 op L2) op R |- L1 op (L2 op R)
    Extracted e = extract(l, op, s);
    ArrowPtr assoc = op == BinOp::And ? aBHat(false, e.a1, e.a2, r)
                                      : aBCheck(false, e.a1, e.a2, r);
    return {aComp(assoc, tensorL(op, e.iso, r)), e.a1, mkBin(op, e.a2, r)};
  }
  if (sInR) {
    // 1_L op extract(R); L op (R1 op R2) |- (R1 op R2) op L |- R1 op (R2 op L)
    Extracted e = extract(r, op, s);
    FormulaPtr r12 = mkBin(op, e.a1, e.a2);
    ArrowPtr assoc =
        op == BinOp::And ? aBHat(false, e.a1, e.a2, l) : aBCheck(false, e.a1, e.a2, l);
    return {aCompChain({tensorR(op, l, e.iso), swapSides(op, l, r12), assoc}),
            e.a1, mkBin(op, e.a2, l)};
  }
  // S straddles both subtrees.
  std::set<std::string> sl, sr;
  for (const auto& k : s) (ls.count(k) ? sl : sr).insert(k);
  if (sl.empty() || sr.empty()) throw TypeError("extract: letters missing from formula");
  Extracted el = extract(l, op, sl);
  Extracted er = extract(r, op, sr);
  // (L1 op L2) op (R1 op R2) |- (L1 op R1) op (L2 op R2), middle-four interchange
  const FormulaPtr l1 = el.a1, l2 = el.a2, r1 = er.a1, r2 = er.a2;
  auto bh = [&](bool fwd, FormulaPtr x1, FormulaPtr x2, FormulaPtr x3) {
    return op == BinOp::And ? aBHat(fwd, std::move(x1), std::move(x2), std::move(x3))
                            : aBCheck(fwd, std::move(x1), std::move(x2), std::move(x3));
  };
  ArrowPtr mfi = aCompChain({
      bh(false, l1, l2, mkBin(op, r1, r2)),
      tensorR(op, l1, bh(true, l2, r1, r2)),
      tensorR(op, l1, tensorL(op, swapSides(op, l2, r1), r2)),
      tensorR(op, l1, bh(false, r1, l2, r2)),
      bh(true, l1, r1, mkBin(op, l2, r2)),
  });
  return {aCompChain({aTensor(op, el.iso, er.iso), mfi}), mkBin(op, l1, r1),
          mkBin(op, l2, r2)};
}

}  // namespace

ArrowPtr acIso(const FormulaPtr& from, const FormulaPtr& to) {
  if (equal(from, to)) return aId(from);
  if (from->tag == Formula::Tag::Quant && to->tag == Formula::Tag::Quant &&
      from->q == to->q && from->var == to->var)
    return aQuant(from->q, from->var, acIso(from->left, to->left));
  if (from->tag == Formula::Tag::Bin && to->tag == Formula::Tag::Bin &&
      from->op == to->op) {
    BinOp op = from->op;
    Extracted e = extract(from, op, letterSet(to->left));
    ArrowPtr parts = aTensor(op, acIso(e.a1, to->left), acIso(e.a2, to->right));
    return aComp(parts, e.iso);
  }
  throw TypeError("acIso: " + printFormula(from) + " and " + printFormula(to) +
                  " are not in the same form set");
}

ArrowPtr buildDoubleNeg(const FormulaPtr& b) {
  const FormulaPtr nb = mkNeg(b), nnb = mkNeg(mkNeg(b));
  return aCompChain({
      deriveXi(Xi::DeltaCheckP, nb, b),      // B |- B & (~B | ~~B)
      aD(b, nb, nnb),                        // |- (B & ~B) | ~~B
      deriveXi(Xi::SigmaHat, b, nnb),        // |- ~~B
  });
}

ArrowPtr buildDoubleNegInv(const FormulaPtr& b) {
  const FormulaPtr nb = mkNeg(b), nnb = mkNeg(mkNeg(b));
  return aCompChain({
      deriveXi(Xi::DeltaCheck, b, nnb),                  // ~~B |- ~~B & (~B | B)
      aTensor(BinOp::And, aId(nnb), aCCheck(b, nb)),     // |- ~~B & (B | ~B)
      aCHat(nnb, mkOr(b, nb)),                           // |- (B | ~B) & ~~B
      deriveDR(b, nb, nnb),                              // |- B | (~B & ~~B)
      aCCheck(mkAnd(nb, nnb), b),                        // |- (~B & ~~B) | B
      deriveXi(Xi::SigmaHat, nb, b),                     // |- B
  });
}

}  // namespace lpk
