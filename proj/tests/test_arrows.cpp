#include <catch2/catch_amalgamated.hpp>

#include "lpk/derived.hpp"
#include "lpk/graph.hpp"
#include "lpk/random.hpp"

using namespace lpk;

namespace {
const Var x{"x"}, y{"y"}, z{"z"}, u{"u"}, v{"v"};
const FormulaPtr Px = mkAtom("P", {x});
const FormulaPtr Q0 = mkAtom("Q");
}  // namespace

TEST_CASE("typing of quantifier primitives") {
  SequentType t = typecheck(aIota(Quantifier::All, x, Px), SystemId::QDS);
  CHECK(equal(t.src, mkForall(x, Px)));
  CHECK(equal(t.tgt, Px));

  CHECK_THROWS_AS(typecheck(aGamma(Quantifier::All, x, Px), SystemId::QDS),
                  ProvisoViolation);
  CHECK_NOTHROW(typecheck(aGamma(Quantifier::All, y, Px), SystemId::QDS));

  SequentType t2 = typecheck(aThetaExL(x, Px, Q0), SystemId::QDS);
  CHECK(equal(t2.src, mkAnd(mkExists(x, Px), Q0)));
  CHECK(equal(t2.tgt, mkExists(x, mkAnd(Px, Q0))));
}

TEST_CASE("renaming typechecks by endpoints only") {
  // f = iota^{some_x}_{some_y Rxy} . iota^{some_y}_{Rxy}
  FormulaPtr Rxy = mkAtom("R", {x, y});
  ArrowPtr f = aIota(Quantifier::Ex, y, Rxy);
  ArrowPtr g = aIota(Quantifier::Ex, x, mkExists(y, Rxy));
  ArrowPtr comp = aComp(g, f);
  // Whole composite renames although [f]^x_y alone is undefined.
  CHECK_THROWS_AS(typecheck(aRen(x, y, f), SystemId::QDS), UndefinedSubstitution);
  SequentType t = typecheck(aRen(x, y, comp), SystemId::QDS);
  CHECK(equal(t.src, mkAtom("R", {y, y})));
  CHECK(equal(t.tgt, mkExists(x, mkExists(y, Rxy))));

  // [f]^x_y and [g]^x_y may be defined without [g . f]^x_y being defined
  ArrowPtr f2 = aIota(Quantifier::All, y, mkAtom("P", {y}));
  ArrowPtr g2 = aIota(Quantifier::Ex, x, mkAtom("P", {x}));
  CHECK_NOTHROW(typecheck(aRen(x, y, f2), SystemId::QDS));
  CHECK_NOTHROW(typecheck(aRen(x, y, g2), SystemId::QDS));
  CHECK_THROWS_AS(typecheck(aComp(g2, f2), SystemId::QDS), TypeError);
}

TEST_CASE("mkRename keeps the node distinct from a substituted identity") {
  ArrowPtr r = mkRename(x, y, aId(Px), SystemId::QDS);
  ArrowPtr idPy = aId(mkAtom("P", {y}));
  CHECK(sequentEqual(typecheck(r, SystemId::QDS), typecheck(idPy, SystemId::QDS)));
  CHECK_FALSE(arrowEqual(r, idPy));

  ArrowPtr r2 = mkRename(x, x, aId(Px), SystemId::QDS);
  CHECK(r2->tag == ATag::Ren);
}

TEST_CASE("delta and sigma typing") {
  SequentType t = typecheck(aDeltaAll(Px, Q0), SystemId::QPNneg);
  CHECK(equal(t.src, Q0));
  CHECK(equal(t.tgt, mkAnd(Q0, mkForall(x, mkOr(mkNeg(Px), Px)))));

  SequentType t2 = typecheck(aSigmaEx(Px, Q0), SystemId::QPNneg);
  CHECK(equal(t2.src, mkOr(mkExists(x, mkAnd(Px, mkNeg(Px))), Q0)));
  CHECK(equal(t2.tgt, Q0));

  CHECK_THROWS_AS(typecheck(aDeltaAll(Px, Q0), SystemId::QDS), SystemViolation);
  CHECK_THROWS_AS(typecheck(aDeltaAll(mkAnd(Px, Q0), Q0), SystemId::QPN),
                  SystemViolation);
  CHECK_NOTHROW(typecheck(aDeltaAll(Px, mkNeg(Q0)), SystemId::QPN));
  CHECK_THROWS_AS(typecheck(aMix(Px, Q0), SystemId::QDS), SystemViolation);
  CHECK_NOTHROW(typecheck(aMix(Px, Q0), SystemId::QMDS));
}

TEST_CASE("deriveTau") {
  ArrowPtr t = deriveTau(Px, x, u, v, Quantifier::All);
  SequentType ty = typecheck(t, SystemId::QDS);
  CHECK(equal(ty.src, mkForall(u, mkAtom("P", {u}))));
  CHECK(equal(ty.tgt, mkForall(v, mkAtom("P", {v}))));

  // (Q tau ref): tau with equal endpoints has the identity graph
  ArrowPtr tr = deriveTau(Px, x, u, u, Quantifier::All);
  KMGraph g = graphOf(tr, SystemId::QDS);
  CHECK(graphEq(g, identityGraph(mkForall(u, mkAtom("P", {u})))));

  CHECK_THROWS_AS(deriveTau(mkAtom("R", {u, x}), x, u, v, Quantifier::All),
                  ProvisoViolation);

  // placeholder independence: tau over A at x equals tau over A^x_z at z
  ArrowPtr t1 = deriveTau(Px, x, u, v, Quantifier::Ex);
  ArrowPtr t2 = deriveTau(mkAtom("P", {z}), z, u, v, Quantifier::Ex);
  CHECK(arrowEqual(t1, t2));

  // (Q tau sym): the two directions compose to an identity graph
  ArrowPtr fwd = deriveTau(Px, x, u, v, Quantifier::All);
  ArrowPtr bwd = deriveTau(Px, x, v, u, Quantifier::All);
  KMGraph gg = graphOf(aComp(bwd, fwd), SystemId::QDS);
  CHECK(graphEq(gg, identityGraph(mkForall(u, mkAtom("P", {u})))));
}

TEST_CASE("deriveTheta gives the four inverse distributivities") {
  FormulaPtr A = mkAtom("P", {x, y});
  auto mk = [&](const char* l, std::vector<Var> args) {
    return mkAtom(l, std::move(args));
  };
  FormulaPtr D = mk("Q", {y});

  ArrowPtr th1 = deriveTheta(ThetaVariant::AllOr, x, A, D);
  SequentType t1 = typecheck(th1, SystemId::QDS);
  CHECK(equal(t1.src, mkOr(mkForall(x, A), D)));
  CHECK(equal(t1.tgt, mkForall(x, mkOr(A, D))));

  ArrowPtr th2 = deriveTheta(ThetaVariant::AllAnd, x, A, D);
  SequentType t2 = typecheck(th2, SystemId::QDS);
  CHECK(equal(t2.src, mkAnd(mkForall(x, A), D)));
  CHECK(equal(t2.tgt, mkForall(x, mkAnd(A, D))));

  // isomorphism pair with the primitive theta
  ArrowPtr prim = aThetaAllR(x, A, D);
  KMGraph round1 = graphOf(aComp(prim, th1), SystemId::QDS);
  CHECK(graphEq(round1, identityGraph(mkOr(mkForall(x, A), D))));
  KMGraph round2 = graphOf(aComp(th1, prim), SystemId::QDS);
  CHECK(graphEq(round2, identityGraph(mkForall(x, mkOr(A, D)))));

  ArrowPtr th3 = deriveTheta(ThetaVariant::ExAnd, x, A, D);
  ArrowPtr prim2 = aThetaExL(x, A, D);
  KMGraph round3 = graphOf(aComp(prim2, th3), SystemId::QDS);
  CHECK(graphEq(round3, identityGraph(mkExists(x, mkAnd(A, D)))));

  CHECK_THROWS_AS(deriveTheta(ThetaVariant::AllOr, y, A, mk("Q", {y})),
                  ProvisoViolation);
}

TEST_CASE("deriveClosure") {
  FormulaPtr B = mkAnd(Px, mkAtom("P2", {y}));
  ArrowPtr c0 = deriveClosure(ClosureKind::Iota, Quantifier::All, {}, B);
  CHECK(c0->tag == ATag::Id);

  ArrowPtr c2 = deriveClosure(ClosureKind::Iota, Quantifier::All, {x, y}, B);
  SequentType t = typecheck(c2, SystemId::QDS);
  CHECK(equal(t.src, mkForall(y, mkForall(x, B))));
  CHECK(equal(t.tgt, B));

  ArrowPtr g2 = deriveClosure(ClosureKind::Gamma, Quantifier::Ex,
                              {x, y}, mkExists(y, mkExists(x, B)));
  // gamma closure over bound-only variables typechecks
  CHECK_NOTHROW(typecheck(g2, SystemId::QDS));

  ArrowPtr r1 = renClosure({x}, {y}, aId(Px));
  CHECK(arrowEqual(r1, aRen(x, y, aId(Px))));
}

TEST_CASE("deriveXi typing") {
  FormulaPtr A = mkAtom("A0");
  SequentType t = typecheck(deriveXi(Xi::DeltaCheck, Px, A), SystemId::QPNneg);
  CHECK(equal(t.src, A));
  CHECK(equal(t.tgt, mkAnd(A, mkOr(mkNeg(Px), Px))));

  SequentType t2 = typecheck(deriveXi(Xi::SigmaHat, Q0, A), SystemId::QPNneg);
  CHECK(equal(t2.src, mkOr(mkAnd(Q0, mkNeg(Q0)), A)));
  CHECK(equal(t2.tgt, A));

  // All fourteen abbreviations typecheck on a quantified crown.
  FormulaPtr crown = mkAtom("R", {x, y});
  for (Xi which : {Xi::SigmaAll, Xi::DeltaEx, Xi::DeltaCheck, Xi::SigmaHat,
                   Xi::DeltaCheckP, Xi::SigmaHatP, Xi::DeltaAllP, Xi::SigmaExP,
                   Xi::SigmaAllP, Xi::DeltaExP, Xi::SigmaCheck, Xi::DeltaHat,
                   Xi::SigmaCheckP, Xi::DeltaHatP})
    CHECK_NOTHROW(typecheck(deriveXi(which, crown, A), SystemId::QPNneg));
}

TEST_CASE("deriveXiI agrees with the primitive on trivial indices") {
  FormulaPtr P2 = mkAtom("P2", {x, y});
  FormulaPtr A = mkAtom("A0");
  XiIndex idx;
  idx.atom = P2;
  idx.stem = A;
  idx.outerVars = freeVarSequence(P2);
  ArrowPtr gen = deriveXiI(XiI::DeltaAll, idx);
  ArrowPtr prim = aDeltaAll(P2, A);
  CHECK(sequentEqual(typecheck(gen, SystemId::QPNneg), typecheck(prim, SystemId::QPNneg)));
  CHECK(graphEq(graphOf(gen, SystemId::QPNneg), graphOf(prim, SystemId::QPNneg)));

  ArrowPtr genS = deriveXiI(XiI::SigmaEx, idx);
  ArrowPtr primS = aSigmaEx(P2, A);
  CHECK(sequentEqual(typecheck(genS, SystemId::QPNneg), typecheck(primS, SystemId::QPNneg)));
  CHECK(graphEq(graphOf(genS, SystemId::QPNneg), graphOf(primS, SystemId::QPNneg)));
}

TEST_CASE("deriveXiI with foreign prefixes and outer variables") {
  FormulaPtr P2 = mkAtom("P2", {x});
  FormulaPtr A = mkAtom("A0", {z});
  XiIndex idx;
  idx.atom = P2;
  idx.stem = A;
  idx.outerVars = {x, y};
  idx.sLeft = {{Quantifier::All, u}};
  idx.sRight = {{Quantifier::Ex, v}};
  for (XiI which : {XiI::DeltaAll, XiI::SigmaEx, XiI::SigmaAll, XiI::DeltaEx,
                    XiI::DeltaAllP, XiI::SigmaExP, XiI::SigmaAllP, XiI::DeltaExP}) {
    ArrowPtr t = deriveXiI(which, idx);
    CHECK_NOTHROW(typecheck(t, SystemId::QPNneg));
  }
  SequentType ty = typecheck(deriveXiI(XiI::DeltaAll, idx), SystemId::QPNneg);
  FormulaPtr crown =
      mkForall(y, mkForall(x, mkOr(mkExists(v, mkNeg(P2)), mkForall(u, P2))));
  // closure order: outerVars first-listed innermost
  CHECK(equal(ty.tgt, mkAnd(A, crown)));
}

TEST_CASE("acIso connects members of one form set") {
  FormulaPtr a = mkAnd(mkAnd(mkAtom("P"), mkAtom("Q")), mkAtom("R", {x, x}));
  FormulaPtr b = mkAnd(mkAtom("R", {x, x}), mkAnd(mkAtom("Q"), mkAtom("P")));
  ArrowPtr iso = acIso(a, b);
  SequentType t = typecheck(iso, SystemId::QDS);
  CHECK(equal(t.src, a));
  CHECK(equal(t.tgt, b));
  // letters are preserved pointwise
  KMGraph g = graphOf(iso, SystemId::QDS);
  for (const auto& [p, q] : g.links) {
    REQUIRE(p.side != q.side);
    const auto& sp = p.side == 0 ? g.srcProfile[p.idx] : g.srcProfile[q.idx];
    const auto& tp = p.side == 0 ? g.tgtProfile[q.idx] : g.tgtProfile[p.idx];
    CHECK(sp.letter == tp.letter);
  }
}

TEST_CASE("acIso on random shuffles") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    TermGen gen(SystemId::QDS, GenOptions{.diversified = true}, seed);
    FormulaPtr f = gen.formula(7);
    FormulaPtr c = canonFormSet(f);
    ArrowPtr iso = acIso(f, c);
    SequentType t = typecheck(iso, SystemId::QDS);
    REQUIRE(equal(t.src, f));
    REQUIRE(equal(t.tgt, c));
    REQUIRE(wellFormed(graphOf(iso, SystemId::QDS)));
  }
}

TEST_CASE("double negation has an identity-like graph") {
  FormulaPtr B = mkOr(Px, mkAtom("Q"));
  ArrowPtr n = buildDoubleNeg(B);
  SequentType t = typecheck(n, SystemId::QPNneg);
  CHECK(equal(t.src, B));
  CHECK(equal(t.tgt, mkNeg(mkNeg(B))));
  KMGraph g = graphOf(n, SystemId::QPNneg);
  KMGraph idg;
  idg.srcProfile = atomProfile(B);
  idg.tgtProfile = atomProfile(mkNeg(mkNeg(B)));
  for (size_t i = 0; i < idg.srcProfile.size(); ++i)
    idg.links.insert(mkLink({0, (int)i}, {1, (int)i}));
  CHECK(graphEq(g, idg));

  ArrowPtr ni = buildDoubleNegInv(B);
  SequentType t2 = typecheck(ni, SystemId::QPNneg);
  CHECK(equal(t2.src, mkNeg(mkNeg(B))));
  CHECK(equal(t2.tgt, B));
  KMGraph gi = graphOf(ni, SystemId::QPNneg);
  KMGraph round = composeGraphs(gi, g);
  CHECK(graphEq(round, identityGraph(B)));
}
