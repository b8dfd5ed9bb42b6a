#include <catch2/catch_amalgamated.hpp>

#include "lpk/derived.hpp"
#include "lpk/graph.hpp"
#include "lpk/random.hpp"
#include "support/naive_graph.hpp"

using namespace lpk;
using lpk::testsupport::naiveGraph;

namespace {
const Var x{"x"};
const FormulaPtr P = mkAtom("P");
const FormulaPtr Q = mkAtom("Q");
const FormulaPtr Px = mkAtom("P", {x});
}  // namespace

TEST_CASE("graphOf on primitives") {
  KMGraph sw = graphOf(aCHat(P, Q), SystemId::QDS);
  CHECK(sw.links == std::set<GLink>{mkLink({0, 0}, {1, 1}), mkLink({0, 1}, {1, 0})});

  KMGraph d = graphOf(aDeltaAll(Px, Q), SystemId::QPNneg);
  CHECK(d.links == std::set<GLink>{mkLink({0, 0}, {1, 0}), mkLink({1, 1}, {1, 2})});

  KMGraph m = graphOf(aMix(mkAnd(P, Q), mkAtom("R", {x, x})), SystemId::QMDS);
  CHECK(graphEq(m, identityGraph(mkAnd(mkAnd(P, Q), mkAtom("R", {x, x})))));

  // G(Q_x f) = G f
  ArrowPtr f = aCHat(P, Q);
  KMGraph qf = graphOf(aQuant(Quantifier::All, x, f), SystemId::QDS);
  CHECK(qf.links == sw.links);
}

TEST_CASE("composition traces paths and counts circles") {
  ArrowPtr dkk = deriveXi(Xi::DeltaCheck, P, P);   // P |- P & (~P | P)
  ArrowPtr shh = deriveXi(Xi::SigmaHat, P, P);     // (P & ~P) | P |- P
  ArrowPtr comp = aComp(shh, aComp(aD(P, mkNeg(P), P), dkk));
  KMGraph g = graphOf(comp, SystemId::QPNneg);
  CHECK(graphEq(g, identityGraph(P)));
  CHECK(g.loopCount == 0);

  // cap-only against cup-only forces one circle
  KMGraph cap;
  cap.tgtProfile = atomProfile(mkOr(mkNeg(P), P));
  cap.links.insert(mkLink({1, 0}, {1, 1}));
  KMGraph cup;
  cup.srcProfile = cap.tgtProfile;
  cup.links.insert(mkLink({0, 0}, {0, 1}));
  KMGraph circ = composeGraphs(cup, cap);
  CHECK(circ.links.empty());
  CHECK(circ.loopCount == 1);

  // identity is neutral and keeps loopCount
  KMGraph idg = identityGraph(mkOr(mkNeg(P), P));
  KMGraph same = composeGraphs(idg, cap);
  CHECK(graphEq(same, cap));
  CHECK(same.loopCount == cap.loopCount);

  KMGraph bad;
  bad.srcProfile = atomProfile(P);
  CHECK_THROWS_AS(composeGraphs(bad, idg), ProfileMismatch);
}

TEST_CASE("tensor of graphs") {
  KMGraph a = identityGraph(P);
  a.loopCount = 1;
  KMGraph b = identityGraph(Q);
  b.loopCount = 2;
  KMGraph t = tensorGraphs(a, b);
  CHECK(t.loopCount == 3);
  CHECK(t.links.size() == 2);
  CHECK(t.links.count(mkLink({0, 1}, {1, 1})) == 1);
}

TEST_CASE("graphEq ignores loopCount") {
  KMGraph a = identityGraph(P), b = identityGraph(P);
  b.loopCount = 5;
  CHECK(graphEq(a, b));
  KMGraph tw = graphOf(aCHat(P, P), SystemId::QDS);
  CHECK_FALSE(graphEq(tw, identityGraph(mkAnd(P, P))));
}

TEST_CASE("toDot and compact serialization") {
  KMGraph g = identityGraph(P);
  std::string dot = toDot(g);
  CHECK(dot.find("s0") != std::string::npos);
  CHECK(dot.find("t0") != std::string::npos);
  CHECK(dot.find("loops=0") != std::string::npos);
  CHECK(toCompact(g) == "1 1 | S0-T0");

  KMGraph d = graphOf(deriveXi(Xi::DeltaCheck, P, Q), SystemId::QPNneg);
  CHECK(toCompact(d) == "1 3 | S0-T0 T1-T2");

  KMGraph empty;
  std::string edot = toDot(empty);
  CHECK(edot.find("->") == std::string::npos);
}

TEST_CASE("functoriality") {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    ArrowPtr f = genRandomArrow(SystemId::QPNneg, 8, seed);
    SequentType ty = typecheck(f, SystemId::QPNneg);
    KMGraph via = graphOf(aComp(aId(ty.tgt), f), SystemId::QPNneg);
    CHECK(graphEq(via, graphOf(f, SystemId::QPNneg)));
  }
  ArrowPtr f1 = aCHat(P, Q), f2 = aCCheck(P, Q);
  KMGraph lhs = graphOf(aTensor(BinOp::And, f1, f2), SystemId::QDS);
  KMGraph rhs = tensorGraphs(graphOf(f1, SystemId::QDS), graphOf(f2, SystemId::QDS));
  CHECK(graphEq(lhs, rhs));
}

TEST_CASE("well-formedness on random terms") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    for (SystemId s : {SystemId::QDS, SystemId::QMDS, SystemId::QPNneg,
                       SystemId::QMPNneg, SystemId::QPN, SystemId::QMPN}) {
      ArrowPtr f = genRandomArrow(s, 9, seed * 13 + (uint64_t)s);
      KMGraph g = graphOf(f, s);
      INFO("seed " << seed << " system " << systemName(s));
      REQUIRE(wellFormed(g));
    }
  }
}

TEST_CASE("tying totality for the negation-free systems") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    for (SystemId s : {SystemId::QDS, SystemId::QMDS}) {
      ArrowPtr f = genRandomArrow(s, 9, seed * 5 + (uint64_t)s);
      KMGraph g = graphOf(f, s);
      for (const auto& [p, q] : g.links) REQUIRE(p.side != q.side);
    }
  }
}

TEST_CASE("naive tracer agrees with graphOf") {
  for (uint64_t seed = 0; seed < 400; ++seed) {
    for (SystemId s : {SystemId::QDS, SystemId::QMPNneg}) {
      ArrowPtr f = genRandomArrow(s, 10, seed * 3 + (uint64_t)s);
      KMGraph a = graphOf(f, s);
      KMGraph b = naiveGraph(f, s);
      INFO("seed " << seed << " system " << systemName(s));
      REQUIRE(a.links == b.links);
    }
  }
}

TEST_CASE("and-or configuration") {
  // m_{P,Q} itself is a witness in QMDS
  ArrowPtr m = aMix(P, Q);
  SequentType ty = typecheck(m, SystemId::QMDS);
  CHECK(hasAndOrConfig(graphOf(m, SystemId::QMDS), ty.src, ty.tgt));

  ArrowPtr c = aCHat(P, Q);
  SequentType ty2 = typecheck(c, SystemId::QDS);
  CHECK_FALSE(hasAndOrConfig(graphOf(c, SystemId::QDS), ty2.src, ty2.tgt));
}

TEST_CASE("lemma configurations never arise in QDS") {
  for (uint64_t seed = 0; seed < 400; ++seed) {
    ArrowPtr f = genRandomArrow(SystemId::QDS, 10, seed);
    SequentType ty = typecheck(f, SystemId::QDS);
    KMGraph g = graphOf(f, SystemId::QDS);
    INFO("seed " << seed);
    REQUIRE_FALSE(hasAndOrConfig(g, ty.src, ty.tgt));
    REQUIRE_FALSE(hasOrAndConfig(g, ty.src, ty.tgt));
  }
  for (uint64_t seed = 0; seed < 400; ++seed) {
    ArrowPtr f = genRandomArrow(SystemId::QMDS, 10, seed);
    SequentType ty = typecheck(f, SystemId::QMDS);
    KMGraph g = graphOf(f, SystemId::QMDS);
    REQUIRE_FALSE(hasOrAndConfig(g, ty.src, ty.tgt));
  }
}
