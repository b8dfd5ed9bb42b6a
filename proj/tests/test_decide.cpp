#include <catch2/catch_amalgamated.hpp>

#include "lpk/decide.hpp"
#include "lpk/derived.hpp"

using namespace lpk;

namespace {
const Var x{"x"}, y{"y"};
const FormulaPtr P = mkAtom("P", {x});
const FormulaPtr P0 = mkAtom("P");
}  // namespace

TEST_CASE("decideEq on the quantifier isomorphisms") {
  FormulaPtr A = mkAtom("Q");
  ArrowPtr lhs = aComp(aGamma(Quantifier::All, x, A), aIota(Quantifier::All, x, A));
  Verdict v = decideEq(lhs, aId(mkForall(x, A)), SystemId::QDS);
  CHECK(v.isEqual());
  CHECK(v.toJson() == "{\"verdict\":\"equal\"}");

  ArrowPtr th = aThetaAllR(x, P, A);
  ArrowPtr thInv = deriveTheta(ThetaVariant::AllOr, x, P, A);
  CHECK(decideEq(aComp(th, thInv), aId(mkOr(mkForall(x, P), A)), SystemId::QDS).isEqual());
}

TEST_CASE("decideEq separates the twist from the identity") {
  Verdict v = decideEq(aCHat(P0, P0), aId(mkAnd(P0, P0)), SystemId::QDS);
  REQUIRE(v.kind == Verdict::Kind::Unequal);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == GraphDiff::Kind::Link);
  // the lhs twist links S0-T1
  CHECK(v.toJson().find("unequal") != std::string::npos);
}

TEST_CASE("decideEq reports type mismatches") {
  Verdict v = decideEq(aId(P0), aId(mkAnd(P0, P0)), SystemId::QDS);
  CHECK(v.kind == Verdict::Kind::TypeMismatch);
}

TEST_CASE("decideEq equivalence laws on random terms") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    ArrowPtr f = genRandomArrow(SystemId::QPNneg, 8, seed);
    CHECK(decideEq(f, f, SystemId::QPNneg).isEqual());
  }
  // congruence: composing equal arrows with the same context stays equal
  for (uint64_t seed = 0; seed < 40; ++seed) {
    ArrowPtr f = genRandomArrow(SystemId::QDS, 6, seed);
    SequentType ty = typecheck(f, SystemId::QDS);
    ArrowPtr f2 = aComp(aId(ty.tgt), f);  // equal by (cat 1)
    REQUIRE(decideEq(f, f2, SystemId::QDS).isEqual());
    ArrowPtr hf = aTensor(BinOp::And, f, aId(P0));
    ArrowPtr hf2 = aTensor(BinOp::And, f2, aId(P0));
    CHECK(decideEq(hf, hf2, SystemId::QDS).isEqual());
    CHECK(decideEq(aQuant(Quantifier::All, y, f), aQuant(Quantifier::All, y, f2),
                   SystemId::QDS)
              .isEqual());
  }
}

TEST_CASE("generator determinism and coverage") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    ArrowPtr a = genRandomArrow(SystemId::QMPNneg, 9, seed);
    ArrowPtr b = genRandomArrow(SystemId::QMPNneg, 9, seed);
    REQUIRE(arrowEqual(a, b));
  }
  // budget 1 degrades to an identity
  ArrowPtr tiny = genRandomArrow(SystemId::QDS, 1, 5);
  CHECK(tiny->tag == ATag::Id);

  // all draws typecheck; Delta shows up at modest budgets
  int deltas = 0;
  std::set<ATag> seen;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    ArrowPtr f = genRandomArrow(SystemId::QPNneg, 8, seed);
    REQUIRE(typechecks(f, SystemId::QPNneg));
    for (const auto& p : allPaths(f)) {
      ATag tag = subtermAt(f, p)->tag;
      seen.insert(tag);
      if (tag == ATag::DeltaAll) ++deltas;
    }
  }
  CHECK(deltas >= 1);
  CHECK(seen.count(ATag::SigmaEx) == 1);
  CHECK(seen.count(ATag::Ren) == 1);
  CHECK(seen.count(ATag::ThetaAllR) == 1);
}

TEST_CASE("rewriteOnce") {
  const auto& schemas = axiomSchemas(SystemId::QDS);
  auto find = [&](const char* n) -> const AxiomSchema& {
    for (const auto& s : schemas)
      if (s.name == n) return s;
    FAIL("schema not found");
    return schemas[0];
  };
  // (cat 1) right-to-left wraps an identity composition
  const auto& cat1 = find("(cat 1) right");
  auto wrapped = rewriteOnce(aId(P0), cat1, {}, false, SystemId::QDS);
  REQUIRE(wrapped.has_value());
  CHECK((*wrapped)->tag == ATag::Comp);
  CHECK(decideEq(*wrapped, aId(P0), SystemId::QDS).isEqual());

  // (forall beta) at the root of an iota-gamma composite
  const auto& beta = find("(∀β)");
  ArrowPtr redex =
      aComp(aIota(Quantifier::All, x, P0), aGamma(Quantifier::All, x, P0));
  auto reduced = rewriteOnce(redex, beta, {}, true, SystemId::QDS);
  REQUIRE(reduced.has_value());
  CHECK((*reduced)->tag == ATag::Id);

  // no match at a bad position
  CHECK_FALSE(rewriteOnce(aId(P0), beta, {}, true, SystemId::QDS).has_value());
}

TEST_CASE("random rewrite chains preserve the graph") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    for (SystemId s : {SystemId::QDS, SystemId::QMPNneg}) {
      ArrowPtr f = genRandomArrow(s, 7, seed * 11 + (uint64_t)s);
      Rng rng(seed);
      ArrowPtr g = randomRewriteChain(f, s, 10, rng);
      INFO("seed " << seed << " system " << systemName(s));
      REQUIRE(decideEq(f, g, s).isEqual());
    }
  }
}
