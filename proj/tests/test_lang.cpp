#include <catch2/catch_amalgamated.hpp>

#include "lpk/parse.hpp"
#include "lpk/random.hpp"

using namespace lpk;

namespace {
const Var x{"x"}, y{"y"}, z{"z"}, u{"u"};
}

TEST_CASE("parseFormula basics") {
  FormulaPtr f = parseFormula("all x. (P(x) | Q)", SystemId::QDS);
  REQUIRE(f->tag == Formula::Tag::Quant);
  REQUIRE(f->q == Quantifier::All);
  REQUIRE(f->var == x);
  REQUIRE(f->left->tag == Formula::Tag::Bin);
  REQUIRE(f->left->op == BinOp::Or);
  REQUIRE(equal(f->left->left, mkAtom("P", {x})));
  REQUIRE(equal(f->left->right, mkAtom("Q")));

  FormulaPtr g = parseFormula("some y. R(x,y)", SystemId::QDS);
  REQUIRE(equal(g, mkExists(y, mkAtom("R", {x, y}))));

  // quantifier body is a quant-chain, so '&' binds looser
  FormulaPtr h = parseFormula("all x. P(x) & Q", SystemId::QDS);
  REQUIRE(h->tag == Formula::Tag::Bin);
  REQUIRE(equal(h->left, mkForall(x, mkAtom("P", {x}))));
}

TEST_CASE("parseFormula rejects bad input") {
  CHECK_THROWS_AS(parseFormula("~ all x. P(x)", SystemId::QDS), SystemViolation);
  CHECK_THROWS_AS(parseFormula("~(P & Q)", SystemId::QPN), SystemViolation);
  CHECK_NOTHROW(parseFormula("~(P & Q)", SystemId::QPNneg));
  CHECK_THROWS_AS(parseFormula("P & Q | R", SystemId::QDS), ParseError);
  CHECK_NOTHROW(parseFormula("P & (Q | R)", SystemId::QDS));
  CHECK_NOTHROW(parseFormula("P & Q & R", SystemId::QDS));
  CHECK_THROWS_AS(parseFormula("P(", SystemId::QDS), ParseError);
  CHECK_THROWS_AS(parseFormula("p & Q", SystemId::QDS), ParseError);
}

TEST_CASE("arity is inferred at first use and enforced") {
  ArityTable t;
  parseFormula("P(x) & Q", SystemId::QDS, t);
  CHECK_THROWS_AS(parseFormula("P(x,y)", SystemId::QDS, t), ParseError);
  CHECK_NOTHROW(parseFormula("P(y)", SystemId::QDS, t));
}

TEST_CASE("print/parse round trip on random formulas") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    for (SystemId s : {SystemId::QDS, SystemId::QPNneg, SystemId::QPN}) {
      TermGen gen(s, GenOptions{}, seed * 7 + (int)s);
      FormulaPtr f = gen.formula(8);
      ArityTable t;
      collectArities(f, t);
      FormulaPtr g = parseFormula(printFormula(f), s, t);
      INFO(printFormula(f));
      REQUIRE(equal(f, g));
    }
  }
}

TEST_CASE("substitution") {
  // (some y. R(x,y))^x_y is not defined
  FormulaPtr f = mkExists(y, mkAtom("R", {x, y}));
  CHECK(subst(f, x, y) == nullptr);

  FormulaPtr p = mkAtom("P", {x});
  CHECK(equal(subst(p, x, x), p));

  FormulaPtr g = mkForall(x, mkAtom("P", {x}));
  CHECK(equal(subst(g, x, y), g));  // no free occurrence

  CHECK(equal(subst(mkAtom("R", {x, x}), x, y), mkAtom("R", {y, y})));
}

TEST_CASE("substitution invariants on random formulas") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    TermGen gen(SystemId::QPNneg, GenOptions{}, seed);
    FormulaPtr f = gen.formula(9);
    REQUIRE(equal(subst(f, x, x), f));
    FormulaPtr fy = subst(f, x, y);
    if (!fy) continue;
    auto fv = freeVars(f);
    auto fvy = freeVars(fy);
    std::set<Var> expect = fv;
    expect.erase(x);
    if (fv.count(x)) expect.insert(y);
    REQUIRE(fvy == expect);
  }
}

TEST_CASE("free and bound variables") {
  CHECK(isBoundIn(x, mkForall(x, mkAtom("P", {y}))));  // vacuous binder counts
  CHECK_FALSE(isFreeIn(x, mkForall(x, mkAtom("P", {x}))));
  auto fv = freeVars(mkAnd(mkAtom("R", {x, y}), mkAtom("P", {x})));
  CHECK(fv == std::set<Var>{x, y});
}

TEST_CASE("freeVarSequence") {
  // all y. (P(y,x) & some x. R(z,x,z))  ->  x, z
  FormulaPtr f = mkForall(
      y, mkAnd(mkAtom("P", {y, x}), mkExists(x, mkAtom("R", {z, x, z}))));
  CHECK(freeVarSequence(f) == std::vector<Var>{x, z});
  CHECK(freeVarSequence(mkAtom("P", {x})) == std::vector<Var>{x});
  CHECK(freeVarSequence(mkForall(x, mkAtom("P", {x}))).empty());
}

TEST_CASE("atomProfile") {
  FormulaPtr f = mkOr(mkNeg(mkAtom("P", {x})), mkAtom("P", {x}));
  auto prof = atomProfile(f);
  REQUIRE(prof.size() == 2);
  CHECK(prof[0].letter == "P");
  CHECK(prof[0].polarity == -1);
  CHECK(prof[1].polarity == +1);

  auto prof2 = atomProfile(mkForall(x, mkAtom("P", {x})));
  REQUIRE(prof2.size() == 1);
  CHECK(prof2[0].polarity == +1);

  auto prof3 = atomProfile(mkNeg(mkNeg(mkAtom("P"))));
  REQUIRE(prof3.size() == 1);
  CHECK(prof3[0].polarity == +1);

  // profile length invariant under quantification
  for (uint64_t seed = 0; seed < 50; ++seed) {
    TermGen gen(SystemId::QPNneg, GenOptions{}, seed);
    FormulaPtr g = gen.formula(7);
    CHECK(atomProfile(mkForall(u, g)).size() == atomProfile(g).size());
  }
}

TEST_CASE("isDiversified") {
  CHECK(isDiversified(mkAnd(mkAtom("P", {x}), mkAtom("Q"))));
  CHECK_FALSE(isDiversified(mkOr(mkAtom("P", {x}), mkAtom("P", {y}))));
  CHECK(isDiversified(mkForall(x, mkOr(mkAtom("P", {x}), mkAtom("R", {x, x})))));
}
