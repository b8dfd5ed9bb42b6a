#include <catch2/catch_amalgamated.hpp>

#include "lpk/decide.hpp"
#include "lpk/schema.hpp"

using namespace lpk;

namespace {

// Every schema: a batch of proviso-respecting instances must exist, and each
// must decide Equal. This is the soundness loop at unit-test scale; the
// acceptance suite runs it at 100 instances per schema.
void soundnessBatch(SystemId system, int instances) {
  const auto& schemas = axiomSchemas(system);
  REQUIRE_FALSE(schemas.empty());
  uint64_t seed = 0;
  for (const auto& schema : schemas) {
    GenOptions opt;
    TermGen gen(system, opt, 1234 + (seed++) * 77 + (uint64_t)system);
    int done = 0;
    for (int i = 0; i < instances; ++i) {
      auto inst = sampleInstance(schema, system, gen);
      INFO("schema " << schema.name << " system " << systemName(system));
      REQUIRE(inst.has_value());
      Verdict v = decideEq(inst->lhs, inst->rhs, system);
      if (!v.isEqual()) {
        INFO("verdict " << v.toJson());
      }
      REQUIRE(v.isEqual());
      ++done;
    }
    REQUIRE(done == instances);
  }
}

}  // namespace

TEST_CASE("the QDS table carries the paper's labels") {
  const auto& qds = axiomSchemas(SystemId::QDS);
  auto names = [&](const char* n) {
    for (const auto& s : qds)
      if (s.name == n) return true;
    return false;
  };
  CHECK(names("(d∧)"));
  CHECK(names("(cat 2)"));
  CHECK(names("(ren 6)"));
  CHECK(names("(∀β)"));
  // mix equations are absent from QDS but present in QMDS
  const auto& qmds = axiomSchemas(SystemId::QMDS);
  CHECK(qmds.size() >= qds.size() + 4);
  int mixCount = 0;
  for (const auto& s : qmds)
    if (s.name == "(m nat)" || s.name == "(b̂ m)" || s.name == "(b̌ m)" ||
        s.name == "(c m)")
      ++mixCount;
  CHECK(mixCount == 4);
  for (const auto& s : qds) {
    CHECK(s.name != "(m nat)");
    CHECK(s.name != "(Δ∀ nat)");
  }
}

TEST_CASE("derived equations are flagged") {
  int derived = 0, stipulated = 0;
  for (const auto& s : axiomSchemas(SystemId::QMPNneg)) (s.derived ? derived : stipulated)++;
  CHECK(derived >= 30);
  CHECK(stipulated >= 60);
}

TEST_CASE("schema soundness: QDS") { soundnessBatch(SystemId::QDS, 8); }
TEST_CASE("schema soundness: QMDS") { soundnessBatch(SystemId::QMDS, 8); }
TEST_CASE("schema soundness: QPN-neg") { soundnessBatch(SystemId::QPNneg, 8); }
TEST_CASE("schema soundness: QMPN-neg") { soundnessBatch(SystemId::QMPNneg, 6); }
TEST_CASE("schema soundness: QPN") { soundnessBatch(SystemId::QPN, 6); }
TEST_CASE("schema soundness: QMPN") { soundnessBatch(SystemId::QMPN, 6); }
