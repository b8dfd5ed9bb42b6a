#ifndef LPK_RANDOM_HPP
#define LPK_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lpk/arrow.hpp"

namespace lpk {

using Rng = std::mt19937_64;

struct GenOptions {
  int sizeBudget = 10;
  int maxFormulaSize = 6;
  int maxVars = 4;
  bool diversified = false;  // fresh predicate letter per atom
};

class TermGen {
 public:
  TermGen(SystemId system, GenOptions opt, uint64_t seed);

  // Well-typed by construction; budget exhaustion degrades to identities.
  ArrowPtr arrow(int budget);
  // Random extension chain with the given source.
  ArrowPtr arrowFrom(const FormulaPtr& src, int budget);
  FormulaPtr formula(int maxSize);

  Rng& rng() { return rng_; }
  SystemId system() const { return system_; }

 private:
  FormulaPtr atomish();
  ArrowPtr step(const FormulaPtr& at);
  ArrowPtr rootStep(const FormulaPtr& at);
  Var pickVar();
  Var pickVarNotFreeIn(const FormulaPtr& f);
  int dice(int n);

  SystemId system_;
  GenOptions opt_;
  Rng rng_;
  std::vector<Var> vars_;
  long freshLetters_ = 0;
};

// Deterministic per seed; covers every constructor legal in the system with
// nonzero probability.
ArrowPtr genRandomArrow(SystemId system, int sizeBudget, uint64_t seed);
ArrowPtr genRandomArrowDiversified(SystemId system, int sizeBudget, uint64_t seed);

}  // namespace lpk

#endif
