#ifndef LPK_DECIDE_HPP
#define LPK_DECIDE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpk/graph.hpp"
#include "lpk/schema.hpp"

namespace lpk {

// Outcome of the coherence-based equality decision. Equal means: same
// sequent type (syntactically) and equal Kelly-Mac Lane graphs; by the
// coherence theorems this coincides with equality in the free category.
struct Verdict {
  enum class Kind { Equal, Unequal, TypeMismatch } kind;
  // Unequal: the first differing link or profile position.
  std::optional<GraphDiff> witness;
  // TypeMismatch: the two sequents.
  std::string lhsType, rhsType;

  bool isEqual() const { return kind == Kind::Equal; }
  std::string toJson() const;
};

Verdict decideEq(const ArrowPtr& f, const ArrowPtr& g, SystemId system);

// Position = child-index path from the root (Comp/Tensor: f then g).
using TermPath = std::vector<int>;

ArrowPtr subtermAt(const ArrowPtr& t, const TermPath& path);
ArrowPtr replaceAt(const ArrowPtr& t, const TermPath& path, const ArrowPtr& repl);
std::vector<TermPath> allPaths(const ArrowPtr& t);

// Applies one schema instance at the addressed subterm, left-to-right or
// right-to-left. nullopt = NoMatch (also when the schema has no structural
// pattern on the matched side, or the rewritten term no longer typechecks).
std::optional<ArrowPtr> rewriteOnce(const ArrowPtr& t, const AxiomSchema& schema,
                                    const TermPath& path, bool leftToRight,
                                    SystemId system);

// Random chain of successful rewriteOnce steps; for closure tests.
ArrowPtr randomRewriteChain(const ArrowPtr& t, SystemId system, int steps, Rng& rng,
                            int attemptsPerStep = 60);

}  // namespace lpk

#endif
