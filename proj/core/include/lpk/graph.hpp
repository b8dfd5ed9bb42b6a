#ifndef LPK_GRAPH_HPP
#define LPK_GRAPH_HPP

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpk/arrow.hpp"

namespace lpk {

struct GPos {
  int side;  // 0 = source, 1 = target
  int idx;
  friend auto operator<=>(const GPos&, const GPos&) = default;
};

using GLink = std::pair<GPos, GPos>;

GLink mkLink(GPos a, GPos b);

// A perfect matching over the atom occurrences of a sequent, plus the count
// of circles discarded during composition.
struct KMGraph {
  std::vector<AtomOccurrence> srcProfile, tgtProfile;
  std::set<GLink> links;
  long loopCount = 0;
};

KMGraph identityGraph(const FormulaPtr& a);

// g after f; traces alternating paths through the shared middle profile and
// counts the circles that stay inside it.
KMGraph composeGraphs(const KMGraph& g, const KMGraph& f);

KMGraph tensorGraphs(const KMGraph& f, const KMGraph& g);

// Profile (letters and polarities, positionwise) and link-set equality;
// loopCount is deliberately ignored.
bool graphEq(const KMGraph& a, const KMGraph& b);

// First discrepancy between two graphs, for Unequal witnesses.
struct GraphDiff {
  enum class Kind { ProfileLength, ProfileEntry, Link } kind;
  int side = 0;    // profile diffs
  int pos = 0;     // profile diffs
  GLink link;      // link diffs
  bool inLhs = false;
  std::string describe() const;
};
std::vector<GraphDiff> graphDiff(const KMGraph& a, const KMGraph& b);

std::string toDot(const KMGraph& g, bool withLoops = true);
std::string toCompact(const KMGraph& g, bool withLoops = false);

// Structural evaluation of the functor G.
KMGraph graphOf(const ArrowPtr& t, SystemId system);

// Form-set variant: endpoints are canonical representatives. The term is
// first realized as a formula-level arrow by bridging compositions with
// AC isomorphisms.
KMGraph graphOfFS(const ArrowPtr& t, SystemId system);

// Realization used by graphOfFS; exposed for the normalization pipeline.
ArrowPtr toFormulaArrow(const ArrowPtr& t, SystemId system);

// Matching well-formedness (degree-1 everywhere, letters agree, polarity
// rule: cross-side links join equal, same-side links opposite polarities).
bool wellFormed(const KMGraph& g);

// Lemma-shaped configurations over a term's graph.
// True iff some cross-side link has its source atom directly under
// prefixes-then-& while its target atom sits under prefixes-then-|.
bool hasAndOrConfig(const KMGraph& g, const FormulaPtr& src, const FormulaPtr& tgt);
// True iff two links pair atoms that are direct |-siblings in the source
// with atoms that are direct &-siblings in the target.
bool hasOrAndConfig(const KMGraph& g, const FormulaPtr& src, const FormulaPtr& tgt);

}  // namespace lpk

#endif
