#ifndef LPK_GENTZEN_HPP
#define LPK_GENTZEN_HPP

#include <memory>
#include <vector>

#include "lpk/arrow.hpp"

namespace lpk {

// Sequent-style derivation terms over form sets, for GQDS/GQMDS.
//
// The two-premise rules carry optional contexts, recovered from the premise
// sequents by letters (diversification makes this unambiguous):
//   Id    1_X : X |- X                        (X atomic)
//   Cut   f : U |- X v Z   g : X & Y |- W     =>  U & Y |- W v Z
//   And   f : X1 |- Y1 v Z1   g : X2 |- Y2 v Z2  =>  X1 & X2 |- (Y1&Y2) v Z1 v Z2
//   Or    f : X1 & U1 |- W1   g : X2 & U2 |- W2  =>  (X1vX2) & U1 & U2 |- W1 v W2
//   AllL  f : X^x_y & Z |- U   =>  forall_x X & Z |- U
//   AllR  f : U |- X^x_u v Z   =>  U |- forall_x X v Z      (u eigenvariable)
//   ExL   f : X^x_u & Z |- U   =>  some_x X & Z |- U        (u eigenvariable)
//   ExR   f : U |- X^x_y v Z   =>  U |- some_x X v Z
//   Ren   f : X |- Y           =>  X^x_y |- Y^x_y
//   Mix   f : U |- Z   g : Y |- W  =>  U & Y |- Z v W
enum class GTag { Id, Cut, And, Or, AllL, AllR, ExL, ExR, Ren, Mix };

struct GTerm;
using GPtr = std::shared_ptr<const GTerm>;

struct GTerm {
  GTag tag;
  FormulaPtr idx1, idx2;  // And: Y1,Y2; Or: X1,X2; Cut/Q-rules: the distinguished X
  Var x, y;               // Q-rules: bound variable, instantiation/eigen variable
  GPtr f, g;
  FormulaPtr src, tgt;  // canonical form sets, computed at construction
};

GPtr gId(FormulaPtr atom);
GPtr gCut(FormulaPtr cutFormula, GPtr f, GPtr g);
GPtr gAnd(FormulaPtr y1, FormulaPtr y2, GPtr f, GPtr g);
GPtr gOr(FormulaPtr x1, FormulaPtr x2, GPtr f, GPtr g);
GPtr gAllL(Var x, FormulaPtr bound, Var inst, GPtr f);
GPtr gAllR(Var x, FormulaPtr bound, Var eigen, GPtr f);
GPtr gExL(Var x, FormulaPtr bound, Var eigen, GPtr f);
GPtr gExR(Var x, FormulaPtr bound, Var inst, GPtr f);
GPtr gRen(Var x, Var y, GPtr f);
GPtr gMix(GPtr f, GPtr g);

bool gEqual(const GPtr& a, const GPtr& b);
int gSize(const GPtr& t);
// Same tree after erasing Ren nodes, up to indices.
bool gAnalogous(const GPtr& a, const GPtr& b);

// QMDS when a mix node occurs, else QDS.
SystemId gentzenSystem(const GPtr& t);

bool isCutFree(const GPtr& t);
bool isRenamingFree(const GPtr& t);
// No variable participates both free and bound across the subterm sequents.
bool isVariablePure(const GPtr& t);

// The denotation map into form-set arrow terms.
ArrowPtr denote(const GPtr& t);

// Every (diversified) GQDS/GQMDS arrow term is denoted by a Gentzen term
// with the same sequent and graph.
GPtr gentzenize(const ArrowPtr& f, SystemId system, Gensym& gen);

// f = h2 . core . h1 with core variable-pure and h1, h2 compositions of
// bound-variable-change isomorphisms.
struct PurifyResult {
  ArrowPtr h2;
  GPtr core;
  ArrowPtr h1;
};
PurifyResult purify(const GPtr& t, Gensym& gen);

// Strengthened renaming elimination: requires variable-pure and cut-free
// input; the result has the same sequent and is node-for-node analogous.
GPtr eliminateRenaming(const GPtr& t, Gensym& gen);

// Node-for-node index substitution [t]^x_y used by the strengthened
// renaming elimination and the eigendiversification transform.
GPtr reindexGentzen(const GPtr& t, const Var& x, const Var& y, Gensym& gen);

// Cut elimination for variable-pure terms; lexicographic (m, n) descent is
// asserted on every reduction step.
struct CutMeasure {
  int m = 0;  // predicate letters + quantifier prefixes in the cut form set
  int n = 0;  // rank
  friend bool operator<(const CutMeasure& a, const CutMeasure& b) {
    return a.m < b.m || (a.m == b.m && a.n < b.n);
  }
};
GPtr eliminateCut(const GPtr& t, Gensym& gen);
CutMeasure cutMeasure(const FormulaPtr& cutFormula, const GPtr& f, const GPtr& g);

// Inverts a final AllR (resp. ExL) up to denotation graph: the result f'
// satisfies AllR(x, X, u, f') == t at the graph level.
GPtr invertRight(const GPtr& t, bool allR, Gensym& gen);

}  // namespace lpk

#endif
