#ifndef LPK_ARROW_HPP
#define LPK_ARROW_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lpk/formset.hpp"
#include "lpk/formula.hpp"
#include "lpk/system.hpp"

namespace lpk {

struct Arrow;
using ArrowPtr = std::shared_ptr<const Arrow>;

enum class ATag {
  Id,         // 1_A
  BHat,       // associativity for &  (fwd: A&(B&C) |- (A&B)&C)
  BCheck,     // associativity for |
  CHat,       // A&B |- B&A
  CCheck,     // B|A |- A|B
  D,          // A&(B|C) |- (A&B)|C
  IotaAll,    // all x A |- A
  IotaEx,     // A |- some x A
  GammaAll,   // D |- all x D,   x not free in D
  GammaEx,    // some x D |- D,  x not free in D
  ThetaAllR,  // all x (A|D) |- (all x A)|D,   x not free in D
  ThetaExL,   // (some x A)&D |- some x (A&D), x not free in D
  DeltaAll,   // A |- A & closure(~B|B)
  SigmaEx,    // closure(B&~B) | A |- A
  Mix,        // A&B |- A|B
  Comp,       // g . f
  Tensor,     // f1 & f2 / f1 | f2
  Quant,      // Q_x f
  Ren,        // [f]^x_y
  Meta,       // schema pattern slot
};

struct Arrow {
  ATag tag;
  bool fwd = true;                 // BHat/BCheck direction
  FormulaPtr a, b, c;              // formula indices, meaning depends on tag
  Var x, y;                        // variable indices
  BinOp op = BinOp::And;           // Tensor
  Quantifier q = Quantifier::All;  // Quant
  ArrowPtr f, g;                   // children; Comp stores g after f
  std::string meta;                // Meta slot name
};

struct SequentType {
  FormulaPtr src, tgt;
};

bool sequentEqual(const SequentType& a, const SequentType& b);
std::string printSequent(const SequentType& t);

ArrowPtr aId(FormulaPtr a);
ArrowPtr aBHat(bool fwd, FormulaPtr a, FormulaPtr b, FormulaPtr c);
ArrowPtr aBCheck(bool fwd, FormulaPtr a, FormulaPtr b, FormulaPtr c);
ArrowPtr aCHat(FormulaPtr a, FormulaPtr b);
ArrowPtr aCCheck(FormulaPtr a, FormulaPtr b);
ArrowPtr aD(FormulaPtr a, FormulaPtr b, FormulaPtr c);
ArrowPtr aIota(Quantifier q, Var x, FormulaPtr a);
ArrowPtr aGamma(Quantifier q, Var x, FormulaPtr d);
ArrowPtr aThetaAllR(Var x, FormulaPtr a, FormulaPtr d);
ArrowPtr aThetaExL(Var x, FormulaPtr a, FormulaPtr d);
ArrowPtr aDeltaAll(FormulaPtr crown, FormulaPtr stem);
ArrowPtr aSigmaEx(FormulaPtr crown, FormulaPtr stem);
ArrowPtr aMix(FormulaPtr a, FormulaPtr b);
ArrowPtr aComp(ArrowPtr g, ArrowPtr f);
// Composes a chain given outermost-last: aCompChain({f1, f2, f3}) = f3.f2.f1
ArrowPtr aCompChain(const std::vector<ArrowPtr>& firstToLast);
ArrowPtr aTensor(BinOp op, ArrowPtr f1, ArrowPtr f2);
ArrowPtr aQuant(Quantifier q, Var x, ArrowPtr f);
ArrowPtr aRen(Var x, Var y, ArrowPtr f);
ArrowPtr aMeta(std::string slot);

// Renaming node constructor required by the spec surface; typechecks the
// result in `system` before returning it.
ArrowPtr mkRename(const Var& x, const Var& y, const ArrowPtr& f, SystemId system);

// Structural equality of arrow terms.
bool arrowEqual(const ArrowPtr& a, const ArrowPtr& b);

int arrowSize(const ArrowPtr& t);

// child list in position order (Comp: {f, g}; Tensor: {f1, f2})
std::vector<ArrowPtr> arrowChildren(const ArrowPtr& t);
ArrowPtr withChildren(const ArrowPtr& t, const std::vector<ArrowPtr>& ch);

enum class TypeMode {
  Formula,  // objects are formulas; composition needs syntactic agreement
  FormSet,  // objects are form sets; endpoints are canonical representatives
};

// Typechecker with a per-instance memo table. Throws TypeError /
// ProvisoViolation / UndefinedSubstitution / SystemViolation.
class Typechecker {
 public:
  Typechecker(SystemId system, TypeMode mode) : system_(system), mode_(mode) {}

  SequentType type(const ArrowPtr& t);

  SystemId system() const { return system_; }
  TypeMode mode() const { return mode_; }

 private:
  SequentType compute(const ArrowPtr& t);
  FormulaPtr norm(const FormulaPtr& f);
  bool sameObject(const FormulaPtr& a, const FormulaPtr& b);
  void requireLegal(const FormulaPtr& f, const char* what);

  SystemId system_;
  TypeMode mode_;
  std::map<const Arrow*, SequentType> memo_;
};

// One-shot helpers.
SequentType typecheck(const ArrowPtr& t, SystemId system);
SequentType typecheckFS(const ArrowPtr& t, SystemId system);
bool typechecks(const ArrowPtr& t, SystemId system);

// Deterministic fresh-variable source, one per normalization run.
class Gensym {
 public:
  Var fresh() { return Var{"v$" + std::to_string(++counter_)}; }

 private:
  long counter_ = 0;
};

}  // namespace lpk

#endif
