#ifndef LPK_DERIVED_HPP
#define LPK_DERIVED_HPP

#include <utility>
#include <vector>

#include "lpk/arrow.hpp"

namespace lpk {

// d^R_{C,B,A} : (C|B)&A |- C|(B&A)
ArrowPtr deriveDR(const FormulaPtr& c, const FormulaPtr& b, const FormulaPtr& a);

// Change of bound variable. `a` is a template in which `x` is a placeholder:
//   All: forall_s a^x_s |- forall_t a^x_t
//   Ex:  some_s a^x_s   |- some_t a^x_t
// Proviso: s and t not free in a; both substitutions defined.
ArrowPtr deriveTau(const FormulaPtr& a, const Var& x, const Var& s, const Var& t,
                   Quantifier q);

// n-fold version over parallel variable vectors.
ArrowPtr deriveTauSeq(const FormulaPtr& a, const std::vector<Var>& xs,
                      const std::vector<Var>& ss, const std::vector<Var>& ts,
                      Quantifier q);

enum class ThetaVariant {
  AllOr,   // forall_x A | D  |- forall_x (A|D)
  ExAnd,   // some_x (A&D)    |- some_x A & D
  AllAnd,  // forall_x A & D  |- forall_x (A&D)
  ExOr,    // some_x (A|D)    |- some_x A | D
};

ArrowPtr deriveTheta(ThetaVariant variant, const Var& x, const FormulaPtr& a,
                     const FormulaPtr& d);

enum class ClosureKind { Iota, Gamma };

// iota/gamma closures over a variable vector (first variable innermost):
//   (Iota, All):  forall_{Xn} B |- B       (Gamma, All): B |- forall_{Xn} B
//   (Iota, Ex):   B |- some_{Xn} B         (Gamma, Ex):  some_{Xn} B |- B
ArrowPtr deriveClosure(ClosureKind kind, Quantifier q, const std::vector<Var>& vars,
                       const FormulaPtr& b);

// [f]^{Xn}_{Yn}
ArrowPtr renClosure(const std::vector<Var>& xs, const std::vector<Var>& ys, ArrowPtr f);

// The fourteen crown/stem abbreviations.
enum class Xi {
  SigmaAll,    // A |- closure(~B|B) & A
  DeltaEx,     // A | closure(B&~B) |- A
  DeltaCheck,  // A |- A & (~B|B)
  SigmaHat,    // (B&~B) | A |- A
  DeltaCheckP,
  SigmaHatP,
  DeltaAllP,
  SigmaExP,
  SigmaAllP,
  DeltaExP,
  SigmaCheck,
  DeltaHat,
  SigmaCheckP,
  DeltaHatP,
};

ArrowPtr deriveXi(Xi which, const FormulaPtr& crown, const FormulaPtr& stem);

using PrefixSeq = std::vector<std::pair<Quantifier, Var>>;

FormulaPtr applyPrefix(const PrefixSeq& s, FormulaPtr b);
bool prefixForeignTo(const PrefixSeq& s, const FormulaPtr& b);

// j^{->}_{S,B} : B |- SB and j^{<-}_{S,B} : SB |- B, for S foreign to B.
ArrowPtr jIso(bool intro, const PrefixSeq& s, const FormulaPtr& b);

struct XiIndex {
  FormulaPtr atom;            // P Xn
  FormulaPtr stem;            // A
  std::vector<Var> outerVars; // Ym, arbitrary
  PrefixSeq sLeft;            // S,    foreign to the atom
  PrefixSeq sRight;           // Sneg, foreign to the atom
};

enum class XiI {
  DeltaAll,  // A |- A & forall_{Ym}(Sneg ~P | S P)
  SigmaEx,   // some_{Ym}(S P & Sneg ~P) | A |- A
  SigmaAll,
  DeltaEx,
  DeltaAllP,
  SigmaExP,
  SigmaAllP,
  DeltaExP,
};

ArrowPtr deriveXiI(XiI which, const XiIndex& idx);

// forall_u forall_v C |- forall_v forall_u C (and the dual for Ex).
ArrowPtr quantSwap(Quantifier q, const Var& u, const Var& v, const FormulaPtr& c);

// Identity-graph isomorphism between two members of one form set, built
// from the associativity and commutativity primitives.
ArrowPtr acIso(const FormulaPtr& from, const FormulaPtr& to);

// n^{->}_B : B |- ~~B (identity-like graph).
ArrowPtr buildDoubleNeg(const FormulaPtr& b);
// ~~B |- B
ArrowPtr buildDoubleNegInv(const FormulaPtr& b);

}  // namespace lpk

#endif
