#ifndef LPK_FORMULA_HPP
#define LPK_FORMULA_HPP

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lpk/errors.hpp"
#include "lpk/system.hpp"

namespace lpk {

struct Var {
  std::string name;

  friend auto operator<=>(const Var&, const Var&) = default;
};

enum class BinOp { And, Or };
enum class Quantifier { All, Ex };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree. Meta nodes appear only inside axiom-schema
// patterns, never in user formulas.
struct Formula {
  enum class Tag { Atom, Neg, Bin, Quant, Meta };

  Tag tag;
  std::string pred;       // Atom: letter name; Meta: slot name
  std::vector<Var> args;  // Atom only
  BinOp op = BinOp::And;  // Bin only
  FormulaPtr left;        // Bin left; Neg/Quant body
  FormulaPtr right;       // Bin right
  Quantifier q = Quantifier::All;
  Var var;  // Quant only
};

FormulaPtr mkAtom(std::string pred, std::vector<Var> args = {});
FormulaPtr mkNeg(FormulaPtr body);
FormulaPtr mkBin(BinOp op, FormulaPtr l, FormulaPtr r);
FormulaPtr mkAnd(FormulaPtr l, FormulaPtr r);
FormulaPtr mkOr(FormulaPtr l, FormulaPtr r);
FormulaPtr mkQuant(Quantifier q, Var x, FormulaPtr body);
FormulaPtr mkForall(Var x, FormulaPtr body);
FormulaPtr mkExists(Var x, FormulaPtr body);
FormulaPtr mkMetaFormula(std::string slot);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Total order on formulas; used for deterministic containers only.
int compare(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return compare(a, b) < 0;
  }
};

std::string printFormula(const FormulaPtr& a);

// A^x_y; null when y is not free for substitution for x in A.
// No alpha-conversion happens anywhere in the kernel.
FormulaPtr subst(const FormulaPtr& a, const Var& x, const Var& y);

bool substDefined(const FormulaPtr& a, const Var& x, const Var& y);

std::set<Var> freeVars(const FormulaPtr& a);
bool isFreeIn(const Var& x, const FormulaPtr& a);
// True iff Q_x occurs in A, even vacuously.
bool isBoundIn(const Var& x, const FormulaPtr& a);
std::set<Var> allBoundVars(const FormulaPtr& a);

// Mutually distinct free variables in order of first free occurrence.
std::vector<Var> freeVarSequence(const FormulaPtr& a);

struct AtomOccurrence {
  int position;  // 0-based, left to right
  std::string letter;
  int polarity;  // +1 / -1, parity of enclosing Neg nodes
  std::vector<Var> argVars;
};

std::vector<AtomOccurrence> atomProfile(const FormulaPtr& a);
int atomCount(const FormulaPtr& a);
bool isDiversified(const FormulaPtr& a);

// Q_{X_n} B = Q_{x_n} ... Q_{x_1} B  (first listed variable innermost).
FormulaPtr quantClosure(Quantifier q, const std::vector<Var>& vars, FormulaPtr body);

// Number of quantifier-prefix occurrences.
int quantPrefixCount(const FormulaPtr& a);
// Total node count, used by generators to bound formula size.
int formulaSize(const FormulaPtr& a);

// Predicate arities are fixed per letter within one run.
class ArityTable {
 public:
  // Registers the letter on first use; throws ParseError on mismatch.
  void checkOrRegister(const std::string& letter, int arity);
  std::map<std::string, int> table;
};

// Checks the Neg placement rules of the system's language.
bool inLanguage(const FormulaPtr& a, SystemId s);
void requireInLanguage(const FormulaPtr& a, SystemId s);

// Collects every predicate letter with its arity; throws ParseError on
// inconsistent arities inside `a`.
void collectArities(const FormulaPtr& a, ArityTable& t);

}  // namespace lpk

#endif
