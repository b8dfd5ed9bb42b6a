#include "lpk/formula.hpp"

#include <algorithm>
#include <sstream>

namespace lpk {

FormulaPtr mkAtom(std::string pred, std::vector<Var> args) {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::Atom;
  f->pred = std::move(pred);
  f->args = std::move(args);
  return f;
}

FormulaPtr mkNeg(FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::Neg;
  f->left = std::move(body);
  return f;
}

FormulaPtr mkBin(BinOp op, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::Bin;
  f->op = op;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

FormulaPtr mkAnd(FormulaPtr l, FormulaPtr r) {
  return mkBin(BinOp::And, std::move(l), std::move(r));
}

FormulaPtr mkOr(FormulaPtr l, FormulaPtr r) {
  return mkBin(BinOp::Or, std::move(l), std::move(r));
}

FormulaPtr mkQuant(Quantifier q, Var x, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::Quant;
  f->q = q;
  f->var = std::move(x);
  f->left = std::move(body);
  return f;
}

FormulaPtr mkForall(Var x, FormulaPtr body) {
  return mkQuant(Quantifier::All, std::move(x), std::move(body));
}

FormulaPtr mkExists(Var x, FormulaPtr body) {
  return mkQuant(Quantifier::Ex, std::move(x), std::move(body));
}

FormulaPtr mkMetaFormula(std::string slot) {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::Meta;
  f->pred = std::move(slot);
  return f;
}

int compare(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  if (a->tag != b->tag) return a->tag < b->tag ? -1 : 1;
  switch (a->tag) {
    case Formula::Tag::Atom: {
      if (int c = a->pred.compare(b->pred)) return c < 0 ? -1 : 1;
      if (a->args != b->args) return a->args < b->args ? -1 : 1;
      return 0;
    }
    case Formula::Tag::Meta:
      return a->pred.compare(b->pred) < 0 ? -1 : (a->pred == b->pred ? 0 : 1);
    case Formula::Tag::Neg:
      return compare(a->left, b->left);
    case Formula::Tag::Bin: {
      if (a->op != b->op) return a->op < b->op ? -1 : 1;
      if (int c = compare(a->left, b->left)) return c;
      return compare(a->right, b->right);
    }
    case Formula::Tag::Quant: {
      if (a->q != b->q) return a->q < b->q ? -1 : 1;
      if (a->var != b->var) return a->var < b->var ? -1 : 1;
      return compare(a->left, b->left);
    }
  }
  return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) == 0; }

namespace {

// `bare` allows a Bin node to print without its own parentheses; chains of
// one operator stay bare on the right since the grammar is right-associative.
void printRec(const FormulaPtr& a, std::ostream& os, bool bare) {
  switch (a->tag) {
    case Formula::Tag::Atom: {
      os << a->pred;
      if (!a->args.empty()) {
        os << '(';
        for (size_t i = 0; i < a->args.size(); ++i) {
          if (i) os << ',';
          os << a->args[i].name;
        }
        os << ')';
      }
      return;
    }
    case Formula::Tag::Meta:
      os << '?' << a->pred;
      return;
    case Formula::Tag::Neg:
      os << '~';
      if (a->left->tag == Formula::Tag::Quant) {
        os << '(';
        printRec(a->left, os, false);
        os << ')';
      } else {
        printRec(a->left, os, false);
      }
      return;
    case Formula::Tag::Quant:
      os << (a->q == Quantifier::All ? "all " : "some ") << a->var.name << ". ";
      printRec(a->left, os, false);
      return;
    case Formula::Tag::Bin: {
      if (!bare) os << '(';
      printRec(a->left, os, false);
      os << (a->op == BinOp::And ? " & " : " | ");
      printRec(a->right, os,
               a->right->tag == Formula::Tag::Bin && a->right->op == a->op);
      if (!bare) os << ')';
      return;
    }
  }
}

}  // namespace

std::string printFormula(const FormulaPtr& a) {
  std::ostringstream os;
  printRec(a, os, true);
  return os.str();
}

namespace {

// Substitution worker: `underY` is true inside the scope of a Q_y binder.
// Returns null on the undefinedness condition.
FormulaPtr substRec(const FormulaPtr& a, const Var& x, const Var& y, bool underY) {
  switch (a->tag) {
    case Formula::Tag::Atom: {
      bool hit = std::find(a->args.begin(), a->args.end(), x) != a->args.end();
      if (!hit) return a;
      if (underY) return nullptr;
      std::vector<Var> args = a->args;
      for (auto& v : args)
        if (v == x) v = y;
      return mkAtom(a->pred, std::move(args));
    }
    case Formula::Tag::Meta:
      return a;
    case Formula::Tag::Neg: {
      auto b = substRec(a->left, x, y, underY);
      if (!b) return nullptr;
      return b.get() == a->left.get() ? a : mkNeg(b);
    }
    case Formula::Tag::Bin: {
      auto l = substRec(a->left, x, y, underY);
      if (!l) return nullptr;
      auto r = substRec(a->right, x, y, underY);
      if (!r) return nullptr;
      if (l.get() == a->left.get() && r.get() == a->right.get()) return a;
      return mkBin(a->op, l, r);
    }
    case Formula::Tag::Quant: {
      if (a->var == x) return a;  // no free x below
      bool u = underY || a->var == y;
      auto b = substRec(a->left, x, y, u);
      if (!b) return nullptr;
      return b.get() == a->left.get() ? a : mkQuant(a->q, a->var, b);
    }
  }
  return nullptr;
}

}  // namespace

FormulaPtr subst(const FormulaPtr& a, const Var& x, const Var& y) {
  if (x == y) return a;
  return substRec(a, x, y, false);
}

bool substDefined(const FormulaPtr& a, const Var& x, const Var& y) {
  return subst(a, x, y) != nullptr;
}

namespace {

void freeVarsRec(const FormulaPtr& a, std::set<Var>& bound, std::set<Var>& out) {
  switch (a->tag) {
    case Formula::Tag::Atom:
      for (const auto& v : a->args)
        if (!bound.count(v)) out.insert(v);
      return;
    case Formula::Tag::Meta:
      return;
    case Formula::Tag::Neg:
      freeVarsRec(a->left, bound, out);
      return;
    case Formula::Tag::Bin:
      freeVarsRec(a->left, bound, out);
      freeVarsRec(a->right, bound, out);
      return;
    case Formula::Tag::Quant: {
      bool fresh = bound.insert(a->var).second;
      freeVarsRec(a->left, bound, out);
      if (fresh) bound.erase(a->var);
      return;
    }
  }
}

}  // namespace

std::set<Var> freeVars(const FormulaPtr& a) {
  std::set<Var> bound, out;
  freeVarsRec(a, bound, out);
  return out;
}

bool isFreeIn(const Var& x, const FormulaPtr& a) {
  switch (a->tag) {
    case Formula::Tag::Atom:
      return std::find(a->args.begin(), a->args.end(), x) != a->args.end();
    case Formula::Tag::Meta:
      return false;
    case Formula::Tag::Neg:
      return isFreeIn(x, a->left);
    case Formula::Tag::Bin:
      return isFreeIn(x, a->left) || isFreeIn(x, a->right);
    case Formula::Tag::Quant:
      return a->var != x && isFreeIn(x, a->left);
  }
  return false;
}

bool isBoundIn(const Var& x, const FormulaPtr& a) {
  switch (a->tag) {
    case Formula::Tag::Atom:
    case Formula::Tag::Meta:
      return false;
    case Formula::Tag::Neg:
      return isBoundIn(x, a->left);
    case Formula::Tag::Bin:
      return isBoundIn(x, a->left) || isBoundIn(x, a->right);
    case Formula::Tag::Quant:
      return a->var == x || isBoundIn(x, a->left);
  }
  return false;
}

namespace {
void boundVarsRec(const FormulaPtr& a, std::set<Var>& out) {
  switch (a->tag) {
    case Formula::Tag::Atom:
    case Formula::Tag::Meta:
      return;
    case Formula::Tag::Neg:
      boundVarsRec(a->left, out);
      return;
    case Formula::Tag::Bin:
      boundVarsRec(a->left, out);
      boundVarsRec(a->right, out);
      return;
    case Formula::Tag::Quant:
      out.insert(a->var);
      boundVarsRec(a->left, out);
      return;
  }
}
}  // namespace

std::set<Var> allBoundVars(const FormulaPtr& a) {
  std::set<Var> out;
  boundVarsRec(a, out);
  return out;
}

namespace {
void fvSeqRec(const FormulaPtr& a, std::set<Var>& bound, std::vector<Var>& out) {
  switch (a->tag) {
    case Formula::Tag::Atom:
      for (const auto& v : a->args)
        if (!bound.count(v) && std::find(out.begin(), out.end(), v) == out.end())
          out.push_back(v);
      return;
    case Formula::Tag::Meta:
      return;
    case Formula::Tag::Neg:
      fvSeqRec(a->left, bound, out);
      return;
    case Formula::Tag::Bin:
      fvSeqRec(a->left, bound, out);
      fvSeqRec(a->right, bound, out);
      return;
    case Formula::Tag::Quant: {
      bool fresh = bound.insert(a->var).second;
      fvSeqRec(a->left, bound, out);
      if (fresh) bound.erase(a->var);
      return;
    }
  }
}
}  // namespace

std::vector<Var> freeVarSequence(const FormulaPtr& a) {
  std::set<Var> bound;
  std::vector<Var> out;
  fvSeqRec(a, bound, out);
  return out;
}

namespace {
void profileRec(const FormulaPtr& a, int negDepth, std::vector<AtomOccurrence>& out) {
  switch (a->tag) {
    case Formula::Tag::Atom: {
      AtomOccurrence occ;
      occ.position = static_cast<int>(out.size());
      occ.letter = a->pred;
      occ.polarity = (negDepth % 2 == 0) ? +1 : -1;
      occ.argVars = a->args;
      out.push_back(std::move(occ));
      return;
    }
    case Formula::Tag::Meta:
      return;
    case Formula::Tag::Neg:
      profileRec(a->left, negDepth + 1, out);
      return;
    case Formula::Tag::Bin:
      profileRec(a->left, negDepth, out);
      profileRec(a->right, negDepth, out);
      return;
    case Formula::Tag::Quant:
      profileRec(a->left, negDepth, out);
      return;
  }
}
}  // namespace

std::vector<AtomOccurrence> atomProfile(const FormulaPtr& a) {
  std::vector<AtomOccurrence> out;
  profileRec(a, 0, out);
  return out;
}

int atomCount(const FormulaPtr& a) {
  switch (a->tag) {
    case Formula::Tag::Atom:
      return 1;
    case Formula::Tag::Meta:
      return 0;
    case Formula::Tag::Neg:
    case Formula::Tag::Quant:
      return atomCount(a->left);
    case Formula::Tag::Bin:
      return atomCount(a->left) + atomCount(a->right);
  }
  return 0;
}

bool isDiversified(const FormulaPtr& a) {
  auto prof = atomProfile(a);
  std::set<std::string> seen;
  for (const auto& occ : prof)
    if (!seen.insert(occ.letter).second) return false;
  return true;
}

FormulaPtr quantClosure(Quantifier q, const std::vector<Var>& vars, FormulaPtr body) {
  FormulaPtr acc = std::move(body);
  for (const auto& v : vars) acc = mkQuant(q, v, acc);
  return acc;
}

int quantPrefixCount(const FormulaPtr& a) {
  switch (a->tag) {
    case Formula::Tag::Atom:
    case Formula::Tag::Meta:
      return 0;
    case Formula::Tag::Neg:
      return quantPrefixCount(a->left);
    case Formula::Tag::Bin:
      return quantPrefixCount(a->left) + quantPrefixCount(a->right);
    case Formula::Tag::Quant:
      return 1 + quantPrefixCount(a->left);
  }
  return 0;
}

int formulaSize(const FormulaPtr& a) {
  switch (a->tag) {
    case Formula::Tag::Atom:
    case Formula::Tag::Meta:
      return 1;
    case Formula::Tag::Neg:
    case Formula::Tag::Quant:
      return 1 + formulaSize(a->left);
    case Formula::Tag::Bin:
      return 1 + formulaSize(a->left) + formulaSize(a->right);
  }
  return 1;
}

void ArityTable::checkOrRegister(const std::string& letter, int arity) {
  auto [it, inserted] = table.emplace(letter, arity);
  if (!inserted && it->second != arity)
    throw ParseError("predicate letter " + letter + " used with arity " +
                     std::to_string(arity) + " but registered with arity " +
                     std::to_string(it->second));
}

namespace {
bool inLanguageRec(const FormulaPtr& a, NegGrammar g) {
  switch (a->tag) {
    case Formula::Tag::Atom:
      return true;
    case Formula::Tag::Meta:
      return true;
    case Formula::Tag::Neg:
      if (g == NegGrammar::None) return false;
      if (g == NegGrammar::AtomOnly && a->left->tag != Formula::Tag::Atom) return false;
      return inLanguageRec(a->left, g);
    case Formula::Tag::Bin:
      return inLanguageRec(a->left, g) && inLanguageRec(a->right, g);
    case Formula::Tag::Quant:
      return inLanguageRec(a->left, g);
  }
  return false;
}
}  // namespace

bool inLanguage(const FormulaPtr& a, SystemId s) {
  return inLanguageRec(a, negGrammar(s));
}

void requireInLanguage(const FormulaPtr& a, SystemId s) {
  if (!inLanguage(a, s))
    throw SystemViolation("formula " + printFormula(a) + " is not in the language of " +
                          systemName(s));
}

void collectArities(const FormulaPtr& a, ArityTable& t) {
  switch (a->tag) {
    case Formula::Tag::Atom:
      t.checkOrRegister(a->pred, static_cast<int>(a->args.size()));
      return;
    case Formula::Tag::Meta:
      return;
    case Formula::Tag::Neg:
    case Formula::Tag::Quant:
      collectArities(a->left, t);
      return;
    case Formula::Tag::Bin:
      collectArities(a->left, t);
      collectArities(a->right, t);
      return;
  }
}

}  // namespace lpk
