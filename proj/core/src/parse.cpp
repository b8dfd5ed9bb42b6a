#include "lpk/parse.hpp"

#include <cctype>

namespace lpk {

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  SystemId system;
  ArityTable& arities;

  Parser(std::string_view t, SystemId s, ArityTable& a) : text(t), system(s), arities(a) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in \"" +
                     std::string(text) + "\"");
  }

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skipWs();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skipWs();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string ident() {
    skipWs();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\'' || text[pos] == '$'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return std::string(text.substr(start, pos - start));
  }

  FormulaPtr formula() {
    FormulaPtr lhs = quant();
    char c = peek();
    if (c != '&' && c != '|') return lhs;
    ++pos;
    BinOp op = c == '&' ? BinOp::And : BinOp::Or;
    FormulaPtr rhs = formula();
    // Mixed operators at equal precedence need explicit parentheses.
    if (rhs->tag == Formula::Tag::Bin && rhs->op != op && !rhsWasParenthesized)
      fail("mixed '&'/'|' without parentheses");
    return mkBin(op, lhs, rhs);
  }

  // Set by unary() when the most recent operand came from '( ... )'.
  bool rhsWasParenthesized = false;

  FormulaPtr quant() {
    skipWs();
    if (startsWithWord("all") || startsWithWord("some")) {
      bool all = startsWithWord("all");
      pos += all ? 3 : 4;
      std::string v = ident();
      if (!islowerStart(v)) fail("variable must start with a lowercase letter");
      if (!eat('.')) fail("expected '.' after quantified variable");
      FormulaPtr body = quant();
      return mkQuant(all ? Quantifier::All : Quantifier::Ex, Var{v}, body);
    }
    return unary();
  }

  bool startsWithWord(std::string_view w) {
    skipWs();
    if (text.substr(pos, w.size()) != w) return false;
    size_t after = pos + w.size();
    if (after < text.size()) {
      char c = text[after];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') return false;
    }
    return true;
  }

  static bool islowerStart(const std::string& s) {
    return !s.empty() && std::islower(static_cast<unsigned char>(s[0]));
  }
  static bool isupperStart(const std::string& s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
  }

  FormulaPtr unary() {
    rhsWasParenthesized = false;
    char c = peek();
    if (c == '~') {
      ++pos;
      if (negGrammar(system) == NegGrammar::None)
        throw SystemViolation("negation is not in the language of " + systemName(system));
      FormulaPtr body = unary();
      if (negGrammar(system) == NegGrammar::AtomOnly && body->tag != Formula::Tag::Atom)
        throw SystemViolation("negation only applies to atoms in " + systemName(system));
      rhsWasParenthesized = false;
      return mkNeg(body);
    }
    if (c == '(') {
      ++pos;
      FormulaPtr inner = formula();
      if (!eat(')')) fail("expected ')'");
      rhsWasParenthesized = true;
      return inner;
    }
    return atom();
  }

  FormulaPtr atom() {
    std::string name = ident();
    if (!isupperStart(name)) fail("predicate letter must start with an uppercase letter");
    std::vector<Var> args;
    if (eat('(')) {
      for (;;) {
        std::string v = ident();
        if (!islowerStart(v)) fail("variable must start with a lowercase letter");
        args.push_back(Var{v});
        if (eat(')')) break;
        if (!eat(',')) fail("expected ',' or ')'");
      }
    }
    arities.checkOrRegister(name, static_cast<int>(args.size()));
    return mkAtom(name, std::move(args));
  }
};

}  // namespace

FormulaPtr parseFormula(std::string_view text, SystemId system, ArityTable& arities) {
  Parser p(text, system, arities);
  FormulaPtr f = p.formula();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

FormulaPtr parseFormula(std::string_view text, SystemId system) {
  ArityTable t;
  return parseFormula(text, system, t);
}

}  // namespace lpk
