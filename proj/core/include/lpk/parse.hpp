#ifndef LPK_PARSE_HPP
#define LPK_PARSE_HPP

#include <string_view>

#include "lpk/formula.hpp"

namespace lpk {

// Grammar:
//   formula := quant | quant ('&'|'|') formula      (mixed ops need parens)
//   quant   := ('all'|'some') var '.' quant | unary
//   unary   := '~' unary | atom | '(' formula ')'
//   atom    := UPPERIDENT ['(' var (',' var)* ')']
//   var     := LOWERIDENT
// Arity is inferred at first use and enforced thereafter via `arities`.
FormulaPtr parseFormula(std::string_view text, SystemId system, ArityTable& arities);

FormulaPtr parseFormula(std::string_view text, SystemId system);

}  // namespace lpk

#endif
