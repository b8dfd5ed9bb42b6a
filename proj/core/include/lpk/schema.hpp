#ifndef LPK_SCHEMA_HPP
#define LPK_SCHEMA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpk/arrow.hpp"
#include "lpk/random.hpp"

namespace lpk {

// Metavariable assignment for one schema instantiation. Formula slots are
// named A,B,C,...; variable slots x,y,z,...; arrow slots f,g,h,...
struct Binding {
  std::map<std::string, FormulaPtr> formulas;
  std::map<std::string, Var> vars;
  std::map<std::string, ArrowPtr> arrows;
};

// Pattern helpers: metavariables inside pattern ASTs.
FormulaPtr patF(const std::string& slot);
Var patV(const std::string& slot);
ArrowPtr patA(const std::string& slot);
bool isPatternVar(const Var& v);

FormulaPtr instantiateFormula(const FormulaPtr& pattern, const Binding& b);
ArrowPtr instantiateArrow(const ArrowPtr& pattern, const Binding& b);

bool matchFormula(const FormulaPtr& term, const FormulaPtr& pattern, Binding& b);
bool matchArrow(const ArrowPtr& term, const ArrowPtr& pattern, Binding& b);

// One axiomatic (or flagged derived) equation of the calculus, as data:
// random instantiation for the soundness suite, patterns for rewriting.
struct AxiomSchema {
  std::string name;
  bool derived = false;
  std::function<bool(SystemId)> applies;

  // Structural patterns, when the side is expressible without substitution
  // into metavariables; used by rewriteOnce.
  ArrowPtr lhsPat, rhsPat;

  // Builders; default to instantiating the patterns.
  std::function<ArrowPtr(const Binding&, SystemId)> lhsBuild, rhsBuild;

  // Fills slots derivable from the sampled/matched ones (e.g. the endpoints
  // of an arrow slot); returns false when the binding cannot be completed.
  std::function<bool(Binding&, SystemId)> complete;

  // Side conditions beyond well-typedness.
  std::function<bool(const Binding&, SystemId)> proviso;

  // Draws the independent slots; returns false to ask for a redraw.
  std::function<bool(Binding&, TermGen&)> sample;

  ArrowPtr lhs(const Binding& b, SystemId s) const;
  ArrowPtr rhs(const Binding& b, SystemId s) const;
  bool ok(Binding& b, SystemId s) const;  // complete + proviso
};

// Every named axiomatic equation available in `system`, derived equations
// flagged; stable order.
const std::vector<AxiomSchema>& axiomSchemas(SystemId system);

// Draws one proviso-respecting instantiation (with retries); returns the
// instantiated sides. Fails with nullopt only if sampling keeps violating
// provisos, which the suites treat as a schema failure.
struct SchemaInstance {
  Binding binding;
  ArrowPtr lhs, rhs;
};
std::optional<SchemaInstance> sampleInstance(const AxiomSchema& schema, SystemId system,
                                             TermGen& gen, int maxAttempts = 80);

}  // namespace lpk

#endif
