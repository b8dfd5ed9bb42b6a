#include "lpk/decide.hpp"

#include <sstream>

namespace lpk {

std::string Verdict::toJson() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Equal:
      os << "{\"verdict\":\"equal\"}";
      break;
    case Kind::Unequal: {
      os << "{\"verdict\":\"unequal\",\"witness\":";
      if (witness && witness->kind == GraphDiff::Kind::Link) {
        const auto& l = witness->link;
        os << "{\"kind\":\"link\",\"from\":\"" << (l.first.side ? "T" : "S") << l.first.idx
           << "\",\"to\":\"" << (l.second.side ? "T" : "S") << l.second.idx
           << "\",\"only_in\":\"" << (witness->inLhs ? "lhs" : "rhs") << "\"}";
      } else if (witness) {
        os << "{\"kind\":\"profile\",\"side\":\""
           << (witness->side == 0 ? "source" : "target") << "\",\"position\":"
           << witness->pos << "}";
      } else {
        os << "null";
      }
      os << "}";
      break;
    }
    case Kind::TypeMismatch:
      os << "{\"verdict\":\"type_mismatch\",\"lhs\":\"" << lhsType << "\",\"rhs\":\""
         << rhsType << "\"}";
      break;
  }
  return os.str();
}

Verdict decideEq(const ArrowPtr& f, const ArrowPtr& g, SystemId system) {
  SequentType tf = typecheck(f, system);
  SequentType tg = typecheck(g, system);
  Verdict v;
  if (!sequentEqual(tf, tg)) {
    v.kind = Verdict::Kind::TypeMismatch;
    v.lhsType = printSequent(tf);
    v.rhsType = printSequent(tg);
    return v;
  }
  KMGraph gf = graphOf(f, system);
  KMGraph gg = graphOf(g, system);
  if (graphEq(gf, gg)) {
    v.kind = Verdict::Kind::Equal;
    return v;
  }
  v.kind = Verdict::Kind::Unequal;
  auto diffs = graphDiff(gf, gg);
  if (!diffs.empty()) v.witness = diffs.front();
  return v;
}

ArrowPtr subtermAt(const ArrowPtr& t, const TermPath& path) {
  ArrowPtr cur = t;
  for (int i : path) {
    auto ch = arrowChildren(cur);
    if (i < 0 || i >= (int)ch.size()) throw TypeError("bad term path");
    cur = ch[i];
  }
  return cur;
}

ArrowPtr replaceAt(const ArrowPtr& t, const TermPath& path, const ArrowPtr& repl) {
  if (path.empty()) return repl;
  auto ch = arrowChildren(t);
  int i = path.front();
  if (i < 0 || i >= (int)ch.size()) throw TypeError("bad term path");
  ch[i] = replaceAt(ch[i], TermPath(path.begin() + 1, path.end()), repl);
  return withChildren(t, ch);
}

namespace {
void collectPaths(const ArrowPtr& t, TermPath& cur, std::vector<TermPath>& out) {
  out.push_back(cur);
  auto ch = arrowChildren(t);
  for (int i = 0; i < (int)ch.size(); ++i) {
    cur.push_back(i);
    collectPaths(ch[i], cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<TermPath> allPaths(const ArrowPtr& t) {
  std::vector<TermPath> out;
  TermPath cur;
  collectPaths(t, cur, out);
  return out;
}

std::optional<ArrowPtr> rewriteOnce(const ArrowPtr& t, const AxiomSchema& schema,
                                    const TermPath& path, bool leftToRight,
                                    SystemId system) {
  const ArrowPtr& pat = leftToRight ? schema.lhsPat : schema.rhsPat;
  if (!pat) return std::nullopt;
  ArrowPtr sub;
  try {
    sub = subtermAt(t, path);
  } catch (const Error&) {
    return std::nullopt;
  }
  Binding b;
  if (!matchArrow(sub, pat, b)) return std::nullopt;
  try {
    if (!schema.ok(b, system)) return std::nullopt;
    ArrowPtr repl = leftToRight ? schema.rhs(b, system) : schema.lhs(b, system);
    // Both sides of the instance must be well-typed with the same type.
    SequentType ts = typecheck(sub, system);
    SequentType tr = typecheck(repl, system);
    if (!sequentEqual(ts, tr)) return std::nullopt;
    ArrowPtr result = replaceAt(t, path, repl);
    typecheck(result, system);
    return result;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ArrowPtr randomRewriteChain(const ArrowPtr& t, SystemId system, int steps, Rng& rng,
                            int attemptsPerStep) {
  const auto& schemas = axiomSchemas(system);
  ArrowPtr cur = t;
  for (int s = 0; s < steps; ++s) {
    auto paths = allPaths(cur);
    bool stepped = false;
    for (int a = 0; a < attemptsPerStep && !stepped; ++a) {
      const AxiomSchema& sc = schemas[rng() % schemas.size()];
      const TermPath& p = paths[rng() % paths.size()];
      bool dir = rng() % 2 == 0;
      if (auto next = rewriteOnce(cur, sc, p, dir, system)) {
        cur = *next;
        stepped = true;
      }
    }
    if (!stepped) break;
  }
  return cur;
}

}  // namespace lpk
