#include "lpk/graph.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "lpk/derived.hpp"

namespace lpk {

GLink mkLink(GPos a, GPos b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

KMGraph identityGraph(const FormulaPtr& a) {
  KMGraph g;
  g.srcProfile = atomProfile(a);
  g.tgtProfile = g.srcProfile;
  for (size_t i = 0; i < g.srcProfile.size(); ++i)
    g.links.insert(mkLink({0, (int)i}, {1, (int)i}));
  return g;
}

namespace {

bool profilesAgree(const std::vector<AtomOccurrence>& a,
                   const std::vector<AtomOccurrence>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].letter != b[i].letter || a[i].polarity != b[i].polarity) return false;
  return true;
}

}  // namespace

KMGraph composeGraphs(const KMGraph& g, const KMGraph& f) {
  if (!profilesAgree(f.tgtProfile, g.srcProfile))
    throw ProfileMismatch("graph composition over mismatched middle profiles");
  const int nL = (int)f.srcProfile.size();
  const int nM = (int)f.tgtProfile.size();
  const int nR = (int)g.tgtProfile.size();

  // Vertices: 0..nL-1 outer-left, nL..nL+nM-1 middle, then outer-right.
  auto lv = [&](int i) { return i; };
  auto mv = [&](int i) { return nL + i; };
  auto rv = [&](int i) { return nL + nM + i; };
  const int nV = nL + nM + nR;
  std::vector<int> fEdge(nV, -1), gEdge(nV, -1);
  auto addEdge = [](std::vector<int>& e, int a, int b) {
    e[a] = b;
    e[b] = a;
  };
  for (const auto& [p, q] : f.links)
    addEdge(fEdge, p.side == 0 ? lv(p.idx) : mv(p.idx), q.side == 0 ? lv(q.idx) : mv(q.idx));
  for (const auto& [p, q] : g.links)
    addEdge(gEdge, p.side == 0 ? mv(p.idx) : rv(p.idx), q.side == 0 ? mv(q.idx) : rv(q.idx));

  KMGraph out;
  out.srcProfile = f.srcProfile;
  out.tgtProfile = g.tgtProfile;
  out.loopCount = f.loopCount + g.loopCount;

  std::vector<bool> seen(nV, false);
  auto outerPos = [&](int v) -> GPos {
    return v < nL ? GPos{0, v} : GPos{1, v - nL - nM};
  };
  for (int v0 = 0; v0 < nV; ++v0) {
    if (seen[v0] || (v0 >= nL && v0 < nL + nM)) continue;
    // Walk from an outer vertex, alternating f and g edges at the middle.
    int cur = v0;
    bool useF = v0 < nL;
    seen[cur] = true;
    for (;;) {
      int nxt = useF ? fEdge[cur] : gEdge[cur];
      if (nxt < 0) throw ProfileMismatch("dangling graph vertex");
      seen[nxt] = true;
      if (nxt < nL || nxt >= nL + nM) {
        out.links.insert(mkLink(outerPos(v0), outerPos(nxt)));
        break;
      }
      cur = nxt;
      useF = !useF;
    }
  }
  // Remaining middle vertices lie on alternating circles.
  for (int i = 0; i < nM; ++i) {
    int v0 = mv(i);
    if (seen[v0]) continue;
    ++out.loopCount;
    int cur = v0;
    bool useF = true;
    do {
      seen[cur] = true;
      cur = useF ? fEdge[cur] : gEdge[cur];
      useF = !useF;
    } while (!(cur == v0 && useF));
  }
  return out;
}

KMGraph tensorGraphs(const KMGraph& f, const KMGraph& g) {
  KMGraph out;
  out.srcProfile = f.srcProfile;
  out.tgtProfile = f.tgtProfile;
  const int sOff = (int)f.srcProfile.size();
  const int tOff = (int)f.tgtProfile.size();
  for (auto occ : g.srcProfile) {
    occ.position += sOff;
    out.srcProfile.push_back(occ);
  }
  for (auto occ : g.tgtProfile) {
    occ.position += tOff;
    out.tgtProfile.push_back(occ);
  }
  out.links = f.links;
  for (const auto& [p, q] : g.links) {
    auto shift = [&](GPos r) {
      return GPos{r.side, r.idx + (r.side == 0 ? sOff : tOff)};
    };
    out.links.insert(mkLink(shift(p), shift(q)));
  }
  out.loopCount = f.loopCount + g.loopCount;
  return out;
}

bool graphEq(const KMGraph& a, const KMGraph& b) {
  return profilesAgree(a.srcProfile, b.srcProfile) &&
         profilesAgree(a.tgtProfile, b.tgtProfile) && a.links == b.links;
}

std::string GraphDiff::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ProfileLength:
      os << "profile length differs on " << (side == 0 ? "source" : "target");
      break;
    case Kind::ProfileEntry:
      os << "profile entry " << pos << " differs on " << (side == 0 ? "source" : "target");
      break;
    case Kind::Link:
      os << "link " << (link.first.side ? "T" : "S") << link.first.idx << "-"
         << (link.second.side ? "T" : "S") << link.second.idx << " only in "
         << (inLhs ? "lhs" : "rhs");
      break;
  }
  return os.str();
}

std::vector<GraphDiff> graphDiff(const KMGraph& a, const KMGraph& b) {
  std::vector<GraphDiff> out;
  for (int side = 0; side < 2; ++side) {
    const auto& pa = side == 0 ? a.srcProfile : a.tgtProfile;
    const auto& pb = side == 0 ? b.srcProfile : b.tgtProfile;
    if (pa.size() != pb.size()) {
      out.push_back({GraphDiff::Kind::ProfileLength, side, 0, {}, false});
      continue;
    }
    for (size_t i = 0; i < pa.size(); ++i)
      if (pa[i].letter != pb[i].letter || pa[i].polarity != pb[i].polarity)
        out.push_back({GraphDiff::Kind::ProfileEntry, side, (int)i, {}, false});
  }
  for (const auto& l : a.links)
    if (!b.links.count(l)) out.push_back({GraphDiff::Kind::Link, 0, 0, l, true});
  for (const auto& l : b.links)
    if (!a.links.count(l)) out.push_back({GraphDiff::Kind::Link, 0, 0, l, false});
  return out;
}

std::string toDot(const KMGraph& g, bool withLoops) {
  std::ostringstream os;
  os << "digraph km {\n";
  if (withLoops) os << "  graph [loops=" << g.loopCount << "];\n";
  os << "  rankdir=TB;\n";
  for (size_t i = 0; i < g.srcProfile.size(); ++i)
    os << "  s" << i << " [label=\"" << g.srcProfile[i].letter
       << (g.srcProfile[i].polarity > 0 ? "[+]" : "[-]") << "\"];\n";
  for (size_t i = 0; i < g.tgtProfile.size(); ++i)
    os << "  t" << i << " [label=\"" << g.tgtProfile[i].letter
       << (g.tgtProfile[i].polarity > 0 ? "[+]" : "[-]") << "\"];\n";
  for (const auto& [p, q] : g.links)
    os << "  " << (p.side ? "t" : "s") << p.idx << " -> " << (q.side ? "t" : "s") << q.idx
       << " [dir=none];\n";
  os << "}\n";
  return os.str();
}

std::string toCompact(const KMGraph& g, bool withLoops) {
  std::ostringstream os;
  os << g.srcProfile.size() << " " << g.tgtProfile.size() << " |";
  for (const auto& [p, q] : g.links)
    os << " " << (p.side ? "T" : "S") << p.idx << "-" << (q.side ? "T" : "S") << q.idx;
  if (withLoops) os << " loops=" << g.loopCount;
  return os.str();
}

namespace {

class GraphBuilder {
 public:
  GraphBuilder(SystemId system) : tc_(system, TypeMode::Formula) {}

  KMGraph build(const ArrowPtr& t) {
    auto it = memo_.find(t.get());
    if (it != memo_.end()) return it->second;
    KMGraph g = compute(t);
    memo_.emplace(t.get(), g);
    return g;
  }

 private:
  KMGraph positionalIdentity(const ArrowPtr& t) {
    SequentType ty = tc_.type(t);
    KMGraph g;
    g.srcProfile = atomProfile(ty.src);
    g.tgtProfile = atomProfile(ty.tgt);
    if (g.srcProfile.size() != g.tgtProfile.size())
      throw TypeError("identity-shaped node with unequal atom counts");
    for (size_t i = 0; i < g.srcProfile.size(); ++i)
      g.links.insert(mkLink({0, (int)i}, {1, (int)i}));
    return g;
  }

  KMGraph compute(const ArrowPtr& t) {
    switch (t->tag) {
      case ATag::Id:
      case ATag::BHat:
      case ATag::BCheck:
      case ATag::D:
      case ATag::IotaAll:
      case ATag::IotaEx:
      case ATag::GammaAll:
      case ATag::GammaEx:
      case ATag::ThetaAllR:
      case ATag::ThetaExL:
      case ATag::Mix:
        return positionalIdentity(t);
      case ATag::CHat: {
        SequentType ty = tc_.type(t);
        KMGraph g;
        g.srcProfile = atomProfile(ty.src);
        g.tgtProfile = atomProfile(ty.tgt);
        int na = atomCount(t->a), nb = atomCount(t->b);
        for (int i = 0; i < na; ++i) g.links.insert(mkLink({0, i}, {1, nb + i}));
        for (int j = 0; j < nb; ++j) g.links.insert(mkLink({0, na + j}, {1, j}));
        return g;
      }
      case ATag::CCheck: {
        // source B|A, target A|B
        SequentType ty = tc_.type(t);
        KMGraph g;
        g.srcProfile = atomProfile(ty.src);
        g.tgtProfile = atomProfile(ty.tgt);
        int na = atomCount(t->a), nb = atomCount(t->b);
        for (int j = 0; j < nb; ++j) g.links.insert(mkLink({0, j}, {1, na + j}));
        for (int i = 0; i < na; ++i) g.links.insert(mkLink({0, nb + i}, {1, i}));
        return g;
      }
      case ATag::DeltaAll: {
        SequentType ty = tc_.type(t);
        KMGraph g;
        g.srcProfile = atomProfile(ty.src);
        g.tgtProfile = atomProfile(ty.tgt);
        int na = atomCount(t->b), nc = atomCount(t->a);
        for (int i = 0; i < na; ++i) g.links.insert(mkLink({0, i}, {1, i}));
        for (int k = 0; k < nc; ++k)
          g.links.insert(mkLink({1, na + k}, {1, na + nc + k}));
        return g;
      }
      case ATag::SigmaEx: {
        SequentType ty = tc_.type(t);
        KMGraph g;
        g.srcProfile = atomProfile(ty.src);
        g.tgtProfile = atomProfile(ty.tgt);
        int na = atomCount(t->b), nc = atomCount(t->a);
        for (int k = 0; k < nc; ++k) g.links.insert(mkLink({0, k}, {0, nc + k}));
        for (int i = 0; i < na; ++i) g.links.insert(mkLink({0, 2 * nc + i}, {1, i}));
        return g;
      }
      case ATag::Comp:
        return composeGraphs(build(t->g), build(t->f));
      case ATag::Tensor:
        return tensorGraphs(build(t->f), build(t->g));
      case ATag::Quant:
      case ATag::Ren: {
        KMGraph inner = build(t->f);
        SequentType ty = tc_.type(t);
        KMGraph g;
        g.srcProfile = atomProfile(ty.src);
        g.tgtProfile = atomProfile(ty.tgt);
        g.links = inner.links;
        g.loopCount = inner.loopCount;
        return g;
      }
      case ATag::Meta:
        throw TypeError("cannot take the graph of a schema slot");
    }
    throw TypeError("unknown arrow node");
  }

  Typechecker tc_;
  std::map<const Arrow*, KMGraph> memo_;
};

}  // namespace

KMGraph graphOf(const ArrowPtr& t, SystemId system) {
  GraphBuilder b(system);
  return b.build(t);
}

namespace {

struct FormulaArrowBuilder {
  SystemId system;
  Typechecker tc;
  std::map<const Arrow*, ArrowPtr> memo;

  explicit FormulaArrowBuilder(SystemId s) : system(s), tc(s, TypeMode::Formula) {}

  ArrowPtr convert(const ArrowPtr& t) {
    auto it = memo.find(t.get());
    if (it != memo.end()) return it->second;
    ArrowPtr r = compute(t);
    memo.emplace(t.get(), r);
    return r;
  }

  ArrowPtr compute(const ArrowPtr& t) {
    switch (t->tag) {
      case ATag::Comp: {
        ArrowPtr f = convert(t->f);
        ArrowPtr g = convert(t->g);
        FormulaPtr mid1 = tc.type(f).tgt;
        FormulaPtr mid2 = tc.type(g).src;
        if (equal(mid1, mid2)) return aComp(g, f);
        return aComp(g, aComp(acIso(mid1, mid2), f));
      }
      case ATag::Tensor:
        return aTensor(t->op, convert(t->f), convert(t->g));
      case ATag::Quant:
        return aQuant(t->q, t->x, convert(t->f));
      case ATag::Ren:
        return aRen(t->x, t->y, convert(t->f));
      default:
        return t;
    }
  }
};

}  // namespace

ArrowPtr toFormulaArrow(const ArrowPtr& t, SystemId system) {
  FormulaArrowBuilder b(system);
  return b.convert(t);
}

KMGraph graphOfFS(const ArrowPtr& t, SystemId system) {
  SequentType canon = typecheckFS(t, system);
  ArrowPtr exact = toFormulaArrow(t, system);
  SequentType ty = typecheck(exact, system);
  ArrowPtr bridged = exact;
  if (!equal(ty.src, canon.src)) bridged = aComp(bridged, acIso(canon.src, ty.src));
  if (!equal(ty.tgt, canon.tgt)) bridged = aComp(acIso(ty.tgt, canon.tgt), bridged);
  return graphOf(bridged, system);
}

bool wellFormed(const KMGraph& g) {
  std::map<GPos, int> degree;
  for (const auto& [p, q] : g.links) {
    degree[p]++;
    degree[q]++;
    auto occ = [&](GPos r) -> const AtomOccurrence* {
      const auto& prof = r.side == 0 ? g.srcProfile : g.tgtProfile;
      if (r.idx < 0 || r.idx >= (int)prof.size()) return nullptr;
      return &prof[r.idx];
    };
    const AtomOccurrence* a = occ(p);
    const AtomOccurrence* b = occ(q);
    if (!a || !b) return false;
    if (a->letter != b->letter) return false;
    bool sameSide = p.side == q.side;
    if (sameSide && a->polarity == b->polarity) return false;
    if (!sameSide && a->polarity != b->polarity) return false;
  }
  if (degree.size() != g.srcProfile.size() + g.tgtProfile.size()) return false;
  for (const auto& [pos, d] : degree)
    if (d != 1) return false;
  return true;
}

namespace {

// For each atom occurrence: the binary operator immediately above its
// maximal chain of quantifier prefixes, if any.
void contextOps(const FormulaPtr& f, std::vector<std::optional<BinOp>>& out,
                std::optional<BinOp> pending) {
  switch (f->tag) {
    case Formula::Tag::Atom:
      out.push_back(pending);
      return;
    case Formula::Tag::Meta:
      return;
    case Formula::Tag::Neg:
      contextOps(f->left, out, std::nullopt);
      return;
    case Formula::Tag::Quant:
      contextOps(f->left, out, pending);
      return;
    case Formula::Tag::Bin:
      contextOps(f->left, out, f->op);
      contextOps(f->right, out, f->op);
      return;
  }
}

// Quantifier nodes transmit the operator above them to quasi-atomic
// subformulas only; a Bin resets it for both children.
std::vector<std::optional<BinOp>> atomContexts(const FormulaPtr& f) {
  std::vector<std::optional<BinOp>> out;
  contextOps(f, out, std::nullopt);
  return out;
}

void siblingAtomPairs(const FormulaPtr& f, int& next, BinOp op,
                      std::set<std::pair<int, int>>& out) {
  switch (f->tag) {
    case Formula::Tag::Atom:
      ++next;
      return;
    case Formula::Tag::Meta:
      return;
    case Formula::Tag::Neg:
    case Formula::Tag::Quant:
      siblingAtomPairs(f->left, next, op, out);
      return;
    case Formula::Tag::Bin: {
      int leftStart = next;
      siblingAtomPairs(f->left, next, op, out);
      int rightStart = next;
      siblingAtomPairs(f->right, next, op, out);
      if (f->op == op && f->left->tag == Formula::Tag::Atom &&
          f->right->tag == Formula::Tag::Atom)
        out.insert({leftStart, rightStart});
      return;
    }
  }
}

}  // namespace

bool hasAndOrConfig(const KMGraph& g, const FormulaPtr& src, const FormulaPtr& tgt) {
  auto sctx = atomContexts(src);
  auto tctx = atomContexts(tgt);
  for (const auto& [p, q] : g.links) {
    if (p.side == q.side) continue;
    const GPos& s = p.side == 0 ? p : q;
    const GPos& t = p.side == 0 ? q : p;
    if (sctx[s.idx] == BinOp::And && tctx[t.idx] == BinOp::Or) return true;
  }
  return false;
}

bool hasOrAndConfig(const KMGraph& g, const FormulaPtr& src, const FormulaPtr& tgt) {
  std::set<std::pair<int, int>> srcPairs, tgtPairs;
  int n = 0;
  siblingAtomPairs(src, n, BinOp::Or, srcPairs);
  n = 0;
  siblingAtomPairs(tgt, n, BinOp::And, tgtPairs);
  if (srcPairs.empty() || tgtPairs.empty()) return false;
  std::map<int, int> crossMap;  // src atom -> tgt atom
  for (const auto& [p, q] : g.links) {
    if (p.side == q.side) continue;
    const GPos& s = p.side == 0 ? p : q;
    const GPos& t = p.side == 0 ? q : p;
    crossMap[s.idx] = t.idx;
  }
  auto linkedPair = [&](int a, int b, const std::set<std::pair<int, int>>& pairs) {
    return pairs.count({a, b}) || pairs.count({b, a});
  };
  for (const auto& [s1, s2] : srcPairs) {
    auto i1 = crossMap.find(s1);
    auto i2 = crossMap.find(s2);
    if (i1 == crossMap.end() || i2 == crossMap.end()) continue;
    if (linkedPair(i1->second, i2->second, tgtPairs)) return true;
  }
  return false;
}

}  // namespace lpk
