#include "support/naive_graph.hpp"

#include <stdexcept>

namespace lpk::testsupport {

namespace {

struct Tracer {
  Typechecker tc;

  explicit Tracer(SystemId s) : tc(s, TypeMode::Formula) {}

  // Partner of occurrence p in the matching of t.
  GPos partner(const ArrowPtr& t, GPos p) {
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
        return {1 - p.side, p.idx};
      case ATag::CHat: {
        int na = atomCount(t->a), nb = atomCount(t->b);
        if (p.side == 0)
          return p.idx < na ? GPos{1, nb + p.idx} : GPos{1, p.idx - na};
        return p.idx < nb ? GPos{0, na + p.idx} : GPos{0, p.idx - nb};
      }
      case ATag::CCheck: {
        int na = atomCount(t->a), nb = atomCount(t->b);
        if (p.side == 0)
          return p.idx < nb ? GPos{1, na + p.idx} : GPos{1, p.idx - nb};
        return p.idx < na ? GPos{0, nb + p.idx} : GPos{0, p.idx - na};
      }
      case ATag::DeltaAll: {
        int na = atomCount(t->b), nc = atomCount(t->a);
        if (p.side == 0) return {1, p.idx};
        if (p.idx < na) return {0, p.idx};
        if (p.idx < na + nc) return {1, p.idx + nc};
        return {1, p.idx - nc};
      }
      case ATag::SigmaEx: {
        int nc = atomCount(t->a);
        if (p.side == 1) return {0, 2 * nc + p.idx};
        if (p.idx < nc) return {0, nc + p.idx};
        if (p.idx < 2 * nc) return {0, p.idx - nc};
        return {1, p.idx - 2 * nc};
      }
      case ATag::Tensor: {
        int sOff = atomCount(tc.type(t->f).src);
        int tOff = atomCount(tc.type(t->f).tgt);
        int off = p.side == 0 ? sOff : tOff;
        if (p.idx < off) {
          GPos q = partner(t->f, p);
          return q;
        }
        GPos q = partner(t->g, {p.side, p.idx - off});
        q.idx += q.side == 0 ? sOff : tOff;
        return q;
      }
      case ATag::Quant:
      case ATag::Ren:
        return partner(t->f, p);
      case ATag::Comp: {
        // Bounce through the middle profile until an outer side is hit.
        bool inF = p.side == 0;
        GPos q = inF ? partner(t->f, p) : partner(t->g, {1, p.idx});
        for (;;) {
          if (inF) {
            if (q.side == 0) return q;  // exited on the outer source
            // middle occurrence, continue through g
            q = partner(t->g, {0, q.idx});
            inF = false;
          } else {
            if (q.side == 1) return q;  // exited on the outer target
            q = partner(t->f, {1, q.idx});
            inF = true;
          }
        }
      }
      case ATag::Meta:
        throw std::logic_error("meta node in naive tracer");
    }
    throw std::logic_error("bad node");
  }
};

}  // namespace

KMGraph naiveGraph(const ArrowPtr& t, SystemId system) {
  Tracer tr(system);
  SequentType ty = tr.tc.type(t);
  KMGraph g;
  g.srcProfile = atomProfile(ty.src);
  g.tgtProfile = atomProfile(ty.tgt);
  for (int i = 0; i < (int)g.srcProfile.size(); ++i)
    g.links.insert(mkLink({0, i}, tr.partner(t, {0, i})));
  for (int j = 0; j < (int)g.tgtProfile.size(); ++j)
    g.links.insert(mkLink({1, j}, tr.partner(t, {1, j})));
  return g;
}

}  // namespace lpk::testsupport
