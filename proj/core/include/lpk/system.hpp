#ifndef LPK_SYSTEM_HPP
#define LPK_SYSTEM_HPP

#include <optional>
#include <string>
#include <string_view>

namespace lpk {

// The six free categories the kernel knows about.
enum class SystemId { QDS, QMDS, QPNneg, QMPNneg, QPN, QMPN };

// Shape of the formula language attached to a system.
enum class NegGrammar {
  None,      // L: no negation at all
  Full,      // L^neg: negation anywhere
  AtomOnly,  // L^negP: negation directly on atoms only
};

constexpr NegGrammar negGrammar(SystemId s) {
  switch (s) {
    case SystemId::QDS:
    case SystemId::QMDS:
      return NegGrammar::None;
    case SystemId::QPNneg:
    case SystemId::QMPNneg:
      return NegGrammar::Full;
    case SystemId::QPN:
    case SystemId::QMPN:
      return NegGrammar::AtomOnly;
  }
  return NegGrammar::None;
}

constexpr bool hasMix(SystemId s) {
  return s == SystemId::QMDS || s == SystemId::QMPNneg || s == SystemId::QMPN;
}

// Delta/Sigma primitives exist only in the proof-net systems.
constexpr bool hasDeltaSigma(SystemId s) {
  return negGrammar(s) != NegGrammar::None;
}

// In QPN/QMPN the crown index of Delta/Sigma must be atomic.
constexpr bool atomicCrownOnly(SystemId s) {
  return negGrammar(s) == NegGrammar::AtomOnly;
}

std::string systemName(SystemId s);
std::optional<SystemId> systemFromName(std::string_view name);

}  // namespace lpk

#endif
