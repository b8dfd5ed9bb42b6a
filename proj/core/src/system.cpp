#include "lpk/system.hpp"

namespace lpk {

std::string systemName(SystemId s) {
  switch (s) {
    case SystemId::QDS:
      return "qds";
    case SystemId::QMDS:
      return "qmds";
    case SystemId::QPNneg:
      return "qpn-neg";
    case SystemId::QMPNneg:
      return "qmpn-neg";
    case SystemId::QPN:
      return "qpn";
    case SystemId::QMPN:
      return "qmpn";
  }
  return "?";
}

std::optional<SystemId> systemFromName(std::string_view name) {
  if (name == "qds") return SystemId::QDS;
  if (name == "qmds") return SystemId::QMDS;
  if (name == "qpn-neg") return SystemId::QPNneg;
  if (name == "qmpn-neg") return SystemId::QMPNneg;
  if (name == "qpn") return SystemId::QPN;
  if (name == "qmpn") return SystemId::QMPN;
  return std::nullopt;
}

}  // namespace lpk
