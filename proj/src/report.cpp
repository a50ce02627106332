#include "segdist/report.hpp"

namespace segdist {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::FirstDir: return "FIRST-DIR";
    case Rule::SecDir: return "SEC-DIR";
    case Rule::JacMod: return "JAC-MOD";
    case Rule::LadderThm: return "LADDER-THM";
    case Rule::LadderThm2: return "LADDER-THM-2";
    case Rule::NobothThm: return "NOBOTH-THM";
    case Rule::NobothLem: return "NOBOTH-LEM";
    case Rule::Known: return "KNOWN";
    case Rule::Pairing: return "PAIRING";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

}  // namespace segdist
