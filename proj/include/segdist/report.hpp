#pragma once

#include <string>
#include <vector>

namespace segdist {

enum class Verdict { Yes, No, Unknown };

// Rule ids cited in report traces.  These names are part of the report
// format; the JSON emitter prints them verbatim.
enum class Rule {
  FirstDir,    // FIRST-DIR
  SecDir,      // SEC-DIR
  JacMod,      // JAC-MOD
  LadderThm,   // LADDER-THM
  LadderThm2,  // LADDER-THM-2
  NobothThm,   // NOBOTH-THM
  NobothLem,   // NOBOTH-LEM
  Known,       // KNOWN
  Pairing,     // PAIRING
};

const char* rule_name(Rule r);
const char* verdict_name(Verdict v);

struct TraceEntry {
  Rule rule;
  std::string detail;
};

// Verdict per distinction kind: 'dist' is plain distinction, 'eta' is
// distinction twisted by the quadratic class character.
struct DistinctionReport {
  Verdict dist = Verdict::Unknown;
  Verdict eta = Verdict::Unknown;
  std::vector<TraceEntry> trace;
};

}  // namespace segdist
