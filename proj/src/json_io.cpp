#include "segdist/json_io.hpp"

namespace segdist {

using nlohmann::json;

json rat_json(const Rat& x) {
  return json::array({x.numerator(), x.denominator()});
}

json segment_json(const Universe& u, const Segment& s) {
  return json{{"tower", u.tower(s.tower).id},
              {"a", rat_json(s.a)},
              {"b", rat_json(s.b)}};
}

json multisegment_json(const Universe& u, const Multisegment& m) {
  json arr = json::array();
  for (const Segment& s : m.segments()) arr.push_back(segment_json(u, s));
  return arr;
}

json report_json(const DistinctionReport& rep) {
  json trace = json::array();
  for (const TraceEntry& te : rep.trace)
    trace.push_back(json{{"rule", rule_name(te.rule)}, {"detail", te.detail}});
  return json{{"dist", verdict_name(rep.dist)},
              {"eta", verdict_name(rep.eta)},
              {"trace", trace}};
}

json coset_json(const CosetInvolution& w) {
  json refinement = json::array();
  for (const Composition& row : w.refinement) refinement.push_back(row);
  json eps = json::array();
  for (int c : orbit_representatives(w))
    eps.push_back(json::array({c + 1, w.eps[c] + 1}));
  return json{{"refinement", refinement}, {"eps", eps}};
}

json stratum_json(const Universe& u, const StratumAnalysis& a) {
  json pieces = json::array();
  for (const auto& slice : a.pieces) {
    if (!slice) {
      pieces.push_back(nullptr);
      continue;
    }
    json block = json::array();
    for (const Segment& s : *slice) block.push_back(segment_json(u, s));
    pieces.push_back(block);
  }
  json out{{"coset", coset_json(a.w)},
           {"pieces", pieces},
           {"matched", a.matched},
           {"hom_bound", a.hom_bound}};
  if (!a.failure_reason.empty()) out["failure"] = a.failure_reason;
  return out;
}

}  // namespace segdist
