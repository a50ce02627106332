#pragma once

#include "json.hpp"
#include "segdist/engine.hpp"
#include "segdist/multisegment.hpp"
#include "segdist/weyl.hpp"

namespace segdist {

// Rationals are emitted as exact [numerator, denominator] pairs in lowest
// terms; flat cell indices are 1-based and each eps orbit appears once.

nlohmann::json rat_json(const Rat& x);
nlohmann::json segment_json(const Universe& u, const Segment& s);
nlohmann::json multisegment_json(const Universe& u, const Multisegment& m);
nlohmann::json report_json(const DistinctionReport& rep);
nlohmann::json coset_json(const CosetInvolution& w);
nlohmann::json stratum_json(const Universe& u, const StratumAnalysis& a);

}  // namespace segdist
