#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segdist/multisegment.hpp"
#include "segdist/weyl.hpp"

namespace segdist {

enum class Kind { Dist, Eta };

// One geometric stratum of the induced module against the symmetric
// subgroup, for the plain-distinction kind.  The eta kind is analyzed by
// running the same machinery on the chi-twisted realization.
//
// Each base block is sliced along its refinement row; a slice is a list
// of segments (each tensor factor for segments has multiplicity one) or
// ZERO when a part misses the tower degree.  The stratum carries an
// invariant functional only if every slice is nonzero, eps-paired cells
// hold Galois-dual pieces, and fixed cells hold distinguished pieces; the
// bound is 1 in that case and 0 otherwise.
struct StratumAnalysis {
  CosetInvolution w;
  // Per base block: the slice, or nullopt for ZERO.
  std::vector<std::optional<std::vector<Segment>>> pieces;
  bool matched = false;
  int hom_bound = 0;
  std::string failure_reason;  // empty when matched
};

// Pre: r rangee-compatible sizes: w.base must equal the segment degrees
// of r in order.
StratumAnalysis stratum_hom_bound(const Universe& u, const Realization& r,
                                  const CosetInvolution& w);

// All involutions e on indices of the canonical realization with
// Delta_{e(i)} = gd(Delta_i) and every fixed segment distinguished for
// the requested kind (the eta kind twists by chi first).  An empty result
// certifies that the standard module is not distinguished for that kind.
std::vector<std::vector<int>> matching_involutions(const Universe& u,
                                                   const Multisegment& m,
                                                   Kind kind);

// Three-valued classification of the standard module attached to the
// multisegment.  A YES and a NO for the same kind is a soundness bug and
// throws std::logic_error.
DistinctionReport classify_standard(const Universe& u, const Multisegment& m);

// Definite classification of the irreducible quotient when the
// multisegment is a ladder (throws InvalidArgument otherwise).  Never
// returns UNKNOWN.
DistinctionReport classify_ladder(const Universe& u, const Multisegment& m);

// Sum of stratum bounds over every involutive double coset, taken on the
// right-ordered rearrangement of r (arranged reorderings induce
// isomorphic modules, and the right-ordered sum is the sharp one).
// Pre: is_rangee(r).  This bounds the dimension of the space of
// invariant functionals from above; with pairwise-distinct segments the
// bound is at most one.
int mult_one_bound(const Universe& u, const Realization& r);

struct KeyLemmaResult {
  bool pass = true;
  long long strata_checked = 0;
  std::optional<StratumAnalysis> witness;  // first offending stratum
};

// Checks that on a right-ordered realization every stratum that is not
// the open-orbit shape carries no functional.  A FAIL witness is either a
// counterexample to the supporting theory or an implementation bug, and
// must be escalated.  Pre: is_right_ordered(r).
KeyLemmaResult key_lemma_check(const Universe& u, const Realization& r);

enum class CheckVerdict { Pass, Fail, NotApplicable };

struct DerivCheckResult {
  CheckVerdict verdict = CheckVerdict::NotApplicable;
  std::optional<Multisegment> witness;  // derivative that carried the descent
};

// For a distinguished non-generic ladder, some derivative must stay
// distinguished after a half shift.  NOT_APPLICABLE when the ladder is
// generic or not distinguished for the requested kind; the eta kind is
// checked on the chi twist.
DerivCheckResult deriv_consistency_check(const Universe& u,
                                         const Multisegment& m,
                                         Kind kind = Kind::Dist);

}  // namespace segdist
