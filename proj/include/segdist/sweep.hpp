#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "segdist/engine.hpp"
#include "segdist/multisegment.hpp"

namespace segdist {

// Bounds for exhaustive sweeps: at most max_segments segments, each of
// span b - a at most max_span, both endpoints within [-window, window].
struct SweepBounds {
  int max_segments = 3;
  int max_span = 2;
  int window = 2;
};

// Deterministic generator: the engine sequence is fixed by the standard
// and values are reduced by plain modulo, so corpora reproduce bit for
// bit across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform-ish value in [0, n); n >= 1.
  int below(int n) { return static_cast<int>(next() % n); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
  bool flip() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Every segment over the declared (non-synthesized) towers with offset 0
// or 1/2, within the bounds.  Deterministic order.
std::vector<Segment> segment_pool(const Universe& u, const SweepBounds& b);

// Calls fn for every multiset of 1..max_segments pool elements.
void for_each_multiset(const std::vector<Segment>& pool, int max_segments,
                       const std::function<void(const Realization&)>& fn);

// All distinct orderings of the multiset, in lexicographic order.
std::vector<Realization> distinct_orderings(const Universe& u,
                                            const Realization& r);

struct KeyLemmaSweepResult {
  bool pass = true;
  long long instances = 0;
  long long strata = 0;
  std::optional<std::pair<Realization, StratumAnalysis>> witness;
};

// Runs key_lemma_check on every right-ordered ordering of every multiset
// within bounds.  Stops at the first failing stratum.
KeyLemmaSweepResult key_lemma_sweep(const Universe& u, const SweepBounds& b);

// One multisegment with 1..max_segments random pool segments.
Multisegment random_multisegment(const Universe& u, Rng& rng,
                                 const SweepBounds& b);

// A random ladder on a random declared tower; not necessarily fixed by
// the Galois dual.
Multisegment random_ladder(const Universe& u, Rng& rng, const SweepBounds& b);

// Galois-dual-closed ladders with a prescribed number of proper blocks.
// blocks = 1: a mirror-symmetric proper ladder (odd or even size).
// blocks = 2: a proper ladder in positive exponents joined to its mirror
// across a gap.  Requires a self-dual declared tower; returns nullopt
// when the universe has none.
std::optional<Multisegment> random_closed_ladder(const Universe& u, Rng& rng,
                                                 int blocks, int max_steps);

struct DerivSweepResult {
  bool pass = true;
  int checked = 0;
  int passes = 0;
  int fails = 0;
  int not_applicable = 0;
  std::optional<Multisegment> witness;  // first FAIL
};

// Derivative consistency over a seeded corpus of random ladders (mixing
// closed and unconstrained shapes) for both kinds.
DerivSweepResult deriv_corpus_check(const Universe& u, std::uint64_t seed,
                                    int count, const SweepBounds& b);

}  // namespace segdist
