#include "segdist/sweep.hpp"

#include <algorithm>

namespace segdist {

namespace {

std::vector<int> declared_towers(const Universe& u, bool self_dual_only) {
  std::vector<int> out;
  for (int t = 0; t < u.size(); ++t) {
    if (u.tower(t).synthetic) continue;
    if (self_dual_only && !u.self_gd(t)) continue;
    out.push_back(t);
  }
  return out;
}

// One step up a ladder: a segment the seed precedes, keeping the walk
// linked so the result stays proper.
Segment grow_up(const Segment& seed, Rng& rng) {
  long long len = length(seed);
  Rat a = seed.a + rng.range(1, static_cast<int>(len));
  Rat b = seed.b + rng.range(1, 2);
  return Segment{seed.tower, a, b};
}

}  // namespace

std::vector<Segment> segment_pool(const Universe& u, const SweepBounds& b) {
  std::vector<Segment> pool;
  for (int t : declared_towers(u, false)) {
    for (int half = 0; half <= 1; ++half) {
      for (int k = -b.window; k <= b.window; ++k) {
        Rat a = Rat(half, 2) + k;
        if (a < Rat(-b.window)) continue;
        for (int s = 0; s <= b.max_span; ++s) {
          Rat top = a + s;
          if (top > Rat(b.window)) break;
          pool.push_back(Segment{t, a, top});
        }
      }
    }
  }
  return pool;
}

void for_each_multiset(const std::vector<Segment>& pool, int max_segments,
                       const std::function<void(const Realization&)>& fn) {
  int n = static_cast<int>(pool.size());
  Realization cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (!cur.empty()) fn(cur);
    if (left == 0) return;
    for (int i = start; i < n; ++i) {
      cur.push_back(pool[i]);
      rec(i, left - 1);
      cur.pop_back();
    }
  };
  rec(0, max_segments);
}

std::vector<Realization> distinct_orderings(const Universe& u,
                                            const Realization& r) {
  auto less = [&u](const Segment& x, const Segment& y) {
    return segment_less(u, x, y);
  };
  Realization s = r;
  std::sort(s.begin(), s.end(), less);
  std::vector<Realization> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end(), less));
  return out;
}

KeyLemmaSweepResult key_lemma_sweep(const Universe& u, const SweepBounds& b) {
  KeyLemmaSweepResult res;
  for_each_multiset(segment_pool(u, b), b.max_segments,
                    [&](const Realization& mset) {
                      if (!res.pass) return;
                      for (const Realization& r : distinct_orderings(u, mset)) {
                        if (!is_right_ordered(u, r)) continue;
                        KeyLemmaResult kr = key_lemma_check(u, r);
                        ++res.instances;
                        res.strata += kr.strata_checked;
                        if (!kr.pass) {
                          res.pass = false;
                          res.witness.emplace(r, std::move(*kr.witness));
                          return;
                        }
                      }
                    });
  return res;
}

Multisegment random_multisegment(const Universe& u, Rng& rng,
                                 const SweepBounds& b) {
  std::vector<Segment> pool = segment_pool(u, b);
  int t = rng.range(1, b.max_segments);
  Realization segs;
  segs.reserve(t);
  for (int i = 0; i < t; ++i)
    segs.push_back(pool[rng.below(static_cast<int>(pool.size()))]);
  return Multisegment(u, std::move(segs));
}

Multisegment random_ladder(const Universe& u, Rng& rng,
                           const SweepBounds& b) {
  std::vector<int> towers = declared_towers(u, false);
  int tower = towers[rng.below(static_cast<int>(towers.size()))];
  int t = rng.range(1, b.max_segments);
  Rat a = Rat(rng.below(2), 2) + rng.range(-b.window, b.window);
  Rat top = a + rng.range(0, b.max_span);
  Realization segs{Segment{tower, a, top}};
  for (int i = 1; i < t; ++i) {
    Rat a2 = a - rng.range(1, 2);
    int room = static_cast<int>(rat_floor(top - a2)) - 1;
    int s = rng.range(0, std::min(b.max_span, room));
    a = a2;
    top = a2 + s;
    segs.push_back(Segment{tower, a, top});
  }
  return Multisegment(u, std::move(segs));
}

std::optional<Multisegment> random_closed_ladder(const Universe& u, Rng& rng,
                                                 int blocks, int max_steps) {
  std::vector<int> towers = declared_towers(u, true);
  if (towers.empty()) return std::nullopt;
  int tower = towers[rng.below(static_cast<int>(towers.size()))];
  Rat o(rng.below(2), 2);

  Realization segs;
  Segment seed{tower, 0, 0};
  int extra = 0;
  if (blocks == 1 && rng.flip()) {
    // Odd size: one segment fixed by the Galois dual sits in the middle.
    Rat c = o + rng.range(0, 2);
    seed = Segment{tower, -c, c};
    segs.push_back(seed);
    extra = rng.range(0, max_steps);
  } else if (blocks == 1) {
    // Even size: the upper half starts just above the mirror seam, close
    // enough that the two middle segments stay linked.
    Rat a = o - rng.range(0, 2);
    Rat top = -a + rng.range(1, 2);
    seed = Segment{tower, a, top};
    segs.push_back(seed);
    segs.push_back(gd(u, seed));
    extra = rng.range(0, std::max(0, max_steps - 1));
  } else {
    // Two blocks: a proper ladder in positive exponents and its mirror,
    // separated by a gap at the seam.
    Rat a = o + rng.range(1, 2);
    Rat top = a + rng.range(0, 2);
    seed = Segment{tower, a, top};
    segs.push_back(seed);
    segs.push_back(gd(u, seed));
    extra = rng.range(0, std::max(0, max_steps - 1));
  }
  for (int i = 0; i < extra; ++i) {
    seed = grow_up(seed, rng);
    segs.push_back(seed);
    segs.push_back(gd(u, seed));
  }
  return Multisegment(u, std::move(segs));
}

DerivSweepResult deriv_corpus_check(const Universe& u, std::uint64_t seed,
                                    int count, const SweepBounds& b) {
  DerivSweepResult res;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    Multisegment m;
    int pick = rng.below(3);
    if (pick == 0) {
      m = random_ladder(u, rng, b);
    } else {
      auto closed = random_closed_ladder(u, rng, pick, b.max_segments);
      m = closed ? *closed : random_ladder(u, rng, b);
    }
    ++res.checked;
    for (Kind k : {Kind::Dist, Kind::Eta}) {
      DerivCheckResult r = deriv_consistency_check(u, m, k);
      switch (r.verdict) {
        case CheckVerdict::Pass:
          ++res.passes;
          break;
        case CheckVerdict::Fail:
          ++res.fails;
          if (!res.witness) res.witness = m;
          res.pass = false;
          break;
        case CheckVerdict::NotApplicable:
          ++res.not_applicable;
          break;
      }
    }
  }
  return res;
}

}  // namespace segdist
