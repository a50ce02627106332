#include <set>
#include <vector>

#include "doctest.h"
#include "segdist/sweep.hpp"
#include "test_support.hpp"

using namespace segdist;
using test::ms;
using test::seg;

TEST_CASE("segment pool covers the declared towers within bounds") {
  Universe u = test::sweep_universe(0);
  SweepBounds b;
  auto pool = segment_pool(u, b);

  // Per tower: 12 integer-offset shapes and 9 half-offset shapes.
  CHECK(pool.size() == 63);

  std::set<int> towers;
  for (const Segment& s : pool) {
    towers.insert(s.tower);
    CHECK(!u.tower(s.tower).synthetic);
    CHECK(s.a >= rat(-b.window));
    CHECK(s.b <= rat(b.window));
    CHECK(length(s) <= b.max_span + 1);
    Rat off = mod1(s.a);
    CHECK((off == rat(0) || off == rat(1, 2)));
  }
  CHECK(towers.size() == 3);

  // Distinct shapes only.
  std::set<std::pair<int, std::pair<Rat, Rat>>> keys;
  for (const Segment& s : pool) keys.insert({s.tower, {s.a, s.b}});
  CHECK(keys.size() == pool.size());

  SweepBounds tight{1, 0, 0};
  auto small = segment_pool(u, tight);
  // Only offset-0 length-1 segments at the origin survive.
  CHECK(small.size() == 3);
}

TEST_CASE("multiset walk visits every shape once") {
  Universe u = test::sweep_universe(0);
  SweepBounds b;
  auto pool = segment_pool(u, b);

  long long count = 0;
  for_each_multiset(pool, 3, [&](const Realization&) { ++count; });
  // 63 singles, 2016 pairs, 43680 triples.
  CHECK(count == 45759);

  std::vector<Segment> tiny(pool.begin(), pool.begin() + 4);
  std::set<std::vector<std::tuple<int, Rat, Rat>>> seen;
  long long n = 0;
  for_each_multiset(tiny, 2, [&](const Realization& r) {
    ++n;
    CHECK(!r.empty());
    CHECK(r.size() <= 2);
    std::vector<std::tuple<int, Rat, Rat>> key;
    for (const Segment& s : r) key.push_back({s.tower, s.a, s.b});
    seen.insert(key);
  });
  // 4 singles plus 10 unordered pairs with repetition.
  CHECK(n == 14);
  CHECK(seen.size() == 14);
}

TEST_CASE("distinct orderings of a multiset") {
  Universe u = test::sweep_universe(0);
  Segment x = seg(u, "T", rat(0), rat(0));
  Segment y = seg(u, "T", rat(1), rat(1));

  CHECK(distinct_orderings(u, {x, x}).size() == 1);
  CHECK(distinct_orderings(u, {x, y}).size() == 2);
  CHECK(distinct_orderings(u, {x, x, y}).size() == 3);
  CHECK(distinct_orderings(u, {}).size() == 1);
}

TEST_CASE("random corpora reproduce bit for bit") {
  Universe u = test::sweep_universe(0);
  SweepBounds b;

  Rng r1(2026), r2(2026);
  for (int i = 0; i < 50; ++i)
    CHECK(random_multisegment(u, r1, b) == random_multisegment(u, r2, b));

  Rng l1(7), l2(7);
  for (int i = 0; i < 50; ++i)
    CHECK(random_ladder(u, l1, b) == random_ladder(u, l2, b));

  Rng c1(13), c2(13);
  for (int i = 0; i < 50; ++i) {
    auto a = random_closed_ladder(u, c1, 1 + i % 2, 3);
    auto bb = random_closed_ladder(u, c2, 1 + i % 2, 3);
    REQUIRE(a.has_value());
    REQUIRE(bb.has_value());
    CHECK(*a == *bb);
  }
}

TEST_CASE("random ladders are ladders") {
  Universe u = test::sweep_universe(0);
  SweepBounds b;
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Multisegment m = random_ladder(u, rng, b);
    CHECK(!m.empty());
    CHECK(ladder_shape(u, m).has_value());
  }
}

TEST_CASE("closed ladder generator hits the requested block count") {
  Universe u0 = test::sweep_universe(0);
  Universe u1 = test::sweep_universe(1);
  for (Universe* u : {&u0, &u1}) {
    Rng rng(321);
    for (int i = 0; i < 150; ++i) {
      int blocks = 1 + i % 2;
      auto m = random_closed_ladder(*u, rng, blocks, 4);
      REQUIRE(m.has_value());
      CHECK(!m->empty());
      CHECK(is_conjugate_selfdual(*u, *m));
      auto shape = ladder_shape(*u, *m);
      REQUIRE(shape.has_value());
      CHECK(proper_ladder_decomposition(*u, *shape).size() ==
            static_cast<size_t>(blocks));
    }
  }
}

TEST_CASE("closed ladder generator needs a self-dual tower") {
  Universe u = parse_universe(
      "tower C { degree 2; tau self; dual -> D; }\n"
      "tower D { degree 2; tau self; dual -> C; }\n");
  Rng rng(1);
  CHECK(!random_closed_ladder(u, rng, 1, 3).has_value());
}

TEST_CASE("key lemma sweep passes on small bounds") {
  Universe u = test::sweep_universe(0);
  SweepBounds small{2, 1, 1};
  auto res = key_lemma_sweep(u, small);
  CHECK(res.pass);
  CHECK(res.instances > 0);
  CHECK(res.strata >= 0);
  CHECK(!res.witness.has_value());

  // Same bounds, same walk.
  auto again = key_lemma_sweep(u, small);
  CHECK(again.instances == res.instances);
  CHECK(again.strata == res.strata);
}

TEST_CASE("derivative corpus check passes and counts kinds") {
  Universe u = test::sweep_universe(0);
  SweepBounds b;
  auto res = deriv_corpus_check(u, 77, 40, b);
  CHECK(res.pass);
  CHECK(res.checked == 40);
  CHECK(res.fails == 0);
  CHECK(res.passes + res.not_applicable == 80);
  CHECK(!res.witness.has_value());
}
