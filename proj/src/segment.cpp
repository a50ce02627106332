#include "segdist/segment.hpp"

namespace segdist {

Segment make_segment(const Universe& u, int tower, const Rat& a, const Rat& b) {
  if (tower < 0 || tower >= u.size())
    throw InvalidArgument("segment references an unknown tower");
  Rat d = b - a;
  if (!is_integer(d) || d < rat(0))
    throw InvalidArgument("segment endpoints need b - a a non-negative "
                          "integer, got a=" + rat_str(a) + " b=" + rat_str(b));
  return Segment{tower, a, b};
}

Rat re_exponent(const Universe& u, const Segment& s) {
  return rat(u.tower(s.tower).degree) * rat(length(s)) * (s.a + s.b) / rat(2);
}

Segment transform(const Universe& u, const Segment& s, Map m) {
  switch (m) {
    case Map::Tau:
      return Segment{u.tau_of(s.tower), s.a, s.b};
    case Map::Dual:
      return Segment{u.dual_of(s.tower), -s.b, -s.a};
    case Map::Chi:
      return Segment{u.chi_of(s.tower), s.a, s.b};
  }
  return s;
}

bool precedes(const Universe& u, const Segment& s1, const Segment& s2) {
  if (line_of(s1) != line_of(s2)) return false;
  (void)u;
  return s1.a < s2.a && s2.a <= s1.b + rat(1) && s1.b < s2.b;
}

std::pair<Segment, std::optional<Segment>> union_intersection(
    const Universe& u, const Segment& s1, const Segment& s2) {
  if (!precedes(u, s1, s2))
    throw InvalidArgument("union_intersection needs the first segment to "
                          "precede the second");
  Segment uni{s1.tower, s1.a, s2.b};
  std::optional<Segment> inter;
  if (s2.a <= s1.b) inter = Segment{s1.tower, s2.a, s1.b};
  return {uni, inter};
}

std::optional<std::vector<Segment>> jacquet_segment(
    const Universe& u, const Segment& s, const std::vector<int>& composition) {
  int d = u.tower(s.tower).degree;
  long long total = 0;
  for (int m : composition) {
    if (m <= 0) throw InvalidArgument("composition parts must be positive");
    total += m;
  }
  if (total != degree(u, s))
    throw InvalidArgument("composition does not sum to the segment degree");
  for (int m : composition)
    if (m % d != 0) return std::nullopt;
  std::vector<Segment> pieces;
  Rat b = s.b;
  for (int m : composition) {
    int len = m / d;
    pieces.push_back(Segment{s.tower, b - rat(len - 1), b});
    b = pieces.back().a - rat(1);
  }
  return pieces;
}

DistinctionReport classify_segment(const Universe& u, const Segment& s) {
  DistinctionReport rep;
  if (!(gd(u, s) == s)) {
    rep.dist = rep.eta = Verdict::No;
    rep.trace.push_back({Rule::Known, "segment is not Galois-self-dual"});
    return rep;
  }
  auto g = u.gamma_of_line(line_of(s));
  if (!g)
    throw std::logic_error("gamma undefined on a self-Galois-dual line; "
                           "universe validation should prevent this");
  rep.dist = (*g == 0) ? Verdict::Yes : Verdict::No;
  rep.eta = (*g == 1) ? Verdict::Yes : Verdict::No;
  rep.trace.push_back(
      {Rule::Known, "Galois-self-dual segment with line gamma = " +
                        std::to_string(*g)});
  return rep;
}

bool segment_less(const Universe& u, const Segment& s1, const Segment& s2) {
  int r1 = u.rank(s1.tower), r2 = u.rank(s2.tower);
  if (r1 != r2) return r1 < r2;
  Rat o1 = mod1(s1.a), o2 = mod1(s2.a);
  if (o1 != o2) return o1 < o2;
  if (s1.b != s2.b) return s2.b < s1.b;
  return s2.a < s1.a;
}

}  // namespace segdist
