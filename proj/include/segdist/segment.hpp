#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "segdist/report.hpp"
#include "segdist/universe.hpp"

namespace segdist {

// Segment Delta(rho0, a, b): the consecutive cuspidal string
// nu^a rho0, nu^(a+1) rho0, ..., nu^b rho0 on one tower.  a and b are
// rationals with b - a a non-negative integer; the anchor exponent is
// folded into them.  The empty segment is not representable here; routines
// that can produce it return std::optional<Segment>.
struct Segment {
  int tower = -1;
  Rat a, b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

Segment make_segment(const Universe& u, int tower, const Rat& a, const Rat& b);

inline int length(const Segment& s) {
  return static_cast<int>(rat_floor(s.b - s.a)) + 1;
}
inline int degree(const Universe& u, const Segment& s) {
  return u.tower(s.tower).degree * length(s);
}
inline Line line_of(const Segment& s) { return Line{s.tower, mod1(s.a)}; }

// Real part of the central exponent: degree(tower) * (b-a+1) * (a+b) / 2.
Rat re_exponent(const Universe& u, const Segment& s);

Segment transform(const Universe& u, const Segment& s, Map m);
inline Segment nu_shift(const Segment& s, const Rat& t) {
  return Segment{s.tower, s.a + t, s.b + t};
}
// Galois dual: dual of tau.
inline Segment gd(const Universe& u, const Segment& s) {
  return transform(u, transform(u, s, Map::Tau), Map::Dual);
}

// s1 precedes s2: same line, a1 < a2 <= b1 + 1 and b1 < b2.  This is the
// juxtaposition order; two segments are linked when either precedes the
// other.
bool precedes(const Universe& u, const Segment& s1, const Segment& s2);
inline bool linked(const Universe& u, const Segment& s1, const Segment& s2) {
  return precedes(u, s1, s2) || precedes(u, s2, s1);
}

// Requires precedes(s1, s2).  Union always exists; the intersection is
// empty exactly when s2 starts right after s1 ends.
std::pair<Segment, std::optional<Segment>> union_intersection(
    const Universe& u, const Segment& s1, const Segment& s2);

// Top-to-bottom slicing of the segment along a composition of its degree.
// Returns nullopt (the zero module) when some part is not a multiple of
// the tower degree; otherwise piece i keeps the top end of what is left:
// b_1 = b and b_{i+1} = a_i - 1.
std::optional<std::vector<Segment>> jacquet_segment(
    const Universe& u, const Segment& s, const std::vector<int>& composition);

// Distinction of the single segment: both NO unless the segment is fixed
// by the Galois dual, in which case exactly one kind is YES and the gamma
// bit of the line selects it.
DistinctionReport classify_segment(const Universe& u, const Segment& s);

// Canonical order: by line (tower id rank, then offset), then decreasing
// b, then decreasing a.
bool segment_less(const Universe& u, const Segment& s1, const Segment& s2);

}  // namespace segdist
