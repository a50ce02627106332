#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "segdist/segment.hpp"

namespace segdist {

// An ordered list of segments, read as the product of the corresponding
// standard representations from left to right.
using Realization = std::vector<Segment>;

// Canonical sort: by line, then decreasing b, then decreasing a.  The
// result is right-ordered, hence rangee.
Realization canonicalize(const Universe& u, Realization r);

// Multiset of segments stored in canonical order, so structural equality
// is multiset equality.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(const Universe& u, Realization segs)
      : segs_(canonicalize(u, std::move(segs))) {}

  const Realization& segments() const { return segs_; }
  int size() const { return static_cast<int>(segs_.size()); }
  bool empty() const { return segs_.empty(); }
  int degree(const Universe& u) const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  // Lexicographic on the canonical realization; used for deterministic
  // set output, not tied to any representation-theoretic order.
  static bool less(const Universe& u, const Multisegment& x,
                   const Multisegment& y);

 private:
  Realization segs_;
};

// No earlier segment precedes a later one.
bool is_rangee(const Universe& u, const Realization& r);

// Segments grouped contiguously by line with b weakly decreasing inside
// each group.  Right-ordered implies rangee.
bool is_right_ordered(const Universe& u, const Realization& r);

enum class MsOp { Star, Tau, Chi };

// star is the segment-wise dual (the dual of the standard product has the
// duals of the segments as its multiset); tau and chi act segment-wise.
Multisegment apply(const Universe& u, const Multisegment& m, MsOp op);
Multisegment nu_shift(const Universe& u, const Multisegment& m, const Rat& t);
Multisegment gd(const Universe& u, const Multisegment& m);

// Closed under the Galois dual, equivalently star(m) == tau(m).
bool is_conjugate_selfdual(const Universe& u, const Multisegment& m);

// Partition by line, keys in canonical line order.
std::vector<std::pair<Line, Multisegment>> pure_components(
    const Universe& u, const Multisegment& m);

// No two segments linked; the standard product is then irreducible.
bool is_generic(const Universe& u, const Multisegment& m);

// Multiset of cuspidal points covered by the segments, as sorted
// (tower, exponent) pairs.
std::vector<std::pair<int, Rat>> cuspidal_support(const Universe& u,
                                                  const Multisegment& m);

// A ladder: all segments on one line, with the a's and the b's strictly
// decreasing.  pairs holds (a_i, b_i) in that order.  The empty
// multisegment is a ladder with no line.
struct LadderShape {
  std::optional<Line> line;
  std::vector<std::pair<Rat, Rat>> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
  Segment segment(int i) const {
    return Segment{line->tower, pairs[i].first, pairs[i].second};
  }
};

// nullopt when the multisegment is not a ladder.
std::optional<LadderShape> ladder_shape(const Universe& u,
                                        const Multisegment& m);

// Every consecutive pair of a ladder is linked (each segment precedes the
// previous one).
bool is_proper_ladder(const Universe& u, const LadderShape& l);

// Cut the ladder after every i with b_{i+1} < a_i - 1.  The parts are
// proper ladders, pairwise unlinked, concatenating back to the input.
std::vector<LadderShape> proper_ladder_decomposition(const Universe& u,
                                                     const LadderShape& l);

// For a proper ladder with t >= 2 segments: the t-1 multisegments obtained
// by replacing a consecutive pair with its union and intersection.  These
// carry the kernel of the surjection from the standard module.
std::vector<Multisegment> kernel_modules(const Universe& u,
                                         const LadderShape& l);

// Derivative multisegments of the ladder: raise each a_i to any a'_i with
// a_i <= a'_i < a_{i-1} (a_0 = infinity), capped at b_i + 1 where the
// segment empties out.  The unchanged tuple is excluded; the empty
// multisegment is a member when every segment can empty.
std::vector<Multisegment> derivative_set(const Universe& u,
                                         const LadderShape& l);

}  // namespace segdist
