#include "segdist/multisegment.hpp"

#include <algorithm>
#include <set>

namespace segdist {

Realization canonicalize(const Universe& u, Realization r) {
  std::stable_sort(r.begin(), r.end(), [&](const Segment& x, const Segment& y) {
    return segment_less(u, x, y);
  });
  return r;
}

int Multisegment::degree(const Universe& u) const {
  int d = 0;
  for (const auto& s : segs_) d += segdist::degree(u, s);
  return d;
}

bool Multisegment::less(const Universe& u, const Multisegment& x,
                        const Multisegment& y) {
  return std::lexicographical_compare(
      x.segs_.begin(), x.segs_.end(), y.segs_.begin(), y.segs_.end(),
      [&](const Segment& a, const Segment& b) { return segment_less(u, a, b); });
}

bool is_rangee(const Universe& u, const Realization& r) {
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i + 1; j < r.size(); ++j)
      if (precedes(u, r[i], r[j])) return false;
  return true;
}

bool is_right_ordered(const Universe& u, const Realization& r) {
  (void)u;
  std::vector<Line> seen;
  for (size_t i = 0; i < r.size(); ++i) {
    Line l = line_of(r[i]);
    if (i > 0 && line_of(r[i - 1]) == l) {
      if (r[i - 1].b < r[i].b) return false;
    } else {
      // A line may not restart a new group.
      for (const Line& p : seen)
        if (p == l) return false;
      seen.push_back(l);
    }
  }
  return true;
}

Multisegment apply(const Universe& u, const Multisegment& m, MsOp op) {
  Realization out;
  out.reserve(m.size());
  for (const auto& s : m.segments())
    out.push_back(transform(u, s, op == MsOp::Star  ? Map::Dual
                                  : op == MsOp::Tau ? Map::Tau
                                                    : Map::Chi));
  return Multisegment(u, std::move(out));
}

Multisegment nu_shift(const Universe& u, const Multisegment& m, const Rat& t) {
  Realization out;
  out.reserve(m.size());
  for (const auto& s : m.segments()) out.push_back(nu_shift(s, t));
  return Multisegment(u, std::move(out));
}

Multisegment gd(const Universe& u, const Multisegment& m) {
  Realization out;
  out.reserve(m.size());
  for (const auto& s : m.segments()) out.push_back(gd(u, s));
  return Multisegment(u, std::move(out));
}

bool is_conjugate_selfdual(const Universe& u, const Multisegment& m) {
  return apply(u, m, MsOp::Star) == apply(u, m, MsOp::Tau);
}

std::vector<std::pair<Line, Multisegment>> pure_components(
    const Universe& u, const Multisegment& m) {
  std::vector<std::pair<Line, Multisegment>> out;
  const auto& segs = m.segments();
  size_t i = 0;
  while (i < segs.size()) {
    Line l = line_of(segs[i]);
    Realization group;
    while (i < segs.size() && line_of(segs[i]) == l) group.push_back(segs[i++]);
    out.emplace_back(l, Multisegment(u, std::move(group)));
  }
  return out;
}

bool is_generic(const Universe& u, const Multisegment& m) {
  const auto& segs = m.segments();
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (linked(u, segs[i], segs[j])) return false;
  return true;
}

std::vector<std::pair<int, Rat>> cuspidal_support(const Universe& u,
                                                  const Multisegment& m) {
  std::vector<std::pair<int, Rat>> pts;
  for (const auto& s : m.segments())
    for (Rat x = s.a; x <= s.b; x += rat(1)) pts.emplace_back(s.tower, x);
  std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
    if (p.first != q.first) return u.rank(p.first) < u.rank(q.first);
    return p.second < q.second;
  });
  return pts;
}

std::optional<LadderShape> ladder_shape(const Universe& u,
                                        const Multisegment& m) {
  (void)u;
  LadderShape l;
  if (m.empty()) return l;
  const auto& segs = m.segments();
  Line ln = line_of(segs[0]);
  for (const auto& s : segs) {
    if (!(line_of(s) == ln)) return std::nullopt;
    l.pairs.emplace_back(s.a, s.b);
  }
  // Canonical order already sorts by decreasing b; a ladder needs both
  // coordinates strictly decreasing.
  for (size_t i = 1; i < l.pairs.size(); ++i)
    if (!(l.pairs[i].first < l.pairs[i - 1].first &&
          l.pairs[i].second < l.pairs[i - 1].second))
      return std::nullopt;
  l.line = ln;
  return l;
}

bool is_proper_ladder(const Universe& u, const LadderShape& l) {
  for (int i = 0; i + 1 < l.size(); ++i)
    if (!precedes(u, l.segment(i + 1), l.segment(i))) return false;
  return true;
}

std::vector<LadderShape> proper_ladder_decomposition(const Universe& u,
                                                     const LadderShape& l) {
  (void)u;
  std::vector<LadderShape> parts;
  LadderShape cur;
  cur.line = l.line;
  for (int i = 0; i < l.size(); ++i) {
    cur.pairs.push_back(l.pairs[i]);
    bool cut = i + 1 == l.size() ||
               l.pairs[i + 1].second < l.pairs[i].first - rat(1);
    if (cut) {
      parts.push_back(cur);
      cur.pairs.clear();
    }
  }
  return parts;
}

std::vector<Multisegment> kernel_modules(const Universe& u,
                                         const LadderShape& l) {
  if (l.size() < 2 || !is_proper_ladder(u, l))
    throw InvalidArgument("kernel_modules needs a proper ladder with at "
                          "least two segments");
  std::vector<Multisegment> out;
  for (int i = 0; i + 1 < l.size(); ++i) {
    Realization segs;
    for (int j = 0; j < l.size(); ++j)
      if (j != i && j != i + 1) segs.push_back(l.segment(j));
    auto [uni, inter] = union_intersection(u, l.segment(i + 1), l.segment(i));
    segs.push_back(uni);
    if (inter) segs.push_back(*inter);
    out.emplace_back(u, std::move(segs));
  }
  return out;
}

std::vector<Multisegment> derivative_set(const Universe& u,
                                         const LadderShape& l) {
  auto cmp = [&u](const Multisegment& x, const Multisegment& y) {
    return Multisegment::less(u, x, y);
  };
  std::set<Multisegment, decltype(cmp)> members(cmp);
  int t = l.size();
  if (t == 0) return {};
  // Choice i ranges over integers: a'_i = a_i + k, 0 <= k <= cap_i.
  std::vector<int> cap(t);
  for (int i = 0; i < t; ++i) {
    Rat high = l.pairs[i].second + rat(1);  // segment empties past b_i
    if (i > 0) high = std::min(high, l.pairs[i - 1].first - rat(1));
    cap[i] = static_cast<int>(rat_floor(high - l.pairs[i].first));
  }
  std::vector<int> k(t, 0);
  for (;;) {
    // Advance the mixed-radix counter; the all-zero tuple is the input
    // itself and is skipped.
    int i = 0;
    while (i < t && k[i] == cap[i]) k[i++] = 0;
    if (i == t) break;
    ++k[i];
    Realization segs;
    for (int j = 0; j < t; ++j) {
      Rat aj = l.pairs[j].first + rat(k[j]);
      if (aj <= l.pairs[j].second)
        segs.push_back(Segment{l.line->tower, aj, l.pairs[j].second});
    }
    members.emplace(u, std::move(segs));
  }
  return {members.begin(), members.end()};
}

}  // namespace segdist
