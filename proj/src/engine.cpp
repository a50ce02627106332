#include "segdist/engine.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "segdist/errors.hpp"

namespace segdist {

namespace {

const char* kind_name(Kind k) { return k == Kind::Dist ? "dist" : "eta"; }

Kind other(Kind k) { return k == Kind::Dist ? Kind::Eta : Kind::Dist; }

Kind kind_from_gamma(int g) {
  return g % 2 == 0 ? Kind::Dist : Kind::Eta;
}

Verdict& verdict_of(DistinctionReport& rep, Kind k) {
  return k == Kind::Dist ? rep.dist : rep.eta;
}

Verdict verdict_of(const DistinctionReport& rep, Kind k) {
  return k == Kind::Dist ? rep.dist : rep.eta;
}

Composition degree_composition(const Universe& u, const Realization& r) {
  Composition out;
  out.reserve(r.size());
  for (const Segment& s : r) out.push_back(degree(u, s));
  return out;
}

// The common tower degree when every segment lives over the same one;
// refinement parts outside its multiples slice to zero, so enumeration
// may skip them.
std::optional<int> common_tower_degree(const Universe& u,
                                       const Realization& r) {
  std::optional<int> d;
  for (const Segment& s : r) {
    int dt = u.tower(s.tower).degree;
    if (d && *d != dt) return std::nullopt;
    d = dt;
  }
  return d;
}

}  // namespace

StratumAnalysis stratum_hom_bound(const Universe& u, const Realization& r,
                                  const CosetInvolution& w) {
  if (auto reason = coset_invalid_reason(w))
    throw InvalidArgument("malformed coset: " + *reason);
  if (w.base != degree_composition(u, r))
    throw InvalidArgument("coset base does not match the segment degrees");

  StratumAnalysis res;
  res.w = w;
  res.pieces.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto slice = jacquet_segment(u, r[i], w.refinement[i]);
    if (!slice && res.failure_reason.empty())
      res.failure_reason =
          "block " + std::to_string(i + 1) + " slices to zero";
    res.pieces.push_back(std::move(slice));
  }
  if (!res.failure_reason.empty()) return res;

  auto piece_at = [&](int c) -> const Segment& {
    auto [block, j] = w.unflat(c);
    return (*res.pieces[block])[j];
  };
  for (int c = 0; c < w.cells(); ++c) {
    int e = w.eps[c];
    if (e == c) {
      if (classify_segment(u, piece_at(c)).dist != Verdict::Yes) {
        res.failure_reason =
            "fixed cell " + std::to_string(c + 1) + " is not distinguished";
        return res;
      }
    } else if (c < e) {
      if (!(piece_at(e) == gd(u, piece_at(c)))) {
        res.failure_reason = "cells " + std::to_string(c + 1) + " and " +
                             std::to_string(e + 1) + " are not Galois dual";
        return res;
      }
    }
  }
  res.matched = true;
  res.hom_bound = 1;
  return res;
}

std::vector<std::vector<int>> matching_involutions(const Universe& u,
                                                   const Multisegment& m,
                                                   Kind kind) {
  Multisegment mm = kind == Kind::Eta ? apply(u, m, MsOp::Chi) : m;
  const Realization& r = mm.segments();
  int t = mm.size();

  std::vector<Segment> duals;
  duals.reserve(r.size());
  for (const Segment& s : r) duals.push_back(gd(u, s));
  std::vector<char> fixable(r.size());
  for (int i = 0; i < t; ++i)
    fixable[i] = r[i] == duals[i] &&
                 classify_segment(u, r[i]).dist == Verdict::Yes;

  std::vector<std::vector<int>> out;
  std::vector<int> e(r.size(), -1);
  std::function<void(int)> rec = [&](int i) {
    while (i < t && e[i] != -1) ++i;
    if (i == t) {
      out.push_back(e);
      return;
    }
    if (fixable[i]) {
      e[i] = i;
      rec(i + 1);
      e[i] = -1;
    }
    for (int j = i + 1; j < t; ++j) {
      if (e[j] != -1 || !(r[j] == duals[i])) continue;
      e[i] = j;
      e[j] = i;
      rec(i + 1);
      e[i] = e[j] = -1;
    }
  };
  rec(0);
  return out;
}

DistinctionReport classify_standard(const Universe& u,
                                    const Multisegment& m) {
  DistinctionReport rep;
  bool gd_closed = is_conjugate_selfdual(u, m);
  auto comps = pure_components(u, m);
  int n = static_cast<int>(comps.size());

  // Orbit analysis: the Galois dual permutes the pure components; an
  // exchanged pair feeds a functional of either kind, a fixed component
  // always feeds the kind its gamma bit selects and feeds the other one
  // when every exponent is nonzero (an unramified twist removes the
  // obstruction without moving the module).
  bool all_yes[2] = {gd_closed, gd_closed};
  std::vector<TraceEntry> orbit_trace[2];
  if (gd_closed) {
    std::vector<int> partner(comps.size(), -1);
    for (int i = 0; i < n; ++i) {
      Multisegment g = gd(u, comps[i].second);
      for (int j = 0; j < n; ++j)
        if (comps[j].second == g) {
          partner[i] = j;
          break;
        }
      if (partner[i] < 0)
        throw std::logic_error("unpaired component in a closed multisegment");
    }
    for (int i = 0; i < n; ++i) {
      int j = partner[i];
      if (j < i) continue;
      if (j != i) {
        std::string detail = "components " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1) +
                             " exchange under the Galois dual";
        orbit_trace[0].push_back({Rule::Pairing, detail});
        orbit_trace[1].push_back({Rule::Pairing, detail});
        continue;
      }
      auto g = u.gamma_of_line(comps[i].first);
      if (!g)
        throw std::logic_error("self-dual component line without gamma");
      Kind sure = kind_from_gamma(*g);
      bool twistable = true;
      for (const Segment& s : comps[i].second.segments())
        if (re_exponent(u, s) == Rat(0)) {
          twistable = false;
          break;
        }
      orbit_trace[static_cast<int>(sure)].push_back(
          {Rule::SecDir, "component " + std::to_string(i + 1) +
                             " is self-dual with gamma " + std::to_string(*g)});
      if (twistable)
        orbit_trace[static_cast<int>(other(sure))].push_back(
            {Rule::SecDir, "component " + std::to_string(i + 1) +
                               " twists across kinds: every exponent is "
                               "nonzero"});
      else
        all_yes[static_cast<int>(other(sure))] = false;
    }
  }

  for (int ki = 0; ki < 2; ++ki) {
    Kind k = static_cast<Kind>(ki);
    auto matches = matching_involutions(u, m, k);
    if (matches.empty()) {
      if (all_yes[ki])
        throw std::logic_error(
            "component analysis found functionals on a module with no "
            "matching involution");
      verdict_of(rep, k) = Verdict::No;
      rep.trace.push_back({Rule::FirstDir,
                           std::string("no matching involution for ") +
                               kind_name(k)});
      // An odd number of segments on one self-dual line leaves a fixed
      // segment under any pairing, and a fixed segment carries only the
      // kind its gamma bit selects.
      if (n == 1 && m.size() % 2 == 1) {
        auto g = u.gamma_of_line(comps[0].first);
        if (g && kind_from_gamma(1 - *g) == k)
          rep.trace.push_back(
              {Rule::NobothLem,
               std::string("odd pure size excludes ") + kind_name(k)});
      }
      continue;
    }
    if (!gd_closed)
      throw std::logic_error(
          "matching involution on a multisegment that is not closed under "
          "the Galois dual");
    if (all_yes[ki]) {
      verdict_of(rep, k) = Verdict::Yes;
      for (const TraceEntry& te : orbit_trace[ki]) rep.trace.push_back(te);
      rep.trace.push_back(
          {Rule::JacMod,
           m.empty() ? std::string("empty multisegment")
                     : std::string("every component feeds a functional "
                                   "for ") +
                           kind_name(k)});
    } else {
      verdict_of(rep, k) = Verdict::Unknown;
    }
  }
  return rep;
}

DistinctionReport classify_ladder(const Universe& u, const Multisegment& m) {
  auto shape = ladder_shape(u, m);
  if (!shape) throw InvalidArgument("multisegment is not a ladder");

  DistinctionReport rep;
  if (m.empty()) {
    rep.dist = rep.eta = Verdict::Yes;
    rep.trace.push_back({Rule::LadderThm2, "empty ladder"});
    return rep;
  }
  if (!is_conjugate_selfdual(u, m)) {
    rep.dist = rep.eta = Verdict::No;
    rep.trace.push_back(
        {Rule::FirstDir, "ladder is not fixed by the Galois dual"});
    return rep;
  }
  auto g = u.gamma_of_line(*shape->line);
  if (!g) throw std::logic_error("self-dual ladder line without gamma");

  int t = shape->size();
  int k = static_cast<int>(proper_ladder_decomposition(u, *shape).size());
  if (k % 2 == 0) {
    rep.dist = rep.eta = Verdict::Yes;
    rep.trace.push_back({Rule::LadderThm2,
                         "the " + std::to_string(k) +
                             " proper blocks pair off under the Galois "
                             "dual"});
    return rep;
  }
  Kind yes = kind_from_gamma((*g + t + 1) % 2);
  verdict_of(rep, yes) = Verdict::Yes;
  verdict_of(rep, other(yes)) = Verdict::No;
  rep.trace.push_back({Rule::LadderThm,
                       std::string(kind_name(yes)) + " selected by gamma " +
                           std::to_string(*g) + " and size " +
                           std::to_string(t)});
  rep.trace.push_back({Rule::NobothThm,
                       std::string(kind_name(other(yes))) +
                           " excluded: a self-dual ladder carries exactly "
                           "one kind"});
  return rep;
}

int mult_one_bound(const Universe& u, const Realization& r) {
  if (!is_rangee(u, r))
    throw InvalidArgument("realization is not arranged");
  // Arranged reorderings of one multiset induce isomorphic modules, and
  // only the right-ordered composition makes the stratum sum sharp: in
  // other arranged orders a refined stratum can duplicate the matched
  // admissible one.  Normalize before summing.
  Realization ro = canonicalize(u, r);
  Composition deg = degree_composition(u, ro);
  std::optional<int> div = common_tower_degree(u, ro);
  int total = 0;
  for (const CosetInvolution& w : enumerate_W2(deg, div))
    total += stratum_hom_bound(u, ro, w).hom_bound;
  return total;
}

KeyLemmaResult key_lemma_check(const Universe& u, const Realization& r) {
  if (!is_right_ordered(u, r))
    throw InvalidArgument("realization is not right-ordered");
  Composition deg = degree_composition(u, r);
  std::optional<int> div = common_tower_degree(u, r);
  KeyLemmaResult res;
  for (const CosetInvolution& w : enumerate_W2(deg, div)) {
    if (is_admissible(w)) continue;
    StratumAnalysis a = stratum_hom_bound(u, r, w);
    ++res.strata_checked;
    if (a.hom_bound != 0) {
      res.pass = false;
      res.witness = std::move(a);
      return res;
    }
  }
  return res;
}

DerivCheckResult deriv_consistency_check(const Universe& u,
                                         const Multisegment& m, Kind kind) {
  auto shape = ladder_shape(u, m);
  if (!shape) throw InvalidArgument("multisegment is not a ladder");

  DerivCheckResult res;
  if (is_generic(u, m)) return res;
  if (verdict_of(classify_ladder(u, m), kind) != Verdict::Yes) return res;

  res.verdict = CheckVerdict::Fail;
  for (const Multisegment& d : derivative_set(u, *shape)) {
    if (d.empty()) continue;
    DistinctionReport rep = classify_ladder(u, nu_shift(u, d, Rat(1, 2)));
    if (verdict_of(rep, kind) == Verdict::Yes) {
      res.verdict = CheckVerdict::Pass;
      res.witness = d;
      break;
    }
  }
  return res;
}

}  // namespace segdist
