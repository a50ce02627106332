#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "segdist/errors.hpp"
#include "segdist/rational.hpp"

namespace segdist {

// A tower is a cuspidal nu-line: the set { nu^s rho0 : s rational } of
// twists of one unitary anchor rho0.  Only distinction-relevant data is
// kept: the degree of rho0 and where the three involutions send the line.
//
//   tau   Galois twist, exponent-preserving
//   dual  smooth dual, exponent-negating
//   chi   twist by the fixed extension of the quadratic class character,
//         exponent-preserving
//
// gamma is the distinction bit of the anchor and exists exactly when the
// tower is fixed by dual∘tau.
struct Tower {
  std::string id;
  int degree = 1;
  int tau = -1, dual = -1, chi = -1;  // indices into the universe
  std::optional<int> gamma;
  bool synthetic = false;  // chi-partner synthesized by the loader
};

// A line is a nu^Z-orbit inside a tower: the tower of its anchor plus the
// fractional exponent offset in [0, 1).
struct Line {
  int tower = -1;
  Rat offset;
  friend bool operator==(const Line&, const Line&) = default;
};

enum class Map { Tau, Dual, Chi };

class Universe {
 public:
  int size() const { return static_cast<int>(towers_.size()); }
  const Tower& tower(int t) const { return towers_[t]; }
  // -1 when the id is unknown.
  int find(const std::string& id) const;

  int tau_of(int t) const { return towers_[t].tau; }
  int dual_of(int t) const { return towers_[t].dual; }
  int chi_of(int t) const { return towers_[t].chi; }
  // Galois dual: dual after tau.  The loader guarantees the partner maps
  // commute, so this is an involution.
  int gd_of(int t) const { return towers_[towers_[t].tau].dual; }
  bool self_gd(int t) const { return gd_of(t) == t; }

  // Position of the tower in id-sorted order; canonical orderings of
  // segments compare towers through this so output is declaration-order
  // independent.
  int rank(int t) const { return rank_[t]; }

  Line transform(const Line& l, Map m) const;
  Line nu_shift(const Line& l, const Rat& s) const {
    return Line{l.tower, mod1(l.offset + s)};
  }

  // Distinction bit of a line.  Defined only on self-Galois-dual lines,
  // i.e. self-gd tower and offset 0 or 1/2; the half shift flips the bit.
  std::optional<int> gamma_of_line(const Line& l) const;

  bool line_self_gd(const Line& l) const {
    return self_gd(l.tower) && (l.offset == rat(0) || l.offset == rat(1, 2));
  }

 private:
  friend class UniverseBuilder;
  std::vector<Tower> towers_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> rank_;
};

// Partner field of a declaration: absent, "self", or a named tower.
struct PartnerRef {
  enum Kind { Unset, Self, Named } kind = Unset;
  std::string name;
};

struct TowerDecl {
  std::string id;
  std::optional<int> degree;
  PartnerRef tau, dual, chi;  // chi never Self-by-default; see builder
  std::optional<int> gamma;
};

// Collects declarations, then closes and validates the universe:
//   - partner references are resolved and reverse-filled so every map is
//     an involution; unset tau/dual default to self
//   - towers without a chi partner get a synthesized twin "<id>_chi"
//   - degrees match across partners, the maps commute pairwise, gamma is
//     present exactly on self-Galois-dual towers, and chi flips gamma
// Violations raise SemanticError.  The result is immutable.
class UniverseBuilder {
 public:
  void add(TowerDecl d);
  Universe finalize();

 private:
  std::vector<TowerDecl> decls_;
};

}  // namespace segdist
