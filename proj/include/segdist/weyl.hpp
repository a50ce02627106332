#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segdist/errors.hpp"

namespace segdist {

// Composition of a positive integer; parts are positive.
using Composition = std::vector<int>;

// An involutive double coset of a standard parabolic pair, in canonical
// form.  The datum is a refinement L of the base composition M together
// with an involution eps of the refinement cells satisfying
//   - size preservation: paired cells have equal parts
//   - ordering: inside one M-block, the images of successive cells land
//     in strictly increasing M-blocks
// The ordering rule forces at most one fixed cell per block and rules out
// mergeable refinements, so each coset appears exactly once.  Cells are
// numbered flat, row-major, 0-based; eps is stored as a permutation of
// flat cell indices.  Equivalently the datum is a symmetric matrix C with
// row sums M: cell (i, j) holds C[i][i'] for the j-th nonzero column i'
// of row i, and eps pairs the (i, i') entry with the (i', i) one.
struct CosetInvolution {
  Composition base;
  std::vector<Composition> refinement;  // one row per base block
  std::vector<int> eps;                 // involution on flat cells

  int cells() const { return static_cast<int>(eps.size()); }
  // Flat index of cell (block, j).
  int flat(int block, int j) const;
  // (block, j) of a flat index.
  std::pair<int, int> unflat(int c) const;
  int part(int c) const;  // size of cell c
  int block_of(int c) const { return unflat(c).first; }

  friend bool operator==(const CosetInvolution&,
                         const CosetInvolution&) = default;
};

// Trivial refinement and no within-block structure: the open-orbit shape.
bool is_admissible(const CosetInvolution& w);

// Identity element on M: trivial refinement, identity eps.
CosetInvolution identity_coset(const Composition& m);

// Diagnostic validation of the canonical-form rules; returns an error
// description or nullopt when valid.
std::optional<std::string> coset_invalid_reason(const CosetInvolution& w);

// Smallest flat cell of each eps-orbit, increasing.
std::vector<int> orbit_representatives(const CosetInvolution& w);

// All involutive double cosets over base M, in a deterministic order.
// With divisor d, refinement parts are restricted to multiples of d (a
// pruning aid for callers whose Jacquet pieces vanish otherwise; it never
// changes which of the surviving cosets match).
std::vector<CosetInvolution> enumerate_W2(const Composition& m,
                                          std::optional<int> divisor = {});

}  // namespace segdist
