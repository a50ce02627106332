#include "segdist/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace segdist {

int CosetInvolution::flat(int block, int j) const {
  int c = 0;
  for (int i = 0; i < block; ++i) c += static_cast<int>(refinement[i].size());
  return c + j;
}

std::pair<int, int> CosetInvolution::unflat(int c) const {
  for (int i = 0; i < static_cast<int>(refinement.size()); ++i) {
    int s = static_cast<int>(refinement[i].size());
    if (c < s) return {i, c};
    c -= s;
  }
  throw InvalidArgument("cell index out of range");
}

int CosetInvolution::part(int c) const {
  auto [i, j] = unflat(c);
  return refinement[i][j];
}

bool is_admissible(const CosetInvolution& w) {
  for (const auto& row : w.refinement)
    if (row.size() != 1) return false;
  return true;
}

CosetInvolution identity_coset(const Composition& m) {
  CosetInvolution w;
  w.base = m;
  for (int p : m) w.refinement.push_back({p});
  w.eps.resize(m.size());
  std::iota(w.eps.begin(), w.eps.end(), 0);
  return w;
}

std::optional<std::string> coset_invalid_reason(const CosetInvolution& w) {
  int t = static_cast<int>(w.base.size());
  if (static_cast<int>(w.refinement.size()) != t)
    return "refinement row count differs from base length";
  int cells = 0;
  for (int i = 0; i < t; ++i) {
    if (w.base[i] <= 0) return "base parts must be positive";
    int sum = 0;
    for (int p : w.refinement[i]) {
      if (p <= 0) return "refinement parts must be positive";
      sum += p;
    }
    if (sum != w.base[i]) return "refinement row does not sum to its block";
    cells += static_cast<int>(w.refinement[i].size());
  }
  if (static_cast<int>(w.eps.size()) != cells)
    return "eps size differs from the cell count";
  for (int c = 0; c < cells; ++c) {
    int d = w.eps[c];
    if (d < 0 || d >= cells) return "eps image out of range";
    if (w.eps[d] != c) return "eps is not an involution";
    if (w.part(d) != w.part(c)) return "eps pairs cells of different sizes";
  }
  // Ordering: the images of a block's cells occupy strictly increasing
  // blocks.  In particular two cells of one block never map into a single
  // block, which is what keeps the refinement non-mergeable.
  int c = 0;
  for (int i = 0; i < t; ++i) {
    int prev = -1;
    for (size_t j = 0; j < w.refinement[i].size(); ++j, ++c) {
      int img_block = w.block_of(w.eps[c]);
      if (img_block <= prev)
        return "cell images of a block must climb through the blocks";
      prev = img_block;
    }
  }
  return std::nullopt;
}

std::vector<int> orbit_representatives(const CosetInvolution& w) {
  std::vector<int> reps;
  for (int c = 0; c < w.cells(); ++c)
    if (c <= w.eps[c]) reps.push_back(c);
  return reps;
}

namespace {

// Convert a symmetric matrix with row sums m (zero rows allowed only as
// absent cells) into canonical (refinement, eps) form.
CosetInvolution from_matrix(const Composition& m,
                            const std::vector<std::vector<int>>& c) {
  int t = static_cast<int>(m.size());
  CosetInvolution w;
  w.base = m;
  w.refinement.resize(t);
  // cellat[i][i'] = flat index of the cell of block i that maps into
  // block i' (-1 when the entry is zero).
  std::vector<std::vector<int>> cellat(t, std::vector<int>(t, -1));
  int flat = 0;
  for (int i = 0; i < t; ++i)
    for (int ip = 0; ip < t; ++ip)
      if (c[i][ip] > 0) {
        w.refinement[i].push_back(c[i][ip]);
        cellat[i][ip] = flat++;
      }
  w.eps.resize(flat);
  for (int i = 0; i < t; ++i)
    for (int ip = 0; ip < t; ++ip)
      if (cellat[i][ip] >= 0) w.eps[cellat[i][ip]] = cellat[ip][i];
  return w;
}

}  // namespace

std::vector<CosetInvolution> enumerate_W2(const Composition& m,
                                          std::optional<int> divisor) {
  for (int p : m)
    if (p <= 0) throw InvalidArgument("composition parts must be positive");
  int t = static_cast<int>(m.size());
  int step = divisor.value_or(1);
  if (step <= 0) throw InvalidArgument("divisor filter must be positive");

  std::vector<CosetInvolution> out;
  std::vector<std::vector<int>> c(t, std::vector<int>(t, 0));
  std::vector<int> rest(m.begin(), m.end());

  // Fill the upper triangle row by row; symmetry fixes the lower half.
  // rest[i] tracks how much of row i is still unassigned.  In the last
  // column of a row the value is forced by the row sum.
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == t) {
      out.push_back(from_matrix(m, c));
      return;
    }
    if (j == t) {
      rec(i + 1, i + 1);
      return;
    }
    int lo = 0, hi = j > i ? std::min(rest[i], rest[j]) : rest[i];
    if (j == t - 1) lo = hi = rest[i];  // forced; may exceed rest[j]
    for (int v = lo; v <= hi; v += step) {
      if (v % step != 0) break;
      if (j > i && v > rest[j]) break;
      c[i][j] = c[j][i] = v;
      rest[i] -= v;
      if (j != i) rest[j] -= v;
      rec(i, j + 1);
      rest[i] += v;
      if (j != i) rest[j] += v;
      c[i][j] = c[j][i] = 0;
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace segdist
