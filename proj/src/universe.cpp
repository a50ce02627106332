#include "segdist/universe.hpp"

#include <algorithm>
#include <numeric>

namespace segdist {

int Universe::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

Line Universe::transform(const Line& l, Map m) const {
  switch (m) {
    case Map::Tau:
      return Line{tau_of(l.tower), l.offset};
    case Map::Dual:
      return Line{dual_of(l.tower), mod1(-l.offset)};
    case Map::Chi:
      return Line{chi_of(l.tower), l.offset};
  }
  return l;
}

std::optional<int> Universe::gamma_of_line(const Line& l) const {
  if (!line_self_gd(l)) return std::nullopt;
  int base = *towers_[l.tower].gamma;
  return l.offset == rat(0) ? base : 1 - base;
}

void UniverseBuilder::add(TowerDecl d) { decls_.push_back(std::move(d)); }

namespace {

struct Slot {
  std::string id;
  int degree = 1;
  // -2 = unset, -1 = self (resolved to own index later), >=0 = index
  int tau = -2, dual = -2, chi = -2;
  std::optional<int> gamma;
  bool synthetic = false;
};

int resolve(const PartnerRef& r, int self_idx,
            const std::unordered_map<std::string, int>& index,
            const std::string& owner, const char* field) {
  switch (r.kind) {
    case PartnerRef::Unset:
      return -2;
    case PartnerRef::Self:
      return self_idx;
    case PartnerRef::Named: {
      auto it = index.find(r.name);
      if (it == index.end())
        throw SemanticError("tower '" + owner + "': " + field +
                            " partner '" + r.name + "' is not declared");
      return it->second;
    }
  }
  return -2;
}

// Reverse-fill one partner map so it is an involution: if a->b is declared
// then b's slot must be unset or already a.
void close_map(std::vector<Slot>& slots, int Slot::* f, const char* name) {
  for (size_t a = 0; a < slots.size(); ++a) {
    int b = slots[a].*f;
    if (b < 0) continue;
    int& back = slots[b].*f;
    if (back == -2)
      back = static_cast<int>(a);
    else if (back != static_cast<int>(a))
      throw SemanticError("tower '" + slots[a].id + "': " + name +
                          " partner declaration is not involutive");
  }
}

}  // namespace

Universe UniverseBuilder::finalize() {
  std::unordered_map<std::string, int> index;
  std::vector<Slot> slots;
  for (const auto& d : decls_) {
    if (index.count(d.id))
      throw SemanticError("duplicate tower id '" + d.id + "'");
    index.emplace(d.id, static_cast<int>(slots.size()));
    slots.emplace_back();
    slots.back().id = d.id;
  }
  for (size_t i = 0; i < decls_.size(); ++i) {
    const auto& d = decls_[i];
    Slot& s = slots[i];
    if (!d.degree) throw SemanticError("tower '" + d.id + "': missing degree");
    if (*d.degree < 1)
      throw SemanticError("tower '" + d.id + "': degree must be positive");
    s.degree = *d.degree;
    s.tau = resolve(d.tau, static_cast<int>(i), index, d.id, "tau");
    s.dual = resolve(d.dual, static_cast<int>(i), index, d.id, "dual");
    s.chi = resolve(d.chi, static_cast<int>(i), index, d.id, "chi");
    if (d.gamma && *d.gamma != 0 && *d.gamma != 1)
      throw SemanticError("tower '" + d.id + "': gamma must be 0 or 1");
    s.gamma = d.gamma;
  }

  close_map(slots, &Slot::tau, "tau");
  close_map(slots, &Slot::dual, "dual");
  close_map(slots, &Slot::chi, "chi");
  // Unconstrained tau/dual default to self.
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].tau == -2) slots[i].tau = static_cast<int>(i);
    if (slots[i].dual == -2) slots[i].dual = static_cast<int>(i);
  }

  // Synthesize missing chi partners.  Twins mirror degree, flip gamma, and
  // inherit partner structure through chi (tau and dual commute with chi).
  int declared = static_cast<int>(slots.size());
  for (int i = 0; i < declared; ++i) {
    if (slots[i].chi != -2) continue;
    std::string twin_id = slots[i].id + "_chi";
    if (index.count(twin_id))
      throw SemanticError("cannot synthesize chi partner for '" + slots[i].id +
                          "': id '" + twin_id + "' is already taken");
    int twin = static_cast<int>(slots.size());
    index.emplace(twin_id, twin);
    Slot t;
    t.id = twin_id;
    t.degree = slots[i].degree;
    t.chi = i;
    if (slots[i].gamma) t.gamma = 1 - *slots[i].gamma;
    t.synthetic = true;
    slots.push_back(t);
    slots[i].chi = twin;
  }
  auto chi_of = [&](int t) { return slots[t].chi; };
  for (int i = declared; i < static_cast<int>(slots.size()); ++i) {
    int orig = slots[i].chi;
    slots[i].tau = chi_of(slots[orig].tau);
    slots[i].dual = chi_of(slots[orig].dual);
  }

  // Full validation on the closed universe.
  int n = static_cast<int>(slots.size());
  auto check_inv = [&](int Slot::* f, const char* name) {
    for (int i = 0; i < n; ++i) {
      int j = slots[i].*f;
      if (slots[j].*f != i)
        throw SemanticError("tower '" + slots[i].id + "': " + name +
                            " partner declaration is not involutive");
      if (slots[j].degree != slots[i].degree)
        throw SemanticError("towers '" + slots[i].id + "' and '" + slots[j].id +
                            "' are " + name + " partners of different degree");
    }
  };
  check_inv(&Slot::tau, "tau");
  check_inv(&Slot::dual, "dual");
  check_inv(&Slot::chi, "chi");
  for (int i = 0; i < n; ++i) {
    // The three maps must commute pairwise, otherwise the Galois dual is
    // not an involution and segment transform identities break.
    auto t = [&](int x) { return slots[x].tau; };
    auto d = [&](int x) { return slots[x].dual; };
    auto c = [&](int x) { return slots[x].chi; };
    if (t(d(i)) != d(t(i)) || c(t(i)) != t(c(i)) || c(d(i)) != d(c(i)))
      throw SemanticError("tower '" + slots[i].id +
                          "': partner maps do not commute");
    bool selfgd = d(t(i)) == i;
    if (selfgd && !slots[i].gamma)
      throw SemanticError("tower '" + slots[i].id +
                          "': self-Galois-dual tower needs a gamma bit");
    if (!selfgd && slots[i].gamma)
      throw SemanticError("tower '" + slots[i].id +
                          "': gamma is only meaningful on self-Galois-dual "
                          "towers");
    if (selfgd && *slots[c(i)].gamma != 1 - *slots[i].gamma)
      throw SemanticError("towers '" + slots[i].id + "' and '" + slots[c(i)].id +
                          "': chi partners must carry opposite gamma bits");
  }

  Universe u;
  u.index_ = std::move(index);
  for (auto& s : slots) {
    Tower t;
    t.id = s.id;
    t.degree = s.degree;
    t.tau = s.tau;
    t.dual = s.dual;
    t.chi = s.chi;
    t.gamma = s.gamma;
    t.synthetic = s.synthetic;
    u.towers_.push_back(std::move(t));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return u.towers_[a].id < u.towers_[b].id;
  });
  u.rank_.resize(n);
  for (int r = 0; r < n; ++r) u.rank_[order[r]] = r;
  return u;
}

}  // namespace segdist
