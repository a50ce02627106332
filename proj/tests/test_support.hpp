#pragma once

#include <string>

#include "segdist/dsl.hpp"
#include "segdist/multisegment.hpp"
#include "segdist/universe.hpp"

namespace segdist::test {

// Universe of the introductory counter-example: two self-dual towers of
// coprime degree and opposite distinction bits.
inline Universe intro_universe() {
  return parse_universe(
      "tower triv { degree 1; tau self; dual self; gamma 0; }\n"
      "tower rho2 { degree 2; tau self; dual self; gamma 1; }\n");
}

// Sweep universe: one self-dual degree-1 tower T with the given bit plus
// a degree-2 pair C, D swapped by the dual.
inline Universe sweep_universe(int gamma_t) {
  return parse_universe(
      "tower T { degree 1; tau self; dual self; gamma " +
      std::to_string(gamma_t) +
      "; }\n"
      "tower C { degree 2; tau self; dual -> D; }\n"
      "tower D { degree 2; tau self; dual -> C; }\n");
}

inline Segment seg(const Universe& u, const std::string& id, const Rat& a,
                   const Rat& b) {
  return make_segment(u, u.find(id), a, b);
}

inline Multisegment ms(const Universe& u, Realization segs) {
  return Multisegment(u, std::move(segs));
}

}  // namespace segdist::test
