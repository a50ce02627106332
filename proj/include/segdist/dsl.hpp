#pragma once

#include <string>

#include "segdist/multisegment.hpp"
#include "segdist/universe.hpp"

namespace segdist {

// Universe declaration files:
//
//   tower rho2 {
//     degree 2;
//     tau self;
//     dual -> other;
//     chi -> rho2_tw;
//     gamma 1;
//   }
//
// Every field is optional except degree; tau and dual default to self,
// and a tower without a chi field gets a synthesized partner.  A "#"
// starts a comment running to the end of the line.  Syntax problems
// raise ParseError with a 1-based line and column; closure and
// validation problems raise SemanticError.
Universe parse_universe(const std::string& text);

// Declarations for the non-synthesized towers, reparsing to an
// equivalent universe.  Links into synthesized partners are left
// implicit so the twin is rebuilt rather than redeclared.
std::string print_universe(const Universe& u);

// Multisegment literals: `Delta(id,a,b)` terms joined by `+`, where a
// and b are rationals written `p/q` or bare integers.  `0` denotes the
// empty multisegment.  The result is canonical.
Multisegment parse_multisegment(const std::string& text, const Universe& u);

std::string print_segment(const Universe& u, const Segment& s);

// Canonical-order literal; parse_multisegment inverts it exactly.
std::string print_multisegment(const Universe& u, const Multisegment& m);

}  // namespace segdist
