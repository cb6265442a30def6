#pragma once

// Text grammar for group specifications:
//
//   spec := NAME | NAME '(' args ')'
//   NAME := S | C | GL | SL | PGL | Q8 | G96 | Cayley | Semidirect
//   args := integer (',' integer)* | path | spec ',' spec ',' integer
//
// S(n), C(n), GL(2,q), SL(2,q), PGL(2,q), Q8, G96, Cayley(path),
// Semidirect(normal,complement,action-id).

#include "gmodels/group.hpp"

#include <string_view>

namespace gmodels {

/// Throws ParseError (with byte offset) on malformed text, unknown names,
/// arity errors and non-prime q.
GroupSpec parse_group_spec(std::string_view text);

} // namespace gmodels
