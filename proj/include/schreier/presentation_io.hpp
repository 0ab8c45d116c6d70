#pragma once

#include <string>
#include <string_view>

#include "schreier/schema.hpp"

namespace schreier {

// Line-oriented text format, '#' starts a comment:
//
//   group SG n 5
//   gen s arity 1 range 1..n-1
//   gen a arity 3 range Z,Z,1..n-1
//   rel far forall i,j where |i-j|>1 : s[i] s[j] s[i]^-1 s[j]^-1
//
// Range bounds are integers or affine expressions in n.  The label after
// `rel` is optional (rel<k> is used otherwise).  Syntax and semantic
// errors throw ParseError with the 1-based line and column.
PresentationSchema parse_presentation(std::string_view text);

std::string emit_presentation(const PresentationSchema& p);

// Same name, n, families and relators (names, parameters, body, guards).
bool presentations_equal(const PresentationSchema& a, const PresentationSchema& b);

}  // namespace schreier
