#pragma once

// Small expression grammar for densities and test functions:
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' integer)?
//   base   := number | 'x'<index> | '(' expr ')' | 'exp' '(' expr ')'
//
// Numbers are decimals ("1.5") or integers; rationals are spelled with the
// division operator ("1/2") and fold to exact constants.  Variables are
// x1..xn.

#include "confdunkl/chartexpr.hpp"

#include <string>

namespace confdunkl {

// throws std::invalid_argument with the offending position on bad input
ExprId parse_function(ExprPool& pool, const std::string& src, int nvars);

}  // namespace confdunkl
