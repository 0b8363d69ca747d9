#ifndef LIEQUANT_PARSE_HPP
#define LIEQUANT_PARSE_HPP

#include "liequant/expr.hpp"

#include <string>

namespace liequant {

struct parse_error : error {
    parse_error(const std::string& msg, size_t position)
        : error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

/// Parse the expression grammar documented in docs/grammar.ebnf:
/// integers, i, + - * / ^, parentheses; names may end in primes (').
Expr parse_expr(const std::string& text, const ExprContextPtr& ctx);

} // namespace liequant

#endif
