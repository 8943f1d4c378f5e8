#pragma once

#include "hexoct/factored.hpp"

namespace hexoct {

class ParseError : public Error {
public:
    ParseError(const std::string& message, size_t offset)
        : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Expression tree for group orders: integer literals, family
/// constructors (fact, psl, pgl, pgammal, psigmal, psp, psu, pgammau,
/// agl, asl, mathieu, alt, sym, gcd), products, exact quotients and
/// integer powers.
struct OrderExpr {
    enum class Kind { literal, call, product, quotient, power };

    Kind kind = Kind::literal;
    u64 value = 0;                    // literal
    std::string callee;               // call
    std::vector<OrderExpr> children;  // call arguments or binary operands

    friend bool operator==(const OrderExpr&, const OrderExpr&) = default;
};

/// Recursive descent with power binding tighter than '*' and '/'.
/// Syntax errors and unknown constructor names carry byte offsets.
OrderExpr parse_order_expr(std::string_view src);

/// Exact factored value of a tree. Family constructors factor through
/// cyclotomic splitting of q^i - 1; quotients must be exact.
FactoredInteger evaluate(const OrderExpr& expr);

std::string to_string(const OrderExpr& expr);  // parse(to_string(e)) == e

/// q^n - 1 split into cyclotomic pieces before factoring.
FactoredInteger factor_power_minus_one(u64 q, u64 n);

/// (p, f) with q = p^f; throws unless q is a prime power >= 2.
std::pair<u64, u64> field_decompose(u64 q);

}  // namespace hexoct
