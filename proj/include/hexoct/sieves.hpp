#pragma once

#include "hexoct/factored.hpp"

namespace hexoct {

// Multiplicative sieves over a factored integer n = 3^a * p1^a1 * ... :
//   a(n)        keeps 3^max(0,a-1) and every p^e with p != 3, p !≡ 1 (mod 3)
//   b_literal(n) keeps every p^e with p != 3, p !≡ 1 (mod 4); drops the 3-part
//   b_full(n)   = b_literal(n) * 3^v3(n)
FactoredInteger a_value(const FactoredInteger& n);
FactoredInteger b_literal(const FactoredInteger& n);
FactoredInteger b_full(const FactoredInteger& n);

struct SieveResult {
    FactoredInteger input;
    FactoredInteger a;
    FactoredInteger b_literal;
    FactoredInteger b_full;
};

SieveResult sieve(const FactoredInteger& n);

/// Which reading of b the octagon-side checks should use. `a_as_b`
/// substitutes a(n) for b(n), matching one observed convention in
/// generated reference tables.
enum class BVariant { literal, full, a_as_b };

FactoredInteger b_variant_value(BVariant variant, const FactoredInteger& n);

std::string to_string(BVariant variant);
BVariant b_variant_from_string(std::string_view name);  // "literal" | "full" | "a"

}  // namespace hexoct
