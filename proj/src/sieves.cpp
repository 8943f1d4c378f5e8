#include "hexoct/sieves.hpp"

namespace hexoct {

FactoredInteger a_value(const FactoredInteger& n) {
    std::vector<PrimePower> out;
    for (const auto& pp : n.factors()) {
        if (pp.prime == 3) {
            if (pp.exponent > 1) out.push_back({3, pp.exponent - 1});
        } else if (pp.prime % 3 != 1) {
            out.push_back(pp);
        }
    }
    return FactoredInteger::from_factors(std::move(out));
}

FactoredInteger b_literal(const FactoredInteger& n) {
    std::vector<PrimePower> out;
    for (const auto& pp : n.factors())
        if (pp.prime != 3 && pp.prime % 4 != 1) out.push_back(pp);
    return FactoredInteger::from_factors(std::move(out));
}

FactoredInteger b_full(const FactoredInteger& n) {
    std::vector<PrimePower> out;
    for (const auto& pp : n.factors())
        if (pp.prime == 3 || pp.prime % 4 != 1) out.push_back(pp);
    return FactoredInteger::from_factors(std::move(out));
}

SieveResult sieve(const FactoredInteger& n) {
    return {n, a_value(n), b_literal(n), b_full(n)};
}

FactoredInteger b_variant_value(BVariant variant, const FactoredInteger& n) {
    switch (variant) {
        case BVariant::literal: return b_literal(n);
        case BVariant::full: return b_full(n);
        case BVariant::a_as_b: return a_value(n);
    }
    throw Error("b_variant_value: bad variant");
}

std::string to_string(BVariant variant) {
    switch (variant) {
        case BVariant::literal: return "literal";
        case BVariant::full: return "full";
        case BVariant::a_as_b: return "a";
    }
    throw Error("to_string: bad variant");
}

BVariant b_variant_from_string(std::string_view name) {
    if (name == "literal") return BVariant::literal;
    if (name == "full") return BVariant::full;
    if (name == "a" || name == "a_as_b") return BVariant::a_as_b;
    throw Error("unknown b variant '" + std::string(name) + "' (expected literal|full|a)");
}

}  // namespace hexoct
