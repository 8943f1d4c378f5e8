#include "hexoct/polygon.hpp"

namespace hexoct {

namespace {

// Caps keep every bracket below ~1e33 so factor() stays in range.
constexpr u64 kMaxParameter = 100'000'000;

void validate(const PolygonOrder& o) {
    if (o.s < 2 || o.t < 2) throw Error("polygon order: thickness requires s >= 2 and t >= 2");
    if (o.s > kMaxParameter || o.t > kMaxParameter)
        throw Error("polygon order: parameter exceeds supported range");
}

bool is_odd(const FactoredInteger& n) { return n.valuation(2) == 0; }

}  // namespace

std::string to_string(PolygonKind kind) {
    return kind == PolygonKind::hexagon ? "hexagon" : "octagon";
}

PolygonKind polygon_kind_from_string(std::string_view name) {
    if (name == "hexagon") return PolygonKind::hexagon;
    if (name == "octagon") return PolygonKind::octagon;
    throw Error("unknown polygon kind '" + std::string(name) + "' (expected hexagon|octagon)");
}

PolygonCounts counts(const PolygonOrder& o) {
    validate(o);
    const u128 s = o.s, t = o.t;
    const u128 st = s * t;
    FactoredInteger s1 = factor(1 + s);
    FactoredInteger t1 = factor(1 + t);
    if (o.kind == PolygonKind::hexagon) {
        FactoredInteger core = factor(1 + st + st * st);
        return {s1.times(core), t1.times(core), s1.times(t1).times(core)};
    }
    FactoredInteger mid = factor(1 + st);
    FactoredInteger quad = factor(1 + st * st);
    FactoredInteger core = mid.times(quad);
    return {s1.times(core), t1.times(core), s1.times(t1).times(core)};
}

bool is_perfect_square(const FactoredInteger& n) {
    for (const auto& pp : n.factors())
        if (pp.exponent % 2 != 0) return false;
    return true;
}

FeasibilityVerdict order_feasible(const PolygonOrder& o, BVariant b_variant) {
    validate(o);
    FeasibilityVerdict verdict;
    auto fail = [&](const char* name) {
        verdict.feasible = false;
        verdict.failed_checks.emplace_back(name);
    };

    const u128 s = o.s, t = o.t;
    PolygonCounts c = counts(o);

    if (o.kind == PolygonKind::hexagon) {
        if (!is_perfect_square(factor(s * t))) fail("st-square");
        if (s > t * t * t) fail("s<=t^3");
        if (t > s * s * s) fail("t<=s^3");
        FactoredInteger a3 = a_value(c.points).pow(3);
        if (compare(a3, c.points) == Ordering::greater) fail("a(P)^3<=P");
    } else {
        if (!is_perfect_square(factor(2 * s * t))) fail("2st-square");
        if (s > t * t) fail("s<=t^2");
        if (t > s * s) fail("t<=s^2");
        FactoredInteger b2 = b_variant_value(b_variant, c.points).pow(2);
        if (compare(b2, c.points) == Ordering::greater) fail("b(P)^2<=P");
        // With 2st a square one of s,t is even, forcing an odd point or
        // line count. Not a feasibility check; a violation is a bug here.
        if (is_perfect_square(factor(2 * s * t)) && !is_odd(c.points) && !is_odd(c.lines))
            throw std::logic_error("octagon parity invariant violated");
    }
    return verdict;
}

bool stabilizer_bound_holds(const FactoredInteger& group_order,
                            const FactoredInteger& stabilizer_order) {
    if (!stabilizer_order.divides(group_order))
        throw Error("stabilizer_bound_holds: stabilizer order does not divide group order");
    return compare(group_order, stabilizer_order.pow(12)) != Ordering::greater;
}

std::vector<ClassicalOrder> classical_orders() {
    return {
        {"split Cayley hexagon (q=2)", {PolygonKind::hexagon, 2, 2}},
        {"split Cayley hexagon (q=3)", {PolygonKind::hexagon, 3, 3}},
        {"split Cayley hexagon (q=4)", {PolygonKind::hexagon, 4, 4}},
        {"twisted triality hexagon (q=2)", {PolygonKind::hexagon, 8, 2}},
        {"dual twisted triality hexagon (q=2)", {PolygonKind::hexagon, 2, 8}},
        {"Ree-Tits octagon (q=2)", {PolygonKind::octagon, 2, 4}},
        {"dual Ree-Tits octagon (q=2)", {PolygonKind::octagon, 4, 2}},
    };
}

}  // namespace hexoct
