#pragma once

#include <optional>

#include "hexoct/sieves.hpp"

namespace hexoct {

enum class PolygonKind { hexagon, octagon };

std::string to_string(PolygonKind kind);
PolygonKind polygon_kind_from_string(std::string_view name);

/// Order (s,t) of a thick generalized hexagon or octagon: every line has
/// s+1 points, every point lies on t+1 lines; thickness needs s,t >= 2.
struct PolygonOrder {
    PolygonKind kind;
    u64 s;
    u64 t;
};

struct PolygonCounts {
    FactoredInteger points;
    FactoredInteger lines;
    FactoredInteger flags;
};

/// hexagon: points = (1+s)(1+st+s^2t^2), lines = (1+t)(1+st+s^2t^2)
/// octagon: points = (1+s)(1+st)(1+s^2t^2), lines = (1+t)(1+st)(1+s^2t^2)
/// flags = points*(t+1) = lines*(s+1) in both cases.
PolygonCounts counts(const PolygonOrder& o);

struct FeasibilityVerdict {
    bool feasible = true;
    std::vector<std::string> failed_checks;
};

/// Named arithmetic checks a flag-transitive geometry of this order must
/// pass. Hexagon: st-square, s<=t^3, t<=s^3, a(P)^3<=P. Octagon:
/// 2st-square, s<=t^2, t<=s^2, b(P)^2<=P with the chosen b reading.
FeasibilityVerdict order_feasible(const PolygonOrder& o, BVariant b_variant = BVariant::full);

/// Flag-transitive stabilizer bound: |G| <= |G_x|^12. The stabilizer
/// order must divide the group order.
bool stabilizer_bound_holds(const FactoredInteger& group_order,
                            const FactoredInteger& stabilizer_order);

bool is_perfect_square(const FactoredInteger& n);

struct ClassicalOrder {
    std::string label;
    PolygonOrder order;
};

/// The known Moufang orders, as labeled test fixtures.
std::vector<ClassicalOrder> classical_orders();

}  // namespace hexoct
