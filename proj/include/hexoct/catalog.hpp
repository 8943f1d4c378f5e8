#pragma once

#include <filesystem>
#include <map>
#include <optional>

#include "hexoct/order_expr.hpp"

namespace hexoct {

enum class ParentGroup { alternating, symmetric };

char parent_letter(ParentGroup p);

/// One catalog record: a primitive subgroup of Alt(degree) or
/// Sym(degree), with its order given as an expression.
struct GroupSpec {
    std::string name;  // verbatim catalog spelling
    u64 degree = 0;
    ParentGroup parent = ParentGroup::alternating;
    std::string order_expr;
    OrderExpr expr;
};

FactoredInteger order_of(const GroupSpec& g);
FactoredInteger parent_order(const GroupSpec& g);  // degree! or degree!/2

/// Index u = |G : H| of the subgroup in its parent; non-divisibility
/// flags a corrupt catalog row.
FactoredInteger index_of(const GroupSpec& g);

/// Line-oriented records `name, degree, parent(A|S), order_expr` with '#'
/// comments. Fields split on commas at parenthesis depth zero, so names
/// like "PSp(4, 3):2" stay intact. Duplicate (name, degree, parent) keys
/// and malformed lines are reported with their line number.
std::vector<GroupSpec> load_catalog(const std::filesystem::path& path);

struct ExpectedValues {
    std::string u_sci;
    std::string a_cubed_sci;
    std::string b_squared_sci;
};

struct CatalogKey {
    std::string name;
    u64 degree;
    ParentGroup parent;
    friend auto operator<=>(const CatalogKey&, const CatalogKey&) = default;
};

using ExpectedTable = std::map<CatalogKey, ExpectedValues>;

/// Companion file `name, degree, parent, u_sci, a_cubed_sci, b_squared_sci`.
ExpectedTable load_expected(const std::filesystem::path& path);

}  // namespace hexoct
