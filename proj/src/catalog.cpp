#include "hexoct/catalog.hpp"

#include <fstream>
#include <set>

namespace hexoct {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Split on commas at parenthesis depth zero.
std::vector<std::string> split_record(std::string_view line) {
    std::vector<std::string> fields;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ',' && depth == 0) {
            fields.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    fields.push_back(trim(line.substr(start)));
    return fields;
}

u64 parse_degree(const std::string& s, const std::string& where) {
    try {
        size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw Error("");
        return v;
    } catch (const std::exception&) {
        throw Error(where + ": bad degree '" + s + "'");
    }
}

ParentGroup parse_parent(const std::string& s, const std::string& where) {
    if (s == "A") return ParentGroup::alternating;
    if (s == "S") return ParentGroup::symmetric;
    throw Error(where + ": parent must be A or S, got '" + s + "'");
}

}  // namespace

char parent_letter(ParentGroup p) { return p == ParentGroup::alternating ? 'A' : 'S'; }

FactoredInteger order_of(const GroupSpec& g) { return evaluate(g.expr); }

FactoredInteger parent_order(const GroupSpec& g) {
    FactoredInteger f = factored_factorial(g.degree);
    return g.parent == ParentGroup::alternating ? f.divide_exact(factor(2)) : f;
}

FactoredInteger index_of(const GroupSpec& g) {
    FactoredInteger order = order_of(g);
    FactoredInteger parent = parent_order(g);
    if (!order.divides(parent))
        throw Error("catalog row '" + g.name + "' <= " + parent_letter(g.parent) +
                    std::to_string(g.degree) + ": order does not divide the parent order");
    return parent.divide_exact(order);
}

std::vector<GroupSpec> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file " + path.string());

    std::vector<GroupSpec> records;
    std::set<CatalogKey> seen;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = path.filename().string() + ":" + std::to_string(lineno);
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;

        std::vector<std::string> fields = split_record(body);
        if (fields.size() != 4)
            throw Error(where + ": expected 4 fields (name, degree, parent, order_expr), got " +
                        std::to_string(fields.size()));

        GroupSpec g;
        g.name = fields[0];
        g.degree = parse_degree(fields[1], where);
        g.parent = parse_parent(fields[2], where);
        g.order_expr = fields[3];
        if (g.degree < 5 || g.degree > 106)
            throw Error(where + ": degree " + std::to_string(g.degree) + " outside [5, 106]");
        try {
            g.expr = parse_order_expr(g.order_expr);
        } catch (const Error& e) {
            throw Error(where + ": " + e.what());
        }
        if (!seen.insert({g.name, g.degree, g.parent}).second)
            throw Error(where + ": duplicate record for '" + g.name + "'");
        records.push_back(std::move(g));
    }
    return records;
}

ExpectedTable load_expected(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open expected-values file " + path.string());

    ExpectedTable table;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = path.filename().string() + ":" + std::to_string(lineno);
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;

        std::vector<std::string> fields = split_record(body);
        if (fields.size() != 6)
            throw Error(where + ": expected 6 fields, got " + std::to_string(fields.size()));
        CatalogKey key{fields[0], parse_degree(fields[1], where), parse_parent(fields[2], where)};
        if (!table.emplace(key, ExpectedValues{fields[3], fields[4], fields[5]}).second)
            throw Error(where + ": duplicate expected-values record for '" + fields[0] + "'");
    }
    return table;
}

}  // namespace hexoct
