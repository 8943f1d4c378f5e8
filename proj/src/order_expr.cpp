#include "hexoct/order_expr.hpp"

#include <cctype>
#include <map>

namespace hexoct {

namespace {

const std::map<std::string, int, std::less<>>& constructor_arity() {
    static const std::map<std::string, int, std::less<>> table = {
        {"fact", 1},     {"psl", 2},      {"pgl", 2},  {"pgammal", 2}, {"psigmal", 2},
        {"psp", 2},      {"psu", 2},      {"pgammau", 2}, {"agl", 2},  {"asl", 2},
        {"mathieu", 1},  {"alt", 1},      {"sym", 1},  {"gcd", 2},
    };
    return table;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    OrderExpr parse() {
        OrderExpr e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view src_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    OrderExpr parse_expr() {
        OrderExpr lhs = parse_term();
        for (;;) {
            if (eat('*')) {
                OrderExpr node{OrderExpr::Kind::product};
                node.children.push_back(std::move(lhs));
                node.children.push_back(parse_term());
                lhs = std::move(node);
            } else if (eat('/')) {
                OrderExpr node{OrderExpr::Kind::quotient};
                node.children.push_back(std::move(lhs));
                node.children.push_back(parse_term());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    OrderExpr parse_term() {
        OrderExpr base = parse_atom();
        if (eat('^')) {
            OrderExpr node{OrderExpr::Kind::power};
            node.children.push_back(std::move(base));
            node.children.push_back(parse_term());  // right associative
            return node;
        }
        return base;
    }

    OrderExpr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_call();
        if (c == '(') {
            ++pos_;
            OrderExpr inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    OrderExpr parse_number() {
        size_t start = pos_;
        u64 value = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            u64 digit = static_cast<u64>(src_[pos_] - '0');
            if (value > (std::numeric_limits<u64>::max() - digit) / 10)
                throw ParseError("integer literal out of range", start);
            value = value * 10 + digit;
            ++pos_;
        }
        OrderExpr node{OrderExpr::Kind::literal};
        node.value = value;
        return node;
    }

    OrderExpr parse_call() {
        size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name(src_.substr(start, pos_ - start));
        auto it = constructor_arity().find(name);
        if (it == constructor_arity().end())
            throw ParseError("unknown constructor '" + name + "'", start);
        if (!eat('(')) throw ParseError("expected '(' after '" + name + "'", pos_);
        OrderExpr node{OrderExpr::Kind::call};
        node.callee = name;
        node.children.push_back(parse_expr());
        while (eat(',')) node.children.push_back(parse_expr());
        if (!eat(')')) throw ParseError("expected ')' or ','", pos_);
        if (static_cast<int>(node.children.size()) != it->second)
            throw ParseError("'" + name + "' takes " + std::to_string(it->second) + " argument(s)",
                             start);
        return node;
    }
};

u64 eval_to_u64(const OrderExpr& e) {
    FactoredInteger v = evaluate(e);
    if (!v.fits_u64()) throw Error("order expression argument too large");
    return v.to_u64();
}

// Phi_n(q) by exact recursion: (q^n - 1) / prod of proper-divisor values.
mpz_class cyclotomic_value(u64 n, u64 q) {
    mpz_class x;
    mpz_ui_pow_ui(x.get_mpz_t(), q, n);
    x -= 1;
    for (u64 d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        mpz_class phi_d = cyclotomic_value(d, q);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), phi_d.get_mpz_t());
    }
    return x;
}

FactoredInteger factor_mpz_small(const mpz_class& v) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 127) throw Error("cyclotomic factor exceeds 128 bits");
    mpz_class hi = v >> 64;
    mpz_class lo = v - (hi << 64);
    u128 val = (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
    return factor(val);
}

struct FieldPower {
    u64 p, f;
};

FactoredInteger q_power_part(const FieldPower& fp, u64 exponent) {
    if (exponent == 0) return {};
    return FactoredInteger::from_factors({{fp.p, fp.f * exponent}});
}

// |PGL(d,q)| = |SL(d,q)| = q^{d(d-1)/2} * prod_{i=2..d} (q^i - 1)
FactoredInteger pgl_order(const FieldPower& fp, u64 d, u64 q) {
    FactoredInteger r = q_power_part(fp, d * (d - 1) / 2);
    for (u64 i = 2; i <= d; ++i) r = r.times(factor_power_minus_one(q, i));
    return r;
}

FactoredInteger psl_order(const FieldPower& fp, u64 d, u64 q) {
    return pgl_order(fp, d, q).divide_exact(factor(std::gcd(d, q - 1)));
}

FactoredInteger gl_order(const FieldPower& fp, u64 d, u64 q) {
    return pgl_order(fp, d, q).times(factor_power_minus_one(q, 1));
}

FactoredInteger mathieu_order(u64 n) {
    switch (n) {
        case 10: return factor(720);
        case 11: return factor(7920);
        case 12: return factor(95040);
        case 21: return factor(20160);
        case 22: return factor(443520);
        case 23: return factor(10200960);
        case 24: return factor(244823040);
        default: throw Error("mathieu(" + std::to_string(n) + "): no such group");
    }
}

FactoredInteger eval_call(const std::string& name, const std::vector<u64>& args) {
    if (name == "fact") return factored_factorial(args[0]);
    if (name == "alt") {
        if (args[0] < 2) throw Error("alt(n) requires n >= 2");
        return factored_factorial(args[0]).divide_exact(factor(2));
    }
    if (name == "sym") return factored_factorial(args[0]);
    if (name == "mathieu") return mathieu_order(args[0]);

    const u64 d = args[0], q = args[1];
    if (d < 1) throw Error(name + ": dimension must be positive");
    auto [p, f] = field_decompose(q);
    FieldPower fp{p, f};

    if (name == "psl") return psl_order(fp, d, q);
    if (name == "pgl") return pgl_order(fp, d, q);
    if (name == "pgammal") return pgl_order(fp, d, q).times(factor(f));
    if (name == "psigmal") return psl_order(fp, d, q).times(factor(f));
    if (name == "agl") return q_power_part(fp, d).times(gl_order(fp, d, q));
    if (name == "asl") return q_power_part(fp, d).times(pgl_order(fp, d, q));
    if (name == "psp") {
        if (d % 2 != 0) throw Error("psp: dimension must be even");
        const u64 m = d / 2;
        FactoredInteger r = q_power_part(fp, m * m);
        for (u64 i = 1; i <= m; ++i) r = r.times(factor_power_minus_one(q, 2 * i));
        return r.divide_exact(factor(std::gcd<u64>(2, q - 1)));
    }
    if (name == "psu" || name == "pgammau") {
        if (d != 3) throw Error(name + ": only dimension 3 is supported");
        // q^3 (q^2-1)(q^3+1), with q^3+1 = (q^6-1)/(q^3-1)
        FactoredInteger pgu = q_power_part(fp, 3)
                                  .times(factor_power_minus_one(q, 2))
                                  .times(factor_power_minus_one(q, 6)
                                             .divide_exact(factor_power_minus_one(q, 3)));
        if (name == "pgammau") return pgu.times(factor(2 * f));
        return pgu.divide_exact(factor(std::gcd<u64>(3, q + 1)));
    }
    throw Error("unknown constructor '" + name + "'");
}

}  // namespace

std::pair<u64, u64> field_decompose(u64 q) {
    if (q < 2) throw Error("field size must be at least 2");
    FactoredInteger f = factor(q);
    if (f.factors().size() != 1) throw Error(std::to_string(q) + " is not a prime power");
    return {static_cast<u64>(f.factors()[0].prime), f.factors()[0].exponent};
}

FactoredInteger factor_power_minus_one(u64 q, u64 n) {
    FactoredInteger r;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) r = r.times(factor_mpz_small(cyclotomic_value(d, q)));
    return r;
}

OrderExpr parse_order_expr(std::string_view src) { return Parser(src).parse(); }

FactoredInteger evaluate(const OrderExpr& expr) {
    switch (expr.kind) {
        case OrderExpr::Kind::literal:
            if (expr.value == 0) throw Error("order expressions are positive; got 0");
            return factor(expr.value);
        case OrderExpr::Kind::product:
            return evaluate(expr.children[0]).times(evaluate(expr.children[1]));
        case OrderExpr::Kind::quotient:
            return evaluate(expr.children[0]).divide_exact(evaluate(expr.children[1]));
        case OrderExpr::Kind::power:
            return evaluate(expr.children[0]).pow(eval_to_u64(expr.children[1]));
        case OrderExpr::Kind::call: {
            if (expr.callee == "gcd")
                return evaluate(expr.children[0]).gcd(evaluate(expr.children[1]));
            std::vector<u64> args;
            args.reserve(expr.children.size());
            for (const OrderExpr& child : expr.children) args.push_back(eval_to_u64(child));
            return eval_call(expr.callee, args);
        }
    }
    throw Error("evaluate: corrupt expression tree");
}

namespace {

void print(const OrderExpr& e, std::string& out, bool parenthesize_products) {
    switch (e.kind) {
        case OrderExpr::Kind::literal:
            out += std::to_string(e.value);
            return;
        case OrderExpr::Kind::call: {
            out += e.callee;
            out += '(';
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i > 0) out += ',';
                print(e.children[i], out, false);
            }
            out += ')';
            return;
        }
        case OrderExpr::Kind::product:
        case OrderExpr::Kind::quotient: {
            if (parenthesize_products) out += '(';
            print(e.children[0], out, false);
            out += e.kind == OrderExpr::Kind::product ? '*' : '/';
            // Right operand of '/' or '*' must not re-associate.
            print(e.children[1], out, true);
            if (parenthesize_products) out += ')';
            return;
        }
        case OrderExpr::Kind::power: {
            bool base_compound = e.children[0].kind != OrderExpr::Kind::literal &&
                                 e.children[0].kind != OrderExpr::Kind::call;
            if (base_compound) out += '(';
            print(e.children[0], out, base_compound);
            if (base_compound) out += ')';
            out += '^';
            bool exp_compound = e.children[1].kind != OrderExpr::Kind::literal &&
                                e.children[1].kind != OrderExpr::Kind::call &&
                                e.children[1].kind != OrderExpr::Kind::power;
            if (exp_compound) out += '(';
            print(e.children[1], out, exp_compound);
            if (exp_compound) out += ')';
            return;
        }
    }
}

}  // namespace

std::string to_string(const OrderExpr& expr) {
    std::string out;
    print(expr, out, false);
    return out;
}

}  // namespace hexoct
