#include "hexoct/factored.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace hexoct {

namespace {

constexpr u64 kTrialBound = 1'000'000;

u64 mulmod64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod64(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Strong-pseudoprime witnesses: the first 13 primes make the test
// deterministic for n < 3.317e24, which covers every 64-bit input.
constexpr std::array<u64, 13> kFixedWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : kFixedWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (u64 a : kFixedWitnesses) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 splitmix64(u64& state) {
    state += 0x9e3779b97f4a7c15ULL;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool miller_rabin_mpz(const mpz_class& n) {
    if (n < 2) return false;
    for (u64 p : kFixedWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    // 3.3e24 bound for the fixed set; above it append 64 deterministic
    // witnesses so the error probability stays below 4^-64 = 2^-128.
    static const mpz_class kDeterministicBound("3317044064679887385961981");
    std::vector<mpz_class> witnesses(kFixedWitnesses.begin(), kFixedWitnesses.end());
    if (n >= kDeterministicBound) {
        u64 state = 0x5eed5eed5eed5eedULL;
        for (int i = 0; i < 64; ++i) {
            mpz_class a = splitmix64(state);
            witnesses.push_back(2 + a % (n - 3));
        }
    }

    mpz_class x, nm1 = n - 1;
    for (const mpz_class& a : witnesses) {
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent-cycle Pollard rho. The polynomial constant c advances through a
// fixed schedule on failure, keeping factorizations reproducible.
u64 pollard_rho_u64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1;
        u64 ys = y;
        const u64 m = 128;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod64(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod64(y, y, n) + c) % n;
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = (mulmod64(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

mpz_class pollard_rho_mpz(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (u64 c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1, q = 1, ys = 2, diff;
        const u64 m = 128;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r <<= 1;
        }
        if (d == n) {
            do {
                ys = (ys * ys + c) % n;
                diff = x > ys ? x - ys : ys - x;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_recursive_u64(u64 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (miller_rabin_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho_u64(n);
    factor_recursive_u64(d, out);
    factor_recursive_u64(n / d, out);
}

u128 mpz_to_u128(const mpz_class& v) {
    mpz_class hi = v >> 64;
    mpz_class lo = v - (hi << 64);
    return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

void factor_recursive_mpz(const mpz_class& n, std::vector<u128>& out) {
    if (n == 1) return;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        factor_recursive_u64(n.get_ui(), out);
        return;
    }
    if (miller_rabin_mpz(n)) {
        out.push_back(mpz_to_u128(n));
        return;
    }
    mpz_class d = pollard_rho_mpz(n);
    factor_recursive_mpz(d, out);
    factor_recursive_mpz(n / d, out);
}

std::vector<PrimePower> collapse(std::vector<u128> primes) {
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (u128 p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

}  // namespace

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<bool> sieve(kTrialBound, true);
        std::vector<u64> ps;
        for (u64 i = 2; i < kTrialBound; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (u64 j = i * i; j < kTrialBound; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

bool is_prime(u128 n) {
    if (n <= std::numeric_limits<u64>::max()) return miller_rabin_u64(static_cast<u64>(n));
    return miller_rabin_mpz(u128_to_mpz(n));
}

FactoredInteger factor(u128 n) {
    if (n == 0) throw Error("factor: input must be positive");
    std::vector<u128> primes;
    for (u64 p : small_primes()) {
        if (static_cast<u128>(p) * p > n) break;
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        if (n <= std::numeric_limits<u64>::max())
            factor_recursive_u64(static_cast<u64>(n), primes);
        else
            factor_recursive_mpz(u128_to_mpz(n), primes);
    }
    return FactoredInteger::from_sorted_unchecked(collapse(std::move(primes)));
}

u64 legendre_valuation(u64 x, u128 p) {
    if (!is_prime(p)) throw Error("legendre_valuation: modulus " + u128_to_string(p) + " is not prime");
    u64 total = 0;
    u128 pk = p;
    while (pk <= x) {
        total += x / static_cast<u64>(pk);
        if (pk > static_cast<u128>(x) / p) break;  // next power exceeds x
        pk *= p;
    }
    return total;
}

FactoredInteger factored_factorial(u64 n) {
    std::vector<PrimePower> out;
    if (n >= kTrialBound) throw Error("factored_factorial: argument too large");
    for (u64 p : small_primes()) {
        if (p > n) break;
        out.push_back({p, legendre_valuation(n, p)});
    }
    return FactoredInteger::from_sorted_unchecked(std::move(out));
}

FactoredInteger FactoredInteger::from_sorted_unchecked(std::vector<PrimePower> factors) {
    FactoredInteger r;
    r.factors_ = std::move(factors);
    return r;
}

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].exponent == 0) throw Error("FactoredInteger: zero exponent");
        if (i > 0 && factors[i - 1].prime >= factors[i].prime)
            throw Error("FactoredInteger: primes must be strictly increasing");
        if (!is_prime(factors[i].prime))
            throw Error("FactoredInteger: " + u128_to_string(factors[i].prime) + " is not prime");
    }
    return from_sorted_unchecked(std::move(factors));
}

u64 FactoredInteger::valuation(u128 p) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                               [](const PrimePower& pp, u128 v) { return pp.prime < v; });
    return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

FactoredInteger FactoredInteger::times(const FactoredInteger& other) const {
    std::vector<PrimePower> out;
    out.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime))
            out.push_back(*a++);
        else if (a == factors_.end() || b->prime < a->prime)
            out.push_back(*b++);
        else {
            out.push_back({a->prime, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }
    return from_sorted_unchecked(std::move(out));
}

FactoredInteger FactoredInteger::pow(u64 e) const {
    if (e == 0) return {};
    std::vector<PrimePower> out = factors_;
    for (auto& pp : out) pp.exponent *= e;
    return from_sorted_unchecked(std::move(out));
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
    for (const auto& pp : factors_)
        if (other.valuation(pp.prime) < pp.exponent) return false;
    return true;
}

FactoredInteger FactoredInteger::divide_exact(const FactoredInteger& divisor) const {
    std::vector<PrimePower> out;
    out.reserve(factors_.size());
    auto a = factors_.begin(), b = divisor.factors_.begin();
    while (a != factors_.end()) {
        if (b != divisor.factors_.end() && b->prime < a->prime)
            throw Error("divide_exact: " + divisor.to_factor_string() + " does not divide " +
                        to_factor_string());
        if (b != divisor.factors_.end() && b->prime == a->prime) {
            if (b->exponent > a->exponent)
                throw Error("divide_exact: " + divisor.to_factor_string() + " does not divide " +
                            to_factor_string());
            if (a->exponent > b->exponent) out.push_back({a->prime, a->exponent - b->exponent});
            ++a;
            ++b;
        } else {
            out.push_back(*a++);
        }
    }
    if (b != divisor.factors_.end())
        throw Error("divide_exact: " + divisor.to_factor_string() + " does not divide " +
                    to_factor_string());
    return from_sorted_unchecked(std::move(out));
}

FactoredInteger FactoredInteger::gcd(const FactoredInteger& other) const {
    std::vector<PrimePower> out;
    for (const auto& pp : factors_) {
        u64 e = std::min(pp.exponent, other.valuation(pp.prime));
        if (e > 0) out.push_back({pp.prime, e});
    }
    return from_sorted_unchecked(std::move(out));
}

mpz_class FactoredInteger::expand() const {
    mpz_class result = 1;
    mpz_class base, powed;
    for (const auto& pp : factors_) {
        base = u128_to_mpz(pp.prime);
        mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), pp.exponent);
        result *= powed;
    }
    return result;
}

std::string FactoredInteger::to_decimal() const { return expand().get_str(); }

std::string FactoredInteger::to_factor_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& pp : factors_) {
        if (!out.empty()) out += "·";
        out += u128_to_string(pp.prime);
        if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
    }
    return out;
}

bool FactoredInteger::fits_u64() const {
    u128 v = 1;
    const u128 cap = std::numeric_limits<u64>::max();
    for (const auto& pp : factors_) {
        for (u64 i = 0; i < pp.exponent; ++i) {
            if (v > cap / pp.prime) return false;
            v *= pp.prime;
        }
    }
    return true;
}

u64 FactoredInteger::to_u64() const {
    if (!fits_u64()) throw Error("to_u64: value " + to_factor_string() + " exceeds 64 bits");
    u64 v = 1;
    for (const auto& pp : factors_)
        for (u64 i = 0; i < pp.exponent; ++i) v *= static_cast<u64>(pp.prime);
    return v;
}

Ordering compare(const FactoredInteger& a, const FactoredInteger& b) {
    // Strip the shared part first; what remains is usually tiny.
    FactoredInteger g = a.gcd(b);
    int c = cmp(a.divide_exact(g).expand(), b.divide_exact(g).expand());
    if (c < 0) return Ordering::less;
    if (c > 0) return Ordering::greater;
    return Ordering::equal;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_u128(std::string_view text) {
    if (text.empty()) throw Error("parse_u128: empty input");
    u128 v = 0;
    const u128 cap = ~static_cast<u128>(0);
    for (char c : text) {
        if (c < '0' || c > '9') throw Error("parse_u128: invalid digit in '" + std::string(text) + "'");
        unsigned d = static_cast<unsigned>(c - '0');
        if (v > (cap - d) / 10) throw Error("parse_u128: value out of range");
        v = v * 10 + d;
    }
    return v;
}

mpz_class u128_to_mpz(u128 v) {
    mpz_class hi = static_cast<u64>(v >> 64);
    mpz_class lo = static_cast<u64>(v);
    return (hi << 64) | lo;
}

std::string render_scientific(const mpz_class& v) {
    if (v <= 0) throw Error("render_scientific: value must be positive");
    std::string digits = v.get_str();
    std::string mantissa = digits.substr(0, 3);
    while (mantissa.size() < 3) mantissa += '0';
    return std::string(1, mantissa[0]) + "." + mantissa.substr(1) + "·10^" +
           std::to_string(digits.size() - 1);
}

std::string render_scientific(const FactoredInteger& a) { return render_scientific(a.expand()); }

namespace {

// "d.dd·10^e" -> (mantissa*100, exponent)
bool parse_sci(std::string_view s, long& mant100, long& exp10) {
    size_t sep = s.find("·10^");
    if (sep == std::string_view::npos || sep < 1) return false;
    std::string mant(s.substr(0, sep));
    size_t dot = mant.find('.');
    if (dot == std::string::npos) mant += ".00";
    mant.erase(mant.find('.'), 1);
    if (mant.size() != 3) return false;
    for (char c : mant)
        if (c < '0' || c > '9') return false;
    mant100 = std::stol(mant);
    try {
        exp10 = std::stol(std::string(s.substr(sep + std::string_view("·10^").size())));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

bool sci_strings_match(std::string_view a, std::string_view b) {
    long ma, ea, mb, eb;
    if (!parse_sci(a, ma, ea) || !parse_sci(b, mb, eb)) return false;
    if (ea == eb) return std::abs(ma - mb) <= 1;
    if (ea == eb + 1) return ma == 100 && mb == 999;
    if (eb == ea + 1) return mb == 100 && ma == 999;
    return false;
}

}  // namespace hexoct
