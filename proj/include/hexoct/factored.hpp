#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hexoct {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string u128_to_string(u128 v);
u128 parse_u128(std::string_view text);  // decimal, throws Error on junk/overflow
mpz_class u128_to_mpz(u128 v);

struct PrimePower {
    u128 prime;
    u64 exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An exact positive integer kept as its prime factorization:
/// strictly increasing primes, all exponents >= 1, empty list = 1.
/// Values are immutable after construction and safe to share across threads.
class FactoredInteger {
public:
    FactoredInteger() = default;  // the integer 1

    // Validates ordering, exponents and primality of every base.
    static FactoredInteger from_factors(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    u64 valuation(u128 p) const;

    FactoredInteger times(const FactoredInteger& other) const;
    FactoredInteger pow(u64 e) const;
    bool divides(const FactoredInteger& other) const;
    FactoredInteger divide_exact(const FactoredInteger& divisor) const;  // throws on non-divisor
    FactoredInteger gcd(const FactoredInteger& other) const;

    mpz_class expand() const;
    std::string to_decimal() const;
    std::string to_factor_string() const;  // e.g. "2^8·3^4·5^2·7·11"

    bool fits_u64() const;
    u64 to_u64() const;  // throws if the value exceeds 64 bits

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    std::vector<PrimePower> factors_;
    static FactoredInteger from_sorted_unchecked(std::vector<PrimePower> factors);
    friend FactoredInteger factor(u128 n);
    friend FactoredInteger factored_factorial(u64 n);
};

enum class Ordering { less, equal, greater };

/// Exact comparison of the represented integers via big-integer expansion.
Ordering compare(const FactoredInteger& a, const FactoredInteger& b);

/// Deterministic Miller-Rabin below 3.3e24 (fixed 13-prime witness set);
/// above that, 64 further deterministic witnesses push the error below 2^-128.
bool is_prime(u128 n);

/// Trial division below 1e6, then Pollard rho (Brent) with a fixed
/// re-seeding schedule, so results are reproducible run to run.
FactoredInteger factor(u128 n);

/// Exponent of p in x!, as sum_{u>=1} floor(x/p^u). Rejects non-prime p.
u64 legendre_valuation(u64 x, u128 p);

FactoredInteger factored_factorial(u64 n);

/// "d.dd·10^e" with the mantissa truncated (not rounded) to two decimals.
std::string render_scientific(const FactoredInteger& a);
std::string render_scientific(const mpz_class& v);

/// True when two "d.dd·10^e" strings agree within +-1 in the final mantissa
/// digit (9.99·10^k and 1.00·10^(k+1) count as adjacent).
bool sci_strings_match(std::string_view a, std::string_view b);

/// Primes below 1e6 in increasing order (shared sieve).
const std::vector<u64>& small_primes();

}  // namespace hexoct
