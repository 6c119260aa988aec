#ifndef EISEN_ARITHMETIC_HPP
#define EISEN_ARITHMETIC_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

// Integer helpers shared by the divisor sums and the Euler products.
namespace eisen::arith
{

// Primes p <= limit, ascending (sieve of Eratosthenes).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2) {
        return out;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) {
            continue;
        }
        out.push_back(p);
        for (std::uint64_t k = p * p; k <= limit; k += p) {
            composite[k] = true;
        }
    }
    return out;
}

// Prime powers q <= limit, ascending.
inline std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    for (auto p : primes_up_to(limit)) {
        for (std::uint64_t q = p;; q *= p) {
            out.push_back(q);
            if (q > limit / p) {
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// (prime, exponent) pairs by trial division; n >= 1.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) {
        f.emplace_back(n, 1);
    }
    return f;
}

inline bool is_prime_power(std::uint64_t q)
{
    return q >= 2 && factorize(q).size() == 1;
}

// All divisors of n >= 1, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("divisors: n must be positive");
    }
    std::vector<std::uint64_t> d{1};
    for (const auto &[p, e] : factorize(n)) {
        const auto count = d.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) {
                d.push_back(d[i] * pk);
            }
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace eisen::arith

#endif
