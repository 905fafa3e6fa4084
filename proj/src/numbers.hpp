// numbers.hpp — u64 modular arithmetic, deterministic Miller-Rabin, Pollard rho.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace nfa {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((__uint128_t)a * b % m);
}

inline uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for 64-bit integers
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

namespace detail {
inline uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}
}  // namespace detail

// full prime factorization of n >= 1, as sorted (prime, exponent) pairs
inline std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
    std::map<uint64_t, int> acc;
    auto rec = [&](auto&& self, uint64_t m) -> void {
        if (m == 1) return;
        if (is_prime_u64(m)) { acc[m]++; return; }
        uint64_t d = detail::pollard_rho(m);
        self(self, d);
        self(self, m / d);
    };
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { acc[p]++; n /= p; }
    }
    rec(rec, n);
    return {acc.begin(), acc.end()};
}

}  // namespace nfa
