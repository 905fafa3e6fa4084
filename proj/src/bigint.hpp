// bigint.hpp — sign-magnitude arbitrary-precision integer, base 1e9 limbs.
// Small and exact; division truncates toward zero (like built-in integers).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfa {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);  // [-]digits
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    int sign() const { return sign_; }

    // -1, 0, +1 as *this <=> rhs
    int cmp(const BigInt& rhs) const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);  // trunc
    friend BigInt operator%(const BigInt& a, const BigInt& b);  // sign of a

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    bool operator==(const BigInt& b) const { return cmp(b) == 0; }
    bool operator!=(const BigInt& b) const { return cmp(b) != 0; }
    bool operator<(const BigInt& b) const { return cmp(b) < 0; }
    bool operator<=(const BigInt& b) const { return cmp(b) <= 0; }
    bool operator>(const BigInt& b) const { return cmp(b) > 0; }
    bool operator>=(const BigInt& b) const { return cmp(b) >= 0; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(const BigInt& a, const BigInt& b);  // >= 0
    BigInt pow(uint64_t e) const;

    // Exact integer k-th root: returns r with r^k == x, if one exists.
    // For even k, x must be >= 0 and the nonnegative root is returned.
    static std::optional<BigInt> exact_kth_root(const BigInt& x, unsigned k);

    std::optional<long long> to_ll() const;
    std::optional<uint64_t> to_u64_abs() const;

    size_t limb_count() const { return mag_.size(); }

private:
    // mag_ little-endian base 1e9; no trailing zero limbs; sign_ == 0 iff empty.
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);  // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void trim();
    static BigInt from_mag(int sign, std::vector<uint32_t> mag);
};

}  // namespace nfa
