#include "bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace nfa {

namespace {
constexpr uint32_t kBase = 1000000000u;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
    while (m) {
        mag_.push_back(uint32_t(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_mag(int sign, std::vector<uint32_t> mag) {
    BigInt r;
    r.sign_ = sign;
    r.mag_ = std::move(mag);
    r.trim();
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    int sign = 1;
    size_t i = 0;
    if (s[0] == '-') { sign = -1; i = 1; }
    else if (s[0] == '+') { i = 1; }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    for (size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("BigInt: bad digit");
    BigInt r;
    std::vector<uint32_t> mag;
    // parse in chunks of 9 digits from the most significant end
    size_t ndig = s.size() - i;
    size_t first = ndig % 9;
    if (first == 0) first = 9;
    auto push_chunk = [&](uint32_t chunk) {
        // mag = mag * 1e9 + chunk
        uint64_t carry = chunk;
        for (auto& limb : mag) {
            uint64_t cur = uint64_t(limb) * kBase + carry;
            limb = uint32_t(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) {
            mag.push_back(uint32_t(carry % kBase));
            carry /= kBase;
        }
    };
    size_t pos = i;
    uint32_t chunk = 0;
    for (size_t j = 0; j < first; ++j) chunk = chunk * 10 + uint32_t(s[pos++] - '0');
    push_chunk(chunk);
    while (pos < s.size()) {
        chunk = 0;
        for (size_t j = 0; j < 9; ++j) chunk = chunk * 10 + uint32_t(s[pos++] - '0');
        push_chunk(chunk);
    }
    return from_mag(sign, std::move(mag));
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(mag_.back());
    char buf[10];
    for (size_t i = mag_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", mag_[i]);
        out += buf;
    }
    return out;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, rhs.mag_);
    return sign_ >= 0 ? c : -c;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t cur = carry;
        if (i < a.size()) cur += a[i];
        if (i < b.size()) cur += b[i];
        r[i] = uint32_t(cur % kBase);
        carry = uint32_t(cur / kBase);
    }
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t cur = int64_t(r[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (cur < 0) { cur += kBase; borrow = 1; } else borrow = 0;
        r[i] = uint32_t(cur);
    }
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = uint64_t(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = uint32_t(cur % kBase);
            carry = cur / kBase;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = uint32_t(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt::from_mag(a.sign_, BigInt::add_mag(a.mag_, b.mag_));
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt::from_mag(a.sign_, BigInt::sub_mag(a.mag_, b.mag_));
    return BigInt::from_mag(b.sign_, BigInt::sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    return BigInt::from_mag(a.sign_ * b.sign_, BigInt::mul_mag(a.mag_, b.mag_));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) { q = BigInt(); r = a; return; }
    if (b.mag_.size() == 1) {
        // fast path: single-limb divisor
        uint32_t d = b.mag_[0];
        std::vector<uint32_t> qm(a.mag_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.mag_.size(); i-- > 0;) {
            uint64_t cur = rem * kBase + a.mag_[i];
            qm[i] = uint32_t(cur / d);
            rem = cur % d;
        }
        q = from_mag(a.sign_ * b.sign_, std::move(qm));
        r = BigInt((long long)rem);
        if (a.sign_ < 0) r = -r;
        return;
    }
    // schoolbook long division, limb at a time with binary-searched digit
    BigInt rem;  // running remainder, nonnegative
    std::vector<uint32_t> qm(a.mag_.size(), 0);
    BigInt babs = b.abs();
    for (size_t i = a.mag_.size(); i-- > 0;) {
        // rem = rem * base + limb
        rem.mag_.insert(rem.mag_.begin(), a.mag_[i]);
        rem.sign_ = 1;
        rem.trim();
        if (rem.cmp(babs) < 0) continue;
        uint32_t lo = 1, hi = kBase - 1, digit = 0;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            BigInt t = babs * BigInt((long long)mid);
            if (t.cmp(rem) <= 0) { digit = mid; lo = mid + 1; }
            else hi = mid - 1;
        }
        qm[i] = digit;
        rem = rem - babs * BigInt((long long)digit);
    }
    q = from_mag(a.sign_ * b.sign_, std::move(qm));
    if (a.sign_ < 0) rem = -rem;
    r = rem;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = y;
        y = r;
    }
    return x;
}

BigInt BigInt::pow(uint64_t e) const {
    BigInt base = *this, result(1);
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<BigInt> BigInt::exact_kth_root(const BigInt& x, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return x;
    if (x.is_zero()) return BigInt(0);
    if (x.is_negative()) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_kth_root(-x, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    // binary search on the root; magnitudes are desk-scale
    BigInt lo(1), hi(2);
    while (hi.pow(k).cmp(x) < 0) hi = hi * BigInt(2);
    while (lo.cmp(hi) < 0) {
        BigInt mid = (lo + hi + BigInt(1)) / BigInt(2);
        int c = mid.pow(k).cmp(x);
        if (c == 0) return mid;
        if (c < 0) lo = mid;
        else hi = mid - BigInt(1);
    }
    if (lo.pow(k).cmp(x) == 0) return lo;
    return std::nullopt;
}

std::optional<long long> BigInt::to_ll() const {
    if (sign_ == 0) return 0LL;
    unsigned long long m = 0;
    // 3 limbs can exceed 2^63; accumulate with overflow check
    for (size_t i = mag_.size(); i-- > 0;) {
        if (m > (~0ULL) / kBase) return std::nullopt;
        m = m * kBase;
        if (m > (~0ULL) - mag_[i]) return std::nullopt;
        m += mag_[i];
    }
    if (sign_ > 0) {
        if (m > 9223372036854775807ULL) return std::nullopt;
        return (long long)m;
    }
    if (m > 9223372036854775808ULL) return std::nullopt;
    return -(long long)(m - 1) - 1;
}

std::optional<uint64_t> BigInt::to_u64_abs() const {
    uint64_t m = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        if (m > (~0ULL) / kBase) return std::nullopt;
        m = m * kBase;
        if (m > (~0ULL) - mag_[i]) return std::nullopt;
        m += mag_[i];
    }
    return m;
}

}  // namespace nfa
