/*
   Copyright 2026 The opfields authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OPFIELDS_BIGINT_HPP
#define OPFIELDS_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opfields {

/// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
///
/// Schoolbook arithmetic throughout; operands in this library stay small
/// (structure constants, binomial coefficients, elimination intermediates).
class BigInt {
  public:
    BigInt() = default;

    BigInt(long long v)
    {
        if (v < 0) {
            neg_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long u = static_cast<unsigned long long>(-(v + 1)) + 1ull;
            push_u64(u);
        } else {
            push_u64(static_cast<unsigned long long>(v));
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s)
    {
        BigInt r;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    friend bool operator==(const BigInt& a, const BigInt& b)
    {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b)
    {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const
    {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b)
    {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.neg_ = b.neg_;
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b)
    {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Truncated quotient and remainder, remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
    {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        q.trim();
        r.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
        r.neg_ = a.neg_ && !r.is_zero();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b)
    {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
            b.neg_ = false;
        }
        return a;
    }

    BigInt abs() const
    {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    /// Value reduced mod m into [0, m), m > 0.
    uint64_t mod_u64(uint64_t m) const
    {
        uint64_t acc = 0;
        for (size_t i = limbs_.size(); i-- > 0;)
            acc = ((acc << 32) | limbs_[i]) % m;
        if (neg_ && acc != 0) acc = m - acc;
        return acc;
    }

    bool fits_i64() const
    {
        if (limbs_.size() > 2) return false;
        unsigned long long u = 0;
        for (size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
        return neg_ ? u <= 0x8000000000000000ull : u < 0x8000000000000000ull;
    }
    long long to_i64() const
    {
        unsigned long long u = 0;
        for (size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
        return neg_ ? -static_cast<long long>(u - 1) - 1 : static_cast<long long>(u);
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::vector<uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            uint64_t rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(cur / 1000000000ull);
                rem = cur % 1000000000ull;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            for (int k = 0; k < 9 && (!tmp.empty() || rem != 0); ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
            if (tmp.empty() && rem == 0 && digits.empty()) digits.push_back('0');
        }
        if (digits.empty()) digits.push_back('0');
        if (neg_) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

  private:
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros
    bool neg_ = false;

    void push_u64(unsigned long long u)
    {
        while (u != 0) {
            limbs_.push_back(static_cast<uint32_t>(u));
            u >>= 32;
        }
    }
    void trim()
    {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }
    void mul_small(uint32_t m)
    {
        uint64_t carry = 0;
        for (auto& l : limbs_) {
            uint64_t cur = static_cast<uint64_t>(l) * m + carry;
            l = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }
    void add_small(uint32_t a)
    {
        uint64_t carry = a;
        for (auto& l : limbs_) {
            uint64_t cur = static_cast<uint64_t>(l) + carry;
            l = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry) return;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
    {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b)
    {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry +
                           (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b)
    {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? b[i] : 0u);
            borrow = 0;
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // long division on magnitudes, |a| >= |b|, b nonzero
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r)
    {
        if (b.size() == 1) {
            uint64_t d = b[0], rem = 0;
            q.assign(a.size(), 0);
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // Knuth algorithm D with normalization
        int shift = 0;
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        std::vector<uint32_t> u = shl_bits(a, shift);
        std::vector<uint32_t> v = shl_bits(b, shift);
        u.push_back(0);
        size_t n = v.size(), m = u.size() - n - 1;
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= (1ull << 32) ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= (1ull << 32)) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) -
                            static_cast<int64_t>(p & 0xffffffffull) - borrow;
                borrow = 0;
                if (t < 0) {
                    t += (1ll << 32);
                    borrow = 1;
                }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large
                t += (1ll << 32);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<int64_t>(c2);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr_bits(u, shift);
    }
    static std::vector<uint32_t> shl_bits(std::vector<uint32_t> v, int s)
    {
        if (s == 0) return v;
        uint32_t carry = 0;
        for (auto& l : v) {
            uint32_t nc = l >> (32 - s);
            l = (l << s) | carry;
            carry = nc;
        }
        if (carry) v.push_back(carry);
        return v;
    }
    static std::vector<uint32_t> shr_bits(std::vector<uint32_t> v, int s)
    {
        if (s != 0) {
            for (size_t i = 0; i < v.size(); ++i) {
                uint32_t hi = i + 1 < v.size() ? v[i + 1] : 0;
                v[i] = (v[i] >> s) | (hi << (32 - s));
            }
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
};

inline BigInt binomial_z(int n, int k)
{
    if (k < 0 || k > n) return BigInt(0);
    BigInt r(1);
    for (int i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = r / BigInt(i);
    }
    return r;
}

inline BigInt factorial_z(int n)
{
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

}  // namespace opfields

#endif
