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

#ifndef OPFIELDS_PRIME_FIELD_HPP
#define OPFIELDS_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opfields {

constexpr bool is_prime_u32(uint32_t n)
{
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime field F_P, residues stored in [0, P).
template <uint32_t P>
class Fp {
    static_assert(is_prime_u32(P), "modulus must be prime");

  public:
    Fp() : v_(0) {}
    Fp(long long v)
    {
        long long m = v % static_cast<long long>(P);
        if (m < 0) m += P;
        v_ = static_cast<uint32_t>(m);
    }
    Fp(int v) : Fp(static_cast<long long>(v)) {}

    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }
    static Fp from_int(long long v) { return Fp(v); }

    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(Fp a, Fp b)
    {
        uint64_t s = static_cast<uint64_t>(a.v_) + b.v_;
        return raw(static_cast<uint32_t>(s >= P ? s - P : s));
    }
    friend Fp operator-(Fp a, Fp b)
    {
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_);
    }
    friend Fp operator*(Fp a, Fp b)
    {
        return raw(static_cast<uint32_t>(static_cast<uint64_t>(a.v_) * b.v_ % P));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    Fp inv() const
    {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        int64_t a = v_, b = P, x0 = 1, x1 = 0;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        if (x0 < 0) x0 += P;
        return raw(static_cast<uint32_t>(x0));
    }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    /// "r mod p"
    std::string str() const { return std::to_string(v_) + " mod " + std::to_string(P); }

    static Fp parse(std::string_view s)
    {
        auto sp = s.find(" mod ");
        std::string_view head = sp == std::string_view::npos ? s : s.substr(0, sp);
        if (sp != std::string_view::npos) {
            unsigned long q = std::stoul(std::string(s.substr(sp + 5)));
            if (q != P) throw std::invalid_argument("Fp: modulus mismatch in literal");
        }
        return Fp(std::stoll(std::string(head)));
    }

  private:
    uint32_t v_;
    static Fp raw(uint32_t v)
    {
        Fp r;
        r.v_ = v;
        return r;
    }
};

}  // namespace opfields

#endif
