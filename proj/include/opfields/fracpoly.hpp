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

#ifndef OPFIELDS_FRACPOLY_HPP
#define OPFIELDS_FRACPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opfields {

/// Dense univariate polynomial in t over a coefficient field C.
/// Coefficients ascending by degree, no trailing zeros.
template <class C>
class Poly {
  public:
    Poly() = default;
    Poly(C c)
    {
        if (!c.is_zero()) coef_.push_back(std::move(c));
    }
    explicit Poly(std::vector<C> coef) : coef_(std::move(coef)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(C::one()); }
    static Poly t()
    {
        Poly p;
        p.coef_ = {C::zero(), C::one()};
        return p;
    }
    static Poly monomial(C c, int k)
    {
        Poly p;
        if (c.is_zero()) return p;
        p.coef_.assign(k + 1, C::zero());
        p.coef_[k] = std::move(c);
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }  // -1 for zero
    const std::vector<C>& coefficients() const { return coef_; }
    C coeff(int k) const
    {
        return k >= 0 && k < static_cast<int>(coef_.size()) ? coef_[k] : C::zero();
    }
    C leading() const { return coef_.empty() ? C::zero() : coef_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<C> r(std::max(a.coef_.size(), b.coef_.size()), C::zero());
        for (size_t i = 0; i < a.coef_.size(); ++i) r[i] = r[i] + a.coef_[i];
        for (size_t i = 0; i < b.coef_.size(); ++i) r[i] = r[i] + b.coef_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b)
    {
        std::vector<C> r(std::max(a.coef_.size(), b.coef_.size()), C::zero());
        for (size_t i = 0; i < a.coef_.size(); ++i) r[i] = r[i] + a.coef_[i];
        for (size_t i = 0; i < b.coef_.size(); ++i) r[i] = r[i] - b.coef_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> r(a.coef_.size() + b.coef_.size() - 1, C::zero());
        for (size_t i = 0; i < a.coef_.size(); ++i)
            for (size_t j = 0; j < b.coef_.size(); ++j)
                r[i + j] = r[i + j] + a.coef_[i] * b.coef_[j];
        return Poly(std::move(r));
    }
    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }
    Poly scaled(const C& c) const
    {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.coef_) x = x * c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r)
    {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        q = Poly();
        r = a;
        C lead_inv = C::one() / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            C c = r.leading() * lead_inv;
            Poly m = monomial(c, k);
            q = q + m;
            r = r - m * b;
        }
    }

    static Poly gcd(Poly a, Poly b)
    {
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        if (!a.is_zero()) a = a.scaled(C::one() / a.leading());  // monic normal form
        return a;
    }

    /// Substitute another polynomial for t.
    Poly compose(const Poly& g) const
    {
        Poly r;
        for (size_t i = coef_.size(); i-- > 0;) r = r * g + Poly(coef_[i]);
        return r;
    }

    C eval(const C& x) const
    {
        C r = C::zero();
        for (size_t i = coef_.size(); i-- > 0;) r = r * x + coef_[i];
        return r;
    }

  private:
    std::vector<C> coef_;
    void trim()
    {
        while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
    }
};

/// Rational function field C(t): reduced fraction with monic denominator.
template <class C>
class FracPoly {
  public:
    FracPoly() : num_(), den_(Poly<C>::one()) {}
    FracPoly(long long v) : num_(Poly<C>(C::from_int(v))), den_(Poly<C>::one()) {}
    FracPoly(int v) : FracPoly(static_cast<long long>(v)) {}
    FracPoly(Poly<C> p) : num_(std::move(p)), den_(Poly<C>::one()) {}
    FracPoly(Poly<C> n, Poly<C> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static FracPoly zero() { return FracPoly(); }
    static FracPoly one() { return FracPoly(Poly<C>::one()); }
    static FracPoly from_int(long long v) { return FracPoly(v); }
    static FracPoly t() { return FracPoly(Poly<C>::t()); }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly<C>::one() && den_ == Poly<C>::one(); }
    bool is_polynomial() const { return den_ == Poly<C>::one(); }

    friend FracPoly operator+(const FracPoly& a, const FracPoly& b)
    {
        return FracPoly(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FracPoly operator-(const FracPoly& a, const FracPoly& b)
    {
        return FracPoly(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FracPoly operator*(const FracPoly& a, const FracPoly& b)
    {
        return FracPoly(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FracPoly operator/(const FracPoly& a, const FracPoly& b)
    {
        if (b.is_zero()) throw std::domain_error("FracPoly: division by zero");
        return FracPoly(a.num_ * b.den_, a.den_ * b.num_);
    }
    FracPoly operator-() const
    {
        FracPoly r = *this;
        r.num_ = -r.num_;
        return r;
    }
    FracPoly& operator+=(const FracPoly& o) { return *this = *this + o; }
    FracPoly& operator-=(const FracPoly& o) { return *this = *this - o; }
    FracPoly& operator*=(const FracPoly& o) { return *this = *this * o; }
    FracPoly& operator/=(const FracPoly& o) { return *this = *this / o; }

    FracPoly inv() const { return one() / *this; }

    friend bool operator==(const FracPoly& a, const FracPoly& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

    /// Substitute t -> g(t) in both numerator and denominator.
    FracPoly compose(const Poly<C>& g) const
    {
        return FracPoly(num_.compose(g), den_.compose(g));
    }

  private:
    Poly<C> num_, den_;

    void normalize()
    {
        if (den_.is_zero()) throw std::domain_error("FracPoly: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<C>::one();
            return;
        }
        Poly<C> g = Poly<C>::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly<C> q, r;
            Poly<C>::divmod(num_, g, q, r);
            num_ = q;
            Poly<C>::divmod(den_, g, q, r);
            den_ = q;
        }
        C lead = den_.leading();
        if (!lead.is_one()) {
            C inv = C::one() / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
};

}  // namespace opfields

#endif
