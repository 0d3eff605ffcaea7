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

#ifndef OPFIELDS_MPOLY_HPP
#define OPFIELDS_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace opfields {

/// Graded lexicographic order on exponent vectors.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const
    {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial with exact coefficients; zero coefficients
/// are never stored.
template <field K>
class MPoly {
  public:
    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, K c)
    {
        MPoly p(nvars);
        if (!c.is_zero()) p.terms_[std::vector<int>(nvars, 0)] = std::move(c);
        return p;
    }
    static MPoly variable(int nvars, int i)
    {
        MPoly p(nvars);
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = K::one();
        return p;
    }
    static MPoly term(int nvars, std::vector<int> exps, K c)
    {
        MPoly p(nvars);
        if (!c.is_zero()) p.terms_[std::move(exps)] = std::move(c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, K, GradedLex>& terms() const { return terms_; }

    friend MPoly operator+(const MPoly& a, const MPoly& b)
    {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b)
    {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e = ea;
                for (int i = 0; i < r.nvars_; ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly operator-() const
    {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MPoly scaled(const K& s) const
    {
        if (s.is_zero()) return MPoly(nvars_);
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = s * c;
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Substitute a polynomial (over a possibly different variable set) for
    /// each variable; coefficients are carried over unchanged.
    MPoly substitute(int new_nvars, const std::vector<MPoly>& images) const
    {
        MPoly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            MPoly t = constant(new_nvars, c);
            for (int i = 0; i < nvars_; ++i)
                for (int rep = 0; rep < e[i]; ++rep) t = t * images[i];
            r = r + t;
        }
        return r;
    }

    /// Substitute with a coefficient map applied to every coefficient first.
    template <class F>
    MPoly substitute_twisted(int new_nvars, const std::vector<MPoly>& images,
                             F&& coeff_map) const
    {
        MPoly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            MPoly t = coeff_map(c);  // must return an MPoly over new_nvars
            for (int i = 0; i < nvars_; ++i)
                for (int rep = 0; rep < e[i]; ++rep) t = t * images[i];
            r = r + t;
        }
        return r;
    }

    K eval(const Vec<K>& point) const
    {
        K acc = K::zero();
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int rep = 0; rep < e[i]; ++rep) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }

    std::string str(const std::vector<std::string>& names) const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += scalar_str(c);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                out += "*" + names[i];
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

  private:
    int nvars_;
    std::map<std::vector<int>, K, GradedLex> terms_;

    void add_term(const std::vector<int>& e, const K& c)
    {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
};

}  // namespace opfields

#endif
