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

#ifndef OPFIELDS_OPERATOR_FIELD_HPP
#define OPFIELDS_OPERATOR_FIELD_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "report.hpp"

namespace opfields {

enum class SigmaKind {
    identity,
    shift,  // t -> t+1, function fields only
};

enum class HsKind {
    trivial,        // d_0 = id, d_i = 0 for i > 0
    divided,        // d_i(t^n) = C(n,i) t^(n-i), extended to fractions
    naive_iterate,  // d_i = (d/dt)^i; fails iterativity, kept as a control
    truncated_two,  // d_1 = d/dt, d_i = 0 for i >= 2; fails iterativity
    euler,          // d_i = (t d/dt)^i / i!; iterative but does not commute with the shift
};

inline const char* to_string(SigmaKind k)
{
    return k == SigmaKind::identity ? "identity" : "shift";
}
inline const char* to_string(HsKind k)
{
    switch (k) {
        case HsKind::trivial: return "trivial";
        case HsKind::divided: return "divided";
        case HsKind::naive_iterate: return "naive";
        case HsKind::truncated_two: return "zero2";
        case HsKind::euler: return "euler";
    }
    return "?";
}

/// A base field together with its operator structure: an automorphism
/// sigma and a Hasse-Schmidt family (d_i). Values are immutable and all
/// operations are pure.
template <field K>
class OperatorField {
  public:
    OperatorField() = default;
    OperatorField(SigmaKind s, HsKind h, int depth = 16) : sigma_(s), hs_(h), depth_(depth)
    {
        if constexpr (!is_function_field<K>) {
            if (s != SigmaKind::identity || h != HsKind::trivial)
                throw std::invalid_argument(
                    "operator structure beyond identity/trivial needs a function field");
        }
    }

    SigmaKind sigma_kind() const { return sigma_; }
    HsKind hs_kind() const { return hs_; }
    int max_depth() const { return depth_; }

    K sigma(const K& f) const { return shift_by(f, 1); }
    K sigma_inv(const K& f) const { return shift_by(f, -1); }

    /// sigma applied n times (n may be negative).
    K sigma_pow(const K& f, int n) const { return shift_by(f, n); }

    /// d_i(f). Fractions g/h are handled by the recursive quotient solve
    /// d_i(f) = (d_i(g) - sum_{j<i} d_j(f) d_{i-j}(h)) / h, valid uniformly
    /// in characteristic 0 and p.
    K hs_derive(int i, const K& f) const
    {
        if (i < 0) throw std::invalid_argument("hs_derive: negative index");
        if (i > depth_) throw std::out_of_range("hs_derive: index beyond supported depth");
        if (i == 0) return f;
        if constexpr (!is_function_field<K>) {
            (void)f;
            return K::zero();  // trivial family on Q, F_p
        } else {
            return hs_chain(i, f).back();
        }
    }

    /// f is a constant for the operator structure up to the given depth.
    bool is_constant(const K& f, int depth) const
    {
        if (sigma(f) != f) return false;
        for (int i = 1; i <= depth; ++i)
            if (!hs_derive(i, f).is_zero()) return false;
        return true;
    }

  private:
    SigmaKind sigma_ = SigmaKind::identity;
    HsKind hs_ = HsKind::trivial;
    int depth_ = 16;

    K shift_by(const K& f, int n) const
    {
        if (sigma_ == SigmaKind::identity || n == 0) return f;
        if constexpr (is_function_field<K>) {
            using C = typename field_traits<K>::base_type;
            // t -> t + n
            Poly<C> g(std::vector<C>{C::from_int(n), C::one()});
            return f.compose(g);
        } else {
            return f;
        }
    }

    // Chain d_0(f) .. d_i(f); only instantiated for function fields.
    std::vector<K> hs_chain(int i, const K& f) const
    {
        if constexpr (!is_function_field<K>) {
            return {};
        } else {
            using C = typename field_traits<K>::base_type;
            std::vector<K> df(i + 1, K::zero());
            df[0] = f;
            if (hs_ == HsKind::trivial) return df;

            if (f.is_polynomial()) {
                for (int r = 1; r <= i; ++r) df[r] = poly_hs(r, f.num());
                return df;
            }
            std::vector<K> dg(i + 1), dh(i + 1);
            for (int r = 0; r <= i; ++r) {
                dg[r] = poly_hs_k(r, f.num());
                dh[r] = poly_hs_k(r, f.den());
            }
            K hinv = K::one() / K(f.den());
            for (int r = 1; r <= i; ++r) {
                K acc = dg[r];
                for (int j = 0; j < r; ++j) acc = acc - df[j] * dh[r - j];
                df[r] = acc * hinv;
            }
            (void)sizeof(C);
            return df;
        }
    }

    template <class C>
    K poly_hs(int r, const Poly<C>& p) const
    {
        return poly_hs_k(r, p);
    }

    template <class C>
    K poly_hs_k(int r, const Poly<C>& p) const
    {
        if (r == 0) return K(p);
        switch (hs_) {
            case HsKind::trivial:
                return K::zero();
            case HsKind::divided: {
                Poly<C> out;
                for (int n = r; n <= p.degree(); ++n) {
                    C c = p.coeff(n);
                    if (c.is_zero()) continue;
                    C b = binomial<C>(n, r);
                    out = out + Poly<C>::monomial(c * b, n - r);
                }
                return K(out);
            }
            case HsKind::naive_iterate: {
                K cur(p);
                for (int s = 0; s < r; ++s) cur = ddt(cur);
                return cur;
            }
            case HsKind::truncated_two:
                return r == 1 ? ddt(K(p)) : K::zero();
            case HsKind::euler: {
                if constexpr (field_char<K> != 0) {
                    if (r >= static_cast<int>(field_char<K>))
                        throw std::out_of_range("euler family: depth needs characteristic 0");
                }
                K cur(p);
                for (int s = 0; s < r; ++s) cur = K::t() * ddt(cur);
                BigInt fct = factorial_z(r);
                K scale = K::one() / field_from_bigint<K>(fct);
                return cur * scale;
            }
        }
        return K::zero();
    }

    // d/dt on a fraction via the quotient rule.
    K ddt(const K& f) const
    {
        if constexpr (!is_function_field<K>) {
            return K::zero();
        } else {
            using C = typename field_traits<K>::base_type;
            auto dpoly = [](const Poly<C>& p) {
                Poly<C> out;
                for (int n = 1; n <= p.degree(); ++n)
                    out = out + Poly<C>::monomial(p.coeff(n) * C::from_int(n), n - 1);
                return out;
            };
            Poly<C> g = f.num(), h = f.den();
            return K(dpoly(g) * h - g * dpoly(h), h * h);
        }
    }
};

/// Checks the defining identities of the operator structure on a sample set
/// (closed under pairwise sums and products) and reports each identity with
/// a witness on failure.
template <field K>
CheckReport verify_operator_field(const OperatorField<K>& F, int depth,
                                  const std::vector<K>& samples)
{
    CheckReport rep;
    std::vector<K> pool = samples;
    for (size_t a = 0; a < samples.size(); ++a)
        for (size_t b = a; b < samples.size(); ++b) {
            pool.push_back(samples[a] + samples[b]);
            pool.push_back(samples[a] * samples[b]);
        }

    bool ok = true;
    std::string wit;
    for (const K& s : pool)
        if (F.hs_derive(0, s) != s) {
            ok = false;
            wit = scalar_str(s);
            break;
        }
    rep.record("hs.d0_identity", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 1; i <= depth && ok; ++i)
        for (int j = 1; i + j <= depth && ok; ++j)
            for (const K& s : pool) {
                K lhs = binomial<K>(i + j, i) * F.hs_derive(i + j, s);
                K rhs = F.hs_derive(i, F.hs_derive(j, s));
                if (lhs != rhs) {
                    ok = false;
                    wit = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                          " f=" + scalar_str(s);
                    break;
                }
            }
    rep.record("hs.iterative", ok, wit);

    ok = true;
    wit.clear();
    for (int n = 1; n <= depth && ok; ++n)
        for (size_t a = 0; a < samples.size() && ok; ++a)
            for (size_t b = 0; b < samples.size(); ++b) {
                K lhs = F.hs_derive(n, samples[a] * samples[b]);
                K rhs = K::zero();
                for (int i = 0; i <= n; ++i)
                    rhs = rhs + F.hs_derive(i, samples[a]) * F.hs_derive(n - i, samples[b]);
                if (lhs != rhs) {
                    ok = false;
                    wit = "n=" + std::to_string(n) + " a=" + scalar_str(samples[a]) +
                          " b=" + scalar_str(samples[b]);
                    break;
                }
            }
    rep.record("hs.leibniz", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 1; i <= depth && ok; ++i)
        for (const K& s : pool) {
            if (F.sigma(F.hs_derive(i, s)) != F.hs_derive(i, F.sigma(s))) {
                ok = false;
                wit = "i=" + std::to_string(i) + " f=" + scalar_str(s);
                break;
            }
        }
    rep.record("sigma.commutes_with_hs", ok, wit);

    ok = true;
    wit.clear();
    for (const K& s : pool)
        if (F.sigma_inv(F.sigma(s)) != s) {
            ok = false;
            wit = scalar_str(s);
            break;
        }
    rep.record("sigma.invertible", ok, wit);

    return rep;
}

}  // namespace opfields

#endif
