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

#ifndef OPFIELDS_COALGEBRA_HPP
#define OPFIELDS_COALGEBRA_HPP

#include <optional>

#include "algebra.hpp"

namespace opfields {

/// Coalgebra by structure constants: Delta(c_i) = sum delta[i](a,b) c_a ox c_b,
/// counit row vector. May carry a compatible algebra structure (bialgebra
/// case, e.g. Cartier duals); the distinguished element is the dual of the
/// source counit when one exists.
template <field K>
class Coalgebra {
  public:
    Coalgebra(int dim, std::vector<Matrix<K>> delta, Vec<K> counit)
        : dim_(dim), delta_(std::move(delta)), counit_(std::move(counit))
    {
        names_.resize(dim_);
        for (int i = 0; i < dim_; ++i) names_[i] = "c" + std::to_string(i);
    }

    int dim() const { return dim_; }
    const Matrix<K>& delta(int i) const { return delta_[i]; }
    const Vec<K>& counit() const { return counit_; }

    /// Delta on a general element, in tensor coordinates a*dim+b.
    Vec<K> comultiply(const Vec<K>& v) const
    {
        Vec<K> out(dim_ * dim_, K::zero());
        for (int i = 0; i < dim_; ++i) {
            if (v[i].is_zero()) continue;
            for (int a = 0; a < dim_; ++a)
                for (int b = 0; b < dim_; ++b)
                    if (!delta_[i](a, b).is_zero())
                        out[a * dim_ + b] = out[a * dim_ + b] + v[i] * delta_[i](a, b);
        }
        return out;
    }

    K apply_counit(const Vec<K>& v) const
    {
        K out = K::zero();
        for (int i = 0; i < dim_; ++i) out = out + counit_[i] * v[i];
        return out;
    }

    const std::vector<std::string>& basis_names() const { return names_; }
    void set_basis_names(std::vector<std::string> n) { names_ = std::move(n); }

    bool has_algebra() const { return algebra_.has_value(); }
    const FiniteAlgebra<K>& algebra() const { return *algebra_; }
    void set_algebra(FiniteAlgebra<K> a) { algebra_ = std::move(a); }

    bool has_distinguished() const { return distinguished_.has_value(); }
    const Vec<K>& distinguished() const { return *distinguished_; }
    void set_distinguished(Vec<K> v) { distinguished_ = std::move(v); }

  private:
    int dim_;
    std::vector<Matrix<K>> delta_;
    Vec<K> counit_;
    std::vector<std::string> names_;
    std::optional<FiniteAlgebra<K>> algebra_;
    std::optional<Vec<K>> distinguished_;
};

/// Dual coalgebra of a finite algebra: comultiplication constants are the
/// transpose of the multiplication constants, the counit is evaluation at
/// the unit, and the distinguished element is the dual of the counit.
template <field K>
Coalgebra<K> dual_coalgebra(const FiniteAlgebra<K>& e)
{
    int n = e.dim();
    std::vector<Matrix<K>> delta(n, Matrix<K>(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec<K>& w = e.product_coords(i, j);
            for (int k = 0; k < n; ++k) delta[k](i, j) = w[k];
        }
    Coalgebra<K> co(n, std::move(delta), e.unit());
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = "d(" + e.basis_names()[i] + ")";
    co.set_basis_names(std::move(names));
    if (e.has_counit()) co.set_distinguished(e.counit());
    return co;
}

template <field K>
CheckReport check_coalgebra_axioms(const Coalgebra<K>& c)
{
    CheckReport rep;
    int n = c.dim();

    // coassociativity: (Delta ox id) Delta = (id ox Delta) Delta on basis
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
        Vec<K> left(n * n * n, K::zero()), right(n * n * n, K::zero());
        Vec<K> d = c.comultiply(unit_vec<K>(n, i));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                K coeff = d[a * n + b];
                if (coeff.is_zero()) continue;
                Vec<K> da = c.comultiply(unit_vec<K>(n, a));
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (!da[u * n + v].is_zero())
                            left[(u * n + v) * n + b] =
                                left[(u * n + v) * n + b] + coeff * da[u * n + v];
                Vec<K> db = c.comultiply(unit_vec<K>(n, b));
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (!db[u * n + v].is_zero())
                            right[(a * n + u) * n + v] =
                                right[(a * n + u) * n + v] + coeff * db[u * n + v];
            }
        if (left != right) {
            ok = false;
            wit = c.basis_names()[i];
        }
    }
    rep.record("coalgebra.coassociative", ok, wit);

    // counit laws: (eps ox id) Delta = id = (id ox eps) Delta
    ok = true;
    wit.clear();
    for (int i = 0; i < n; ++i) {
        Vec<K> d = c.comultiply(unit_vec<K>(n, i));
        Vec<K> l(n, K::zero()), r(n, K::zero());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                K coeff = d[a * n + b];
                if (coeff.is_zero()) continue;
                l[b] = l[b] + coeff * c.counit()[a];
                r[a] = r[a] + coeff * c.counit()[b];
            }
        if (l != unit_vec<K>(n, i) || r != unit_vec<K>(n, i)) {
            ok = false;
            wit = c.basis_names()[i];
            break;
        }
    }
    rep.record("coalgebra.counit_law", ok, wit);
    return rep;
}

}  // namespace opfields

#endif
