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

#ifndef OPFIELDS_ALGEBRA_HPP
#define OPFIELDS_ALGEBRA_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "report.hpp"

namespace opfields {

/// Finite-dimensional commutative algebra over K, given by structure
/// constants c[i][j] = coordinates of b_i * b_j. Counit and radical are
/// recorded by constructors when known; both are re-verifiable.
template <field K>
class FiniteAlgebra {
  public:
    FiniteAlgebra(int dim, Vec<K> unit, std::vector<std::vector<Vec<K>>> mul,
                  std::string tag = "custom")
        : dim_(dim), unit_(std::move(unit)), c_(std::move(mul)), tag_(std::move(tag))
    {
        names_.resize(dim_);
        for (int i = 0; i < dim_; ++i) names_[i] = "b" + std::to_string(i);
    }

    int dim() const { return dim_; }
    const Vec<K>& unit() const { return unit_; }
    const std::string& tag() const { return tag_; }
    const Vec<K>& product_coords(int i, int j) const { return c_[i][j]; }

    const std::vector<std::string>& basis_names() const { return names_; }
    void set_basis_names(std::vector<std::string> n) { names_ = std::move(n); }

    bool has_counit() const { return counit_.has_value(); }
    const Vec<K>& counit() const { return *counit_; }
    void set_counit(Vec<K> e) { counit_ = std::move(e); }

    bool has_radical() const { return radical_.has_value(); }
    const std::vector<Vec<K>>& recorded_radical() const { return *radical_; }
    void set_radical(std::vector<Vec<K>> r) { radical_ = std::move(r); }

    Vec<K> multiply(const Vec<K>& u, const Vec<K>& v) const
    {
        Vec<K> out(dim_, K::zero());
        for (int i = 0; i < dim_; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (v[j].is_zero()) continue;
                K f = u[i] * v[j];
                const Vec<K>& w = c_[i][j];
                for (int k = 0; k < dim_; ++k)
                    if (!w[k].is_zero()) out[k] = out[k] + f * w[k];
            }
        }
        return out;
    }

    /// Matrix of multiplication by the element with coordinates v.
    Matrix<K> mult_matrix(const Vec<K>& v) const
    {
        Matrix<K> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            Vec<K> col = multiply(v, unit_vec<K>(dim_, j));
            for (int i = 0; i < dim_; ++i) m(i, j) = col[i];
        }
        return m;
    }

    Matrix<K> basis_mult_matrix(int i) const { return mult_matrix(unit_vec<K>(dim_, i)); }

    Vec<K> power(const Vec<K>& v, int e) const
    {
        Vec<K> r = unit_;
        for (int s = 0; s < e; ++s) r = multiply(r, v);
        return r;
    }

    K apply_counit(const Vec<K>& v) const
    {
        K out = K::zero();
        for (int i = 0; i < dim_; ++i) out = out + (*counit_)[i] * v[i];
        return out;
    }

    /// Gram matrix of the trace form (a, b) -> trace(mult_{ab}).
    Matrix<K> trace_form() const
    {
        Vec<K> tr(dim_);
        for (int k = 0; k < dim_; ++k) tr[k] = basis_mult_matrix(k).trace();
        Matrix<K> g(dim_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                K s = K::zero();
                for (int k = 0; k < dim_; ++k)
                    if (!c_[i][j][k].is_zero()) s = s + c_[i][j][k] * tr[k];
                g(i, j) = s;
            }
        return g;
    }

    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b)
    {
        return a.dim_ == b.dim_ && a.unit_ == b.unit_ && a.c_ == b.c_;
    }

  private:
    int dim_;
    Vec<K> unit_;
    std::vector<std::vector<Vec<K>>> c_;
    std::string tag_;
    std::vector<std::string> names_;
    std::optional<Vec<K>> counit_;
    std::optional<std::vector<Vec<K>>> radical_;
};

template <field K>
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra<K>>;

template <field K>
bool same_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b)
{
    return a == b || *a == *b;
}

/// Algebra map described by its matrix on basis coordinates.
template <field K>
struct AlgebraMap {
    AlgebraPtr<K> source;
    AlgebraPtr<K> target;
    Matrix<K> matrix;  // target.dim x source.dim

    Vec<K> apply(const Vec<K>& v) const { return matrix * v; }
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// K[x]/(f), f monic of degree n >= 1 given by all n+1 coefficients.
/// Records the counit x -> 0 when f(0) = 0, and the radical (x) for pure
/// power moduli x^n.
template <field K>
AlgebraPtr<K> quotient_poly_algebra(const Vec<K>& f, const std::string& var = "x")
{
    int n = static_cast<int>(f.size()) - 1;
    if (n < 1 || f[n].is_zero()) throw std::invalid_argument("modulus must have degree >= 1");
    if (!f[n].is_one()) throw std::invalid_argument("modulus must be monic");

    // x^n = -(f_0 + f_1 x + ... + f_{n-1} x^{n-1})
    Vec<K> xn(n, K::zero());
    for (int i = 0; i < n; ++i) xn[i] = -f[i];

    auto reduce_degree = [&](std::vector<K> poly) {
        // poly has length up to 2n-1
        for (int d = static_cast<int>(poly.size()) - 1; d >= n; --d) {
            K c = poly[d];
            if (c.is_zero()) continue;
            poly[d] = K::zero();
            for (int i = 0; i < n; ++i) poly[d - n + i] = poly[d - n + i] + c * xn[i];
        }
        poly.resize(n, K::zero());
        return poly;
    };

    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<K> poly(i + j + 1, K::zero());
            poly[i + j] = K::one();
            mul[i][j] = reduce_degree(std::move(poly));
        }

    auto alg = std::make_shared<FiniteAlgebra<K>>(n, unit_vec<K>(n, 0), std::move(mul),
                                                  "quotient-poly");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i)
        names[i] = i == 0 ? "1" : (i == 1 ? var : var + "^" + std::to_string(i));
    alg->set_basis_names(std::move(names));
    if (f[0].is_zero()) alg->set_counit(unit_vec<K>(n, 0));

    bool pure_power = true;
    for (int i = 0; i < n; ++i)
        if (!f[i].is_zero()) pure_power = false;
    if (pure_power) {
        std::vector<Vec<K>> rad;
        for (int i = 1; i < n; ++i) rad.push_back(unit_vec<K>(n, i));
        alg->set_radical(std::move(rad));
    }
    return alg;
}

/// K[x]/x^{k+1}, the truncation level E_k.
template <field K>
AlgebraPtr<K> truncated_algebra(int k, const std::string& var = "x")
{
    Vec<K> f(k + 2, K::zero());
    f[k + 1] = K::one();
    return quotient_poly_algebra<K>(f, var);
}

/// Group algebra K[Y] for the finite abelian group Y = Z/m1 x ... x Z/mr.
/// Basis indexed by group elements in mixed-radix order. Radical recorded
/// as 0 when char(K) does not divide |Y|.
template <field K>
AlgebraPtr<K> group_algebra(const std::vector<int>& orders)
{
    long long size = 1;
    for (int m : orders) {
        if (m < 1) throw std::invalid_argument("group order must be positive");
        size *= m;
    }
    int n = static_cast<int>(size);
    auto index_of = [&](const std::vector<int>& g) {
        int idx = 0;
        for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + g[i];
        return idx;
    };
    auto element_of = [&](int idx) {
        std::vector<int> g(orders.size());
        for (size_t i = orders.size(); i-- > 0;) {
            g[i] = idx % orders[i];
            idx /= orders[i];
        }
        return g;
    };

    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec<K>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto gi = element_of(i), gj = element_of(j);
            std::vector<int> s(orders.size());
            for (size_t a = 0; a < orders.size(); ++a) s[a] = (gi[a] + gj[a]) % orders[a];
            mul[i][j][index_of(s)] = K::one();
        }

    auto alg = std::make_shared<FiniteAlgebra<K>>(n, unit_vec<K>(n, 0), std::move(mul),
                                                  "group-algebra");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        auto g = element_of(i);
        std::string s = "g(";
        for (size_t a = 0; a < g.size(); ++a) s += (a ? "," : "") + std::to_string(g[a]);
        names[i] = s + ")";
    }
    alg->set_basis_names(std::move(names));
    alg->set_counit(Vec<K>(n, K::one()));  // trivial character
    if (field_char<K> == 0 || size % field_char<K> != 0)
        alg->set_radical({});
    return alg;
}

template <field K>
AlgebraPtr<K> product_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b)
{
    int n = a->dim() + b->dim();
    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec<K>(n)));
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < a->dim(); ++j) {
            const Vec<K>& w = a->product_coords(i, j);
            for (int k = 0; k < a->dim(); ++k) mul[i][j][k] = w[k];
        }
    for (int i = 0; i < b->dim(); ++i)
        for (int j = 0; j < b->dim(); ++j) {
            const Vec<K>& w = b->product_coords(i, j);
            for (int k = 0; k < b->dim(); ++k)
                mul[a->dim() + i][a->dim() + j][a->dim() + k] = w[k];
        }
    Vec<K> unit(n, K::zero());
    for (int i = 0; i < a->dim(); ++i) unit[i] = a->unit()[i];
    for (int i = 0; i < b->dim(); ++i) unit[a->dim() + i] = b->unit()[i];
    auto alg = std::make_shared<FiniteAlgebra<K>>(n, std::move(unit), std::move(mul), "product");
    std::vector<std::string> names(n);
    for (int i = 0; i < a->dim(); ++i) names[i] = "l." + a->basis_names()[i];
    for (int i = 0; i < b->dim(); ++i) names[a->dim() + i] = "r." + b->basis_names()[i];
    alg->set_basis_names(std::move(names));
    if (a->has_radical() && b->has_radical()) {
        std::vector<Vec<K>> rad;
        for (const auto& v : a->recorded_radical()) {
            Vec<K> w(n, K::zero());
            for (int i = 0; i < a->dim(); ++i) w[i] = v[i];
            rad.push_back(std::move(w));
        }
        for (const auto& v : b->recorded_radical()) {
            Vec<K> w(n, K::zero());
            for (int i = 0; i < b->dim(); ++i) w[a->dim() + i] = v[i];
            rad.push_back(std::move(w));
        }
        alg->set_radical(std::move(rad));
    }
    return alg;
}

/// A tensor B with basis b_i ox b_j at index i*dim(B)+j.
/// Radical J(A) ox B + A ox J(B) is recorded only over perfect base fields.
template <field K>
AlgebraPtr<K> tensor_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b)
{
    int da = a->dim(), db = b->dim(), n = da * db;
    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec<K>(n)));
    for (int i1 = 0; i1 < da; ++i1)
        for (int j1 = 0; j1 < db; ++j1)
            for (int i2 = 0; i2 < da; ++i2)
                for (int j2 = 0; j2 < db; ++j2) {
                    const Vec<K>& wa = a->product_coords(i1, i2);
                    const Vec<K>& wb = b->product_coords(j1, j2);
                    Vec<K>& out = mul[i1 * db + j1][i2 * db + j2];
                    for (int k1 = 0; k1 < da; ++k1) {
                        if (wa[k1].is_zero()) continue;
                        for (int k2 = 0; k2 < db; ++k2)
                            if (!wb[k2].is_zero()) out[k1 * db + k2] = wa[k1] * wb[k2];
                    }
                }
    Vec<K> unit = tensor_vec(a->unit(), b->unit());
    auto alg = std::make_shared<FiniteAlgebra<K>>(n, std::move(unit), std::move(mul), "tensor");
    std::vector<std::string> names(n);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            names[i * db + j] = a->basis_names()[i] + "(x)" + b->basis_names()[j];
    alg->set_basis_names(std::move(names));
    if (a->has_counit() && b->has_counit())
        alg->set_counit(tensor_vec(a->counit(), b->counit()));
    constexpr bool perfect_base = field_char<K> == 0 || !is_function_field<K>;
    if (perfect_base && a->has_radical() && b->has_radical()) {
        std::vector<Vec<K>> gens;
        for (const auto& v : a->recorded_radical())
            for (int j = 0; j < db; ++j) gens.push_back(tensor_vec(v, unit_vec<K>(db, j)));
        for (int i = 0; i < da; ++i)
            for (const auto& w : b->recorded_radical())
                gens.push_back(tensor_vec(unit_vec<K>(da, i), w));
        Subspace<K> rad = Subspace<K>::span(n, gens);
        std::vector<Vec<K>> basis;
        for (int i = 0; i < rad.dim(); ++i) basis.push_back(rad.basis_vector(i));
        alg->set_radical(std::move(basis));
    }
    return alg;
}

/// K[x_1..x_m] / (monomial ideal). Generators are exponent vectors. The
/// quotient must be finite-dimensional (some power of each variable lies in
/// the ideal). Standard monomials are ordered by total degree then
/// lexicographically.
template <field K>
AlgebraPtr<K> monomial_quotient_algebra(int vars, const std::vector<std::vector<int>>& gens)
{
    auto divisible = [&](const std::vector<int>& m, const std::vector<int>& g) {
        for (int i = 0; i < vars; ++i)
            if (m[i] < g[i]) return false;
        return true;
    };
    auto in_ideal = [&](const std::vector<int>& m) {
        for (const auto& g : gens)
            if (divisible(m, g)) return true;
        return false;
    };

    // max useful exponent per variable
    std::vector<int> cap(vars, -1);
    for (const auto& g : gens) {
        bool pure = true;
        int which = -1;
        for (int i = 0; i < vars; ++i)
            if (g[i] > 0) {
                if (which >= 0) pure = false;
                which = i;
            }
        if (pure && which >= 0)
            cap[which] = cap[which] < 0 ? g[which] : std::min(cap[which], g[which]);
    }
    for (int i = 0; i < vars; ++i)
        if (cap[i] < 0)
            throw std::invalid_argument("monomial quotient is not finite-dimensional");

    // enumerate standard monomials, graded then lex
    std::vector<std::vector<int>> basis;
    std::vector<int> cur(vars, 0);
    int maxdeg = 0;
    for (int i = 0; i < vars; ++i) maxdeg += cap[i] - 1;
    for (int d = 0; d <= maxdeg; ++d) {
        std::vector<std::vector<int>> level;
        std::function<void(int, int)> rec = [&](int var, int rem) {
            if (var == vars) {
                if (rem == 0 && !in_ideal(cur)) level.push_back(cur);
                return;
            }
            for (int e = 0; e <= std::min(rem, cap[var] - 1); ++e) {
                cur[var] = e;
                rec(var + 1, rem - e);
            }
            cur[var] = 0;
        };
        rec(0, d);
        for (auto& m : level) basis.push_back(std::move(m));
    }

    int n = static_cast<int>(basis.size());
    auto find = [&](const std::vector<int>& m) {
        for (int i = 0; i < n; ++i)
            if (basis[i] == m) return i;
        return -1;
    };

    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec<K>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> s(vars);
            for (int v = 0; v < vars; ++v) s[v] = basis[i][v] + basis[j][v];
            if (!in_ideal(s)) {
                int k = find(s);
                if (k >= 0) mul[i][j][k] = K::one();
            }
        }

    auto alg = std::make_shared<FiniteAlgebra<K>>(n, unit_vec<K>(n, 0), std::move(mul),
                                                  "monomial-quotient");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        std::string s;
        for (int v = 0; v < vars; ++v)
            for (int e = 0; e < basis[i][v]; ++e) s += std::string(1, static_cast<char>('x' + v));
        names[i] = s.empty() ? "1" : s;
    }
    alg->set_basis_names(std::move(names));
    alg->set_counit(unit_vec<K>(n, 0));
    std::vector<Vec<K>> rad;
    for (int i = 1; i < n; ++i) rad.push_back(unit_vec<K>(n, i));
    alg->set_radical(std::move(rad));
    return alg;
}

/// Quotient algebra E/J for an ideal subspace J. The structure constants are
/// induced through the deterministic section of the quotient space.
template <field K>
AlgebraPtr<K> quotient_algebra(const AlgebraPtr<K>& e, const Subspace<K>& ideal)
{
    QuotientSpace<K> q(ideal);
    int n = q.dim();
    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[i][j] = q.project(e->multiply(q.section(unit_vec<K>(n, i)),
                                              q.section(unit_vec<K>(n, j))));
    auto alg = std::make_shared<FiniteAlgebra<K>>(n, q.project(e->unit()), std::move(mul),
                                                  "quotient");
    if (e->has_counit()) {
        // counit descends when it kills the ideal
        bool kills = true;
        for (int i = 0; i < ideal.dim() && kills; ++i)
            kills = e->apply_counit(ideal.basis_vector(i)).is_zero();
        if (kills) {
            Vec<K> eps(n);
            for (int i = 0; i < n; ++i)
                eps[i] = e->apply_counit(q.section(unit_vec<K>(n, i)));
            alg->set_counit(std::move(eps));
        }
    }
    return alg;
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

template <field K>
CheckReport check_algebra_axioms(const FiniteAlgebra<K>& e)
{
    CheckReport rep;
    int n = e.dim();

    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n; ++j)
            if (e.product_coords(i, j) != e.product_coords(j, i)) {
                ok = false;
                wit = "(" + e.basis_names()[i] + "," + e.basis_names()[j] + ")";
                break;
            }
    rep.record("algebra.commutative", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<K> l = e.multiply(e.product_coords(i, j), unit_vec<K>(n, k));
                Vec<K> r = e.multiply(unit_vec<K>(n, i), e.product_coords(j, k));
                if (l != r) {
                    ok = false;
                    wit = "(" + e.basis_names()[i] + "," + e.basis_names()[j] + "," +
                          e.basis_names()[k] + ")";
                    break;
                }
            }
    rep.record("algebra.associative", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < n; ++i)
        if (e.multiply(e.unit(), unit_vec<K>(n, i)) != unit_vec<K>(n, i)) {
            ok = false;
            wit = e.basis_names()[i];
            break;
        }
    rep.record("algebra.unit_law", ok, wit);

    if (e.has_counit()) {
        ok = true;
        wit.clear();
        if (!(e.apply_counit(e.unit()) == K::one())) {
            ok = false;
            wit = "counit(1) != 1";
        }
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j) {
                K l = e.apply_counit(e.product_coords(i, j));
                K r = e.apply_counit(unit_vec<K>(n, i)) * e.apply_counit(unit_vec<K>(n, j));
                if (l != r) {
                    ok = false;
                    wit = "(" + e.basis_names()[i] + "," + e.basis_names()[j] + ")";
                    break;
                }
            }
        rep.record("algebra.counit_is_algebra_map", ok, wit);
    }

    return rep;
}

template <field K>
CheckReport check_algebra_map(const AlgebraMap<K>& f)
{
    CheckReport rep;
    int n = f.source->dim();
    rep.record("map.unit", f.apply(f.source->unit()) == f.target->unit());

    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<K> l = f.apply(f.source->product_coords(i, j));
            Vec<K> r = f.target->multiply(f.apply(unit_vec<K>(n, i)), f.apply(unit_vec<K>(n, j)));
            if (l != r) {
                ok = false;
                wit = "(" + f.source->basis_names()[i] + "," + f.source->basis_names()[j] + ")";
                break;
            }
        }
    rep.record("map.multiplicative", ok, wit);
    return rep;
}

}  // namespace opfields

#endif
