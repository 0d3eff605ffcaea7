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

#ifndef OPFIELDS_TOWER_HPP
#define OPFIELDS_TOWER_HPP

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "operator_field.hpp"

namespace opfields {

/// Truncation tower (E_0 .. E_N) of a formal monoid: finite algebra levels
/// with counits, surjective transitions, and the comultiplication components
/// m#_{k,l}: E_{k+l} -> E_k ox E_l. Towers are immutable after construction.
/// Levels always carry the canonical monomial/window bases produced by the
/// constructors; families presented through other basis choices are
/// identified with these towers by an algebra isomorphism per level.
template <field K>
class MonoidTower {
  public:
    MonoidTower(std::vector<AlgebraPtr<K>> levels, std::vector<Matrix<K>> step_down,
                std::vector<std::vector<Matrix<K>>> product, bool commutative,
                std::string kind)
        : levels_(std::move(levels)),
          down_(std::move(step_down)),
          product_(std::move(product)),
          commutative_(commutative),
          kind_(std::move(kind))
    {
    }

    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    const AlgebraPtr<K>& level(int n) const { return levels_.at(n); }
    bool commutative() const { return commutative_; }
    const std::string& kind() const { return kind_; }

    /// pi_{lo <- hi}: E_hi -> E_lo, composition of the stored steps.
    Matrix<K> transition_matrix(int lo, int hi) const
    {
        if (lo > hi) throw std::invalid_argument("transition goes downward");
        Matrix<K> m = Matrix<K>::identity(levels_[hi]->dim());
        for (int n = hi; n > lo; --n) m = down_.at(n - 1) * m;
        return m;
    }

    /// m#_{k,l}: E_{k+l} -> E_k ox E_l, in tensor coordinates i*dim(E_l)+j.
    const Matrix<K>& product_matrix(int k, int l) const
    {
        if (k + l > max_level())
            throw std::out_of_range("product component beyond the constructed level");
        return product_.at(k).at(l);
    }

    Vec<K> counit(int n) const { return level(n)->counit(); }

  private:
    std::vector<AlgebraPtr<K>> levels_;
    std::vector<Matrix<K>> down_;
    std::vector<std::vector<Matrix<K>>> product_;
    bool commutative_;
    std::string kind_;
};

template <field K>
using TowerPtr = std::shared_ptr<const MonoidTower<K>>;

/// Swap of tensor factors as a permutation matrix.
template <field K>
Matrix<K> swap_matrix(int da, int db)
{
    Matrix<K> s(db * da, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) s(j * da + i, i * db + j) = K::one();
    return s;
}

// ---------------------------------------------------------------------------
// Power-series towers for a one-dimensional formal group law
// ---------------------------------------------------------------------------

enum class GroupLaw { additive, multiplicative, custom };

/// Coefficients F[i][j] of a truncated bivariate law F(X,Y); the unit axioms
/// F(X,0) = X and F(0,Y) = Y are checked on construction.
template <field K>
struct LawTable {
    std::vector<std::vector<K>> coeff;

    static LawTable additive(int n)
    {
        LawTable t;
        int size = std::max(n, 1) + 1;
        t.coeff.assign(size, std::vector<K>(size, K::zero()));
        t.coeff[1][0] = K::one();
        t.coeff[0][1] = K::one();
        return t;
    }
    static LawTable multiplicative(int n)
    {
        LawTable t = additive(n);
        if (n >= 1) t.coeff[1][1] = K::one();
        return t;
    }

    void check_unit_axioms() const
    {
        int n = static_cast<int>(coeff.size()) - 1;
        for (int i = 0; i <= n; ++i) {
            K xi = coeff[i][0];
            if ((i == 1 && !(xi == K::one())) || (i != 1 && !xi.is_zero()))
                throw std::invalid_argument("law fails F(X,0) = X at truncation");
            K yi = coeff[0][i];
            if ((i == 1 && !(yi == K::one())) || (i != 1 && !yi.is_zero()))
                throw std::invalid_argument("law fails F(0,Y) = Y at truncation");
        }
    }
};

/// Tower with levels K[x]/x^{n+1} and m#_{k,l}: x -> F(x ox 1, 1 ox x).
template <field K>
TowerPtr<K> power_series_monoid(int levels, GroupLaw law,
                                const LawTable<K>* custom = nullptr)
{
    LawTable<K> table = law == GroupLaw::additive ? LawTable<K>::additive(levels)
                        : law == GroupLaw::multiplicative
                            ? LawTable<K>::multiplicative(levels)
                            : (custom ? *custom : LawTable<K>::additive(levels));
    table.check_unit_axioms();

    std::vector<AlgebraPtr<K>> lv;
    for (int n = 0; n <= levels; ++n) lv.push_back(truncated_algebra<K>(n));

    std::vector<Matrix<K>> down;
    for (int n = 0; n < levels; ++n) {
        Matrix<K> m(n + 1, n + 2);
        for (int i = 0; i <= n; ++i) m(i, i) = K::one();
        down.push_back(std::move(m));
    }

    std::vector<std::vector<Matrix<K>>> prod(levels + 1);
    for (int k = 0; k <= levels; ++k) {
        prod[k].resize(levels - k + 1, Matrix<K>());
        for (int l = 0; k + l <= levels; ++l) {
            auto ta = tensor_algebra(lv[k], lv[l]);
            // image of x under the law, inside E_k ox E_l
            Vec<K> fx(ta->dim(), K::zero());
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= l; ++j) {
                    if (i + j == 0) continue;
                    if (i < static_cast<int>(table.coeff.size()) &&
                        j < static_cast<int>(table.coeff[i].size()))
                        fx[i * (l + 1) + j] = table.coeff[i][j];
                }
            Matrix<K> m(ta->dim(), k + l + 1);
            Vec<K> power = ta->unit();
            for (int s = 0; s <= k + l; ++s) {
                m.set_column(s, power);
                power = ta->multiply(power, fx);
            }
            prod[k][l] = std::move(m);
        }
    }
    bool commutative = true;
    for (size_t i = 0; i < table.coeff.size() && commutative; ++i)
        for (size_t j = 0; j < table.coeff[i].size(); ++j)
            if (!(table.coeff[i][j] == table.coeff[j][i])) {
                commutative = false;
                break;
            }
    return std::make_shared<MonoidTower<K>>(std::move(lv), std::move(down), std::move(prod),
                                            commutative, "power-series");
}

// ---------------------------------------------------------------------------
// Discrete monoids as window towers of product algebras
// ---------------------------------------------------------------------------

enum class DiscreteMonoid { naturals, integers, cyclic };

namespace detail {

inline std::vector<long long> window(DiscreteMonoid m, int n, int modulus)
{
    std::vector<long long> w;
    switch (m) {
        case DiscreteMonoid::naturals:
            for (long long v = 0; v <= n; ++v) w.push_back(v);
            break;
        case DiscreteMonoid::integers:
            for (long long v = -n; v <= n; ++v) w.push_back(v);
            break;
        case DiscreteMonoid::cyclic:
            for (long long v = 0; v < modulus; ++v) w.push_back(v);
            break;
    }
    return w;
}

/// Product algebra of functions on a finite window, counit = evaluation at
/// the identity element 0.
template <field K>
AlgebraPtr<K> window_algebra(const std::vector<long long>& w)
{
    int n = static_cast<int>(w.size());
    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec<K>(n)));
    for (int i = 0; i < n; ++i) mul[i][i][i] = K::one();
    auto alg = std::make_shared<FiniteAlgebra<K>>(n, Vec<K>(n, K::one()), std::move(mul),
                                                  "window");
    std::vector<std::string> names(n);
    int zero_at = -1;
    for (int i = 0; i < n; ++i) {
        names[i] = "delta(" + std::to_string(w[i]) + ")";
        if (w[i] == 0) zero_at = i;
    }
    alg->set_basis_names(std::move(names));
    if (zero_at >= 0) alg->set_counit(unit_vec<K>(n, zero_at));
    alg->set_radical({});
    return alg;
}

}  // namespace detail

/// Finite windows of N, Z, or Z/m: E_n = functions on the window, the
/// comultiplication dual to addition restricted to windows.
template <field K>
TowerPtr<K> discrete_monoid_truncation(DiscreteMonoid kind, int levels, int modulus = 0)
{
    if (kind == DiscreteMonoid::cyclic && modulus < 1)
        throw std::invalid_argument("cyclic monoid needs a positive modulus");

    std::vector<std::vector<long long>> windows;
    std::vector<AlgebraPtr<K>> lv;
    for (int n = 0; n <= levels; ++n) {
        windows.push_back(detail::window(kind, n, modulus));
        lv.push_back(detail::window_algebra<K>(windows.back()));
    }

    auto index_in = [](const std::vector<long long>& w, long long v) {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == v) return static_cast<int>(i);
        return -1;
    };

    std::vector<Matrix<K>> down;
    for (int n = 0; n < levels; ++n) {
        // restriction of functions to the smaller window
        Matrix<K> m(lv[n]->dim(), lv[n + 1]->dim());
        for (size_t j = 0; j < windows[n + 1].size(); ++j) {
            int i = index_in(windows[n], windows[n + 1][j]);
            if (i >= 0) m(i, static_cast<int>(j)) = K::one();
        }
        down.push_back(std::move(m));
    }

    std::vector<std::vector<Matrix<K>>> prod(levels + 1);
    for (int k = 0; k <= levels; ++k) {
        prod[k].resize(levels - k + 1, Matrix<K>());
        for (int l = 0; k + l <= levels; ++l) {
            int dk = lv[k]->dim(), dl = lv[l]->dim();
            Matrix<K> m(dk * dl, lv[k + l]->dim());
            for (int a = 0; a < dk; ++a)
                for (int b = 0; b < dl; ++b) {
                    long long sum = windows[k][a] + windows[l][b];
                    if (kind == DiscreteMonoid::cyclic) sum = ((sum % modulus) + modulus) % modulus;
                    int s = index_in(windows[k + l], sum);
                    if (s < 0)
                        throw std::logic_error("window too small for a product component");
                    m(a * dl + b, s) = K::one();
                }
            prod[k][l] = std::move(m);
        }
    }
    std::string name = kind == DiscreteMonoid::naturals ? "discrete-nat"
                       : kind == DiscreteMonoid::integers ? "discrete-int"
                                                          : "discrete-cyclic";
    return std::make_shared<MonoidTower<K>>(std::move(lv), std::move(down), std::move(prod),
                                            true, name);
}

// ---------------------------------------------------------------------------
// Free formal monoid on a pointed algebra
// ---------------------------------------------------------------------------

namespace detail {

/// p applied in slot s of E^(ox n): a map to E^(ox n-1).
template <field K>
Matrix<K> point_slot_map(const Vec<K>& p, int dim, int n, int s)
{
    Matrix<K> row(1, dim);
    for (int j = 0; j < dim; ++j) row(0, j) = p[j];
    Matrix<K> m = Matrix<K>::identity(1);
    for (int t = 0; t < n; ++t) {
        if (t == s)
            m = Matrix<K>::kron(m, row);
        else
            m = Matrix<K>::kron(m, Matrix<K>::identity(dim));
    }
    return m;
}

/// Permutation action of the transposition (s, s+1) on E^(ox n).
template <field K>
Matrix<K> transposition_matrix(int dim, int n, int s)
{
    int total = 1;
    for (int i = 0; i < n; ++i) total *= dim;
    Matrix<K> m(total, total);
    std::vector<int> digits(n);
    for (int idx = 0; idx < total; ++idx) {
        int rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            digits[i] = rest % dim;
            rest /= dim;
        }
        std::swap(digits[s], digits[s + 1]);
        int target = 0;
        for (int i = 0; i < n; ++i) target = target * dim + digits[i];
        m(target, idx) = K::one();
    }
    return m;
}

/// Exact symmetrisation (1/n!) sum over all slot permutations.
template <field K>
Vec<K> symmetrize_tensor(int dim, int n, const Vec<K>& v)
{
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Vec<K> acc(v.size(), K::zero());
    int count = 0;
    std::vector<int> digits(n);
    do {
        for (size_t idx = 0; idx < v.size(); ++idx) {
            if (v[idx].is_zero()) continue;
            int rest = static_cast<int>(idx);
            for (int i = n - 1; i >= 0; --i) {
                digits[i] = rest % dim;
                rest /= dim;
            }
            int target = 0;
            for (int i = 0; i < n; ++i) target = target * dim + digits[perm[i]];
            acc[target] = acc[target] + v[idx];
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    K inv = K::one() / field_from_bigint<K>(factorial_z(n));
    return scale_vec(inv, acc);
}

template <field K>
Matrix<K> embed_from(const Subspace<K>& s)
{
    Matrix<K> m(s.ambient_dim(), s.dim());
    for (int j = 0; j < s.dim(); ++j) m.set_column(j, s.basis_vector(j));
    return m;
}

template <field K>
Vec<K> slotwise_multiply(const FiniteAlgebra<K>& e, int n, const Vec<K>& u, const Vec<K>& v)
{
    // componentwise product in E^(ox n)
    int d = e.dim();
    int total = static_cast<int>(u.size());
    Vec<K> out(total, K::zero());
    std::vector<int> di(n), dj(n);
    for (int i = 0; i < total; ++i) {
        if (u[i].is_zero()) continue;
        int rest = i;
        for (int s = n - 1; s >= 0; --s) {
            di[s] = rest % d;
            rest /= d;
        }
        for (int j = 0; j < total; ++j) {
            if (v[j].is_zero()) continue;
            rest = j;
            for (int s = n - 1; s >= 0; --s) {
                dj[s] = rest % d;
                rest /= d;
            }
            // multiply slotwise: product of basis vectors in each slot
            Vec<K> acc(1, u[i] * v[j]);
            int acc_len = 1;
            std::vector<K> cur = acc;
            for (int s = 0; s < n; ++s) {
                const Vec<K>& w = e.product_coords(di[s], dj[s]);
                Vec<K> next(acc_len * d, K::zero());
                for (int a = 0; a < acc_len; ++a) {
                    if (cur[a].is_zero()) continue;
                    for (int kk = 0; kk < d; ++kk)
                        if (!w[kk].is_zero()) next[a * d + kk] = cur[a] * w[kk];
                }
                cur = std::move(next);
                acc_len *= d;
            }
            for (int a = 0; a < acc_len; ++a) out[a] = out[a] + cur[a];
        }
    }
    return out;
}

}  // namespace detail

template <field K>
struct FreeMonoidTower {
    TowerPtr<K> tower;
    /// Embedding of level n into E^(ox n): columns are the canonical basis.
    std::vector<Matrix<K>> level_embed;
};

/// Free formal monoid on a pointed algebra: level n is the equaliser of the
/// point maps inside E^(ox n), with slotwise multiplication, restriction-of-
/// identity comultiplication, and transitions by applying the point to the
/// last slot. The abelian variant symmetrises (projection in characteristic
/// 0, intersection with symmetric tensors in characteristic p).
template <field K>
FreeMonoidTower<K> free_monoid(const AlgebraPtr<K>& e, int levels, bool abelian)
{
    if (!e->has_counit()) throw std::invalid_argument("free_monoid: pointed algebra required");
    const Vec<K>& p = e->counit();
    int d = e->dim();

    FreeMonoidTower<K> out;
    std::vector<AlgebraPtr<K>> lv;
    std::vector<Subspace<K>> spaces;
    std::vector<Matrix<K>> down;

    for (int n = 0; n <= levels; ++n) {
        int total = 1;
        for (int i = 0; i < n; ++i) total *= d;

        Subspace<K> space;
        if (n == 0) {
            space = Subspace<K>::full(1);
        } else if (n == 1) {
            space = Subspace<K>::full(d);
        } else {
            std::vector<Matrix<K>> slot;
            for (int s = 0; s < n; ++s) slot.push_back(detail::point_slot_map(p, d, n, s));
            int rows_per = slot[0].rows();
            Matrix<K> stacked((n - 1) * rows_per, total);
            for (int s = 0; s + 1 < n; ++s) {
                Matrix<K> diff = slot[s] - slot[s + 1];
                for (int r = 0; r < rows_per; ++r)
                    for (int c = 0; c < total; ++c) stacked(s * rows_per + r, c) = diff(r, c);
            }
            space = Subspace<K>::span(total, stacked.kernel_basis());
        }

        if (abelian && n >= 2) {
            if constexpr (field_char<K> == 0) {
                std::vector<Vec<K>> vecs;
                for (int i = 0; i < space.dim(); ++i)
                    vecs.push_back(detail::symmetrize_tensor<K>(d, n, space.basis_vector(i)));
                space = Subspace<K>::span(total, vecs);
            } else {
                Subspace<K> sym = Subspace<K>::full(total);
                for (int s = 0; s + 1 < n; ++s) {
                    Matrix<K> g = detail::transposition_matrix<K>(d, n, s) -
                                  Matrix<K>::identity(total);
                    sym = Subspace<K>::intersect(
                        sym, Subspace<K>::span(total, g.kernel_basis()));
                }
                space = Subspace<K>::intersect(space, sym);
            }
        }

        // structure constants through the subspace coordinates
        int dimn = space.dim();
        std::vector<std::vector<Vec<K>>> mul(dimn, std::vector<Vec<K>>(dimn));
        for (int i = 0; i < dimn; ++i)
            for (int j = 0; j < dimn; ++j) {
                Vec<K> w = n == 0 ? Vec<K>{space.basis_vector(i)[0] * space.basis_vector(j)[0]}
                                  : detail::slotwise_multiply(*e, n, space.basis_vector(i),
                                                              space.basis_vector(j));
                auto c = space.coords(w);
                if (!c) throw std::logic_error("free monoid level not closed under product");
                mul[i][j] = *c;
            }
        Vec<K> unit_ambient(n == 0 ? 1 : 0, K::one());
        if (n > 0) {
            unit_ambient = e->unit();
            for (int s = 1; s < n; ++s) unit_ambient = tensor_vec(unit_ambient, e->unit());
        }
        auto cu = space.coords(unit_ambient);
        if (!cu) throw std::logic_error("free monoid level does not contain the unit");

        auto alg = std::make_shared<FiniteAlgebra<K>>(dimn, *cu, std::move(mul),
                                                      "free-monoid-level");
        // counit: the point applied in every slot, p^(ox n) as a row vector
        Matrix<K> eps_row = Matrix<K>::identity(1);
        Matrix<K> p_row(1, d);
        for (int j = 0; j < d; ++j) p_row(0, j) = p[j];
        for (int s = 0; s < n; ++s) eps_row = Matrix<K>::kron(eps_row, p_row);
        Vec<K> eps2(dimn);
        for (int i = 0; i < dimn; ++i) eps2[i] = (eps_row * space.basis_vector(i))[0];
        alg->set_counit(std::move(eps2));
        std::vector<std::string> names(dimn);
        for (int i = 0; i < dimn; ++i) names[i] = "e" + std::to_string(i) + "@" + std::to_string(n);
        alg->set_basis_names(std::move(names));

        if (n > 0) {
            // transition: point applied to the last slot
            Matrix<K> lastslot = detail::point_slot_map(p, d, n, n - 1);
            Matrix<K> m(spaces.back().dim(), dimn);
            for (int j = 0; j < dimn; ++j) {
                Vec<K> img = lastslot * space.basis_vector(j);
                auto c = spaces.back().coords(img);
                if (!c) throw std::logic_error("free monoid transition leaves the tower");
                for (int i = 0; i < spaces.back().dim(); ++i) m(i, j) = (*c)[i];
            }
            down.push_back(std::move(m));
        }

        spaces.push_back(space);
        lv.push_back(alg);
        out.level_embed.push_back(detail::embed_from(space));
    }

    // comultiplication components: restriction of the identity along
    // E_{k+l} c E^(ox k+l) = E^(ox k) ox E^(ox l) into E_k ox E_l
    std::vector<std::vector<Matrix<K>>> prod(levels + 1);
    for (int k = 0; k <= levels; ++k) {
        prod[k].resize(levels - k + 1, Matrix<K>());
        for (int l = 0; k + l <= levels; ++l) {
            int dk = lv[k]->dim(), dl = lv[l]->dim();
            Matrix<K> pair = Matrix<K>::kron(out.level_embed[k], out.level_embed[l]);
            Matrix<K> m(dk * dl, lv[k + l]->dim());
            for (int j = 0; j < lv[k + l]->dim(); ++j) {
                Vec<K> amb = out.level_embed[k + l].column(j);
                auto sol = pair.solve(amb);
                if (!sol)
                    throw std::logic_error("free monoid comultiplication failed to restrict");
                for (int i = 0; i < dk * dl; ++i) m(i, j) = (*sol)[i];
            }
            prod[k][l] = std::move(m);
        }
    }

    out.tower = std::make_shared<MonoidTower<K>>(std::move(lv), std::move(down), std::move(prod),
                                                 abelian || d <= 2, "free-monoid");
    return out;
}

// ---------------------------------------------------------------------------
// Tower axioms
// ---------------------------------------------------------------------------

template <field K>
CheckReport check_tower_axioms(const MonoidTower<K>& t)
{
    CheckReport rep;
    int N = t.max_level();

    bool ok = true;
    std::string wit;
    for (int n = 0; n <= N; ++n) {
        if (!t.level(n)->has_counit()) {
            ok = false;
            wit = "level " + std::to_string(n) + " has no counit";
            break;
        }
        CheckReport a = check_algebra_axioms(*t.level(n));
        if (!a.all_pass()) {
            ok = false;
            wit = "level " + std::to_string(n) + ": " + a.first_failure();
            break;
        }
    }
    rep.record("tower.levels_are_algebras", ok, wit);

    ok = true;
    wit.clear();
    for (int n = 0; n < N && ok; ++n) {
        Matrix<K> m = t.transition_matrix(n, n + 1);
        AlgebraMap<K> f{t.level(n + 1), t.level(n), m};
        CheckReport a = check_algebra_map(f);
        if (!a.all_pass()) {
            ok = false;
            wit = "transition to level " + std::to_string(n);
            break;
        }
        if (m.rank() != t.level(n)->dim()) {
            ok = false;
            wit = "transition to level " + std::to_string(n) + " not surjective";
        }
    }
    rep.record("tower.transitions_are_surjective_algebra_maps", ok, wit);

    ok = true;
    wit.clear();
    for (int n = 0; n < N && ok; ++n) {
        // counit compatibility
        Vec<K> hi = t.counit(n + 1);
        Vec<K> lo = t.counit(n);
        Matrix<K> tr = t.transition_matrix(n, n + 1);
        Vec<K> composed(t.level(n + 1)->dim(), K::zero());
        for (int j = 0; j < t.level(n + 1)->dim(); ++j) {
            K acc = K::zero();
            for (int i = 0; i < t.level(n)->dim(); ++i) acc = acc + lo[i] * tr(i, j);
            composed[j] = acc;
        }
        if (composed != hi) {
            ok = false;
            wit = "level " + std::to_string(n + 1);
        }
    }
    rep.record("tower.counit_compatible_with_transitions", ok, wit);

    ok = true;
    wit.clear();
    for (int k = 0; k <= N && ok; ++k)
        for (int l = 0; k + l <= N && ok; ++l) {
            AlgebraMap<K> f{t.level(k + l), tensor_algebra(t.level(k), t.level(l)),
                            t.product_matrix(k, l)};
            if (!check_algebra_map(f).all_pass()) {
                ok = false;
                wit = "m#(" + std::to_string(k) + "," + std::to_string(l) + ")";
            }
        }
    rep.record("tower.product_components_are_algebra_maps", ok, wit);

    // coassociativity
    ok = true;
    wit.clear();
    for (int a = 0; a <= N && ok; ++a)
        for (int b = 0; a + b <= N && ok; ++b)
            for (int c = 0; a + b + c <= N; ++c) {
                int dc = t.level(c)->dim(), da = t.level(a)->dim();
                Matrix<K> lhs = Matrix<K>::kron(t.product_matrix(a, b),
                                                Matrix<K>::identity(dc)) *
                                t.product_matrix(a + b, c);
                Matrix<K> rhs = Matrix<K>::kron(Matrix<K>::identity(da),
                                                t.product_matrix(b, c)) *
                                t.product_matrix(a, b + c);
                if (lhs != rhs) {
                    ok = false;
                    wit = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
                    break;
                }
            }
    rep.record("tower.coassociative", ok, wit);

    // counit law: (i# ox id) m#_{k,l} = transition, and symmetrically
    ok = true;
    wit.clear();
    for (int k = 0; k <= N && ok; ++k)
        for (int l = 0; k + l <= N; ++l) {
            Vec<K> ek = t.counit(k);
            Matrix<K> row(1, t.level(k)->dim());
            for (int i = 0; i < t.level(k)->dim(); ++i) row(0, i) = ek[i];
            Matrix<K> lhs = Matrix<K>::kron(row, Matrix<K>::identity(t.level(l)->dim())) *
                            t.product_matrix(k, l);
            if (lhs != t.transition_matrix(l, k + l)) {
                ok = false;
                wit = "left counit at (" + std::to_string(k) + "," + std::to_string(l) + ")";
                break;
            }
            Vec<K> el = t.counit(l);
            Matrix<K> rowl(1, t.level(l)->dim());
            for (int i = 0; i < t.level(l)->dim(); ++i) rowl(0, i) = el[i];
            Matrix<K> rhs = Matrix<K>::kron(Matrix<K>::identity(t.level(k)->dim()), rowl) *
                            t.product_matrix(k, l);
            if (rhs != t.transition_matrix(k, k + l)) {
                ok = false;
                wit = "right counit at (" + std::to_string(k) + "," + std::to_string(l) + ")";
                break;
            }
        }
    rep.record("tower.counit_law", ok, wit);

    if (t.commutative()) {
        ok = true;
        wit.clear();
        for (int k = 0; k <= N && ok; ++k)
            for (int l = 0; k + l <= N; ++l) {
                Matrix<K> sw = swap_matrix<K>(t.level(k)->dim(), t.level(l)->dim());
                if (sw * t.product_matrix(k, l) != t.product_matrix(l, k)) {
                    ok = false;
                    wit = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
                    break;
                }
            }
        rep.record("tower.cocommutative", ok, wit);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Product of two towers (diagonal levels)
// ---------------------------------------------------------------------------

template <field K>
TowerPtr<K> product_tower(const TowerPtr<K>& a, const TowerPtr<K>& b)
{
    int N = std::min(a->max_level(), b->max_level());
    std::vector<AlgebraPtr<K>> lv;
    for (int n = 0; n <= N; ++n) lv.push_back(tensor_algebra(a->level(n), b->level(n)));

    std::vector<Matrix<K>> down;
    for (int n = 0; n < N; ++n)
        down.push_back(Matrix<K>::kron(a->transition_matrix(n, n + 1),
                                       b->transition_matrix(n, n + 1)));

    std::vector<std::vector<Matrix<K>>> prod(N + 1);
    for (int k = 0; k <= N; ++k) {
        prod[k].resize(N - k + 1, Matrix<K>());
        for (int l = 0; k + l <= N; ++l) {
            // (P ox D)_{k+l} -> (P_k ox P_l) ox (D_k ox D_l) -> (P_k ox D_k) ox (P_l ox D_l)
            Matrix<K> base = Matrix<K>::kron(a->product_matrix(k, l), b->product_matrix(k, l));
            int pk = a->level(k)->dim(), pl = a->level(l)->dim();
            int dk = b->level(k)->dim(), dl = b->level(l)->dim();
            Matrix<K> shuffled(pk * dk * pl * dl, base.cols());
            for (int i = 0; i < pk; ++i)
                for (int j = 0; j < pl; ++j)
                    for (int u = 0; u < dk; ++u)
                        for (int v = 0; v < dl; ++v) {
                            int from = ((i * pl + j) * dk + u) * dl + v;
                            int to = ((i * dk + u) * pl + j) * dl + v;
                            for (int c = 0; c < base.cols(); ++c)
                                shuffled(to, c) = base(from, c);
                        }
            prod[k][l] = std::move(shuffled);
        }
    }
    return std::make_shared<MonoidTower<K>>(std::move(lv), std::move(down), std::move(prod),
                                            a->commutative() && b->commutative(),
                                            a->kind() + "*" + b->kind());
}

}  // namespace opfields

#endif
