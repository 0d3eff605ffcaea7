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

#ifndef OPFIELDS_JET_HPP
#define OPFIELDS_JET_HPP

#include "action.hpp"
#include "module.hpp"
#include "mpoly.hpp"

namespace opfields {

// ---------------------------------------------------------------------------
// Twisted tensor spaces E ox_mu V
// ---------------------------------------------------------------------------

/// The coordinate space of the prolongation of an affine space: (dim E) * n
/// over K via the projection structure, with E acting by left multiplication
/// and the scalar a acting through mu#(a) on the E factor.
template <field K>
struct TwistedTensor {
    FModule<K> module;  // E-action
    MonoidAction<K> action;
    int level;
    int fibre_dim;

    /// Matrix of the mu-twisted scalar multiplication by a.
    Matrix<K> twisted_scalar(const K& a) const
    {
        Matrix<K> mult = action.tower->level(level)->mult_matrix(action.mu(level, a));
        return Matrix<K>::kron(mult, Matrix<K>::identity(fibre_dim));
    }
};

template <field K>
TwistedTensor<K> twisted_tensor(int level, const MonoidAction<K>& a, int fibre_dim)
{
    if (level > a.tower->max_level())
        throw std::out_of_range("twisted_tensor: level beyond the constructed tower");
    const AlgebraPtr<K>& e = a.tower->level(level);
    FModule<K> m{e, e->dim() * fibre_dim, {}};
    for (int i = 0; i < e->dim(); ++i)
        m.action.push_back(
            Matrix<K>::kron(e->basis_mult_matrix(i), Matrix<K>::identity(fibre_dim)));
    return {std::move(m), a, level, fibre_dim};
}

// ---------------------------------------------------------------------------
// Jet ideals
// ---------------------------------------------------------------------------

/// Polynomial ideal in the jet coordinates X_j^(i), j ascending then i
/// ascending; generators ordered by source generator then by x-power.
template <field K>
struct JetIdeal {
    int level = 0;
    int src_vars = 0;
    ActionKind action_kind = ActionKind::trivial;
    std::vector<std::string> var_names;
    std::vector<MPoly<K>> gens;
    std::vector<MPoly<K>> source;

    int var_index(int j, int i) const { return j * (level + 1) + i; }
    int jet_vars() const { return src_vars * (level + 1); }
};

namespace detail {

/// Truncated power series with polynomial coefficients.
template <field K>
using JetSeries = std::vector<MPoly<K>>;

template <field K>
JetSeries<K> series_mul(const JetSeries<K>& a, const JetSeries<K>& b, int nvars)
{
    JetSeries<K> r(a.size(), MPoly<K>(nvars));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < r.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

}  // namespace detail

/// Substitute X_j -> sum_i X_j^(i) x^i and map every coefficient through
/// mu#_k; the coefficients of x^i are the jet generators. Shift actions use
/// the window components instead of x-powers.
template <field K>
JetIdeal<K> jet_ideal(const std::vector<MPoly<K>>& gens, int m, int k,
                      const MonoidAction<K>& a)
{
    if (a.kind != ActionKind::trivial && a.kind != ActionKind::hs &&
        a.kind != ActionKind::shift)
        throw std::invalid_argument("jet_ideal: action must be trivial, hs, or shift");
    if (k > a.tower->max_level())
        throw std::out_of_range("jet_ideal: level beyond the action's verified depth");
    if (k > 0 && a.kind != ActionKind::shift && a.tower->kind() != "power-series")
        throw std::invalid_argument("jet_ideal: hs/trivial jets need a power-series tower");

    JetIdeal<K> out;
    out.level = k;
    out.src_vars = m;
    out.action_kind = a.kind;
    out.source = gens;
    int nv = m * (k + 1);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i <= k; ++i)
            out.var_names.push_back("X" + std::to_string(j) + "_" + std::to_string(i));

    if (a.kind == ActionKind::shift) {
        // one twisted copy of the generators per window element; the jet
        // coordinate layout indexes window positions 0..k, which matches
        // the natural-number windows only
        if (a.tower->kind() != "discrete-nat")
            throw std::invalid_argument("shift jets need a natural-number window tower");
        for (const auto& f : gens)
            for (int i = 0; i <= k; ++i) {
                std::vector<MPoly<K>> images;
                for (int j = 0; j < m; ++j)
                    images.push_back(MPoly<K>::variable(nv, out.var_index(j, i)));
                long long w = a.windows[k][i];
                MPoly<K> g = f.substitute_twisted(nv, images, [&](const K& c) {
                    return MPoly<K>::constant(nv, a.field.sigma_pow(c, static_cast<int>(w)));
                });
                out.gens.push_back(std::move(g));
            }
        return out;
    }

    for (const auto& f : gens) {
        // expand f monomial by monomial into a truncated series
        detail::JetSeries<K> acc(k + 1, MPoly<K>(nv));
        for (const auto& [e, c] : f.terms()) {
            detail::JetSeries<K> term(k + 1, MPoly<K>(nv));
            Vec<K> mu = a.mu(k, c);
            for (int i = 0; i <= k; ++i) term[i] = MPoly<K>::constant(nv, mu[i]);
            for (int j = 0; j < m; ++j)
                for (int rep = 0; rep < e[j]; ++rep) {
                    detail::JetSeries<K> xj(k + 1, MPoly<K>(nv));
                    for (int i = 0; i <= k; ++i)
                        xj[i] = MPoly<K>::variable(nv, out.var_index(j, i));
                    term = detail::series_mul(term, xj, nv);
                }
            for (int i = 0; i <= k; ++i) acc[i] = acc[i] + term[i];
        }
        for (int i = 0; i <= k; ++i) out.gens.push_back(acc[i]);
    }
    return out;
}

/// The canonical lift of a point: apply the operators coordinatewise.
/// The point must satisfy the source generators; the output is asserted to
/// satisfy the jet ideal.
template <field K>
Vec<K> nabla(const MonoidAction<K>& a, const std::vector<MPoly<K>>& gens, const Vec<K>& point,
             int k)
{
    for (const auto& f : gens)
        if (!f.eval(point).is_zero())
            throw std::invalid_argument("nabla: the point does not satisfy the generators");
    int m = static_cast<int>(point.size());
    Vec<K> jet(m * (k + 1), K::zero());
    for (int j = 0; j < m; ++j) {
        Vec<K> mu = a.mu(k, point[j]);
        for (int i = 0; i <= k; ++i) jet[j * (k + 1) + i] = mu[i];
    }
    JetIdeal<K> ideal = jet_ideal(gens, m, k, a);
    for (const auto& g : ideal.gens)
        if (!g.eval(jet).is_zero())
            throw std::logic_error("nabla: the lift does not satisfy the jet ideal");
    return jet;
}

// ---------------------------------------------------------------------------
// Comonad structure on jet rings
// ---------------------------------------------------------------------------

/// The counit and comultiplication substitutions between jet rings, plus
/// the verified comonad laws.
template <field K>
struct ComonadMaps {
    int k = 0, l = 0, vars = 0;
    /// images of the double-jet variables X_j^(a,b) in the (k+l)-jet ring
    std::vector<MPoly<K>> comultiplication;
    /// images of the level-k jet variables under the counit (into the source ring)
    std::vector<MPoly<K>> counit;
    CheckReport report;
};

/// Double-jet variable (j, outer a, inner b) as indexed by iterating
/// jet_ideal: inner ring variables are (j, b), the outer pass appends a.
inline int double_jet_index(int j, int a, int b, int k, int l)
{
    return (j * (l + 1) + b) * (k + 1) + a;
}

template <field K>
ComonadMaps<K> comonad_maps(const MonoidAction<K>& act, int k, int l, int vars)
{
    if (act.kind != ActionKind::trivial && act.kind != ActionKind::hs &&
        act.kind != ActionKind::shift)
        throw std::invalid_argument("comonad_maps: additive or discrete action required");
    if (act.kind == ActionKind::shift && act.tower->kind() != "discrete-nat")
        throw std::invalid_argument("comonad_maps: shift case needs natural-number windows");
    if (k + l > act.tower->max_level())
        throw std::out_of_range("comonad_maps: product components unavailable at (k,l)");

    ComonadMaps<K> out;
    out.k = k;
    out.l = l;
    out.vars = vars;
    bool discrete = act.kind == ActionKind::shift;

    int nv_sum = vars * (k + l + 1);
    out.comultiplication.assign(vars * (k + 1) * (l + 1), MPoly<K>(nv_sum));
    for (int j = 0; j < vars; ++j)
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= l; ++b) {
                K c = discrete ? K::one() : binomial<K>(a + b, a);
                std::vector<int> e(nv_sum, 0);
                e[j * (k + l + 1) + a + b] = 1;
                out.comultiplication[double_jet_index(j, a, b, k, l)] =
                    MPoly<K>::term(nv_sum, std::move(e), c);
            }

    // counit: X_j^(0) -> X_j, higher jet coordinates -> 0
    out.counit.assign(vars * (k + 1), MPoly<K>(vars));
    for (int j = 0; j < vars; ++j)
        out.counit[j * (k + 1)] = MPoly<K>::variable(vars, j);

    // counit law, left: embedding X^(b) -> X^(0,b) then m = transition
    bool ok = true;
    std::string wit;
    for (int j = 0; j < vars && ok; ++j)
        for (int b = 0; b <= l; ++b) {
            const MPoly<K>& img = out.comultiplication[double_jet_index(j, 0, b, k, l)];
            MPoly<K> expect = MPoly<K>::variable(nv_sum, j * (k + l + 1) + b);
            if (img != expect) {
                ok = false;
                wit = "X" + std::to_string(j) + "^(0," + std::to_string(b) + ")";
                break;
            }
        }
    out.report.record("comonad.counit_left", ok, wit);

    ok = true;
    wit.clear();
    for (int j = 0; j < vars && ok; ++j)
        for (int a = 0; a <= k; ++a) {
            const MPoly<K>& img = out.comultiplication[double_jet_index(j, a, 0, k, l)];
            MPoly<K> expect = MPoly<K>::variable(nv_sum, j * (k + l + 1) + a);
            if (img != expect) {
                ok = false;
                wit = "X" + std::to_string(j) + "^(" + std::to_string(a) + ",0)";
                break;
            }
        }
    out.report.record("comonad.counit_right", ok, wit);

    // coassociativity: the two composite substitutions both send X^(a,b,c)
    // to a scalar multiple of X^(a+b+c); the scalars must agree
    ok = true;
    wit.clear();
    for (int a = 0; a <= k + l && ok; ++a)
        for (int b = 0; a + b <= k + l && ok; ++b)
            for (int c = 0; a + b + c <= k + l; ++c) {
                K lhs = discrete ? K::one()
                                 : binomial<K>(a + b, a) * binomial<K>(a + b + c, a + b);
                K rhs = discrete ? K::one()
                                 : binomial<K>(b + c, b) * binomial<K>(a + b + c, a);
                if (!(lhs == rhs)) {
                    ok = false;
                    wit = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
                    break;
                }
            }
    out.report.record("comonad.coassociative", ok, wit);
    return out;
}

/// The iterated jet ideal maps into the single-level ideal under the
/// comultiplication substitution: the image of the (a,b) generator equals
/// C(a+b, a) times the (a+b) generator.
template <field K>
CheckReport check_comonad_on_ideal(const MonoidAction<K>& act, const std::vector<MPoly<K>>& gens,
                                   int m, int k, int l)
{
    CheckReport rep;
    ComonadMaps<K> cm = comonad_maps(act, k, l, m);
    JetIdeal<K> inner = jet_ideal(gens, m, l, act);
    JetIdeal<K> outer = jet_ideal(inner.gens, inner.jet_vars(), k, act);
    JetIdeal<K> flat = jet_ideal(gens, m, k + l, act);

    bool ok = true;
    std::string wit;
    int nv_sum = m * (k + l + 1);
    for (size_t g = 0; g < gens.size() && ok; ++g)
        for (int b = 0; b <= l && ok; ++b)
            for (int a = 0; a <= k; ++a) {
                // outer generator index: inner generator (g, b) at outer power a
                const MPoly<K>& gen = outer.gens[(g * (l + 1) + b) * (k + 1) + a];
                MPoly<K> image = gen.substitute(nv_sum, cm.comultiplication);
                MPoly<K> expect =
                    flat.gens[g * (k + l + 1) + (a + b)].scaled(binomial<K>(a + b, a));
                if (image != expect) {
                    ok = false;
                    wit = "generator " + std::to_string(g) + " at (" + std::to_string(a) +
                          "," + std::to_string(b) + ")";
                    break;
                }
            }
    rep.record("comonad.ideal_compatible", ok, wit);
    return rep;
}

// ---------------------------------------------------------------------------
// Truncated matrix groups
// ---------------------------------------------------------------------------

/// Matrices over K[x]/x^{k+1} as coefficient lists; the E_k-points of GL_m.
template <field K>
struct TruncatedMatrix {
    std::vector<Matrix<K>> coeff;  // coeff[i] is the x^i block

    int level() const { return static_cast<int>(coeff.size()) - 1; }
    int dim() const { return coeff.empty() ? 0 : coeff[0].rows(); }
};

template <field K>
TruncatedMatrix<K> truncated_identity(int level, int m)
{
    TruncatedMatrix<K> r;
    r.coeff.assign(level + 1, Matrix<K>(m, m));
    r.coeff[0] = Matrix<K>::identity(m);
    return r;
}

/// Product in GL_m(K[x]/x^{k+1}); requires invertible constant terms.
template <field K>
TruncatedMatrix<K> jet_point_compose(const TruncatedMatrix<K>& g, const TruncatedMatrix<K>& h)
{
    if (!g.coeff[0].inverse() || !h.coeff[0].inverse())
        throw std::invalid_argument("jet_point_compose: constant term must be invertible");
    TruncatedMatrix<K> r;
    int level = g.level();
    int m = g.dim();
    r.coeff.assign(level + 1, Matrix<K>(m, m));
    for (int i = 0; i <= level; ++i)
        for (int j = 0; i + j <= level; ++j) r.coeff[i + j] = r.coeff[i + j] + g.coeff[i] * h.coeff[j];
    return r;
}

/// Inverse by the truncated geometric series around the constant term.
template <field K>
TruncatedMatrix<K> jet_point_inverse(const TruncatedMatrix<K>& g)
{
    auto c0 = g.coeff[0].inverse();
    if (!c0) throw std::invalid_argument("jet_point_inverse: constant term must be invertible");
    int level = g.level();
    int m = g.dim();
    // write g = c (I + N) with N of positive order; then g^-1 = (sum (-N)^s) c^-1
    TruncatedMatrix<K> n;
    n.coeff.assign(level + 1, Matrix<K>(m, m));
    for (int i = 1; i <= level; ++i) n.coeff[i] = *c0 * g.coeff[i];
    TruncatedMatrix<K> acc = truncated_identity<K>(level, m);
    TruncatedMatrix<K> power = truncated_identity<K>(level, m);
    for (int s = 1; s <= level; ++s) {
        // power = power * (-n)
        TruncatedMatrix<K> next;
        next.coeff.assign(level + 1, Matrix<K>(m, m));
        for (int i = 0; i <= level; ++i)
            for (int j = 1; i + j <= level; ++j)
                next.coeff[i + j] = next.coeff[i + j] - power.coeff[i] * n.coeff[j];
        power = std::move(next);
        for (int i = 0; i <= level; ++i) acc.coeff[i] = acc.coeff[i] + power.coeff[i];
    }
    TruncatedMatrix<K> r;
    r.coeff.assign(level + 1, Matrix<K>(m, m));
    for (int i = 0; i <= level; ++i) r.coeff[i] = acc.coeff[i] * *c0;
    return r;
}

template <field K>
bool truncated_equal(const TruncatedMatrix<K>& a, const TruncatedMatrix<K>& b)
{
    if (a.coeff.size() != b.coeff.size()) return false;
    for (size_t i = 0; i < a.coeff.size(); ++i)
        if (a.coeff[i] != b.coeff[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Operator structures on finitely presented algebras
// ---------------------------------------------------------------------------

/// Checks a candidate operator structure on B = K[u]/(f): the relation
/// ideal must be preserved by the Hasse-Schmidt data (and by the shift data
/// when supplied), d_0 must be the identity, the iterativity square must
/// commute up to the given depth, and a supplied shift must commute with
/// the family. Elements of B are coordinate vectors in the basis
/// 1, u, ..., u^{deg f - 1}.
template <field K>
CheckReport verify_algebra_estructure(const AlgebraPtr<K>& b, const Vec<K>& modulus,
                                      const OperatorField<K>& f,
                                      const std::vector<Vec<K>>& du, int depth,
                                      const std::optional<Vec<K>>& sigma_u = std::nullopt)
{
    CheckReport rep;
    int dim = b->dim();

    // sigma on a general element: apply sigma to coordinates and substitute
    // sigma(u) for u; only meaningful when shift data is supplied
    auto sigma_elem = [&](const Vec<K>& g) {
        Vec<K> acc = zero_vec<K>(dim);
        Vec<K> upow = b->unit();
        for (int r = 0; r < dim; ++r) {
            acc = add_vec(acc, scale_vec(f.sigma(g[r]), upow));
            upow = b->multiply(upow, *sigma_u);
        }
        return acc;
    };

    // d on an arbitrary element, as a truncated series over B
    auto d_series = [&](const Vec<K>& g) {
        std::vector<Vec<K>> out(depth + 1, zero_vec<K>(dim));
        // series for u
        std::vector<Vec<K>> su(depth + 1, zero_vec<K>(dim));
        for (int i = 0; i <= depth && i < static_cast<int>(du.size()); ++i) su[i] = du[i];
        for (int r = 0; r < dim; ++r) {
            // contribution g_r * u^r with mu-twisted coefficient
            std::vector<Vec<K>> term(depth + 1, zero_vec<K>(dim));
            for (int i = 0; i <= depth; ++i)
                term[i] = scale_vec(f.hs_derive(i, g[r]), b->unit());
            for (int rep2 = 0; rep2 < r; ++rep2) {
                std::vector<Vec<K>> next(depth + 1, zero_vec<K>(dim));
                for (int i = 0; i <= depth; ++i)
                    for (int j = 0; i + j <= depth; ++j)
                        next[i + j] = add_vec(next[i + j], b->multiply(term[i], su[j]));
                term = std::move(next);
            }
            for (int i = 0; i <= depth; ++i) out[i] = add_vec(out[i], term[i]);
        }
        return out;
    };

    rep.record("estructure.d0_identity",
               !du.empty() && du[0] == unit_vec<K>(dim, std::min(1, dim - 1)));

    // relation preserved: the twisted evaluation of the modulus at d(u)
    // vanishes identically in B[x]/x^{depth+1}: sum_r mu(c_r) d(u)^r = 0
    {
        std::vector<Vec<K>> acc(depth + 1, zero_vec<K>(dim));
        std::vector<Vec<K>> su(depth + 1, zero_vec<K>(dim));
        for (int i = 0; i <= depth && i < static_cast<int>(du.size()); ++i) su[i] = du[i];
        std::vector<Vec<K>> upow(depth + 1, zero_vec<K>(dim));
        upow[0] = b->unit();
        for (size_t r = 0; r < modulus.size(); ++r) {
            for (int i = 0; i <= depth; ++i) {
                Vec<K> c = scale_vec(f.hs_derive(i, modulus[r]), b->unit());
                for (int j = 0; i + j <= depth; ++j)
                    acc[i + j] = add_vec(acc[i + j], b->multiply(c, upow[j]));
            }
            // upow = upow * su
            std::vector<Vec<K>> next(depth + 1, zero_vec<K>(dim));
            for (int i = 0; i <= depth; ++i)
                for (int j = 0; i + j <= depth; ++j)
                    next[i + j] = add_vec(next[i + j], b->multiply(upow[i], su[j]));
            upow = std::move(next);
        }
        bool ok = true;
        std::string wit;
        for (int i = 0; i <= depth; ++i)
            if (!is_zero_vec(acc[i])) {
                ok = false;
                wit = "x^" + std::to_string(i) + " coefficient nonzero";
                break;
            }
        rep.record("estructure.relation_preserved", ok, wit);
    }

    // iterativity square on the generator
    {
        bool ok = true;
        std::string wit;
        std::vector<Vec<K>> su(depth + 1, zero_vec<K>(dim));
        for (int i = 0; i <= depth && i < static_cast<int>(du.size()); ++i) su[i] = du[i];
        for (int i = 0; i <= depth && ok; ++i)
            for (int j = 0; i + j <= depth; ++j) {
                Vec<K> lhs = scale_vec(binomial<K>(i + j, i), su[i + j]);
                std::vector<Vec<K>> inner = d_series(su[j]);
                Vec<K> rhs = inner[i];
                if (lhs != rhs) {
                    ok = false;
                    wit = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        rep.record("estructure.iterativity_square", ok, wit);
    }

    if (sigma_u) {
        // the shift preserves the relation: sum sigma(c_r) sigma(u)^r = 0
        Vec<K> acc = zero_vec<K>(dim);
        Vec<K> upow = b->unit();
        for (size_t r = 0; r < modulus.size(); ++r) {
            acc = add_vec(acc, scale_vec(f.sigma(modulus[r]), upow));
            upow = b->multiply(upow, *sigma_u);
        }
        rep.record("estructure.sigma_preserves_relation", is_zero_vec(acc));

        // commutation: d_i(sigma(u)) = sigma(d_i(u)) up to the depth
        bool ok = true;
        std::string wit;
        std::vector<Vec<K>> d_of_sigma = d_series(*sigma_u);
        for (int i = 1; i <= depth; ++i) {
            Vec<K> rhs = sigma_elem(i < static_cast<int>(du.size()) ? du[i]
                                                                    : zero_vec<K>(dim));
            if (d_of_sigma[i] != rhs) {
                ok = false;
                wit = "i=" + std::to_string(i);
                break;
            }
        }
        rep.record("estructure.sigma_commutes_with_hs", ok, wit);
    }
    return rep;
}

}  // namespace opfields

#endif
