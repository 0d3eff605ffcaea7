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

#ifndef OPFIELDS_MODULE_HPP
#define OPFIELDS_MODULE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "radical.hpp"

namespace opfields {

/// Module over a finite algebra, given by one action matrix per algebra
/// basis element. The action of a general element is assembled linearly.
template <field K>
struct FModule {
    AlgebraPtr<K> algebra;
    int dim = 0;
    std::vector<Matrix<K>> action;

    Matrix<K> act(const Vec<K>& e) const
    {
        Matrix<K> m(dim, dim);
        for (size_t i = 0; i < action.size(); ++i)
            if (!e[i].is_zero()) m = m + e[i] * action[i];
        return m;
    }

    Matrix<K> act_basis(int i) const { return action[i]; }
};

template <field K>
FModule<K> free_module(const AlgebraPtr<K>& e, int rank)
{
    int d = e->dim();
    FModule<K> m{e, d * rank, {}};
    Matrix<K> id = Matrix<K>::identity(rank);
    for (int i = 0; i < d; ++i)
        m.action.push_back(Matrix<K>::kron(e->basis_mult_matrix(i), id));
    return m;
}

/// K^n with the action through the counit.
template <field K>
FModule<K> trivial_module(const AlgebraPtr<K>& e, int n)
{
    if (!e->has_counit()) throw std::invalid_argument("trivial module needs a counit");
    FModule<K> m{e, n, {}};
    for (int i = 0; i < e->dim(); ++i) {
        K c = e->apply_counit(unit_vec<K>(e->dim(), i));
        Matrix<K> mi(n, n);
        for (int a = 0; a < n; ++a) mi(a, a) = c;
        m.action.push_back(std::move(mi));
    }
    return m;
}

/// rho is a unital algebra map into End(V); commutation of the images is
/// implied but asserted independently.
template <field K>
CheckReport check_module_axioms(const FModule<K>& x)
{
    CheckReport rep;
    const auto& e = *x.algebra;
    int d = e.dim();

    rep.record("module.unit_acts_as_identity", x.act(e.unit()) == Matrix<K>::identity(x.dim));

    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < d; ++j) {
            Matrix<K> lhs = x.action[i] * x.action[j];
            Matrix<K> rhs(x.dim, x.dim);
            const Vec<K>& c = e.product_coords(i, j);
            for (int k = 0; k < d; ++k)
                if (!c[k].is_zero()) rhs = rhs + c[k] * x.action[k];
            if (lhs != rhs) {
                ok = false;
                wit = "(" + e.basis_names()[i] + "," + e.basis_names()[j] + ")";
                break;
            }
        }
    rep.record("module.respects_structure_constants", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < d && ok; ++i)
        for (int j = i + 1; j < d; ++j)
            if (x.action[i] * x.action[j] != x.action[j] * x.action[i]) {
                ok = false;
                wit = "(" + e.basis_names()[i] + "," + e.basis_names()[j] + ")";
                break;
            }
    rep.record("module.action_commutes", ok, wit);
    return rep;
}

template <field K>
FModule<K> dual_module(const FModule<K>& x)
{
    FModule<K> d{x.algebra, x.dim, {}};
    for (const auto& a : x.action) d.action.push_back(a.transpose());
    return d;
}

// ---------------------------------------------------------------------------
// Tensor, cotensor, Hom
// ---------------------------------------------------------------------------

/// Quotient presentation: project/section matrices against the ambient
/// tensor coordinates (a,b) -> a*dim(Y)+b.
template <field K>
struct TensorOver {
    FModule<K> module;
    Matrix<K> project;
    Matrix<K> section;
};

/// X ox_E Y: cokernel of e(x)ox y - x ox e(y) over all e, with the action
/// induced from the left factor (the right factor induces the same map).
template <field K>
TensorOver<K> tensor_over(const FModule<K>& x, const FModule<K>& y)
{
    if (!same_algebra(x.algebra, y.algebra))
        throw std::invalid_argument("tensor_over: algebra mismatch");
    int d = x.algebra->dim();
    int n = x.dim * y.dim;
    Matrix<K> iy = Matrix<K>::identity(y.dim);
    Matrix<K> ix = Matrix<K>::identity(x.dim);

    std::vector<Vec<K>> rel;
    for (int i = 0; i < d; ++i) {
        Matrix<K> diff = Matrix<K>::kron(x.action[i], iy) - Matrix<K>::kron(ix, y.action[i]);
        for (int j = 0; j < n; ++j) {
            Vec<K> col = diff.column(j);
            if (!is_zero_vec(col)) rel.push_back(std::move(col));
        }
    }
    QuotientSpace<K> q(Subspace<K>::span(n, rel));

    FModule<K> m{x.algebra, q.dim(), {}};
    for (int i = 0; i < d; ++i) {
        Matrix<K> left = q.induced_map(Matrix<K>::kron(x.action[i], iy));
        Matrix<K> right = q.induced_map(Matrix<K>::kron(ix, y.action[i]));
        if (left != right)
            throw std::logic_error("tensor_over: left/right induced actions differ");
        m.action.push_back(std::move(left));
    }
    return {std::move(m), q.projection_matrix(), q.section_matrix()};
}

/// Subobject presentation: embed holds basis columns in ambient coordinates.
template <field K>
struct SubModule {
    FModule<K> module;
    Matrix<K> embed;
};

namespace detail {

/// Restricts ambient maps to a joint-invariant subspace given by a canonical
/// Subspace basis; throws if the subspace is not invariant.
template <field K>
Matrix<K> restrict_to_subspace(const Subspace<K>& s, const Matrix<K>& ambient_map)
{
    Matrix<K> r(s.dim(), s.dim());
    for (int j = 0; j < s.dim(); ++j) {
        Vec<K> img = ambient_map * s.basis_vector(j);
        auto c = s.coords(img);
        if (!c) throw std::logic_error("subspace not invariant under action");
        for (int i = 0; i < s.dim(); ++i) r(i, j) = (*c)[i];
    }
    return r;
}

template <field K>
Matrix<K> embed_matrix(const Subspace<K>& s)
{
    Matrix<K> m(s.ambient_dim(), s.dim());
    for (int j = 0; j < s.dim(); ++j) m.set_column(j, s.basis_vector(j));
    return m;
}

template <field K>
Subspace<K> column_span(const Matrix<K>& m)
{
    std::vector<Vec<K>> cols;
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Subspace<K>::span(m.rows(), cols);
}

}  // namespace detail

/// X ox^E Y: the joint kernel of e(x)1 - 1(x)e inside X ox Y, the equaliser
/// of the two actions; E acts through either factor.
template <field K>
SubModule<K> cotensor_over(const FModule<K>& x, const FModule<K>& y)
{
    if (!same_algebra(x.algebra, y.algebra))
        throw std::invalid_argument("cotensor_over: algebra mismatch");
    int d = x.algebra->dim();
    int n = x.dim * y.dim;
    Matrix<K> iy = Matrix<K>::identity(y.dim);
    Matrix<K> ix = Matrix<K>::identity(x.dim);

    Matrix<K> stacked(n * d, n);
    for (int i = 0; i < d; ++i) {
        Matrix<K> diff = Matrix<K>::kron(x.action[i], iy) - Matrix<K>::kron(ix, y.action[i]);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked(i * n + r, c) = diff(r, c);
    }
    Subspace<K> ker = Subspace<K>::span(n, stacked.kernel_basis());

    FModule<K> m{x.algebra, ker.dim(), {}};
    for (int i = 0; i < d; ++i)
        m.action.push_back(
            detail::restrict_to_subspace(ker, Matrix<K>::kron(x.action[i], iy)));
    return {std::move(m), detail::embed_matrix(ker)};
}

/// Hom_E(X, Y): the equaliser of the two actions on linear maps, with E
/// acting by post-composition. Maps are flattened row-major, index r*dim(X)+c.
template <field K>
struct HomOver {
    FModule<K> module;
    Matrix<K> embed;  // (dimY*dimX) x h
    int rows, cols;   // dim Y, dim X

    Matrix<K> map_of(const Vec<K>& coords) const
    {
        Matrix<K> m(rows, cols);
        Vec<K> flat = embed * coords;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m(r, c) = flat[r * cols + c];
        return m;
    }
    Matrix<K> basis_map(int i) const { return map_of(unit_vec<K>(module.dim, i)); }
};

template <field K>
Vec<K> flatten_map(const Matrix<K>& m)
{
    Vec<K> v(m.rows() * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
    return v;
}

template <field K>
HomOver<K> hom_over(const FModule<K>& x, const FModule<K>& y)
{
    if (!same_algebra(x.algebra, y.algebra))
        throw std::invalid_argument("hom_over: algebra mismatch");
    int d = x.algebra->dim();
    int n = y.dim * x.dim;
    Matrix<K> iy = Matrix<K>::identity(y.dim);
    Matrix<K> ix = Matrix<K>::identity(x.dim);

    // M commutes with the action: rho_Y(b) M - M rho_X(b) = 0;
    // vec(AM) = (A ox I) vec M, vec(MB) = (I ox B^T) vec M.
    Matrix<K> stacked(n * d, n);
    for (int i = 0; i < d; ++i) {
        Matrix<K> diff = Matrix<K>::kron(y.action[i], ix) -
                         Matrix<K>::kron(iy, x.action[i].transpose());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked(i * n + r, c) = diff(r, c);
    }
    Subspace<K> ker = Subspace<K>::span(n, stacked.kernel_basis());

    FModule<K> m{x.algebra, ker.dim(), {}};
    for (int i = 0; i < d; ++i)
        m.action.push_back(
            detail::restrict_to_subspace(ker, Matrix<K>::kron(y.action[i], ix)));
    return {std::move(m), detail::embed_matrix(ker), y.dim, x.dim};
}

/// The algebra as a module over itself.
template <field K>
FModule<K> regular_module(const AlgebraPtr<K>& e)
{
    return free_module(e, 1);
}

// ---------------------------------------------------------------------------
// Submodules and quotients
// ---------------------------------------------------------------------------

/// Smallest action-stable subspace containing the generators.
template <field K>
SubModule<K> submodule_closure(const FModule<K>& x, const std::vector<Vec<K>>& gens)
{
    Subspace<K> s = Subspace<K>::span(x.dim, gens);
    for (;;) {
        std::vector<Vec<K>> next;
        for (int i = 0; i < s.dim(); ++i) next.push_back(s.basis_vector(i));
        size_t before = next.size();
        for (int i = 0; i < s.dim(); ++i)
            for (const auto& a : x.action) next.push_back(a * s.basis_vector(i));
        Subspace<K> grown = Subspace<K>::span(x.dim, next);
        if (grown.dim() == static_cast<int>(before)) {
            s = grown;
            break;
        }
        s = grown;
    }
    FModule<K> m{x.algebra, s.dim(), {}};
    for (const auto& a : x.action) m.action.push_back(detail::restrict_to_subspace(s, a));
    return {std::move(m), detail::embed_matrix(s)};
}

template <field K>
struct QuotientModule {
    FModule<K> module;
    Matrix<K> project;
    Matrix<K> section;
};

template <field K>
QuotientModule<K> quotient_module(const FModule<K>& x, const std::vector<Vec<K>>& sub_gens)
{
    SubModule<K> sub = submodule_closure(x, sub_gens);
    std::vector<Vec<K>> rel;
    for (int j = 0; j < sub.embed.cols(); ++j) rel.push_back(sub.embed.column(j));
    QuotientSpace<K> q(Subspace<K>::span(x.dim, rel));
    FModule<K> m{x.algebra, q.dim(), {}};
    for (const auto& a : x.action) m.action.push_back(q.induced_map(a));
    return {std::move(m), q.projection_matrix(), q.section_matrix()};
}

// ---------------------------------------------------------------------------
// Flatness and injectivity
// ---------------------------------------------------------------------------

template <field K>
SubModule<K> radical_module(const AlgebraPtr<K>& e)
{
    std::vector<Vec<K>> j = radical(e);
    FModule<K> reg = regular_module(e);
    return submodule_closure(reg, j);
}

template <field K>
struct FlatnessReport {
    bool flat = false;
    bool injective = false;
    /// Nonzero kernel element of J ox_E X -> X in ambient J ox X coordinates,
    /// present when not flat.
    std::optional<Vec<K>> witness;
    std::string witness_text;
};

/// Flat iff J ox_E X -> X is injective (the Tor_1(E/J, X) criterion over an
/// Artinian algebra); injective iff maps J -> X extend to E -> X, checked
/// independently of the dual route.
template <field K>
FlatnessReport<K> flatness_report(const FModule<K>& x)
{
    FlatnessReport<K> out;
    const AlgebraPtr<K>& e = x.algebra;
    SubModule<K> j = radical_module(e);

    // natural map J ox_E X -> X on ambient coordinates
    TensorOver<K> jt = tensor_over(j.module, x);
    Matrix<K> natural(x.dim, j.module.dim * x.dim);
    for (int a = 0; a < j.module.dim; ++a) {
        Vec<K> ja = j.embed.column(a);  // coordinates in E
        Matrix<K> mult = x.act(ja);
        for (int b = 0; b < x.dim; ++b) {
            Vec<K> img = mult * unit_vec<K>(x.dim, b);
            for (int r = 0; r < x.dim; ++r) natural(r, a * x.dim + b) = img[r];
        }
    }
    Matrix<K> on_quotient = natural * jt.section;
    auto ker = on_quotient.kernel_basis();
    out.flat = ker.empty();
    if (!out.flat) {
        out.witness = jt.section * ker[0];
        out.witness_text = "kernel element of J(x)X with coordinates";
        for (const auto& c : *out.witness) out.witness_text += " " + scalar_str(c);
    }

    // injectivity: restriction Hom_E(E,X) -> Hom_E(J,X) is onto. Hom_E(E,X)
    // is X via phi -> phi(1); the restriction of phi_x to J is j -> jx.
    HomOver<K> homjx = hom_over(j.module, x);
    Subspace<K> homspace = detail::column_span(homjx.embed);
    Matrix<K> restr(homjx.module.dim, x.dim);
    for (int b = 0; b < x.dim; ++b) {
        Matrix<K> m(x.dim, j.module.dim);
        for (int a = 0; a < j.module.dim; ++a) {
            Vec<K> img = x.act(j.embed.column(a)) * unit_vec<K>(x.dim, b);
            m.set_column(a, img);
        }
        auto coords = homspace.coords(flatten_map(m));
        if (!coords) throw std::logic_error("restriction does not land in Hom_E(J,X)");
        for (int r = 0; r < homjx.module.dim; ++r) restr(r, b) = (*coords)[r];
    }
    out.injective = restr.rank() == homjx.module.dim;
    return out;
}

// ---------------------------------------------------------------------------
// Canonical isomorphisms, materialised as matrices and verified
// ---------------------------------------------------------------------------

template <field K>
struct VerifiedIso {
    Matrix<K> matrix;
    CheckReport report;
};

namespace detail {

/// Records bijectivity and E-linearity of a candidate isomorphism matrix
/// between two modules over the same algebra.
template <field K>
void check_module_iso(CheckReport& rep, const std::string& name, const Matrix<K>& iso,
                      const FModule<K>& from, const FModule<K>& to)
{
    rep.record(name + ".bijective",
               iso.rows() == to.dim && iso.cols() == from.dim && iso.rank() == from.dim &&
                   from.dim == to.dim);
    bool lin = true;
    std::string wit;
    for (size_t i = 0; i < from.action.size(); ++i)
        if (iso * from.action[i] != to.action[i] * iso) {
            lin = false;
            wit = "basis element " + std::to_string(i);
            break;
        }
    rep.record(name + ".e_linear", lin, wit);
}

}  // namespace detail

/// Co(X ox_E Y) -> Hom_E(X, Co Y): a functional on the quotient pulls back
/// to a functional on X ox Y balanced over E, which reshapes to a map from
/// X into the dual of Y.
template <field K>
VerifiedIso<K> iso_dual_tensor_to_hom(const FModule<K>& x, const FModule<K>& y,
                                      const TensorOver<K>& txy, const HomOver<K>& hom_x_coy)
{
    CheckReport rep;
    int q = txy.module.dim;
    Matrix<K> iso(hom_x_coy.module.dim, q);
    Subspace<K> homspace = detail::column_span(hom_x_coy.embed);
    bool lands = true;
    for (int k = 0; k < q; ++k) {
        // functional on X ox Y: row k of project
        Matrix<K> m(y.dim, x.dim);
        for (int a = 0; a < x.dim; ++a)
            for (int b = 0; b < y.dim; ++b) m(b, a) = txy.project(k, a * y.dim + b);
        auto coords = homspace.coords(flatten_map(m));
        if (!coords) {
            lands = false;
            break;
        }
        for (int r = 0; r < hom_x_coy.module.dim; ++r) iso(r, k) = (*coords)[r];
    }
    rep.record("dual_tensor_to_hom.lands_in_hom", lands);
    if (lands) {
        FModule<K> dual_q = dual_module(txy.module);
        detail::check_module_iso(rep, "dual_tensor_to_hom", iso, dual_q, hom_x_coy.module);
    }
    return {std::move(iso), std::move(rep)};
}

/// The chain Co(Co X ox_E Co Y) = X ox^E Y = Hom_E(Co X, Y), each leg
/// constructed explicitly.
template <field K>
struct DualTripleIso {
    Matrix<K> co_tensor_duals_to_cotensor;  // Co(CoX ox_E CoY) -> X ox^E Y
    Matrix<K> cotensor_to_hom;              // X ox^E Y -> Hom_E(Co X, Y)
    CheckReport report;
};

template <field K>
DualTripleIso<K> eq_dual_triple(const FModule<K>& x, const FModule<K>& y)
{
    DualTripleIso<K> out;
    FModule<K> cox = dual_module(x), coy = dual_module(y);
    TensorOver<K> tdd = tensor_over(cox, coy);
    SubModule<K> cot = cotensor_over(x, y);
    HomOver<K> hom = hom_over(cox, y);

    out.report.record("eqdual.dims_agree",
                      tdd.module.dim == cot.module.dim && cot.module.dim == hom.module.dim);

    // leg 1: dual basis of the quotient -> functional on CoX ox CoY = X ox Y
    Subspace<K> cotspace = detail::column_span(cot.embed);
    Matrix<K> leg1(cot.module.dim, tdd.module.dim);
    bool lands = true;
    for (int k = 0; k < tdd.module.dim && lands; ++k) {
        Vec<K> functional = tdd.project.row(k);  // lives in X ox Y coordinates
        auto coords = cotspace.coords(functional);
        if (!coords) {
            lands = false;
            break;
        }
        for (int r = 0; r < cot.module.dim; ++r) leg1(r, k) = (*coords)[r];
    }
    out.report.record("eqdual.leg1_lands_in_cotensor", lands);
    if (lands)
        detail::check_module_iso(out.report, "eqdual.leg1", leg1, dual_module(tdd.module),
                                 cot.module);
    out.co_tensor_duals_to_cotensor = std::move(leg1);

    // leg 2: v in X ox Y -> the map CoX -> Y, delta_a -> sum_b v_ab y_b
    Subspace<K> homspace = detail::column_span(hom.embed);
    Matrix<K> leg2(hom.module.dim, cot.module.dim);
    lands = true;
    for (int k = 0; k < cot.module.dim && lands; ++k) {
        Vec<K> v = cot.embed.column(k);
        Matrix<K> m(y.dim, x.dim);
        for (int a = 0; a < x.dim; ++a)
            for (int b = 0; b < y.dim; ++b) m(b, a) = v[a * y.dim + b];
        auto coords = homspace.coords(flatten_map(m));
        if (!coords) {
            lands = false;
            break;
        }
        for (int r = 0; r < hom.module.dim; ++r) leg2(r, k) = (*coords)[r];
    }
    out.report.record("eqdual.leg2_lands_in_hom", lands);
    if (lands)
        detail::check_module_iso(out.report, "eqdual.leg2", leg2, cot.module, hom.module);
    out.cotensor_to_hom = std::move(leg2);
    return out;
}

/// Commutativity constraint: the swap of factors descends to an isomorphism
/// X ox_E Y -> Y ox_E X.
template <field K>
VerifiedIso<K> iso_tensor_commute(const FModule<K>& x, const FModule<K>& y)
{
    CheckReport rep;
    TensorOver<K> txy = tensor_over(x, y);
    TensorOver<K> tyx = tensor_over(y, x);
    Matrix<K> sw(y.dim * x.dim, x.dim * y.dim);
    for (int a = 0; a < x.dim; ++a)
        for (int b = 0; b < y.dim; ++b) sw(b * x.dim + a, a * y.dim + b) = K::one();
    Matrix<K> iso = tyx.project * sw * txy.section;
    // well defined: the swapped projection factors through the quotient
    rep.record("tensor_commute.well_defined",
               tyx.project * sw == iso * txy.project);
    detail::check_module_iso(rep, "tensor_commute", iso, txy.module, tyx.module);
    return {std::move(iso), std::move(rep)};
}

/// Associativity constraint: (X ox_E Y) ox_E Z -> X ox_E (Y ox_E Z) through
/// the two iterated quotients of the same ambient space.
template <field K>
VerifiedIso<K> iso_tensor_associate(const FModule<K>& x, const FModule<K>& y,
                                    const FModule<K>& z)
{
    CheckReport rep;
    TensorOver<K> txy = tensor_over(x, y);
    TensorOver<K> tyz = tensor_over(y, z);
    TensorOver<K> left = tensor_over(txy.module, z);
    TensorOver<K> right = tensor_over(x, tyz.module);

    Matrix<K> iz = Matrix<K>::identity(z.dim);
    Matrix<K> ix = Matrix<K>::identity(x.dim);
    // total projections from X ox Y ox Z (one associative index space)
    Matrix<K> t1 = left.project * Matrix<K>::kron(txy.project, iz);
    Matrix<K> t2 = right.project * Matrix<K>::kron(ix, tyz.project);
    Matrix<K> iso = t2 * Matrix<K>::kron(txy.section, iz) * left.section;
    rep.record("tensor_associate.well_defined", t2 == iso * t1);
    detail::check_module_iso(rep, "tensor_associate", iso, left.module, right.module);
    return {std::move(iso), std::move(rep)};
}

/// The same constraints for the cotensor: the swap carries one equaliser
/// onto the other, and both iterated equalisers agree inside X ox Y ox Z.
template <field K>
VerifiedIso<K> iso_cotensor_commute(const FModule<K>& x, const FModule<K>& y)
{
    CheckReport rep;
    SubModule<K> cxy = cotensor_over(x, y);
    SubModule<K> cyx = cotensor_over(y, x);
    Matrix<K> sw(y.dim * x.dim, x.dim * y.dim);
    for (int a = 0; a < x.dim; ++a)
        for (int b = 0; b < y.dim; ++b) sw(b * x.dim + a, a * y.dim + b) = K::one();
    Subspace<K> target = detail::column_span(cyx.embed);
    bool lands = true;
    Matrix<K> iso(cyx.module.dim, cxy.module.dim);
    for (int j = 0; j < cxy.module.dim && lands; ++j) {
        auto c = target.coords(sw * cxy.embed.column(j));
        if (!c) {
            lands = false;
            break;
        }
        for (int i = 0; i < cyx.module.dim; ++i) iso(i, j) = (*c)[i];
    }
    rep.record("cotensor_commute.lands", lands);
    if (lands) detail::check_module_iso(rep, "cotensor_commute", iso, cxy.module, cyx.module);
    return {std::move(iso), std::move(rep)};
}

template <field K>
VerifiedIso<K> iso_cotensor_associate(const FModule<K>& x, const FModule<K>& y,
                                      const FModule<K>& z)
{
    CheckReport rep;
    SubModule<K> cxy = cotensor_over(x, y);
    SubModule<K> cyz = cotensor_over(y, z);
    SubModule<K> left = cotensor_over(cxy.module, z);
    SubModule<K> right = cotensor_over(x, cyz.module);
    Matrix<K> e1 = Matrix<K>::kron(cxy.embed, Matrix<K>::identity(z.dim)) * left.embed;
    Matrix<K> e2 = Matrix<K>::kron(Matrix<K>::identity(x.dim), cyz.embed) * right.embed;
    Subspace<K> s1 = detail::column_span(e1);
    Subspace<K> s2 = detail::column_span(e2);
    rep.record("cotensor_associate.same_subspace", s1 == s2);
    bool lands = true;
    Matrix<K> iso(right.module.dim, left.module.dim);
    for (int j = 0; j < left.module.dim && lands; ++j) {
        auto sol = e2.solve(e1.column(j));
        if (!sol) {
            lands = false;
            break;
        }
        for (int i = 0; i < right.module.dim; ++i) iso(i, j) = (*sol)[i];
    }
    rep.record("cotensor_associate.lands", lands);
    if (lands)
        detail::check_module_iso(rep, "cotensor_associate", iso, left.module, right.module);
    return {std::move(iso), std::move(rep)};
}

// ---------------------------------------------------------------------------
// Base change
// ---------------------------------------------------------------------------

/// F viewed as an E-module along f.
template <field K>
FModule<K> restrict_algebra_along(const AlgebraMap<K>& f)
{
    FModule<K> m{f.source, f.target->dim(), {}};
    for (int i = 0; i < f.source->dim(); ++i)
        m.action.push_back(f.target->mult_matrix(f.apply(unit_vec<K>(f.source->dim(), i))));
    return m;
}

/// f*(X) = F ox_E X with the F-action on the left factor.
template <field K>
TensorOver<K> pullback_star(const AlgebraMap<K>& f, const FModule<K>& x)
{
    if (!same_algebra(f.source, x.algebra))
        throw std::invalid_argument("pullback_star: X must live over the source algebra");
    FModule<K> f_as_e = restrict_algebra_along(f);
    int n = f.target->dim() * x.dim;
    Matrix<K> ix = Matrix<K>::identity(x.dim);
    Matrix<K> iF = Matrix<K>::identity(f.target->dim());

    std::vector<Vec<K>> rel;
    for (int i = 0; i < f.source->dim(); ++i) {
        Matrix<K> diff = Matrix<K>::kron(f_as_e.action[i], ix) - Matrix<K>::kron(iF, x.action[i]);
        for (int j = 0; j < n; ++j) {
            Vec<K> col = diff.column(j);
            if (!is_zero_vec(col)) rel.push_back(std::move(col));
        }
    }
    QuotientSpace<K> q(Subspace<K>::span(n, rel));
    FModule<K> m{f.target, q.dim(), {}};
    for (int i = 0; i < f.target->dim(); ++i)
        m.action.push_back(
            q.induced_map(Matrix<K>::kron(f.target->basis_mult_matrix(i), ix)));
    return {std::move(m), q.projection_matrix(), q.section_matrix()};
}

/// f_*(X): restriction of scalars along f.
template <field K>
FModule<K> pushforward(const AlgebraMap<K>& f, const FModule<K>& x)
{
    if (!same_algebra(f.target, x.algebra))
        throw std::invalid_argument("pushforward: X must live over the target algebra");
    FModule<K> m{f.source, x.dim, {}};
    for (int i = 0; i < f.source->dim(); ++i)
        m.action.push_back(x.act(f.apply(unit_vec<K>(f.source->dim(), i))));
    return m;
}

/// f^!(X) = Hom_E(F, X) with F acting by precomposition with multiplication.
template <field K>
struct ShriekResult {
    FModule<K> module;  // over F
    HomOver<K> hom;     // the underlying Hom_E(F, X) over E
};

template <field K>
ShriekResult<K> pullback_shriek(const AlgebraMap<K>& f, const FModule<K>& x)
{
    if (!same_algebra(f.source, x.algebra))
        throw std::invalid_argument("pullback_shriek: X must live over the source algebra");
    FModule<K> f_as_e = restrict_algebra_along(f);
    HomOver<K> hom = hom_over(f_as_e, x);

    Subspace<K> homspace = detail::column_span(hom.embed);
    FModule<K> m{f.target, hom.module.dim, {}};
    Matrix<K> ix = Matrix<K>::identity(x.dim);
    for (int i = 0; i < f.target->dim(); ++i) {
        // (u phi)(v) = phi(uv): precompose with multiplication by b_i
        Matrix<K> pre = Matrix<K>::kron(ix, f.target->basis_mult_matrix(i).transpose());
        m.action.push_back(detail::restrict_to_subspace(homspace, pre));
    }
    return {std::move(m), std::move(hom)};
}

/// f_!(X) = f_*(omega ox_F X) with omega = Hom_E(F, E), for flat X over F.
template <field K>
FModule<K> pushforward_lower_shriek(const AlgebraMap<K>& f, const FModule<K>& x)
{
    if (!same_algebra(f.target, x.algebra))
        throw std::invalid_argument("lower_shriek: X must live over the target algebra");
    if (!flatness_report(x).flat)
        throw std::invalid_argument("lower_shriek: X must be flat");
    ShriekResult<K> omega = pullback_shriek(f, regular_module(f.source));
    TensorOver<K> t = tensor_over(omega.module, x);
    return pushforward(f, t.module);
}

/// f^!(Co X) = Co(f*(X)) as F-modules: explicit matrix from the pairing
/// <phi, u ox x> = phi(u)(x), verified to be a bijective F-linear map.
template <field K>
VerifiedIso<K> iso_shriek_dual(const AlgebraMap<K>& f, const FModule<K>& x)
{
    ShriekResult<K> sh = pullback_shriek(f, dual_module(x));
    TensorOver<K> st = pullback_star(f, x);
    CheckReport rep;
    rep.record("shriek_dual.dims", sh.module.dim == st.module.dim);

    // phi in Hom_E(F, CoX) pairs with u ox x via phi(u)(x)
    int q = st.module.dim;
    Matrix<K> iso(q, sh.module.dim);
    for (int j = 0; j < sh.module.dim; ++j) {
        Matrix<K> phi = sh.hom.basis_map(j);  // (x.dim) x (F.dim): phi(u) in CoX coords
        // functional on F ox X
        Vec<K> functional(f.target->dim() * x.dim);
        for (int u = 0; u < f.target->dim(); ++u)
            for (int b = 0; b < x.dim; ++b) functional[u * x.dim + b] = phi(b, u);
        // restrict along the section to get a functional on f*(X)
        Vec<K> qfun(q);
        for (int c = 0; c < q; ++c) {
            Vec<K> repv = st.section.column(c);
            K acc = K::zero();
            for (size_t idx = 0; idx < repv.size(); ++idx)
                if (!repv[idx].is_zero()) acc = acc + repv[idx] * functional[idx];
            qfun[c] = acc;
        }
        iso.set_column(j, qfun);
    }
    detail::check_module_iso(rep, "shriek_dual", iso, sh.module, dual_module(st.module));
    return {std::move(iso), std::move(rep)};
}

// ---------------------------------------------------------------------------
// Rigidity: X* = Hom_E(X, E) for flat X
// ---------------------------------------------------------------------------

/// Builds X* and the canonical map X* ox_E Y -> Hom_E(X, Y), verifying it is
/// an isomorphism (the hypothesis needs X flat).
template <field K>
struct StarDual {
    HomOver<K> star;  // Hom_E(X, E)
    bool star_flat = false;
};

template <field K>
StarDual<K> star_dual(const FModule<K>& x)
{
    if (!flatness_report(x).flat) throw std::invalid_argument("star_dual: X must be flat");
    StarDual<K> out{hom_over(x, regular_module(x.algebra)), false};
    out.star_flat = flatness_report(out.star.module).flat;
    return out;
}

template <field K>
VerifiedIso<K> iso_star_tensor_to_hom(const FModule<K>& x, const StarDual<K>& xs,
                                      const FModule<K>& y)
{
    CheckReport rep;
    TensorOver<K> t = tensor_over(xs.star.module, y);
    HomOver<K> hom = hom_over(x, y);
    rep.record("star_tensor.dims", t.module.dim == hom.module.dim);

    Subspace<K> homspace = detail::column_span(hom.embed);
    Matrix<K> iso(hom.module.dim, t.module.dim);
    bool lands = true;
    for (int k = 0; k < t.module.dim && lands; ++k) {
        Vec<K> rep_k = t.section.column(k);  // ambient X* ox Y
        Matrix<K> m(y.dim, x.dim);
        for (int a = 0; a < xs.star.module.dim; ++a)
            for (int b = 0; b < y.dim; ++b) {
                K c = rep_k[a * y.dim + b];
                if (c.is_zero()) continue;
                // phi_a ox y_b -> (x -> rho_Y(phi_a(x)) y_b)
                Matrix<K> phi = xs.star.basis_map(a);  // E.dim x X.dim
                for (int col = 0; col < x.dim; ++col) {
                    Vec<K> exy = y.act(phi.column(col)) * unit_vec<K>(y.dim, b);
                    for (int r = 0; r < y.dim; ++r) m(r, col) = m(r, col) + c * exy[r];
                }
            }
        auto coords = homspace.coords(flatten_map(m));
        if (!coords) {
            lands = false;
            break;
        }
        for (int r = 0; r < hom.module.dim; ++r) iso(r, k) = (*coords)[r];
    }
    rep.record("star_tensor.lands_in_hom", lands);
    if (lands) detail::check_module_iso(rep, "star_tensor", iso, t.module, hom.module);
    return {std::move(iso), std::move(rep)};
}

// ---------------------------------------------------------------------------
// Exact-sequence view over the dual numbers
// ---------------------------------------------------------------------------

/// Flat modules over K[eps] are exactly the self-extensions
/// 0 -> A -> Y -> A -> 0 with eps = i o pi.
template <field K>
struct SequenceView {
    int a_dim = 0;
    Matrix<K> include;  // Y.dim x a_dim
    Matrix<K> project;  // a_dim x Y.dim
    CheckReport report;
};

template <field K>
SequenceView<K> sequence_view(const FModule<K>& x)
{
    bool dual_numbers = x.algebra->dim() == 2 &&
                        is_zero_vec(x.algebra->product_coords(1, 1)) &&
                        x.algebra->unit() == unit_vec<K>(2, 0);
    if (!dual_numbers)
        throw std::invalid_argument("sequence_view: module must live over the dual numbers");
    SequenceView<K> out;
    const Matrix<K>& eps = x.action[1];
    Subspace<K> img = detail::column_span(eps);
    out.a_dim = img.dim();
    out.include = detail::embed_matrix(img);
    // pi: coordinates of eps(v) in the image basis
    out.project = Matrix<K>(out.a_dim, x.dim);
    for (int j = 0; j < x.dim; ++j) {
        auto c = img.coords(eps.column(j));
        if (!c) throw std::logic_error("sequence_view: image coordinates failed");
        for (int i = 0; i < out.a_dim; ++i) out.project(i, j) = (*c)[i];
    }
    out.report.record("sequence.eps_factors", out.include * out.project == eps);
    // exactness: ker(pi) = im(i), i.e. ker(eps) = im(eps)
    Subspace<K> ker = Subspace<K>::span(x.dim, eps.kernel_basis());
    out.report.record("sequence.exact", ker == img,
                      ker == img ? "" : "kernel and image of eps differ");
    out.report.record("sequence.pi_onto", out.project.rank() == out.a_dim);
    return out;
}

/// Inverse constructor: a module over K[eps] from an exact sequence datum.
template <field K>
FModule<K> module_from_sequence(const AlgebraPtr<K>& dual_numbers, int ydim,
                                const Matrix<K>& include, const Matrix<K>& project)
{
    FModule<K> m{dual_numbers, ydim, {}};
    m.action.push_back(Matrix<K>::identity(ydim));
    m.action.push_back(include * project);
    return m;
}

}  // namespace opfields

#endif
