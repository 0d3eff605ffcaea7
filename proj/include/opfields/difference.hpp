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

#ifndef OPFIELDS_DIFFERENCE_HPP
#define OPFIELDS_DIFFERENCE_HPP

#include "matrix.hpp"
#include "operator_field.hpp"

namespace opfields {

/// Difference module over an operator field with invertible sigma: a matrix
/// presentation of the semilinear bijection v -> A sigma(v).
template <field K>
struct DifferenceModule {
    OperatorField<K> field;
    int dim = 0;
    Matrix<K> matrix;

    Vec<K> apply(const Vec<K>& v) const
    {
        Vec<K> sv(v.size());
        for (size_t i = 0; i < v.size(); ++i) sv[i] = field.sigma(v[i]);
        return matrix * sv;
    }
};

template <field K>
DifferenceModule<K> make_difference_module(const OperatorField<K>& f, Matrix<K> a)
{
    if (!a.inverse()) throw std::invalid_argument("difference module matrix must be invertible");
    return {f, a.rows(), std::move(a)};
}

template <field K>
DifferenceModule<K> unit_difference_module(const OperatorField<K>& f)
{
    return {f, 1, Matrix<K>::identity(1)};
}

template <field K>
Matrix<K> sigma_entrywise(const OperatorField<K>& f, const Matrix<K>& m, int power = 1)
{
    return m.map([&](const K& c) { return f.sigma_pow(c, power); });
}

/// M ox N with matrix A ox B; indices (a,b) -> a*dim(N)+b.
template <field K>
DifferenceModule<K> tensor_dm(const DifferenceModule<K>& m, const DifferenceModule<K>& n)
{
    return {m.field, m.dim * n.dim, Matrix<K>::kron(m.matrix, n.matrix)};
}

/// Contragredient dual: Sigma(phi) = sigma o phi o Sigma^{-1}, so that the
/// canonical pairing satisfies <Sigma phi, Sigma m> = sigma<phi, m> and
/// evaluation is a morphism. The presenting matrix is the inverse transpose;
/// the inverse operator phi -> sigma^{-1} o phi o Sigma is the usual
/// displayed form (sigma must be invertible).
template <field K>
DifferenceModule<K> dual_dm(const DifferenceModule<K>& m)
{
    auto inv = m.matrix.transpose().inverse();
    if (!inv) throw std::invalid_argument("dual_dm: singular matrix");
    return {m.field, m.dim, *inv};
}

template <field K>
DifferenceModule<K> hom_dm(const DifferenceModule<K>& m, const DifferenceModule<K>& n)
{
    return tensor_dm(dual_dm(m), n);
}

/// T is a morphism of difference modules when T A = B sigma(T).
template <field K>
bool is_difference_morphism(const DifferenceModule<K>& m, const DifferenceModule<K>& n,
                            const Matrix<K>& t)
{
    return t * m.matrix == n.matrix * sigma_entrywise(m.field, t);
}

/// Evaluation Co(M) ox M -> 1 and coevaluation 1 -> M ox Co(M); with the
/// dual above these realize rigidity.
template <field K>
Matrix<K> evaluation_dm(const DifferenceModule<K>& m)
{
    Matrix<K> ev(1, m.dim * m.dim);
    for (int a = 0; a < m.dim; ++a) ev(0, a * m.dim + a) = K::one();
    return ev;
}

template <field K>
Matrix<K> coevaluation_dm(const DifferenceModule<K>& m)
{
    Matrix<K> coev(m.dim * m.dim, 1);
    for (int a = 0; a < m.dim; ++a) coev(a * m.dim + a, 0) = K::one();
    return coev;
}

/// Triangle identities (ev ox 1)(1 ox coev) = id and its dual, as exact
/// matrix equations.
template <field K>
CheckReport check_rigidity(const DifferenceModule<K>& m)
{
    CheckReport rep;
    DifferenceModule<K> co = dual_dm(m);
    Matrix<K> ev = evaluation_dm(m);    // CoM ox M -> 1
    Matrix<K> coev = coevaluation_dm(m);  // 1 -> M ox CoM
    Matrix<K> id = Matrix<K>::identity(m.dim);

    rep.record("rigidity.ev_is_morphism",
               is_difference_morphism(tensor_dm(co, m), unit_difference_module(m.field), ev));
    rep.record("rigidity.coev_is_morphism",
               is_difference_morphism(unit_difference_module(m.field), tensor_dm(m, co), coev));

    // M -> M ox CoM ox M -> M
    Matrix<K> first = Matrix<K>::kron(coev, id);           // (M CoM M) x M
    Matrix<K> second = Matrix<K>::kron(id, ev);            // M x (M CoM M)
    rep.record("rigidity.triangle_m", second * first == id);

    // CoM -> CoM ox M ox CoM -> CoM
    Matrix<K> first2 = Matrix<K>::kron(Matrix<K>::identity(co.dim), coev);
    Matrix<K> second2 = Matrix<K>::kron(ev, Matrix<K>::identity(co.dim));
    rep.record("rigidity.triangle_co", second2 * first2 == Matrix<K>::identity(co.dim));
    return rep;
}

/// Block extension [[A, C], [0, B]] giving the exact sequence M -> X -> N.
template <field K>
DifferenceModule<K> extension_dm(const DifferenceModule<K>& m, const DifferenceModule<K>& n,
                                 const Matrix<K>& c)
{
    Matrix<K> a(m.dim + n.dim, m.dim + n.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) a(i, j) = m.matrix(i, j);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < n.dim; ++j) a(i, m.dim + j) = c(i, j);
    for (int i = 0; i < n.dim; ++i)
        for (int j = 0; j < n.dim; ++j) a(m.dim + i, m.dim + j) = n.matrix(i, j);
    return {m.field, m.dim + n.dim, std::move(a)};
}

}  // namespace opfields

#endif
