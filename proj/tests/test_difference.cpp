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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <opfields/etensor.hpp>
#include <opfields/jet.hpp>

using namespace opfields;
using QT = FracPoly<Rat>;
using F2T = FracPoly<Fp<2>>;

namespace {

OperatorField<QT> galois_field_q() { return {SigmaKind::shift, HsKind::divided, 8}; }
OperatorField<F2T> galois_field_2() { return {SigmaKind::shift, HsKind::divided, 8}; }

DifferenceModule<QT> gamma_module()
{
    Matrix<QT> a(1, 1);
    a(0, 0) = QT::t();
    return make_difference_module(galois_field_q(), a);
}

}  // namespace

TEST_CASE("difference module constructors and the unit law")
{
    auto F = galois_field_q();
    DifferenceModule<QT> m = gamma_module();
    DifferenceModule<QT> unit = unit_difference_module(F);
    DifferenceModule<QT> mu = tensor_dm(m, unit);
    CHECK(mu.dim == m.dim);
    CHECK(mu.matrix == m.matrix);

    Matrix<QT> singular(1, 1);
    CHECK_THROWS(make_difference_module(F, singular));
}

TEST_CASE("dual of (t): inverse transpose, with the inverse operator displayed")
{
    // Sigma_co(phi) = sigma o phi o Sigma^{-1}; the matrix is (A^T)^{-1} = (1/t).
    // The inverse operator phi -> sigma^{-1}(phi(Sigma m)) is the displayed form.
    DifferenceModule<QT> m = gamma_module();
    DifferenceModule<QT> co = dual_dm(m);
    CHECK(co.matrix(0, 0) == QT::one() / QT::t());

    // pairing invariance <Sigma phi, Sigma m> = sigma<phi, m> on basis vectors
    auto F = m.field;
    QT pairing = co.matrix(0, 0) * F.sigma(QT::one()) * m.matrix(0, 0) * F.sigma(QT::one());
    CHECK(pairing == F.sigma(QT::one()));
}

TEST_CASE("double dual is the identity on presentations")
{
    auto F = galois_field_q();
    Matrix<QT> a(2, 2);
    a(0, 0) = QT::t();
    a(0, 1) = QT::one();
    a(1, 1) = QT::one();
    DifferenceModule<QT> m = make_difference_module(F, a);
    DifferenceModule<QT> coco = dual_dm(dual_dm(m));
    CHECK(coco.matrix == m.matrix);
}

TEST_CASE("rigidity: evaluation and coevaluation satisfy the triangles")
{
    CHECK(check_rigidity(gamma_module()).all_pass());

    auto F = galois_field_q();
    Matrix<QT> a(2, 2);
    a(0, 0) = QT::t();
    a(0, 1) = QT::one();
    a(1, 1) = QT::one();
    CHECK(check_rigidity(make_difference_module(F, a)).all_pass());
}

TEST_CASE("tau_k of the Gamma module: the Leibniz-expanded operator")
{
    DifferenceModule<QT> m = gamma_module();
    ProlongedModule<QT> p = tau_k(m, 1);
    // Sigma(d0 e) = t d0 e;  Sigma(d1 e) = t d1 e + d0 e
    CHECK(p.sigma_op(0, 0) == QT::t());
    CHECK(p.sigma_op(1, 0) == QT::zero());
    CHECK(p.sigma_op(1, 1) == QT::t());
    CHECK(p.sigma_op(0, 1) == QT::one());
    CHECK(certify_tau(p).all_pass());
}

TEST_CASE("tau_k with identity presentation leaves the symbols fixed")
{
    auto F = galois_field_q();
    DifferenceModule<QT> m = make_difference_module(F, Matrix<QT>::identity(2));
    ProlongedModule<QT> p = tau_k(m, 2);
    CHECK(p.sigma_op == Matrix<QT>::identity(p.dim()));
    CHECK(p.dim() == 3 * 2);
    CHECK(p.x_matrix.pow(3).is_zero());
    CHECK(certify_tau(p).all_pass());
}

TEST_CASE("tau_k respects the depth bound")
{
    OperatorField<QT> shallow(SigmaKind::shift, HsKind::divided, 2);
    DifferenceModule<QT> m = make_difference_module(shallow, gamma_module().matrix);
    CHECK_THROWS(tau_k(m, 3));
}

TEST_CASE("tensor structure isomorphism on the unit: the Leibniz image")
{
    auto F = galois_field_q();
    DifferenceModule<QT> unit = unit_difference_module(F);
    TensorStructureIso<QT> t = tensor_structure_iso(unit, unit, 1);
    CHECK(t.report.all_pass());
    // d1(1 ox 1) -> d1 ox d0 + d0 ox d1 in ambient coordinates
    Vec<QT> img = t.ambient_image.column(1);
    Vec<QT> expect(4, QT::zero());
    expect[1 * 2 + 0] = QT::one();
    expect[0 * 2 + 1] = QT::one();
    CHECK(img == expect);
}

TEST_CASE("tensor structure isomorphism for the Gamma module at k = 1")
{
    // tau_1(M ox M) and the cotensor are both free of rank 1 over E_1, so
    // the change of basis is 2x2 with nonzero determinant; the ambient
    // kernel basis of the cotensor lives in the 4-dimensional tensor space.
    DifferenceModule<QT> m = gamma_module();
    TensorStructureIso<QT> t = tensor_structure_iso(m, m, 1);
    CHECK(t.report.all_pass());
    CHECK(t.matrix.rows() == 2);
    CHECK(t.cotensor.embed.rows() == 4);
    CHECK(!t.matrix.det().is_zero());
}

TEST_CASE("tensor structure isomorphism over F_2(t)")
{
    auto F = galois_field_2();
    Matrix<F2T> a(1, 1);
    a(0, 0) = F2T::t();
    DifferenceModule<F2T> m = make_difference_module(F, a);
    TensorStructureIso<F2T> t = tensor_structure_iso(m, m, 1);
    CHECK(t.report.all_pass());
}

TEST_CASE("counit isomorphism a")
{
    auto F = galois_field_q();
    for (int k = 0; k <= 2; ++k) {
        CounitIso<QT> a = counit_iso_a(tau_k(unit_difference_module(F), k));
        CHECK(a.report.all_pass());
        CHECK(a.matrix.rows() == 1);
    }
    CounitIso<QT> am = counit_iso_a(tau_k(gamma_module(), 2));
    CHECK(am.report.all_pass());
}

TEST_CASE("comultiplication isomorphism b: binomial values at k = l = 1")
{
    DifferenceModule<QT> m = gamma_module();
    ComulIso<QT> b = comul_iso_b(m, 1, 1);
    CHECK(b.report.all_pass());

    // value map of the generator d1 d1 e: flat coordinates via the embedding
    Matrix<QT> flat = b.hom.embed * b.matrix;
    int fdim = b.f_algebra->dim();
    int col = b.ttm.index(1, b.inner.index(1, 0));
    auto value = [&](int s, int t, int deg) {
        return flat(b.tklm.index(deg, 0) * fdim + s * 2 + t, col);
    };
    CHECK(value(0, 0, 2) == QT(2));  // 2 d2 m
    CHECK(value(1, 0, 1) == QT::one());
    CHECK(value(0, 1, 1) == QT::one());
    CHECK(value(1, 1, 0) == QT::one());
}

TEST_CASE("comultiplication isomorphism b in characteristic 2: C(2,1) = 0")
{
    auto F = galois_field_2();
    Matrix<F2T> a(1, 1);
    a(0, 0) = F2T::t();
    DifferenceModule<F2T> m = make_difference_module(F, a);
    ComulIso<F2T> b = comul_iso_b(m, 1, 1);
    CHECK(b.report.all_pass());
    Matrix<F2T> flat = b.hom.embed * b.matrix;
    int fdim = b.f_algebra->dim();
    int col = b.ttm.index(1, b.inner.index(1, 0));
    CHECK(flat(b.tklm.index(2, 0) * fdim + 0, col).is_zero());
}

TEST_CASE("b at l = 0 reduces to the transition identification")
{
    CHECK(check_b_transition_reduction(gamma_module(), 1).all_pass());
    CHECK(check_b_transition_reduction(gamma_module(), 2).all_pass());
}

TEST_CASE("the sabotaged binomial is detected with a witness")
{
    DifferenceModule<QT> m = gamma_module();
    ComulIso<QT> b = comul_iso_b(m, 1, 1, BVariant::sabotaged);
    CHECK_FALSE(b.report.all_pass());
    CHECK_FALSE(b.report.first_failure().empty());
}

TEST_CASE("fibre structure u is E_k-linear and mu-twisted")
{
    DifferenceModule<QT> m = gamma_module();
    for (int k = 0; k <= 2; ++k) {
        FibreStructure<QT> u = fibre_estructure(tau_k(m, k));
        CHECK(u.report.all_pass());
    }
    // k = 1, unit module: the matrix is the 2x2 identity
    FibreStructure<QT> uu = fibre_estructure(tau_k(unit_difference_module(galois_field_q()), 1));
    CHECK(uu.matrix == Matrix<QT>::identity(2));
    CHECK(uu.report.all_pass());
}

TEST_CASE("change of algebra along E_2 -> E_1")
{
    DifferenceModule<QT> m = gamma_module();
    ChangeAlgebraIso<QT> ca = change_algebra_iso(m, 1);
    CHECK(ca.report.all_pass());
    CHECK(ca.matrix.rows() == 2);

    // V of dim 2, k = 0: Hom_{E_1}(K, tau_1 V) has the socle dimension
    auto F = galois_field_q();
    Matrix<QT> a(2, 2);
    a(0, 0) = QT::t();
    a(0, 1) = QT::one();
    a(1, 1) = QT::one();
    ChangeAlgebraIso<QT> ca0 = change_algebra_iso(make_difference_module(F, a), 0);
    CHECK(ca0.report.all_pass());
    CHECK(ca0.matrix.rows() == 2);
}

TEST_CASE("b binomials agree with the jet comonad binomials under duality")
{
    // coordinate side: X^(a,b) -> C(a+b, a) X^(a+b); module side:
    // b(d_i d_j m)(x^s y^t) = C(i+j-s-t, i-s) d_{i+j-s-t} m. Under the
    // pairing a = i-s, b = j-t the scalars must agree.
    auto act = make_action(power_series_monoid<QT>(4, GroupLaw::additive),
                           OperatorField<QT>(SigmaKind::identity, HsKind::divided),
                           ActionKind::hs);
    DifferenceModule<QT> unit = unit_difference_module(galois_field_q());
    for (int k = 1; k + 1 <= 3; ++k)
        for (int l = 1; k + l <= 3; ++l) {
            ComonadMaps<QT> cm = comonad_maps(act, k, l, 1);
            ComulIso<QT> b = comul_iso_b(unit, k, l);
            Matrix<QT> flat = b.hom.embed * b.matrix;
            int fdim = b.f_algebra->dim();
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= l; ++j)
                    for (int s = 0; s <= i; ++s)
                        for (int t = 0; t <= j; ++t) {
                            int a = i - s, bb = j - t;
                            // coefficient of X^(a+b) in the comonad image
                            const MPoly<QT>& img =
                                cm.comultiplication[double_jet_index(0, a, bb, k, l)];
                            QT coordinate = QT::zero();
                            for (const auto& [e2, c] : img.terms()) coordinate = c;
                            QT module_side =
                                flat(b.tklm.index(i + j - s - t, 0) * fdim + s * (l + 1) + t,
                                     b.ttm.index(i, b.inner.index(j, 0)));
                            CHECK(coordinate == module_side);
                        }
        }
}

TEST_CASE("the b tensor square commutes at (1,1) and (2,1)")
{
    DifferenceModule<QT> m = gamma_module();
    CHECK(check_b_tensor_square(m, m, 1, 1).all_pass());
    CHECK(check_b_tensor_square(m, m, 2, 1).all_pass());
}

TEST_CASE("fibre coherence squares")
{
    DifferenceModule<QT> m = gamma_module();
    for (int k = 0; k <= 1; ++k)
        for (int l = 0; l <= 1; ++l)
            CHECK(check_fibre_coherence(m, k, l).all_pass());
}

TEST_CASE("the full E-structure verifier on the Gamma module, depth 1")
{
    EStructureData<QT> d = make_estructure_data(galois_field_q(), gamma_module().matrix, 1);
    CheckReport rep = verify_etensor(d);
    CHECK(rep.all_pass());
    if (!rep.all_pass()) MESSAGE(rep.first_failure());
}

TEST_CASE("the full verifier on a two-dimensional module")
{
    auto F = galois_field_q();
    Matrix<QT> a(2, 2);
    a(0, 0) = QT::t();
    a(0, 1) = QT::one();
    a(1, 1) = QT::one();
    EStructureData<QT> d = make_estructure_data(F, a, 1);
    CheckReport rep = verify_etensor(d);
    CHECK(rep.all_pass());
    if (!rep.all_pass()) MESSAGE(rep.first_failure());
}

TEST_CASE("the verifier flags the sabotaged binomial variant")
{
    EStructureData<QT> d = make_estructure_data(galois_field_q(), gamma_module().matrix, 1);
    CheckReport rep = verify_etensor(d, BVariant::sabotaged);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("action read back from tau on the unit")
{
    EStructureData<QT> d = make_estructure_data(galois_field_q(), gamma_module().matrix, 1);
    std::vector<QT> samples = {QT::t(), QT::t() * QT::t(),
                               QT::one() / (QT::t() + QT::one())};
    CHECK(action_from_tau_unit(d, samples, 3).all_pass());

    OperatorField<QT> trivial_ops(SigmaKind::identity, HsKind::trivial, 8);
    EStructureData<QT> dt = make_estructure_data(trivial_ops, Matrix<QT>::identity(1), 1);
    CHECK(action_from_tau_unit(dt, samples, 2).all_pass());
}
