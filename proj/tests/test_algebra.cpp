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

#include <opfields/algebra.hpp>
#include <opfields/coalgebra.hpp>
#include <opfields/radical.hpp>

using namespace opfields;
using QT = FracPoly<Rat>;
using F2T = FracPoly<Fp<2>>;

namespace {

/// Copy of an algebra with no recorded counit/radical, to exercise the
/// computed paths.
template <field K>
AlgebraPtr<K> strip(const AlgebraPtr<K>& e)
{
    int n = e->dim();
    std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i][j] = e->product_coords(i, j);
    return std::make_shared<FiniteAlgebra<K>>(n, e->unit(), std::move(mul), e->tag());
}

}  // namespace

TEST_CASE("dual numbers: dim 2, eps^2 = 0, counit eps -> 0")
{
    auto e = truncated_algebra<Rat>(1);
    CHECK(e->dim() == 2);
    CHECK(e->multiply(unit_vec<Rat>(2, 1), unit_vec<Rat>(2, 1)) == zero_vec<Rat>(2));
    REQUIRE(e->has_counit());
    CHECK(e->apply_counit(unit_vec<Rat>(2, 1)) == Rat(0));
    CHECK(e->apply_counit(e->unit()) == Rat(1));
    CHECK(check_algebra_axioms(*e).all_pass());
}

TEST_CASE("monomial quotient (x^2, xy, y^2): dim 3, all products of x,y vanish")
{
    auto e = monomial_quotient_algebra<Rat>(2, {{2, 0}, {1, 1}, {0, 2}});
    CHECK(e->dim() == 3);
    for (int i = 1; i < 3; ++i)
        for (int j = 1; j < 3; ++j)
            CHECK(e->multiply(unit_vec<Rat>(3, i), unit_vec<Rat>(3, j)) == zero_vec<Rat>(3));
    CHECK(check_algebra_axioms(*e).all_pass());
}

TEST_CASE("product Q x Q: orthogonal idempotents")
{
    auto k1 = group_algebra<Rat>({1});  // one-dimensional algebra
    auto e = product_algebra(k1, k1);
    CHECK(e->dim() == 2);
    Vec<Rat> e1 = unit_vec<Rat>(2, 0), e2 = unit_vec<Rat>(2, 1);
    CHECK(e->multiply(e1, e1) == e1);
    CHECK(e->multiply(e2, e2) == e2);
    CHECK(e->multiply(e1, e2) == zero_vec<Rat>(2));
    CHECK(e->unit() == add_vec(e1, e2));
    CHECK(check_algebra_axioms(*e).all_pass());
}

TEST_CASE("dual coalgebra is the transpose of multiplication")
{
    auto e = truncated_algebra<Rat>(1);
    Coalgebra<Rat> co = dual_coalgebra(*e);
    // Delta(d_eps) = d1 ox d_eps + d_eps ox d1
    Vec<Rat> d = co.comultiply(unit_vec<Rat>(2, 1));
    Vec<Rat> expected(4, Rat(0));
    expected[0 * 2 + 1] = Rat(1);
    expected[1 * 2 + 0] = Rat(1);
    CHECK(d == expected);
    // counit of the dual = evaluation at 1
    CHECK(co.apply_counit(unit_vec<Rat>(2, 0)) == Rat(1));
    CHECK(co.apply_counit(unit_vec<Rat>(2, 1)) == Rat(0));
    CHECK(check_coalgebra_axioms(co).all_pass());

    // transpose oracle, computed independently
    auto z2 = group_algebra<Rat>({2});
    Coalgebra<Rat> coz = dual_coalgebra(*z2);
    for (int k = 0; k < 2; ++k) {
        Vec<Rat> dz = coz.comultiply(unit_vec<Rat>(2, k));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(dz[i * 2 + j] == z2->product_coords(i, j)[k]);
    }
    CHECK(check_coalgebra_axioms(coz).all_pass());
}

TEST_CASE("double transpose recovers the structure constants")
{
    auto e = monomial_quotient_algebra<Rat>(2, {{2, 0}, {1, 1}, {0, 2}});
    Coalgebra<Rat> co = dual_coalgebra(*e);
    for (int i = 0; i < e->dim(); ++i)
        for (int j = 0; j < e->dim(); ++j)
            for (int k = 0; k < e->dim(); ++k)
                CHECK(co.delta(k)(i, j) == e->product_coords(i, j)[k]);
}

TEST_CASE("radical: recorded, computed, and semisimple cases")
{
    auto t3 = truncated_algebra<Rat>(2);  // Q[x]/x^3
    auto rad = radical<Rat>(t3);
    Subspace<Rat> j = Subspace<Rat>::span(3, rad);
    CHECK(j.dim() == 2);
    CHECK(j.contains(unit_vec<Rat>(3, 1)));
    CHECK(j.contains(unit_vec<Rat>(3, 2)));

    // trace-form path on Q[x,y]/(x^2,xy,y^2): G = diag(3,0,0) in basis (1,x,y)
    auto mq = strip(monomial_quotient_algebra<Rat>(2, {{2, 0}, {1, 1}, {0, 2}}));
    Matrix<Rat> g = mq->trace_form();
    CHECK(g(0, 0) == Rat(3));
    for (int i = 0; i < 3; ++i)
        for (int j2 = 0; j2 < 3; ++j2)
            if (i != 0 || j2 != 0) CHECK(g(i, j2) == Rat(0));
    auto rad2 = radical<Rat>(mq);
    Subspace<Rat> jj = Subspace<Rat>::span(3, rad2);
    CHECK(jj.dim() == 2);
    CHECK(jj.contains(unit_vec<Rat>(3, 1)));
    CHECK(jj.contains(unit_vec<Rat>(3, 2)));

    // Q[Z/2] is semisimple
    auto z2 = strip(group_algebra<Rat>({2}));
    CHECK(radical<Rat>(z2).empty());
}

TEST_CASE("radical over F_p via the Frobenius-power kernel")
{
    // F_2[Z/2]: radical is span(1+g)
    auto e = strip(group_algebra<Fp<2>>({2}));
    auto rad = radical<Fp<2>>(e);
    REQUIRE(rad.size() == 1);
    CHECK(Subspace<Fp<2>>::span(2, rad).contains({Fp<2>(1), Fp<2>(1)}));

    // F_3[Z/2] is semisimple
    auto e3 = strip(group_algebra<Fp<3>>({2}));
    CHECK(radical<Fp<3>>(e3).empty());
}

TEST_CASE("radical of a product is the product of radicals")
{
    auto a = truncated_algebra<Rat>(2);
    auto b = monomial_quotient_algebra<Rat>(2, {{2, 0}, {1, 1}, {0, 2}});
    auto p = product_algebra(a, b);
    auto rad = radical<Rat>(strip(p));
    Subspace<Rat> j = Subspace<Rat>::span(p->dim(), rad);
    auto ra = radical<Rat>(a);
    auto rb = radical<Rat>(b);
    CHECK(j.dim() == static_cast<int>(ra.size() + rb.size()));
    for (const auto& v : ra) {
        Vec<Rat> w(p->dim(), Rat(0));
        for (int i = 0; i < a->dim(); ++i) w[i] = v[i];
        CHECK(j.contains(w));
    }
    for (const auto& v : rb) {
        Vec<Rat> w(p->dim(), Rat(0));
        for (int i = 0; i < b->dim(); ++i) w[a->dim() + i] = v[i];
        CHECK(j.contains(w));
    }
}

TEST_CASE("radical powers to zero and supplied candidates are vetted")
{
    auto e = monomial_quotient_algebra<Rat>(2, {{3, 0}, {0, 2}});
    auto rad = radical<Rat>(e);
    for (const auto& v : rad) CHECK(is_zero_vec(e->power(v, e->dim())));

    // wrong candidate (containing 1) is rejected
    CHECK_THROWS(radical<Rat>(e, std::vector<Vec<Rat>>{e->unit()}));
}

TEST_CASE("quasi-separability by the trace-form criterion")
{
    CHECK(is_quasi_separable<Rat>(truncated_algebra<Rat>(4)));  // Q[x]/x^5

    // F_2(t)[u]/(u^2 - t), radical 0 supplied: inseparable, trace form zero
    Vec<F2T> f = {-F2T::t(), F2T::zero(), F2T::one()};
    auto insep = quotient_poly_algebra<F2T>(f, "u");
    CHECK_FALSE(is_quasi_separable<F2T>(insep, std::vector<Vec<F2T>>{}));

    CHECK(is_quasi_separable<Fp<3>>(group_algebra<Fp<3>>({2})));  // F_3[Z/2]

    // F_2[Z/2] has a radical but its reduced quotient F_2 is separable
    CHECK(is_quasi_separable<Fp<2>>(group_algebra<Fp<2>>({2})));
}

TEST_CASE("axiom checker flags hand-broken associativity with a witness")
{
    auto good = truncated_algebra<Rat>(2);
    int n = good->dim();
    std::vector<std::vector<Vec<Rat>>> mul(n, std::vector<Vec<Rat>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i][j] = good->product_coords(i, j);
    mul[1][1] = unit_vec<Rat>(n, 0);  // x*x := 1 breaks (x*x)*x^2 vs x*(x*x^2)
    FiniteAlgebra<Rat> bad(n, good->unit(), mul, "custom");
    CheckReport rep = check_algebra_axioms(bad);
    CHECK_FALSE(rep.all_pass());
    bool assoc_failed = false;
    for (const auto& it : rep.items())
        if (it.name == "algebra.associative" && !it.pass) {
            assoc_failed = true;
            CHECK_FALSE(it.witness.empty());
        }
    CHECK(assoc_failed);
}

TEST_CASE("transition map K[x]/x^3 -> K[x]/x^2 is an algebra map")
{
    auto s = truncated_algebra<Rat>(2);
    auto t = truncated_algebra<Rat>(1);
    Matrix<Rat> m(2, 3);
    m(0, 0) = Rat(1);
    m(1, 1) = Rat(1);
    AlgebraMap<Rat> f{s, t, m};
    CHECK(check_algebra_map(f).all_pass());

    // negative control: x -> 1 is not an algebra map
    Matrix<Rat> bad(2, 3);
    bad(0, 0) = Rat(1);
    bad(0, 1) = Rat(1);
    CHECK_FALSE(check_algebra_map(AlgebraMap<Rat>{s, t, bad}).all_pass());
}

TEST_CASE("u^p - t quotient behaves like a field extension")
{
    Vec<F2T> f = {-F2T::t(), F2T::zero(), F2T::one()};
    auto e = quotient_poly_algebra<F2T>(f, "u");
    CHECK(e->dim() == 2);
    CHECK_FALSE(e->has_counit());
    CHECK(check_algebra_axioms(*e).all_pass());
    // u * u = t * 1
    Vec<F2T> u2 = e->multiply(unit_vec<F2T>(2, 1), unit_vec<F2T>(2, 1));
    CHECK(u2[0] == F2T::t());
    CHECK(u2[1] == F2T::zero());
    // nonzero elements invert: mult by u is invertible
    CHECK(e->mult_matrix(unit_vec<F2T>(2, 1)).inverse().has_value());
}

TEST_CASE("tensor of truncations carries counit and radical")
{
    auto a = truncated_algebra<Rat>(1);
    auto b = truncated_algebra<Rat>(2);
    auto t = tensor_algebra(a, b);
    CHECK(t->dim() == 6);
    CHECK(check_algebra_axioms(*t).all_pass());
    REQUIRE(t->has_radical());
    CHECK(verify_radical(t, t->recorded_radical()).all_pass());
    CHECK(Subspace<Rat>::span(6, t->recorded_radical()).dim() == 5);
}
