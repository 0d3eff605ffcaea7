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

#include <opfields/action.hpp>
#include <opfields/cartier.hpp>
#include <opfields/tower.hpp>

using namespace opfields;
using QT = FracPoly<Rat>;
using F2T = FracPoly<Fp<2>>;

TEST_CASE("additive power-series tower: m#(x) = x ox 1 + 1 ox x and axioms to level 4")
{
    auto t = power_series_monoid<Rat>(4, GroupLaw::additive);
    const Matrix<Rat>& m = t->product_matrix(1, 1);
    Vec<Rat> img = m.column(1);
    Vec<Rat> expect(4, Rat(0));
    expect[1 * 2 + 0] = Rat(1);  // x ox 1
    expect[0 * 2 + 1] = Rat(1);  // 1 ox x
    CHECK(img == expect);
    CHECK(check_tower_axioms(*t).all_pass());
}

TEST_CASE("multiplicative law: x^2 maps to 2 x ox x in characteristic 0, 0 in char 2")
{
    auto t = power_series_monoid<Rat>(4, GroupLaw::multiplicative);
    Vec<Rat> img = t->product_matrix(1, 1).column(2);
    Vec<Rat> expect(4, Rat(0));
    expect[1 * 2 + 1] = Rat(2);
    CHECK(img == expect);
    CHECK(check_tower_axioms(*t).all_pass());

    auto t2 = power_series_monoid<Fp<2>>(4, GroupLaw::multiplicative);
    CHECK(is_zero_vec(t2->product_matrix(1, 1).column(2)));
    CHECK(check_tower_axioms(*t2).all_pass());
}

TEST_CASE("a custom law failing the unit axiom is rejected")
{
    LawTable<Rat> bad = LawTable<Rat>::additive(3);
    bad.coeff[2][0] = Rat(1);  // F(X,0) = X + X^2
    CHECK_THROWS(power_series_monoid<Rat>(3, GroupLaw::custom, &bad));
}

TEST_CASE("discrete Z/2 tower: levels are K^2 and m# transposes the group table")
{
    auto t = discrete_monoid_truncation<Rat>(DiscreteMonoid::cyclic, 2, 2);
    CHECK(t->level(1)->dim() == 2);
    auto group = group_algebra<Rat>({2});
    const Matrix<Rat>& m = t->product_matrix(1, 1);
    for (int s = 0; s < 2; ++s)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                CHECK(m(a * 2 + b, s) == group->product_coords(a, b)[s]);
    CHECK(check_tower_axioms(*t).all_pass());
}

TEST_CASE("natural-number windows: delta_2 fibres under m#_{2,2}")
{
    auto t = discrete_monoid_truncation<Rat>(DiscreteMonoid::naturals, 4);
    const Matrix<Rat>& m = t->product_matrix(2, 2);  // E_4 -> E_2 ox E_2
    Vec<Rat> img = m.column(2);                      // delta_2 in E_4
    Vec<Rat> expect(9, Rat(0));
    expect[0 * 3 + 2] = Rat(1);
    expect[1 * 3 + 1] = Rat(1);
    expect[2 * 3 + 0] = Rat(1);
    CHECK(img == expect);
    CHECK(check_tower_axioms(*t).all_pass());
}

TEST_CASE("integer windows pass the tower axioms")
{
    auto t = discrete_monoid_truncation<Rat>(DiscreteMonoid::integers, 3);
    CHECK(t->level(2)->dim() == 5);
    CHECK(check_tower_axioms(*t).all_pass());
}

TEST_CASE("free monoid on the dual numbers: dims n+1 and binomial products")
{
    FreeMonoidTower<Rat> fm = free_monoid(truncated_algebra<Rat>(1), 6, false);
    for (int n = 0; n <= 6; ++n) CHECK(fm.tower->level(n)->dim() == n + 1);
    CHECK(check_tower_axioms(*fm.tower).all_pass());

    const auto& e6 = *fm.tower->level(6);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j) {
            Vec<Rat> expect(7, Rat(0));
            expect[i + j] = binomial<Rat>(i + j, i);
            CHECK(e6.multiply(unit_vec<Rat>(7, i), unit_vec<Rat>(7, j)) == expect);
        }
}

TEST_CASE("free monoid in characteristic 2: e_i^2 = 0 for i > 0")
{
    FreeMonoidTower<Fp<2>> fm = free_monoid(truncated_algebra<Fp<2>>(1), 4, false);
    CHECK(check_tower_axioms(*fm.tower).all_pass());
    const auto& e4 = *fm.tower->level(4);
    for (int i = 1; i * 2 <= 4; ++i)
        CHECK(is_zero_vec(e4.multiply(unit_vec<Fp<2>>(5, i), unit_vec<Fp<2>>(5, i))));
}

TEST_CASE("characteristic 0: x -> e_1 is a bialgebra isomorphism level by level")
{
    int N = 5;
    auto add = power_series_monoid<Rat>(N, GroupLaw::additive);
    FreeMonoidTower<Rat> fm = free_monoid(truncated_algebra<Rat>(1), N, false);
    std::vector<Matrix<Rat>> iso;
    for (int n = 0; n <= N; ++n) {
        const auto& fl = *fm.tower->level(n);
        Matrix<Rat> m(fl.dim(), n + 1);
        Vec<Rat> power = fl.unit();
        Vec<Rat> e1 = fl.dim() > 1 ? unit_vec<Rat>(fl.dim(), 1) : fl.unit();
        for (int s = 0; s <= n; ++s) {
            m.set_column(s, power);
            power = fl.multiply(power, e1);
        }
        AlgebraMap<Rat> f{add->level(n), fm.tower->level(n), m};
        CHECK(check_algebra_map(f).all_pass());
        CHECK(m.inverse().has_value());
        iso.push_back(m);
    }
    for (int n = 0; n < N; ++n)
        CHECK(iso[n] * add->transition_matrix(n, n + 1) ==
              fm.tower->transition_matrix(n, n + 1) * iso[n + 1]);
    for (int k = 0; k <= N; ++k)
        for (int l = 0; k + l <= N; ++l)
            CHECK(Matrix<Rat>::kron(iso[k], iso[l]) * add->product_matrix(k, l) ==
                  fm.tower->product_matrix(k, l) * iso[k + l]);
}

TEST_CASE("divided-power divisibility: e_k^d has integral coordinates over d!")
{
    FreeMonoidTower<Rat> fm = free_monoid(truncated_algebra<Rat>(1), 6, false);
    for (int k = 1; k <= 3; ++k)
        for (int d = 2; k * d <= 6; ++d) {
            const auto& lvl = *fm.tower->level(k * d);
            Vec<Rat> power = lvl.unit();
            for (int s = 0; s < d; ++s)
                power = lvl.multiply(power, unit_vec<Rat>(lvl.dim(), k));
            Rat fact(factorial_z(d));
            for (const auto& c : power) CHECK((c / fact).den().is_one());
        }
}

TEST_CASE("free monoid on a two-point base behaves like the natural numbers")
{
    // spec(K[Z/2]) is a pointed two-element set; the free monoid it
    // generates has one free generator, so the levels grow by one
    auto base = group_algebra<Rat>({2});
    FreeMonoidTower<Rat> fm = free_monoid(base, 4, false);
    for (int n = 0; n <= 4; ++n) CHECK(fm.tower->level(n)->dim() == n + 1);
    CHECK(check_tower_axioms(*fm.tower).all_pass());
}

TEST_CASE("abelian free monoid agrees with the plain one on dual numbers")
{
    FreeMonoidTower<Rat> plain = free_monoid(truncated_algebra<Rat>(1), 4, false);
    FreeMonoidTower<Rat> ab = free_monoid(truncated_algebra<Rat>(1), 4, true);
    for (int n = 0; n <= 4; ++n)
        CHECK(plain.tower->level(n)->dim() == ab.tower->level(n)->dim());
    CHECK(check_tower_axioms(*ab.tower).all_pass());

    FreeMonoidTower<Fp<3>> abp = free_monoid(truncated_algebra<Fp<3>>(1), 4, true);
    CHECK(check_tower_axioms(*abp.tower).all_pass());
    for (int n = 0; n <= 4; ++n) CHECK(abp.tower->level(n)->dim() == n + 1);
}

TEST_CASE("cartier dual of the additive tower: u_i u_j = C(i+j,i) u_{i+j}")
{
    auto add = power_series_monoid<Rat>(6, GroupLaw::additive);
    CartierDual<Rat> co = cartier_dual(*add, 6);
    CHECK(check_cartier_axioms(co).all_pass());
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j) {
            Vec<Rat> prod = co.multiply(i, unit_vec<Rat>(i + 1, i), j, unit_vec<Rat>(j + 1, j));
            Vec<Rat> expect(i + j + 1, Rat(0));
            expect[i + j] = binomial<Rat>(i + j, i);
            CHECK(prod == expect);
        }
    Vec<Rat> d = co.comult[2].comultiply(unit_vec<Rat>(3, 2));
    Vec<Rat> expect(9, Rat(0));
    expect[0 * 3 + 2] = Rat(1);
    expect[1 * 3 + 1] = Rat(1);
    expect[2 * 3 + 0] = Rat(1);
    CHECK(d == expect);
}

TEST_CASE("char-0 rescaling: u_1^n = n! u_n in the dual of the additive tower")
{
    auto add = power_series_monoid<Rat>(5, GroupLaw::additive);
    CartierDual<Rat> co = cartier_dual(*add, 5);
    Vec<Rat> u1 = unit_vec<Rat>(2, 1);
    Vec<Rat> power = u1;
    for (int n = 2; n <= 5; ++n) {
        power = co.multiply(n - 1, power, 1, u1);
        Vec<Rat> expect(n + 1, Rat(0));
        expect[n] = Rat(factorial_z(n));
        CHECK(power == expect);
    }
}

TEST_CASE("cartier dual of the Z/2 tower is the group algebra")
{
    auto t = discrete_monoid_truncation<Rat>(DiscreteMonoid::cyclic, 2, 2);
    CartierDual<Rat> co = cartier_dual(*t, 2);
    CHECK(check_cartier_axioms(co).all_pass());
    auto group = group_algebra<Rat>({2});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(co.multiply(1, unit_vec<Rat>(2, i), 1, unit_vec<Rat>(2, j)) ==
                  group->product_coords(i, j));
}

TEST_CASE("double dual recovers the level multiplication")
{
    auto add = power_series_monoid<Rat>(4, GroupLaw::additive);
    CartierDual<Rat> co = cartier_dual(*add, 4);
    for (int n = 0; n <= 4; ++n) {
        int dim = n + 1;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Vec<Rat> d_back(dim, Rat(0));
                for (int k = 0; k < dim; ++k) {
                    Vec<Rat> dk = co.comult[n].comultiply(unit_vec<Rat>(dim, k));
                    d_back[k] = dk[i * dim + j];
                }
                CHECK(d_back == add->level(n)->product_coords(i, j));
            }
    }
}

TEST_CASE("the shift-down derivation on the divided-power algebra")
{
    // u_i -> u_{i-1} is a derivation of the dual of the additive tower
    auto add = power_series_monoid<Rat>(5, GroupLaw::additive);
    CartierDual<Rat> co = cartier_dual(*add, 5);
    auto shift_down = [](const Vec<Rat>& u) {
        Vec<Rat> v(u.size(), Rat(0));
        for (size_t i = 0; i + 1 < u.size(); ++i) v[i] = u[i + 1];
        return v;
    };
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; k + l <= 5; ++l) {
            Vec<Rat> uk = unit_vec<Rat>(k + 1, k), ul = unit_vec<Rat>(l + 1, l);
            Vec<Rat> lhs = shift_down(co.multiply(k, uk, l, ul));
            Vec<Rat> leib = add_vec(co.multiply(k, shift_down(uk), l, ul),
                                    co.multiply(k, uk, l, shift_down(ul)));
            CHECK(lhs == leib);
        }
}

TEST_CASE("hs action of the additive tower on Q(t): all laws pass")
{
    auto add = power_series_monoid<QT>(4, GroupLaw::additive);
    OperatorField<QT> F(SigmaKind::identity, HsKind::divided);
    MonoidAction<QT> a = make_action(add, F, ActionKind::hs);
    std::vector<QT> samples = {QT::t(), QT::t() * QT::t(), QT::one() / (QT::t() + QT::one())};
    CHECK(verify_action(a, samples).all_pass());
}

TEST_CASE("broken family d_2 = 0 fails the comodule law at (1,1) with witness")
{
    auto add = power_series_monoid<QT>(3, GroupLaw::additive);
    OperatorField<QT> F(SigmaKind::identity, HsKind::truncated_two);
    MonoidAction<QT> a = make_action(add, F, ActionKind::hs);
    CheckReport rep = verify_action(a, {QT::t() * QT::t()});
    CHECK_FALSE(rep.all_pass());
    bool comodule_failed = false;
    for (const auto& it : rep.items())
        if (it.name == "action.comodule_law" && !it.pass) {
            comodule_failed = true;
            CHECK(it.witness.find("(1,1)") != std::string::npos);
        }
    CHECK(comodule_failed);
}

TEST_CASE("shift action of the N tower on Q(t)")
{
    auto nat = discrete_monoid_truncation<QT>(DiscreteMonoid::naturals, 3);
    OperatorField<QT> F(SigmaKind::shift, HsKind::divided);
    MonoidAction<QT> a = make_action(nat, F, ActionKind::shift);
    std::vector<QT> samples = {QT::t(), QT::t() * QT::t()};
    CheckReport rep = verify_action(a, samples);
    CHECK(rep.all_pass());
    // the round trip is part of the report: the dual twist, assembled as the
    // diagonal of sigma-iterates, recovers the (t, t+1, t+2, ...) window
    bool roundtrip_present = false;
    for (const auto& it : rep.items())
        if (it.name == "action.dual_twist_recovers_mu") roundtrip_present = it.pass;
    CHECK(roundtrip_present);
    Vec<QT> m = a.mu(2, QT::t());
    CHECK(m[0] == QT::t());
    CHECK(m[1] == QT::t() + QT::one());
    CHECK(m[2] == QT::t() + QT(2));
}

TEST_CASE("free-derivation action: d(a) = sum delta^i(a) e_i with no binomial factors")
{
    FreeMonoidTower<QT> fm = free_monoid(truncated_algebra<QT>(1), 4, false);
    OperatorField<QT> F(SigmaKind::identity, HsKind::divided);
    MonoidAction<QT> a = make_action(fm.tower, F, ActionKind::free_derivation);
    std::vector<QT> samples = {QT::t(), QT::t() * QT::t()};
    CHECK(verify_action(a, samples).all_pass());
    Vec<QT> m = a.mu(2, QT::t() * QT::t());
    CHECK(m[0] == QT::t() * QT::t());
    CHECK(m[1] == QT(2) * QT::t());
    CHECK(m[2] == QT(2));
}

TEST_CASE("trivial action passes all laws")
{
    auto add = power_series_monoid<Rat>(3, GroupLaw::additive);
    OperatorField<Rat> F;
    MonoidAction<Rat> a = make_action(add, F, ActionKind::trivial);
    CHECK(verify_action(a, {Rat(2), Rat(-1, 3)}).all_pass());
}

TEST_CASE("product tower carries the commuting shift and hs actions")
{
    auto add = power_series_monoid<QT>(2, GroupLaw::additive);
    auto nat = discrete_monoid_truncation<QT>(DiscreteMonoid::naturals, 2);
    auto prod = product_tower(add, nat);
    CHECK(check_tower_axioms(*prod).all_pass());
    OperatorField<QT> F(SigmaKind::shift, HsKind::divided);
    MonoidAction<QT> a = make_action(prod, F, ActionKind::product);
    std::vector<QT> samples = {QT::t(), QT::one() / (QT::t() + QT(2))};
    CHECK(verify_action(a, samples).all_pass());
}

TEST_CASE("non-commuting sigma and hs pair is detected on the product tower")
{
    auto add = power_series_monoid<QT>(2, GroupLaw::additive);
    auto nat = discrete_monoid_truncation<QT>(DiscreteMonoid::naturals, 2);
    auto prod = product_tower(add, nat);
    OperatorField<QT> F(SigmaKind::shift, HsKind::euler);
    MonoidAction<QT> a = make_action(prod, F, ActionKind::product);
    CheckReport rep = verify_action(a, {QT::t()});
    CHECK_FALSE(rep.all_pass());
}
