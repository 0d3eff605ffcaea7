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

#include <opfields/module.hpp>
#include <opfields/rng.hpp>

using namespace opfields;

namespace {

AlgebraPtr<Rat> dual_numbers() { return truncated_algebra<Rat>(1); }
AlgebraPtr<Rat> trunc3() { return truncated_algebra<Rat>(2); }
AlgebraPtr<Rat> two_points()
{
    auto k1 = group_algebra<Rat>({1});
    return product_algebra(k1, k1);
}
AlgebraPtr<Rat> fat_point() { return monomial_quotient_algebra<Rat>(2, {{2, 0}, {1, 1}, {0, 2}}); }

/// Module on K^1 supported at one of the two points of K x K.
FModule<Rat> point_module(const AlgebraPtr<Rat>& e, bool left)
{
    FModule<Rat> m{e, 1, {}};
    Matrix<Rat> on(1, 1), off(1, 1);
    on(0, 0) = Rat(1);
    m.action.push_back(left ? on : off);
    m.action.push_back(left ? off : on);
    return m;
}

template <field K>
FModule<K> random_module(SplitMix64& rng, const AlgebraPtr<K>& e, int max_dim)
{
    // free modules, their submodules, quotients, duals; dim <= max_dim
    FModule<K> base = free_module(e, 1 + static_cast<int>(rng.below(2)));
    int choice = static_cast<int>(rng.below(4));
    if (choice == 0) return base;
    std::vector<Vec<K>> gens;
    int g = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < g; ++i) {
        Vec<K> v(base.dim);
        for (auto& c : v) c = random_scalar<K>(rng);
        gens.push_back(std::move(v));
    }
    FModule<K> out;
    if (choice == 1)
        out = submodule_closure(base, gens).module;
    else
        out = quotient_module(base, gens).module;
    if (rng.below(2) == 0) out = dual_module(out);
    if (out.dim > max_dim || out.dim == 0) return base;
    return out;
}

}  // namespace

TEST_CASE("module axioms on frees and duals")
{
    for (const auto& e : {dual_numbers(), trunc3(), two_points(), fat_point()}) {
        FModule<Rat> f = free_module(e, 2);
        CHECK(check_module_axioms(f).all_pass());
        CHECK(check_module_axioms(dual_module(f)).all_pass());
    }
}

TEST_CASE("tensor over E: unit law E ox_E E = E")
{
    for (const auto& e : {dual_numbers(), trunc3(), two_points(), fat_point()}) {
        TensorOver<Rat> t = tensor_over(regular_module(e), regular_module(e));
        CHECK(t.module.dim == e->dim());
        CHECK(check_module_axioms(t.module).all_pass());
    }
}

TEST_CASE("tensor over K[eps]: K ox_E K has dimension 1")
{
    auto e = dual_numbers();
    FModule<Rat> k = trivial_module(e, 1);
    TensorOver<Rat> t = tensor_over(k, k);
    CHECK(t.module.dim == 1);
}

TEST_CASE("tensor over K x K: opposite points annihilate")
{
    auto e = two_points();
    TensorOver<Rat> t = tensor_over(point_module(e, true), point_module(e, false));
    CHECK(t.module.dim == 0);
}

TEST_CASE("cotensor: Co(E) ox^E X = X and the K[eps] kernel count")
{
    auto e = dual_numbers();
    FModule<Rat> reg = regular_module(e);
    SubModule<Rat> c = cotensor_over(reg, reg);
    CHECK(c.module.dim == 2);  // kernel of eps ox 1 - 1 ox eps on K^4

    FModule<Rat> coe = dual_module(reg);
    for (const auto& x : {free_module(e, 2), trivial_module(e, 1)}) {
        SubModule<Rat> u = cotensor_over(coe, x);
        CHECK(u.module.dim == x.dim);
        CHECK(check_module_axioms(u.module).all_pass());
    }
}

TEST_CASE("dim(X ox^E Y) = dim(CoX ox_E CoY) on random instances")
{
    SplitMix64 rng(21);
    std::vector<AlgebraPtr<Rat>> zoo = {dual_numbers(), trunc3(), two_points(), fat_point()};
    for (int trial = 0; trial < 20; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module(rng, e, 6);
        FModule<Rat> y = random_module(rng, e, 6);
        int lhs = cotensor_over(x, y).module.dim;
        int rhs = tensor_over(dual_module(x), dual_module(y)).module.dim;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hom over E: free-module adjunction and identity")
{
    auto e = trunc3();
    FModule<Rat> y = free_module(e, 2);
    HomOver<Rat> h = hom_over(regular_module(e), y);
    CHECK(h.module.dim == y.dim);  // Hom_E(E, Y) = Y

    FModule<Rat> x = free_module(e, 1);
    HomOver<Rat> hx = hom_over(x, x);
    std::vector<Vec<Rat>> cols;
    for (int j = 0; j < hx.embed.cols(); ++j) cols.push_back(hx.embed.column(j));
    Subspace<Rat> span = Subspace<Rat>::span(x.dim * x.dim, cols);
    CHECK(span.contains(flatten_map(Matrix<Rat>::identity(x.dim))));
}

TEST_CASE("Hom_{K[eps]}(K, K[eps]) is the socle, dimension 1")
{
    auto e = dual_numbers();
    HomOver<Rat> h = hom_over(trivial_module(e, 1), regular_module(e));
    CHECK(h.module.dim == 1);
    // the image of the basis map lies in the socle spanned by eps
    Matrix<Rat> m = h.basis_map(0);
    CHECK(m(0, 0) == Rat(0));
}

TEST_CASE("dual of K[eps] is free: eps . d_eps = d_1")
{
    auto e = dual_numbers();
    FModule<Rat> co = dual_module(regular_module(e));
    Vec<Rat> img = co.action[1] * unit_vec<Rat>(2, 1);
    CHECK(img == unit_vec<Rat>(2, 0));
    CHECK(flatness_report(co).flat);  // free of rank 1
}

TEST_CASE("the non-free dual: Co E over K[x,y]/(x,y)^2")
{
    auto e = fat_point();
    FModule<Rat> co = dual_module(regular_module(e));
    // x.delta = 0 and x.delta_y = 0 (basis order 1, x, y; duals d1, dx, dy)
    CHECK(is_zero_vec(co.action[1] * unit_vec<Rat>(3, 0)));
    CHECK(is_zero_vec(co.action[1] * unit_vec<Rat>(3, 2)));
    // x.delta_x = delta and y.delta_y = delta
    CHECK(co.action[1] * unit_vec<Rat>(3, 1) == unit_vec<Rat>(3, 0));
    CHECK(co.action[2] * unit_vec<Rat>(3, 2) == unit_vec<Rat>(3, 0));

    auto fr = flatness_report(co);
    CHECK(fr.injective);
    CHECK_FALSE(fr.flat);
    REQUIRE(fr.witness.has_value());
    CHECK_FALSE(is_zero_vec(*fr.witness));
}

TEST_CASE("flatness: frees are flat and injective; K over K[eps] is neither")
{
    // the first three algebras are self-injective, so frees are also injective
    for (const auto& e : {dual_numbers(), trunc3(), two_points()}) {
        auto fr = flatness_report(free_module(e, 2));
        CHECK(fr.flat);
        CHECK(fr.injective);
    }
    // K[x,y]/(x,y)^2 is not self-injective: the free module is flat only,
    // and its dual is injective only
    auto fr_free = flatness_report(free_module(fat_point(), 1));
    CHECK(fr_free.flat);
    CHECK_FALSE(fr_free.injective);
    auto fr_codual = flatness_report(dual_module(free_module(fat_point(), 1)));
    CHECK(fr_codual.injective);
    CHECK_FALSE(fr_codual.flat);
    auto fr = flatness_report(trivial_module(dual_numbers(), 1));
    CHECK_FALSE(fr.flat);
    CHECK_FALSE(fr.injective);
    REQUIRE(fr.witness.has_value());
}

TEST_CASE("flat(X) iff injective(Co X), by independent routes")
{
    SplitMix64 rng(22);
    std::vector<AlgebraPtr<Rat>> zoo = {dual_numbers(), trunc3(), two_points(), fat_point()};
    for (int trial = 0; trial < 16; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module(rng, e, 6);
        CHECK(flatness_report(x).flat == flatness_report(dual_module(x)).injective);
    }
}

TEST_CASE("Co(X ox_E Y) = Hom_E(X, Co Y) as verified isomorphism")
{
    SplitMix64 rng(23);
    std::vector<AlgebraPtr<Rat>> zoo = {dual_numbers(), trunc3(), two_points(), fat_point()};
    for (int trial = 0; trial < 12; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module(rng, e, 6);
        FModule<Rat> y = random_module(rng, e, 6);
        TensorOver<Rat> t = tensor_over(x, y);
        HomOver<Rat> h = hom_over(x, dual_module(y));
        VerifiedIso<Rat> iso = iso_dual_tensor_to_hom(x, y, t, h);
        CHECK(iso.report.all_pass());
    }
}

TEST_CASE("the dual triple identification")
{
    SplitMix64 rng(24);
    std::vector<AlgebraPtr<Rat>> zoo = {dual_numbers(), trunc3(), two_points(), fat_point()};
    for (int trial = 0; trial < 12; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module(rng, e, 6);
        FModule<Rat> y = random_module(rng, e, 6);
        DualTripleIso<Rat> tri = eq_dual_triple(x, y);
        CHECK(tri.report.all_pass());
    }
}

TEST_CASE("flat ox flat is flat; injective cotensor injective")
{
    SplitMix64 rng(25);
    std::vector<AlgebraPtr<Rat>> zoo = {dual_numbers(), trunc3(), two_points(), fat_point()};
    int flats = 0;
    for (int trial = 0; trial < 24 || flats < 6; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module(rng, e, 6);
        FModule<Rat> y = random_module(rng, e, 6);
        auto fx = flatness_report(x);
        auto fy = flatness_report(y);
        if (fx.flat && fy.flat) {
            ++flats;
            CHECK(flatness_report(tensor_over(x, y).module).flat);
        }
        if (fx.injective && fy.injective)
            CHECK(flatness_report(cotensor_over(x, y).module).injective);
        if (trial > 200) break;
    }
    CHECK(flats >= 6);
}

TEST_CASE("base change along K[x]/x^3 -> K[x]/x^2")
{
    auto s = trunc3();
    auto t = truncated_algebra<Rat>(1);
    Matrix<Rat> m(2, 3);
    m(0, 0) = Rat(1);
    m(1, 1) = Rat(1);
    AlgebraMap<Rat> f{s, t, m};
    REQUIRE(check_algebra_map(f).all_pass());

    // f*(E) = F
    TensorOver<Rat> st = pullback_star(f, regular_module(s));
    CHECK(st.module.dim == 2);
    CHECK(check_module_axioms(st.module).all_pass());

    // f^!(Co E) = Co F (dim 2)
    ShriekResult<Rat> sh = pullback_shriek(f, dual_module(regular_module(s)));
    CHECK(sh.module.dim == 2);
    VerifiedIso<Rat> iso = iso_shriek_dual(f, regular_module(s));
    CHECK(iso.report.all_pass());

    // star preserves flatness, shriek preserves injectivity
    SplitMix64 rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        FModule<Rat> x = random_module(rng, s, 6);
        auto fx = flatness_report(x);
        if (fx.flat) CHECK(flatness_report(pullback_star(f, x).module).flat);
        if (fx.injective) CHECK(flatness_report(pullback_shriek(f, x).module).injective);
    }
}

TEST_CASE("f_! f* = f_* f^! on instances")
{
    auto s = trunc3();
    auto t = truncated_algebra<Rat>(1);
    Matrix<Rat> m(2, 3);
    m(0, 0) = Rat(1);
    m(1, 1) = Rat(1);
    AlgebraMap<Rat> f{s, t, m};
    for (int rank = 1; rank <= 2; ++rank) {
        FModule<Rat> y = free_module(s, rank);
        FModule<Rat> lhs = pushforward_lower_shriek(f, pullback_star(f, y).module);
        FModule<Rat> rhs = pushforward(f, pullback_shriek(f, y).module);
        CHECK(lhs.dim == rhs.dim);
        for (int i = 0; i < s->dim(); ++i)
            CHECK(lhs.act_basis(i).rank() == rhs.act_basis(i).rank());
    }
}

TEST_CASE("star dual: E* = E and the rigidity isomorphism")
{
    auto e = trunc3();
    FModule<Rat> reg = regular_module(e);
    StarDual<Rat> sd = star_dual(reg);
    CHECK(sd.star.module.dim == e->dim());
    CHECK(sd.star_flat);

    SplitMix64 rng(27);
    for (int trial = 0; trial < 6; ++trial) {
        FModule<Rat> y = random_module(rng, e, 6);
        VerifiedIso<Rat> iso = iso_star_tensor_to_hom(reg, sd, y);
        CHECK(iso.report.all_pass());
    }

    // free rank 2: (E^2)* ox_E Y = Hom(E^2, Y)
    FModule<Rat> f2 = free_module(e, 2);
    StarDual<Rat> sd2 = star_dual(f2);
    FModule<Rat> y = free_module(e, 1);
    VerifiedIso<Rat> iso2 = iso_star_tensor_to_hom(f2, sd2, y);
    CHECK(iso2.report.all_pass());
    CHECK(star_dual(f2).star.module.dim == 2 * e->dim());

    CHECK_THROWS(star_dual(trivial_module(dual_numbers(), 1)));
}

TEST_CASE("sequence view over the dual numbers")
{
    auto e = dual_numbers();
    FModule<Rat> reg = regular_module(e);
    SequenceView<Rat> sv = sequence_view(reg);
    CHECK(sv.report.all_pass());
    CHECK(sv.a_dim == 1);

    FModule<Rat> f2 = free_module(e, 2);
    SequenceView<Rat> sv2 = sequence_view(f2);
    CHECK(sv2.report.all_pass());
    CHECK(sv2.a_dim == 2);

    // round trip: rebuild the module from the sequence
    FModule<Rat> back = module_from_sequence(e, f2.dim, sv2.include, sv2.project);
    CHECK(back.action[1] == f2.action[1]);

    // non-flat module: sequence not exact
    SequenceView<Rat> bad = sequence_view(trivial_module(e, 1));
    CHECK_FALSE(bad.report.all_pass());
}

TEST_CASE("cotensor of flats matches the exact-sequence tensor of rank-1 frees")
{
    auto e = dual_numbers();
    FModule<Rat> a = regular_module(e);
    SubModule<Rat> cot = cotensor_over(a, a);
    CHECK(cot.module.dim == 2);
    SequenceView<Rat> sv = sequence_view(cot.module);
    CHECK(sv.report.all_pass());
    CHECK(sv.a_dim == 1);
}

TEST_CASE("the sequence-side equaliser agrees with the cotensor")
{
    // build two flat modules from exact-sequence data and compare the
    // equaliser computed from i, pi with the cotensor of the eps actions
    auto e = dual_numbers();
    SplitMix64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        int a_dim = 1 + static_cast<int>(rng.below(2));
        auto rnd_invertible = [&]() {
            for (;;) {
                Matrix<Rat> p(a_dim, a_dim);
                for (int i = 0; i < a_dim; ++i)
                    for (int j = 0; j < a_dim; ++j) p(i, j) = random_scalar<Rat>(rng);
                if (!p.det().is_zero()) return p;
            }
        };
        auto mk = [&]() {
            // Y = A + A; i embeds through P, pi projects through Q
            Matrix<Rat> p = rnd_invertible(), q = rnd_invertible();
            Matrix<Rat> inc(2 * a_dim, a_dim), proj(a_dim, 2 * a_dim);
            for (int i = 0; i < a_dim; ++i)
                for (int j = 0; j < a_dim; ++j) {
                    inc(i, j) = p(i, j);
                    proj(i, a_dim + j) = q(i, j);
                }
            return module_from_sequence(e, 2 * a_dim, inc, proj);
        };
        FModule<Rat> y1 = mk(), y2 = mk();
        SequenceView<Rat> s1 = sequence_view(y1), s2 = sequence_view(y2);
        REQUIRE(s1.report.all_pass());
        REQUIRE(s2.report.all_pass());

        // equaliser of (i1 pi1) ox 1 and 1 ox (i2 pi2) from the sequence data
        Matrix<Rat> e1 = Matrix<Rat>::kron(s1.include * s1.project,
                                           Matrix<Rat>::identity(y2.dim));
        Matrix<Rat> e2 = Matrix<Rat>::kron(Matrix<Rat>::identity(y1.dim),
                                           s2.include * s2.project);
        Subspace<Rat> seq_side =
            Subspace<Rat>::span(y1.dim * y2.dim, (e1 - e2).kernel_basis());

        SubModule<Rat> cot = cotensor_over(y1, y2);
        Subspace<Rat> cot_side = Subspace<Rat>::span(y1.dim * y2.dim, [&] {
            std::vector<Vec<Rat>> cols;
            for (int j = 0; j < cot.embed.cols(); ++j) cols.push_back(cot.embed.column(j));
            return cols;
        }());
        CHECK(seq_side == cot_side);
    }
}

TEST_CASE("monoidal constraints: swap and associativity descend to both tensors")
{
    SplitMix64 rng(29);
    std::vector<AlgebraPtr<Rat>> zoo = {dual_numbers(), two_points(), fat_point()};
    for (int trial = 0; trial < 6; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module(rng, e, 4);
        FModule<Rat> y = random_module(rng, e, 4);
        FModule<Rat> z = random_module(rng, e, 4);
        CHECK(iso_tensor_commute(x, y).report.all_pass());
        CHECK(iso_tensor_associate(x, y, z).report.all_pass());
        CHECK(iso_cotensor_commute(x, y).report.all_pass());
        CHECK(iso_cotensor_associate(x, y, z).report.all_pass());
    }
}

TEST_CASE("hom adjunction dimensions: Hom(X ox^E Y, Z) = Hom(Y, CoX ox_E Z)")
{
    SplitMix64 rng(28);
    std::vector<AlgebraPtr<Rat>> zoo = {dual_numbers(), two_points(), fat_point()};
    for (int trial = 0; trial < 9; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module(rng, e, 4);
        FModule<Rat> y = random_module(rng, e, 4);
        FModule<Rat> z = random_module(rng, e, 4);
        int lhs = hom_over(cotensor_over(x, y).module, z).module.dim;
        int rhs = hom_over(y, tensor_over(dual_module(x), z).module).module.dim;
        CHECK(lhs == rhs);
    }
}
