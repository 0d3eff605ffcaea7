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

#include <opfields/io.hpp>
#include <opfields/rng.hpp>

using namespace opfields;
using QT = FracPoly<Rat>;
using F2T = FracPoly<Fp<2>>;

TEST_CASE("field descriptors round trip and reject composite characteristics")
{
    FieldDescriptor f{3, true};
    CHECK(field_from_json(field_to_json(f)) == f);
    CHECK_THROWS(field_from_json(json{{"char", 4}}));
}

TEST_CASE("vectors and matrices round trip over every field")
{
    SplitMix64 rng(41);
    auto round = [&]<field K>() {
        Matrix<K> m(3, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = random_scalar<K>(rng);
        CHECK(matrix_from_json<K>(matrix_to_json(m)) == m);
    };
    round.operator()<Rat>();
    round.operator()<Fp<5>>();
    round.operator()<QT>();
    round.operator()<F2T>();
}

TEST_CASE("algebra files round trip with counit and radical")
{
    auto e = truncated_algebra<Rat>(2);
    json j = algebra_to_json(*e);
    auto back = algebra_from_json<Rat>(j);
    CHECK(*back == *e);
    CHECK(back->has_counit());
    CHECK(back->counit() == e->counit());
    REQUIRE(back->has_radical());
    CHECK(back->recorded_radical() == e->recorded_radical());
    // re-emission is stable
    CHECK(algebra_to_json(*back) == j);
}

TEST_CASE("tower files round trip")
{
    auto t = power_series_monoid<QT>(3, GroupLaw::additive);
    json j = tower_to_json(*t);
    auto back = tower_from_json<QT>(j);
    CHECK(back->max_level() == 3);
    CHECK(back->product_matrix(1, 2) == t->product_matrix(1, 2));
    CHECK(back->transition_matrix(0, 3) == t->transition_matrix(0, 3));
    CHECK(tower_to_json(*back) == j);
}

TEST_CASE("ideal files round trip")
{
    IdealFile<QT> f;
    f.vars = {"x", "y"};
    f.gens.push_back(MPoly<QT>::term(2, {0, 2}, QT::one()) -
                     MPoly<QT>::term(2, {1, 0}, QT::t()));
    json j = ideal_to_json(f);
    IdealFile<QT> back = ideal_from_json<QT>(j);
    CHECK(back.vars == f.vars);
    REQUIRE(back.gens.size() == 1);
    CHECK(back.gens[0] == f.gens[0]);
    CHECK(ideal_to_json(back) == j);
}

TEST_CASE("module files round trip with an inline algebra")
{
    auto e = truncated_algebra<Rat>(1);
    FModule<Rat> m = free_module(e, 2);
    json j = fmodule_to_json(m);
    FModule<Rat> back = fmodule_from_json<Rat>(j);
    CHECK(back.dim == m.dim);
    CHECK(back.action == m.action);
    CHECK(*back.algebra == *e);
    CHECK(check_module_axioms(back).all_pass());
    CHECK(fmodule_to_json(back) == j);
}

TEST_CASE("difference module files round trip")
{
    OperatorField<QT> F(SigmaKind::shift, HsKind::divided, 8);
    Matrix<QT> a(1, 1);
    a(0, 0) = QT::t();
    DifferenceModule<QT> m = make_difference_module(F, a);
    json j = difference_module_to_json(m);
    DifferenceModule<QT> back = difference_module_from_json<QT>(j);
    CHECK(back.matrix == m.matrix);
    CHECK(back.field.sigma_kind() == SigmaKind::shift);
    CHECK(back.field.hs_kind() == HsKind::divided);
    CHECK(difference_module_to_json(back) == j);
}

TEST_CASE("mismatched field in a file is rejected")
{
    auto e = truncated_algebra<Rat>(1);
    json j = algebra_to_json(*e);
    CHECK_THROWS(algebra_from_json<Fp<2>>(j));
}

TEST_CASE("random scalars survive the text encoding")
{
    SplitMix64 rng(42);
    auto fuzz = [&]<field K>() {
        for (int trial = 0; trial < 50; ++trial) {
            K x = random_scalar<K>(rng);
            if (!x.is_zero() && trial % 3 == 0) x = K::one() / x;
            CHECK(scalar_parse<K>(scalar_str(x)) == x);
        }
        CHECK(scalar_parse<K>(scalar_str(K::zero())) == K::zero());
    };
    fuzz.operator()<Rat>();
    fuzz.operator()<Fp<2>>();
    fuzz.operator()<Fp<13>>();
    fuzz.operator()<QT>();
    fuzz.operator()<F2T>();
}

TEST_CASE("reports serialize pass state and witnesses")
{
    CheckReport rep;
    rep.record("good", true);
    rep.record("bad", false, "details");
    json j = report_to_json(rep);
    CHECK(j["pass"] == false);
    CHECK(j["items"].size() == 2);
    CHECK(j["items"][1]["witness"] == "details");
}
