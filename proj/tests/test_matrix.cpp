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

#include <opfields/matrix.hpp>
#include <opfields/rng.hpp>

using namespace opfields;
using QT = FracPoly<Rat>;

namespace {

template <field K>
Matrix<K> random_matrix(SplitMix64& rng, int r, int c)
{
    Matrix<K> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = random_scalar<K>(rng);
    return m;
}

}  // namespace

TEST_CASE("rref, rank, kernel over Q")
{
    Matrix<Rat> m = Matrix<Rat>::from_rows({{Rat(1), Rat(2), Rat(3)},
                                            {Rat(2), Rat(4), Rat(6)},
                                            {Rat(1), Rat(0), Rat(1)}});
    CHECK(m.rank() == 2);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 1);
    CHECK(is_zero_vec(m * ker[0]));
}

TEST_CASE("kernel/image dimensions are complementary")
{
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int r = 1 + static_cast<int>(rng.below(5));
        int c = 1 + static_cast<int>(rng.below(5));
        Matrix<Rat> m = random_matrix<Rat>(rng, r, c);
        CHECK(static_cast<int>(m.kernel_basis().size()) + m.rank() == c);
        for (const auto& v : m.kernel_basis()) CHECK(is_zero_vec(m * v));
    }
}

TEST_CASE("solve and inverse over a function field")
{
    SplitMix64 rng(12);
    for (int trial = 0; trial < 8; ++trial) {
        Matrix<QT> m = random_matrix<QT>(rng, 3, 3);
        auto inv = m.inverse();
        if (!inv) {
            CHECK(m.det().is_zero());
            continue;
        }
        CHECK(*inv * m == Matrix<QT>::identity(3));
        CHECK(m * *inv == Matrix<QT>::identity(3));
        Vec<QT> b = {random_scalar<QT>(rng), random_scalar<QT>(rng), random_scalar<QT>(rng)};
        auto x = m.solve(b);
        REQUIRE(x.has_value());
        CHECK(m * *x == b);
    }
}

TEST_CASE("determinant is multiplicative")
{
    SplitMix64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rat> a = random_matrix<Rat>(rng, 3, 3);
        Matrix<Rat> b = random_matrix<Rat>(rng, 3, 3);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("kron matches tensor coordinates")
{
    SplitMix64 rng(14);
    Matrix<Rat> a = random_matrix<Rat>(rng, 2, 3);
    Matrix<Rat> b = random_matrix<Rat>(rng, 3, 2);
    Vec<Rat> x = {random_scalar<Rat>(rng), random_scalar<Rat>(rng), random_scalar<Rat>(rng)};
    Vec<Rat> y = {random_scalar<Rat>(rng), random_scalar<Rat>(rng)};
    CHECK(Matrix<Rat>::kron(a, b) * tensor_vec(x, y) == tensor_vec(a * x, b * y));
}

TEST_CASE("subspace canonical form and membership")
{
    auto s = Subspace<Rat>::span(3, {{Rat(1), Rat(1), Rat(0)}, {Rat(2), Rat(2), Rat(0)},
                                     {Rat(0), Rat(0), Rat(1)}});
    CHECK(s.dim() == 2);
    CHECK(s.contains({Rat(3), Rat(3), Rat(-5)}));
    CHECK_FALSE(s.contains({Rat(1), Rat(0), Rat(0)}));

    auto t = Subspace<Rat>::span(3, {{Rat(0), Rat(0), Rat(2)}});
    auto i = Subspace<Rat>::intersect(s, t);
    CHECK(i.dim() == 1);
    CHECK(i.contains({Rat(0), Rat(0), Rat(1)}));
    CHECK(Subspace<Rat>::sum(s, t).dim() == 2);
}

TEST_CASE("quotient projection and section")
{
    auto rel = Subspace<Rat>::span(3, {{Rat(1), Rat(1), Rat(0)}});
    QuotientSpace<Rat> q(rel);
    CHECK(q.dim() == 2);
    Vec<Rat> v = {Rat(2), Rat(5), Rat(7)};
    Vec<Rat> p = q.project(v);
    // representative differs from v by the relation subspace
    Vec<Rat> back = q.section(p);
    CHECK(rel.contains(sub_vec(v, back)));
    // projection respects the section
    CHECK(q.project(q.section(p)) == p);
    CHECK(q.projection_matrix() * q.section_matrix() == Matrix<Rat>::identity(2));
}
