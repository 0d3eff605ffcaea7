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

#ifndef OPFIELDS_CARTIER_HPP
#define OPFIELDS_CARTIER_HPP

#include "coalgebra.hpp"
#include "tower.hpp"

namespace opfields {

/// Cartier dual of a commutative tower through level N: the graded union of
/// the level duals Co(E_n), with
///   product   Co(E_k) ox Co(E_l) -> Co(E_{k+l})  (transpose of m#),
///   coproduct Co(E_n) -> Co(E_n) ox Co(E_n)      (transpose of multiplication),
///   inclusions Co(E_n) -> Co(E_m)                (transpose of transitions),
///   unit = the counit of E_0 viewed as an element of Co(E_0).
template <field K>
struct CartierDual {
    std::vector<int> level_dims;
    std::vector<std::vector<Matrix<K>>> mult;  // [k][l]: d_{k+l} x (d_k d_l)
    std::vector<Coalgebra<K>> comult;          // per level, dual of the algebra
    std::vector<Matrix<K>> include;            // Co(E_n) -> Co(E_{n+1})
    Vec<K> one;                                // in Co(E_0)

    int max_level() const { return static_cast<int>(level_dims.size()) - 1; }

    /// Inclusion Co(E_lo) -> Co(E_hi).
    Matrix<K> include_matrix(int lo, int hi) const
    {
        Matrix<K> m = Matrix<K>::identity(level_dims[lo]);
        for (int n = lo; n < hi; ++n) m = include[n] * m;
        return m;
    }

    /// Product of u at level k and v at level l, landing at level k+l.
    Vec<K> multiply(int k, const Vec<K>& u, int l, const Vec<K>& v) const
    {
        return mult[k][l] * tensor_vec(u, v);
    }
};

template <field K>
CartierDual<K> cartier_dual(const MonoidTower<K>& t, int levels)
{
    if (!t.commutative())
        throw std::invalid_argument("cartier_dual: tower must be commutative");
    if (levels > t.max_level())
        throw std::out_of_range("cartier_dual: level beyond the constructed tower");

    CartierDual<K> out;
    for (int n = 0; n <= levels; ++n) {
        out.level_dims.push_back(t.level(n)->dim());
        out.comult.push_back(dual_coalgebra(*t.level(n)));
    }
    out.mult.resize(levels + 1);
    for (int k = 0; k <= levels; ++k) {
        out.mult[k].resize(levels - k + 1, Matrix<K>());
        for (int l = 0; k + l <= levels; ++l)
            out.mult[k][l] = t.product_matrix(k, l).transpose();
    }
    for (int n = 0; n < levels; ++n)
        out.include.push_back(t.transition_matrix(n, n + 1).transpose());
    out.one = t.counit(0);
    return out;
}

/// Bialgebra axioms of the dual, exercised through level N: associativity
/// and unit of the product, compatibility with inclusions, multiplicativity
/// of the comultiplication, commutativity.
template <field K>
CheckReport check_cartier_axioms(const CartierDual<K>& c)
{
    CheckReport rep;
    int N = c.max_level();

    bool ok = true;
    std::string wit;
    for (int a = 0; a <= N && ok; ++a)
        for (int b = 0; a + b <= N && ok; ++b)
            for (int d = 0; a + b + d <= N; ++d) {
                int da = c.level_dims[a], dd = c.level_dims[d];
                Matrix<K> lhs =
                    c.mult[a + b][d] * Matrix<K>::kron(c.mult[a][b], Matrix<K>::identity(dd));
                Matrix<K> rhs =
                    c.mult[a][b + d] * Matrix<K>::kron(Matrix<K>::identity(da), c.mult[b][d]);
                if (lhs != rhs) {
                    ok = false;
                    wit = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(d) + ")";
                    break;
                }
            }
    rep.record("cartier.associative", ok, wit);

    ok = true;
    wit.clear();
    for (int l = 0; l <= N; ++l) {
        // one * v = include(v)
        Matrix<K> lhs(c.level_dims[l], c.level_dims[l]);
        for (int j = 0; j < c.level_dims[l]; ++j)
            lhs.set_column(j, c.multiply(0, c.one, l, unit_vec<K>(c.level_dims[l], j)));
        if (lhs != c.include_matrix(l, l)) {
            // include_matrix(l, l) is the identity of level l; the product
            // lands at level 0 + l = l
            ok = false;
            wit = "level " + std::to_string(l);
            break;
        }
    }
    rep.record("cartier.unit_law", ok, wit);

    ok = true;
    wit.clear();
    for (int k = 0; k <= N && ok; ++k)
        for (int l = 0; k + l <= N; ++l) {
            Matrix<K> sw = swap_matrix<K>(c.level_dims[k], c.level_dims[l]);
            if (c.mult[l][k] * sw != c.mult[k][l]) {
                ok = false;
                wit = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
                break;
            }
        }
    rep.record("cartier.commutative", ok, wit);

    // comultiplication is multiplicative: Delta(uv) = Delta(u) Delta(v),
    // which transposes the fact that m# is an algebra map
    ok = true;
    wit.clear();
    for (int k = 0; k <= N && ok; ++k)
        for (int l = 0; k + l <= N; ++l) {
            int dk = c.level_dims[k], dl = c.level_dims[l], ds = c.level_dims[k + l];
            // both sides: Co(E_k) ox Co(E_l) -> Co(E_{k+l}) ox Co(E_{k+l})
            Matrix<K> delta_s(ds * ds, ds);
            for (int j = 0; j < ds; ++j)
                delta_s.set_column(j, c.comult[k + l].comultiply(unit_vec<K>(ds, j)));
            Matrix<K> lhs = delta_s * c.mult[k][l];

            Matrix<K> delta_k(dk * dk, dk), delta_l(dl * dl, dl);
            for (int j = 0; j < dk; ++j)
                delta_k.set_column(j, c.comult[k].comultiply(unit_vec<K>(dk, j)));
            for (int j = 0; j < dl; ++j)
                delta_l.set_column(j, c.comult[l].comultiply(unit_vec<K>(dl, j)));
            Matrix<K> pair = Matrix<K>::kron(delta_k, delta_l);
            // shuffle (a,b,u,v) -> (a,u,b,v), then multiply pairwise
            Matrix<K> shuffled(dk * dl * dk * dl, pair.cols());
            for (int a = 0; a < dk; ++a)
                for (int b = 0; b < dk; ++b)
                    for (int u = 0; u < dl; ++u)
                        for (int v = 0; v < dl; ++v) {
                            int from = ((a * dk + b) * dl + u) * dl + v;
                            int to = ((a * dl + u) * dk + b) * dl + v;
                            for (int col = 0; col < pair.cols(); ++col)
                                shuffled(to, col) = pair(from, col);
                        }
            Matrix<K> rhs = Matrix<K>::kron(c.mult[k][l], c.mult[k][l]) * shuffled;
            if (lhs != rhs) {
                ok = false;
                wit = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
                break;
            }
        }
    rep.record("cartier.comultiplication_multiplicative", ok, wit);

    ok = true;
    wit.clear();
    for (int n = 0; n <= N; ++n)
        if (!check_coalgebra_axioms(c.comult[n]).all_pass()) {
            ok = false;
            wit = "level " + std::to_string(n);
            break;
        }
    rep.record("cartier.levelwise_coalgebras", ok, wit);

    return rep;
}

}  // namespace opfields

#endif
