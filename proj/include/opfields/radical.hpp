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

#ifndef OPFIELDS_RADICAL_HPP
#define OPFIELDS_RADICAL_HPP

#include <optional>
#include <stdexcept>

#include "algebra.hpp"

namespace opfields {

namespace detail {

/// Over F_p(t), decides whether Mz = 0 has a nonzero solution with every
/// coordinate a p-th power. Solutions in the subfield F_p(t^p) are found by
/// clearing denominators and splitting each polynomial entry by exponent
/// residue mod p, which turns the system into p stacked systems over
/// F_p(s), s standing for t^p.
template <field K>
bool frobenius_twisted_kernel_nonzero(const Matrix<K>& m)
{
    static_assert(is_function_field<K> && field_char<K> != 0);
    using C = typename field_traits<K>::base_type;
    constexpr int p = static_cast<int>(field_char<K>);

    Matrix<K> stacked(m.rows() * p, m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Poly<C> den = Poly<C>::one();
        for (int j = 0; j < m.cols(); ++j) den = den * m(i, j).den();
        for (int j = 0; j < m.cols(); ++j) {
            Poly<C> q, r;
            Poly<C>::divmod(den * m(i, j).num(), m(i, j).den(), q, r);
            // split q by exponent residue; coefficient of s^w in slice u is q[p*w+u]
            for (int u = 0; u < p; ++u) {
                std::vector<C> slice;
                for (int d = u; d <= q.degree(); d += p)
                    slice.resize(d / p + 1, C::zero()), slice[d / p] = q.coeff(d);
                stacked(i * p + u, j) = K(Poly<C>(slice));
            }
        }
    }
    return !stacked.kernel_basis().empty();
}

/// Certifies that an algebra has no nonzero nilpotents.
/// Characteristic 0: trace-form kernel is exactly the nilradical.
/// Characteristic p: v -> v^p is additive, so v^p = sum c_i^p b_i^p in a
/// basis; reduced iff the system sum z_i b_i^p = 0 has no nonzero solution
/// with all z_i p-th powers. Over F_p every scalar is its own p-th power;
/// over F_p(t) the twisted solve above decides it.
template <field K>
bool certify_reduced(const FiniteAlgebra<K>& e, bool* decided)
{
    *decided = true;
    if constexpr (field_char<K> == 0) {
        return e.trace_form().rank() == e.dim();
    } else {
        int edim = e.dim();
        constexpr int p = static_cast<int>(field_char<K>);
        std::vector<Vec<K>> powers;
        for (int i = 0; i < edim; ++i) powers.push_back(e.power(unit_vec<K>(edim, i), p));
        Matrix<K> m = Matrix<K>::from_columns(powers);
        if constexpr (!is_function_field<K>) {
            return m.kernel_basis().empty();
        } else {
            return !frobenius_twisted_kernel_nonzero(m);
        }
    }
}

/// Frobenius-power kernel over F_p: the map v -> v^(p^e) with p^e >= dim
/// is F_p-linear and its kernel is exactly the nilradical.
template <field K>
std::vector<Vec<K>> radical_frobenius(const FiniteAlgebra<K>& e)
{
    static_assert(field_char<K> != 0 && !is_function_field<K>);
    uint64_t q = 1;
    while (q < static_cast<uint64_t>(e.dim())) q *= field_char<K>;
    std::vector<Vec<K>> powers;
    for (int i = 0; i < e.dim(); ++i)
        powers.push_back(e.power(unit_vec<K>(e.dim(), i), static_cast<int>(q)));
    return Matrix<K>::from_columns(powers).kernel_basis();
}

}  // namespace detail

/// Verifies that span(candidate) is a nil ideal with reduced quotient.
template <field K>
CheckReport verify_radical(const AlgebraPtr<K>& e, const std::vector<Vec<K>>& candidate)
{
    CheckReport rep;
    int n = e->dim();
    Subspace<K> j = Subspace<K>::span(n, candidate);

    bool ok = true;
    std::string wit;
    for (int i = 0; i < j.dim() && ok; ++i)
        for (int b = 0; b < n; ++b) {
            Vec<K> prod = e->multiply(j.basis_vector(i), unit_vec<K>(n, b));
            if (!j.contains(prod)) {
                ok = false;
                wit = "basis " + std::to_string(i) + " * " + e->basis_names()[b];
                break;
            }
        }
    rep.record("radical.is_ideal", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < j.dim(); ++i) {
        if (!is_zero_vec(e->power(j.basis_vector(i), n))) {
            ok = false;
            wit = "element " + std::to_string(i) + " not nilpotent";
            break;
        }
    }
    rep.record("radical.is_nil", ok, wit);

    if (rep.all_pass()) {
        auto q = quotient_algebra(e, j);
        bool decided = false;
        bool reduced = detail::certify_reduced(*q, &decided);
        rep.record("radical.quotient_reduced", decided && reduced,
                   decided ? (reduced ? "" : "quotient has nilpotents") : "undecidable here");
    }
    return rep;
}

/// Nilradical basis. Order of preference: caller-supplied candidate
/// (verified), constructor-recorded basis (verified), direct computation
/// over Q / Q(t) (trace form) or F_p (Frobenius kernel).
template <field K>
std::vector<Vec<K>> radical(const AlgebraPtr<K>& e,
                            const std::optional<std::vector<Vec<K>>>& supplied = std::nullopt)
{
    if (supplied) {
        CheckReport rep = verify_radical(e, *supplied);
        if (!rep.all_pass())
            throw std::invalid_argument("supplied radical rejected: " + rep.first_failure());
        return *supplied;
    }
    if (e->has_radical()) {
        CheckReport rep = verify_radical(e, e->recorded_radical());
        if (!rep.all_pass())
            throw std::invalid_argument("recorded radical invalid: " + rep.first_failure());
        return e->recorded_radical();
    }
    if constexpr (field_char<K> == 0) {
        Matrix<K> g = e->trace_form();
        return g.kernel_basis();
    } else if constexpr (!is_function_field<K>) {
        return detail::radical_frobenius(*e);
    } else {
        throw std::invalid_argument(
            "radical over a function field of characteristic p needs a recorded or "
            "supplied candidate");
    }
}

/// Trace-form etale criterion on the reduced quotient, valid in all
/// characteristics.
template <field K>
bool is_quasi_separable(const AlgebraPtr<K>& e,
                        const std::optional<std::vector<Vec<K>>>& supplied = std::nullopt)
{
    std::vector<Vec<K>> j = radical(e, supplied);
    auto q = quotient_algebra(e, Subspace<K>::span(e->dim(), j));
    return q->trace_form().rank() == q->dim();
}

}  // namespace opfields

#endif
