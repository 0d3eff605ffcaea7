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

#ifndef OPFIELDS_SUITE_HPP
#define OPFIELDS_SUITE_HPP

#include "cartier.hpp"
#include "etensor.hpp"
#include "jet.hpp"
#include "radical.hpp"
#include "rng.hpp"

namespace opfields {

/// One acceptance criterion, checked end to end with exact arithmetic.
struct CriterionResult {
    int number;
    std::string name;
    bool pass;
    std::string detail;
};

namespace suite {

// ---- criterion 1: free-monoid structure constants -------------------------

template <field K>
bool free_monoid_constants()
{
    FreeMonoidTower<K> fm = free_monoid(truncated_algebra<K>(1), 6, false);
    for (int n = 0; n <= 6; ++n)
        if (fm.tower->level(n)->dim() != n + 1) return false;
    const auto& top = *fm.tower->level(6);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j) {
            Vec<K> expect(7, K::zero());
            expect[i + j] = binomial<K>(i + j, i);
            if (top.multiply(unit_vec<K>(7, i), unit_vec<K>(7, j)) != expect) return false;
        }
    return check_tower_axioms(*fm.tower).all_pass();
}

inline CriterionResult criterion_free_monoid()
{
    bool ok = free_monoid_constants<Rat>() && free_monoid_constants<Fp<2>>() &&
              free_monoid_constants<Fp<3>>();
    std::string detail;
    if (ok) {
        // characteristic 0: x -> e_1 is an isomorphism level by level
        auto add = power_series_monoid<Rat>(6, GroupLaw::additive);
        FreeMonoidTower<Rat> fm = free_monoid(truncated_algebra<Rat>(1), 6, false);
        for (int n = 0; n <= 6 && ok; ++n) {
            const auto& fl = *fm.tower->level(n);
            Matrix<Rat> m(fl.dim(), n + 1);
            Vec<Rat> power = fl.unit();
            Vec<Rat> e1 = fl.dim() > 1 ? unit_vec<Rat>(fl.dim(), 1) : fl.unit();
            for (int s = 0; s <= n; ++s) {
                m.set_column(s, power);
                power = fl.multiply(power, e1);
            }
            ok = check_algebra_map(AlgebraMap<Rat>{add->level(n), fm.tower->level(n), m})
                     .all_pass() &&
                 m.inverse().has_value();
            if (!ok) detail = "x -> e1 fails at level " + std::to_string(n);
        }
    } else {
        detail = "structure constants differ from C(i+j,i)";
    }
    return {1, "free-monoid structure constants over Q, F2, F3", ok, detail};
}

// ---- criterion 2: universal property of the free monoid -------------------

inline CriterionResult criterion_universal_property()
{
    using QT = FracPoly<Rat>;
    FreeMonoidTower<QT> fm = free_monoid(truncated_algebra<QT>(1), 5, false);
    OperatorField<QT> F(SigmaKind::identity, HsKind::divided);
    MonoidAction<QT> lift = make_action(fm.tower, F, ActionKind::free_derivation);
    std::vector<QT> samples = {QT::t(), QT::t() * QT::t(),
                               QT::one() / (QT::t() + QT::one())};
    CheckReport rep = verify_action(lift, samples);
    bool ok = rep.all_pass();
    std::string detail = ok ? "" : rep.first_failure();

    // the non-iterative control family must be rejected with a witness
    auto add = power_series_monoid<QT>(3, GroupLaw::additive);
    OperatorField<QT> bad(SigmaKind::identity, HsKind::naive_iterate);
    CheckReport rej = verify_action(make_action(add, bad, ActionKind::hs), samples);
    bool rejected = !rej.all_pass() && !rej.first_failure().empty();
    if (!rejected) detail = "non-iterative family was not rejected";
    return {2, "universal property: d/dt lifts uniquely, non-iterative family rejected",
            ok && rejected, detail};
}

// ---- criterion 3: Cartier duality ------------------------------------------

inline CriterionResult criterion_cartier()
{
    auto add = power_series_monoid<Rat>(6, GroupLaw::additive);
    CartierDual<Rat> co = cartier_dual(*add, 6);
    bool ok = check_cartier_axioms(co).all_pass();
    std::string detail;
    for (int i = 0; i <= 6 && ok; ++i)
        for (int j = 0; i + j <= 6; ++j) {
            Vec<Rat> expect(i + j + 1, Rat(0));
            expect[i + j] = binomial<Rat>(i + j, i);
            if (co.multiply(i, unit_vec<Rat>(i + 1, i), j, unit_vec<Rat>(j + 1, j)) != expect) {
                ok = false;
                detail = "u_i u_j fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }

    if (ok) {
        auto z2 = discrete_monoid_truncation<Rat>(DiscreteMonoid::cyclic, 2, 2);
        CartierDual<Rat> coz = cartier_dual(*z2, 2);
        auto group = group_algebra<Rat>({2});
        for (int i = 0; i < 2 && ok; ++i)
            for (int j = 0; j < 2; ++j)
                if (coz.multiply(1, unit_vec<Rat>(2, i), 1, unit_vec<Rat>(2, j)) !=
                    group->product_coords(i, j)) {
                    ok = false;
                    detail = "Z/2 dual differs from the group algebra";
                    break;
                }
    }
    if (ok) {
        // double dual recovers the level multiplication
        for (int n = 0; n <= 6 && ok; ++n)
            for (int i = 0; i <= n && ok; ++i)
                for (int j = 0; j <= n; ++j) {
                    Vec<Rat> back(n + 1, Rat(0));
                    for (int k = 0; k <= n; ++k)
                        back[k] = co.comult[n].comultiply(unit_vec<Rat>(n + 1, k))[i * (n + 1) + j];
                    if (back != add->level(n)->product_coords(i, j)) {
                        ok = false;
                        detail = "double dual mismatch at level " + std::to_string(n);
                        break;
                    }
                }
    }
    return {3, "Cartier duality: additive tower, Z/2 tower, double dual", ok, detail};
}

// ---- criterion 4: module-kernel dualities ----------------------------------

template <field K>
FModule<K> random_module_for_suite(SplitMix64& rng, const AlgebraPtr<K>& e, int max_dim)
{
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

inline CriterionResult criterion_module_kernel(uint64_t seed)
{
    SplitMix64 rng(seed ^ 0x6b65726eull);
    auto k1 = group_algebra<Rat>({1});
    std::vector<AlgebraPtr<Rat>> zoo = {
        truncated_algebra<Rat>(1), truncated_algebra<Rat>(2), product_algebra(k1, k1),
        monomial_quotient_algebra<Rat>(2, {{2, 0}, {1, 1}, {0, 2}})};
    bool ok = true;
    std::string detail;
    int instances = 0, star_checked = 0;
    for (int trial = 0; trial < 56 && ok; ++trial) {
        const auto& e = zoo[trial % zoo.size()];
        FModule<Rat> x = random_module_for_suite(rng, e, 6);
        FModule<Rat> y = random_module_for_suite(rng, e, 6);
        ++instances;

        TensorOver<Rat> t = tensor_over(x, y);
        HomOver<Rat> h = hom_over(x, dual_module(y));
        if (!iso_dual_tensor_to_hom(x, y, t, h).report.all_pass()) {
            ok = false;
            detail = "Co(X ox Y) = Hom(X, Co Y) fails at trial " + std::to_string(trial);
            break;
        }
        if (!eq_dual_triple(x, y).report.all_pass()) {
            ok = false;
            detail = "dual triple fails at trial " + std::to_string(trial);
            break;
        }
        auto fx = flatness_report(x);
        if (fx.flat != flatness_report(dual_module(x)).injective) {
            ok = false;
            detail = "flat(X) <-> injective(CoX) fails at trial " + std::to_string(trial);
            break;
        }
        if (fx.flat && flatness_report(y).flat) {
            if (!flatness_report(tensor_over(x, y).module).flat) {
                ok = false;
                detail = "flat ox flat not flat at trial " + std::to_string(trial);
                break;
            }
            StarDual<Rat> sd = star_dual(x);
            if (!iso_star_tensor_to_hom(x, sd, y).report.all_pass()) {
                ok = false;
                detail = "X* ox Y = Hom(X,Y) fails at trial " + std::to_string(trial);
                break;
            }
            ++star_checked;
        }
    }
    if (ok && (instances < 50 || star_checked < 5)) {
        ok = false;
        detail = "battery too small";
    }
    return {4, "module-kernel dualities on a 50+ instance battery", ok, detail};
}

// ---- criterion 5: the non-free dual ----------------------------------------

inline CriterionResult criterion_nonfree_dual()
{
    auto e = monomial_quotient_algebra<Rat>(2, {{2, 0}, {1, 1}, {0, 2}});
    FModule<Rat> co = dual_module(regular_module(e));
    bool ok = is_zero_vec(co.action[1] * unit_vec<Rat>(3, 0)) &&
              is_zero_vec(co.action[1] * unit_vec<Rat>(3, 2));
    std::string detail = ok ? "" : "x.delta or x.delta_y does not vanish";
    if (ok) {
        auto fr = flatness_report(co);
        ok = fr.injective && !fr.flat && fr.witness.has_value() &&
             !is_zero_vec(*fr.witness);
        if (!ok) detail = "injective/flat classification incorrect";
    }
    return {5, "Co E over K[x,y]/(x,y)^2: relations, injective, not flat with witness", ok,
            detail};
}

// ---- criterion 6: jet spaces ------------------------------------------------

inline CriterionResult criterion_jets(uint64_t seed)
{
    using QT = FracPoly<Rat>;
    bool ok = true;
    std::string detail;

    {
        MPoly<Rat> f = MPoly<Rat>::term(2, {0, 2}, Rat(1)) - MPoly<Rat>::term(2, {3, 0}, Rat(1));
        auto act = make_action(power_series_monoid<Rat>(2, GroupLaw::additive),
                               OperatorField<Rat>(), ActionKind::trivial);
        JetIdeal<Rat> jet = jet_ideal<Rat>({f}, 2, 1, act);
        MPoly<Rat> g0 = MPoly<Rat>::term(4, {0, 0, 2, 0}, Rat(1)) -
                        MPoly<Rat>::term(4, {3, 0, 0, 0}, Rat(1));
        MPoly<Rat> g1 = MPoly<Rat>::term(4, {0, 0, 1, 1}, Rat(2)) -
                        MPoly<Rat>::term(4, {2, 1, 0, 0}, Rat(3));
        ok = jet.gens.size() == 2 && jet.gens[0] == g0 && jet.gens[1] == g1;
        if (!ok) detail = "cusp level-1 jet ideal differs";
    }

    OperatorField<QT> F(SigmaKind::identity, HsKind::divided);
    auto act = make_action(power_series_monoid<QT>(4, GroupLaw::additive), F, ActionKind::hs);
    if (ok) {
        MPoly<QT> f = MPoly<QT>::term(2, {0, 2}, QT::one()) -
                      MPoly<QT>::term(2, {1, 0}, QT::t());
        JetIdeal<QT> jet = jet_ideal<QT>({f}, 2, 1, act);
        MPoly<QT> g1 = MPoly<QT>::term(4, {0, 0, 1, 1}, QT(2)) -
                       MPoly<QT>::term(4, {0, 1, 0, 0}, QT::t()) -
                       MPoly<QT>::term(4, {1, 0, 0, 0}, QT::one());
        ok = jet.gens.size() == 2 && jet.gens[1] == g1;
        if (!ok) detail = "twisted jet misses the -x0 correction";
    }

    if (ok) {
        SplitMix64 rng(seed ^ 0x6a657473ull);
        int pairs = 0;
        for (int trial = 0; trial < 12 && ok; ++trial) {
            MPoly<QT> p(1);
            for (int d = 0; d <= 2; ++d)
                p = p + MPoly<QT>::term(1, {d}, random_scalar<QT>(rng));
            MPoly<QT> f = MPoly<QT>::term(2, {0, 1}, QT::one());
            for (const auto& [e2, c] : p.terms()) f = f - MPoly<QT>::term(2, {e2[0], 0}, c);
            QT w = random_scalar<QT>(rng);
            try {
                nabla<QT>(act, {f}, {w, p.eval({w})}, 1 + static_cast<int>(rng.below(2)));
                ++pairs;
            } catch (const std::exception& ex) {
                ok = false;
                detail = std::string("nabla failed: ") + ex.what();
            }
        }
        if (ok && pairs < 10) {
            ok = false;
            detail = "fewer than 10 nabla pairs";
        }
    }

    if (ok) {
        auto tact = make_action(power_series_monoid<Rat>(4, GroupLaw::additive),
                                OperatorField<Rat>(), ActionKind::trivial);
        for (int k = 0; k <= 4 && ok; ++k)
            for (int l = 0; k + l <= 4; ++l) {
                ComonadMaps<Rat> cm = comonad_maps(tact, k, l, 2);
                if (!cm.report.all_pass()) {
                    ok = false;
                    detail = "comonad laws fail at (" + std::to_string(k) + "," +
                             std::to_string(l) + ")";
                    break;
                }
            }
        if (ok) {
            ComonadMaps<Rat> cm = comonad_maps(tact, 1, 1, 1);
            ok = cm.comultiplication[double_jet_index(0, 1, 1, 1, 1)] ==
                 MPoly<Rat>::term(3, {0, 0, 1}, Rat(2));
            if (!ok) detail = "X^(1,1) does not map to 2 X^(2)";
        }
        if (ok) {
            auto tact2 = make_action(power_series_monoid<Fp<2>>(2, GroupLaw::additive),
                                     OperatorField<Fp<2>>(), ActionKind::trivial);
            ComonadMaps<Fp<2>> cm2 = comonad_maps(tact2, 1, 1, 1);
            ok = cm2.comultiplication[double_jet_index(0, 1, 1, 1, 1)].is_zero() &&
                 cm2.report.all_pass();
            if (!ok) detail = "characteristic-2 comonad value incorrect";
        }
    }
    return {6, "jet spaces: cusp, twisted correction, nabla battery, comonad laws", ok, detail};
}

// ---- criterion 7: the Galois pipeline ---------------------------------------

template <field K>
bool galois_pipeline(std::string* detail)
{
    OperatorField<K> F(SigmaKind::shift, HsKind::divided, 10);
    Matrix<K> a(1, 1);
    a(0, 0) = K::t();
    EStructureData<K> d = make_estructure_data(F, a, 2);
    CheckReport rep = verify_etensor(d);
    if (!rep.all_pass()) {
        *detail = rep.first_failure();
        return false;
    }

    // the binomial values of b at k = l = 1, exactly as displayed
    DifferenceModule<K> m = d.generator;
    ComulIso<K> b = comul_iso_b(m, 1, 1);
    Matrix<K> flat = b.hom.embed * b.matrix;
    int fdim = b.f_algebra->dim();
    int col = b.ttm.index(1, b.inner.index(1, 0));
    K two = binomial<K>(2, 1);
    bool vals = flat(b.tklm.index(2, 0) * fdim + 0, col) == two &&
                flat(b.tklm.index(1, 0) * fdim + 1 * 2 + 0, col) == K::one() &&
                flat(b.tklm.index(1, 0) * fdim + 0 * 2 + 1, col) == K::one() &&
                flat(b.tklm.index(0, 0) * fdim + 1 * 2 + 1, col) == K::one();
    if (!vals) {
        *detail = "b binomial values differ from the displayed formula";
        return false;
    }

    // injectivity certificates and the change of algebra E_2 -> E_1
    for (int k = 0; k <= 2; ++k)
        if (!certify_tau(tau_k(m, k)).all_pass()) {
            *detail = "tau_" + std::to_string(k) + " certification failed";
            return false;
        }
    if (!change_algebra_iso(m, 1).report.all_pass()) {
        *detail = "change of algebra E_2 -> E_1 failed";
        return false;
    }
    return true;
}

inline CriterionResult criterion_galois()
{
    std::string detail;
    bool ok = galois_pipeline<FracPoly<Rat>>(&detail);
    if (ok) ok = galois_pipeline<FracPoly<Fp<2>>>(&detail);
    return {7, "Galois pipeline over Q(t) and F2(t): all structure diagrams at k,l <= 2", ok,
            detail};
}

// ---- criterion 8: action / Vec bijection ------------------------------------

inline CriterionResult criterion_action_bijection()
{
    using QT = FracPoly<Rat>;
    OperatorField<QT> F(SigmaKind::shift, HsKind::divided, 10);
    Matrix<QT> a(1, 1);
    a(0, 0) = QT::t();
    EStructureData<QT> d = make_estructure_data(F, a, 2);
    std::vector<QT> samples = {QT::t(), QT::t() * QT::t(),
                               QT::one() / (QT::t() + QT::one())};
    CheckReport rep = action_from_tau_unit(d, samples, 3);
    return {8, "action read back from tau on the unit is the identity on samples",
            rep.all_pass(), rep.first_failure()};
}

// ---- criterion 9: quasi-separability -----------------------------------------

inline CriterionResult criterion_quasi_separable()
{
    using F2T = FracPoly<Fp<2>>;
    bool ok = is_quasi_separable<Rat>(truncated_algebra<Rat>(4));
    std::string detail = ok ? "" : "Q[x]/x^5 misclassified";
    if (ok) {
        Vec<F2T> f = {-F2T::t(), F2T::zero(), F2T::one()};
        ok = !is_quasi_separable<F2T>(quotient_poly_algebra<F2T>(f, "u"),
                                      std::vector<Vec<F2T>>{});
        if (!ok) detail = "F_2(t)[u]/(u^2 - t) misclassified";
    }
    if (ok) {
        ok = is_quasi_separable<Fp<3>>(group_algebra<Fp<3>>({2}));
        if (!ok) detail = "F_3[Z/2] misclassified";
    }
    return {9, "quasi-separability: Q[x]/x^5, F_p(t)[u]/(u^p - t), F_3[Z/2]", ok, detail};
}

// ---- criterion 10: negative controls -----------------------------------------

inline CriterionResult criterion_negative_controls()
{
    using QT = FracPoly<Rat>;
    bool ok = true;
    std::string detail;

    // sabotaged b-binomial
    OperatorField<QT> F(SigmaKind::shift, HsKind::divided, 10);
    Matrix<QT> a(1, 1);
    a(0, 0) = QT::t();
    ComulIso<QT> b = comul_iso_b(make_difference_module(F, a), 1, 1, BVariant::sabotaged);
    if (b.report.all_pass() || b.report.first_failure().empty()) {
        ok = false;
        detail = "sabotaged b-binomial not detected";
    }

    // broken associativity constants
    if (ok) {
        auto good = truncated_algebra<Rat>(2);
        int n = good->dim();
        std::vector<std::vector<Vec<Rat>>> mul(n, std::vector<Vec<Rat>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mul[i][j] = good->product_coords(i, j);
        mul[1][1] = unit_vec<Rat>(n, 0);
        CheckReport rep = check_algebra_axioms(FiniteAlgebra<Rat>(n, good->unit(), mul));
        bool found = false;
        for (const auto& it : rep.items())
            if (it.name == "algebra.associative" && !it.pass && !it.witness.empty()) found = true;
        if (!found) {
            ok = false;
            detail = "broken associativity not witnessed";
        }
    }

    // non-commuting sigma / hs pair
    if (ok) {
        OperatorField<QT> clash(SigmaKind::shift, HsKind::euler);
        CheckReport rep = verify_operator_field(clash, 3, {QT::t(), QT::t() * QT::t()});
        bool found = false;
        for (const auto& it : rep.items())
            if (it.name == "sigma.commutes_with_hs" && !it.pass && !it.witness.empty())
                found = true;
        if (!found) {
            ok = false;
            detail = "non-commuting pair not witnessed";
        }
    }
    return {10, "negative controls: sabotaged binomial, broken associativity, sigma clash",
            ok, detail};
}

}  // namespace suite

/// Runs the named battery; "all" runs every criterion in order.
inline std::vector<CriterionResult> run_check_suite(const std::string& which, uint64_t seed)
{
    std::vector<CriterionResult> out;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("monoid")) {
        out.push_back(suite::criterion_free_monoid());
        out.push_back(suite::criterion_universal_property());
        out.push_back(suite::criterion_cartier());
    }
    if (want("kernel")) {
        out.push_back(suite::criterion_module_kernel(seed));
        out.push_back(suite::criterion_nonfree_dual());
        out.push_back(suite::criterion_quasi_separable());
    }
    if (want("jets")) out.push_back(suite::criterion_jets(seed));
    if (want("galois")) {
        out.push_back(suite::criterion_galois());
        out.push_back(suite::criterion_action_bijection());
        out.push_back(suite::criterion_negative_controls());
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace opfields

#endif
