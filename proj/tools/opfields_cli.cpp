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

// Command-line front end. Exit codes: 0 ok, 2 parse/input error, 3 algebra
// axiom failure, 4 depth/level out of range, 5 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include <opfields/cartier.hpp>
#include <opfields/etensor.hpp>
#include <opfields/io.hpp>
#include <opfields/jet.hpp>
#include <opfields/suite.hpp>

using namespace opfields;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitAxiom = 3;
constexpr int kExitDepth = 4;
constexpr int kExitVerify = 5;

/// Instantiates the handler for one of the supported base fields.
/// Characteristics are a compiled set; see the README.
template <class F>
int dispatch_field(uint32_t ch, bool function_field, F&& f)
{
    if (!function_field) {
        switch (ch) {
            case 0: return f.template operator()<Rat>();
            case 2: return f.template operator()<Fp<2>>();
            case 3: return f.template operator()<Fp<3>>();
            case 5: return f.template operator()<Fp<5>>();
            case 7: return f.template operator()<Fp<7>>();
            case 11: return f.template operator()<Fp<11>>();
            case 13: return f.template operator()<Fp<13>>();
        }
    } else {
        switch (ch) {
            case 0: return f.template operator()<FracPoly<Rat>>();
            case 2: return f.template operator()<FracPoly<Fp<2>>>();
            case 3: return f.template operator()<FracPoly<Fp<3>>>();
            case 5: return f.template operator()<FracPoly<Fp<5>>>();
            case 7: return f.template operator()<FracPoly<Fp<7>>>();
            case 11: return f.template operator()<FracPoly<Fp<11>>>();
            case 13: return f.template operator()<FracPoly<Fp<13>>>();
        }
    }
    std::cerr << "unsupported characteristic " << ch
              << " (compiled set: 0, 2, 3, 5, 7, 11, 13)\n";
    return kExitParse;
}

std::ostream& open_output(std::ofstream& file, const std::string& path)
{
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

void emit_report_table(std::ostream& out, const CheckReport& rep)
{
    for (const auto& it : rep.items())
        out << (it.pass ? "pass  " : "FAIL  ") << it.name
            << (it.witness.empty() ? "" : "  [" + it.witness + "]") << "\n";
}

// ---------------------------------------------------------------------------
// free-monoid
// ---------------------------------------------------------------------------

struct FreeMonoidArgs {
    std::string base = "dual-numbers";
    int depth = 3;
    uint32_t characteristic = 0;
    bool abelian = false;
    std::string output;
    std::string format = "json";
};

template <field K>
int run_free_monoid(const FreeMonoidArgs& a)
{
    AlgebraPtr<K> base;
    if (a.base == "dual-numbers")
        base = truncated_algebra<K>(1);
    else
        base = algebra_from_json<K>(load_json_file(a.base));

    CheckReport base_axioms = check_algebra_axioms(*base);
    if (!base_axioms.all_pass()) {
        std::cerr << "base algebra fails axioms: " << base_axioms.first_failure() << "\n";
        return kExitAxiom;
    }

    FreeMonoidTower<K> fm = free_monoid(base, a.depth, a.abelian);
    CheckReport axioms = check_tower_axioms(*fm.tower);
    if (!axioms.all_pass()) {
        std::cerr << "tower fails axioms: " << axioms.first_failure() << "\n";
        return kExitAxiom;
    }

    json j = tower_to_json(*fm.tower);
    if constexpr (field_char<K> == 0) {
        // certificate: x -> e_1 matches the additive power-series tower
        if (base->dim() == 2) {
            auto add = power_series_monoid<K>(a.depth, GroupLaw::additive);
            bool iso = true;
            for (int n = 0; n <= a.depth && iso; ++n) {
                const auto& fl = *fm.tower->level(n);
                Matrix<K> m(fl.dim(), n + 1);
                Vec<K> power = fl.unit();
                Vec<K> e1 = fl.dim() > 1 ? unit_vec<K>(fl.dim(), 1) : fl.unit();
                for (int s = 0; s <= n; ++s) {
                    m.set_column(s, power);
                    power = fl.multiply(power, e1);
                }
                iso = check_algebra_map(AlgebraMap<K>{add->level(n), fm.tower->level(n), m})
                          .all_pass() &&
                      m.inverse().has_value();
            }
            j["char0_isomorphism_with_additive_tower"] = iso;
        }
    }

    std::ofstream file;
    std::ostream& out = open_output(file, a.output);
    if (a.format == "table") {
        for (int n = 0; n <= a.depth; ++n) {
            const auto& lvl = *fm.tower->level(n);
            out << "level " << n << ": dim " << lvl.dim() << "\n";
            for (int i = 0; i < lvl.dim(); ++i)
                for (int jj = i; jj < lvl.dim(); ++jj) {
                    Vec<K> w = lvl.multiply(unit_vec<K>(lvl.dim(), i),
                                            unit_vec<K>(lvl.dim(), jj));
                    if (is_zero_vec(w)) continue;
                    out << "  e" << i << "*e" << jj << " =";
                    for (int k2 = 0; k2 < lvl.dim(); ++k2)
                        if (!w[k2].is_zero()) out << " " << scalar_str(w[k2]) << "*e" << k2;
                    out << "\n";
                }
        }
    } else {
        write_json(out, j);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// cartier-dual
// ---------------------------------------------------------------------------

struct CartierArgs {
    std::string input;
    std::string builtin = "additive";
    int depth = 3;
    int modulus = 2;
    uint32_t characteristic = 0;
    std::string output;
};

template <field K>
int run_cartier(const CartierArgs& a)
{
    TowerPtr<K> tower;
    if (!a.input.empty()) {
        tower = tower_from_json<K>(load_json_file(a.input));
    } else if (a.builtin == "additive") {
        tower = power_series_monoid<K>(a.depth, GroupLaw::additive);
    } else if (a.builtin == "multiplicative") {
        tower = power_series_monoid<K>(a.depth, GroupLaw::multiplicative);
    } else if (a.builtin == "nat") {
        tower = discrete_monoid_truncation<K>(DiscreteMonoid::naturals, a.depth);
    } else if (a.builtin == "int") {
        tower = discrete_monoid_truncation<K>(DiscreteMonoid::integers, a.depth);
    } else if (a.builtin == "zmod") {
        tower = discrete_monoid_truncation<K>(DiscreteMonoid::cyclic, a.depth, a.modulus);
    } else {
        throw std::invalid_argument("unknown builtin tower: " + a.builtin);
    }

    CartierDual<K> dual = cartier_dual(*tower, std::min(a.depth, tower->max_level()));
    CheckReport axioms = check_cartier_axioms(dual);
    if (!axioms.all_pass()) {
        std::cerr << "dual fails bialgebra axioms: " << axioms.first_failure() << "\n";
        return kExitAxiom;
    }

    json j;
    j["field"] = field_to_json(describe_field<K>());
    j["levels"] = dual.level_dims;
    json mult = json::array();
    for (int k = 0; k < static_cast<int>(dual.mult.size()); ++k)
        for (int l = 0; l < static_cast<int>(dual.mult[k].size()); ++l)
            mult.push_back(
                json{{"k", k}, {"l", l}, {"matrix", matrix_to_json(dual.mult[k][l])}});
    j["mult"] = mult;
    j["one"] = vec_to_json(dual.one);
    json com = json::array();
    for (const auto& c : dual.comult) {
        json deltas = json::array();
        for (int i = 0; i < c.dim(); ++i) deltas.push_back(matrix_to_json(c.delta(i)));
        com.push_back(deltas);
    }
    j["comult"] = com;

    std::ofstream file;
    std::ostream& out = open_output(file, a.output);
    write_json(out, j);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// jet
// ---------------------------------------------------------------------------

struct JetArgs {
    std::string input;
    int level = 1;
    std::string action = "trivial";
    std::string output;
    std::string format = "json";
};

template <field K>
int run_jet(const JetArgs& a)
{
    IdealFile<K> ideal = ideal_from_json<K>(load_json_file(a.input));

    ActionKind kind = action_from_string(a.action);
    OperatorField<K> F;
    if (kind == ActionKind::hs || kind == ActionKind::shift) {
        if constexpr (is_function_field<K>) {
            F = kind == ActionKind::hs
                    ? OperatorField<K>(SigmaKind::identity, HsKind::divided)
                    : OperatorField<K>(SigmaKind::shift, HsKind::trivial);
        } else {
            throw std::invalid_argument("twisted jets need a function field");
        }
    }
    MonoidAction<K> act =
        kind == ActionKind::shift
            ? make_action(discrete_monoid_truncation<K>(DiscreteMonoid::naturals, a.level), F,
                          ActionKind::shift)
            : make_action(power_series_monoid<K>(a.level, GroupLaw::additive), F, kind);

    JetIdeal<K> jet = jet_ideal(ideal.gens, static_cast<int>(ideal.vars.size()), a.level, act);

    std::ofstream file;
    std::ostream& out = open_output(file, a.output);
    if (a.format == "table") {
        for (size_t g = 0; g < ideal.gens.size(); ++g)
            for (int i = 0; i <= a.level; ++i)
                out << "gen " << g << " @ x^" << i << ": "
                    << jet.gens[g * (a.level + 1) + i].str(jet.var_names) << "\n";
    } else {
        json j;
        j["field"] = field_to_json(describe_field<K>());
        j["level"] = a.level;
        j["action"] = a.action;
        j["vars"] = jet.var_names;
        json gens = json::array();
        for (const auto& g : jet.gens) gens.push_back(mpoly_to_json(g));
        j["gens"] = gens;
        write_json(out, j);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// taumod
// ---------------------------------------------------------------------------

struct TaumodArgs {
    std::string input;
    int level = 1;
    bool check = false;
    int check_depth = 1;
    std::string output;
    std::string format = "json";
};

template <field K>
int run_taumod(const TaumodArgs& a)
{
    DifferenceModule<K> m = difference_module_from_json<K>(load_json_file(a.input));
    ProlongedModule<K> p = tau_k(m, a.level);

    json j;
    j["field"] = field_to_json(describe_field<K>());
    j["level"] = a.level;
    j["dim"] = p.dim();
    j["sigma_op"] = matrix_to_json(p.sigma_op);
    j["x_action"] = matrix_to_json(p.x_matrix);

    CheckReport rep = certify_tau(p);
    bool pass = rep.all_pass();
    if (a.check) {
        EStructureData<K> d = make_estructure_data(m.field, m.matrix, a.check_depth);
        CheckReport full = verify_etensor(d);
        rep.merge(full, "etensor");
        pass = pass && full.all_pass();
    }
    j["report"] = report_to_json(rep);

    std::ofstream file;
    std::ostream& out = open_output(file, a.output);
    if (a.format == "table")
        emit_report_table(out, rep);
    else
        write_json(out, j);
    return pass ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// action
// ---------------------------------------------------------------------------

struct ActionArgs {
    std::string kind = "hs";
    std::string sigma = "identity";
    std::string hs = "divided";
    uint32_t characteristic = 0;
    int depth = 3;
    std::vector<std::string> samples;
    std::string output;
    std::string format = "json";
};

template <field K>
int run_action(const ActionArgs& a)
{
    OperatorField<K> F;
    if constexpr (is_function_field<K>)
        F = OperatorField<K>(sigma_from_string(a.sigma), hs_from_string(a.hs));
    ActionKind kind = action_from_string(a.kind);

    TowerPtr<K> tower;
    switch (kind) {
        case ActionKind::trivial:
        case ActionKind::hs:
            tower = power_series_monoid<K>(a.depth, GroupLaw::additive);
            break;
        case ActionKind::shift:
            tower = discrete_monoid_truncation<K>(DiscreteMonoid::naturals, a.depth);
            break;
        case ActionKind::product:
            tower = product_tower(power_series_monoid<K>(a.depth, GroupLaw::additive),
                                  discrete_monoid_truncation<K>(DiscreteMonoid::naturals,
                                                                a.depth));
            break;
        case ActionKind::free_derivation:
            tower = free_monoid(truncated_algebra<K>(1), a.depth, false).tower;
            break;
    }
    MonoidAction<K> act = make_action(tower, F, kind);

    std::vector<K> samples;
    for (const auto& s : a.samples) samples.push_back(scalar_parse<K>(s));
    if (samples.empty()) {
        if constexpr (is_function_field<K>) {
            samples = {K::t(), K::t() * K::t(), K::one() / (K::t() + K::one())};
        } else {
            samples = {K::from_int(2), K::from_int(-3)};
        }
    }
    CheckReport rep = verify_action(act, samples);

    std::ofstream file;
    std::ostream& out = open_output(file, a.output);
    if (a.format == "table") {
        emit_report_table(out, rep);
    } else {
        json j;
        j["field"] = field_to_json(describe_field<K>());
        j["kind"] = a.kind;
        j["report"] = report_to_json(rep);
        write_json(out, j);
    }
    return rep.all_pass() ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string suite = "all";
    uint64_t seed = 7;
    std::string output;
    std::string format = "json";
};

int run_check(const CheckArgs& a)
{
    std::vector<CriterionResult> results = run_check_suite(a.suite, a.seed);
    bool all = true;
    std::ofstream file;
    std::ostream& out = open_output(file, a.output);
    if (a.format == "table") {
        for (const auto& r : results) {
            out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.number << ": " << r.name
                << (r.detail.empty() ? "" : " -- " + r.detail) << "\n";
            all = all && r.pass;
        }
        out << (all ? "ALL PASS" : "FAILURES PRESENT") << ": " << results.size()
            << " criteria\n";
    } else {
        json items = json::array();
        for (const auto& r : results) {
            items.push_back(json{{"criterion", r.number},
                                 {"name", r.name},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
            all = all && r.pass;
        }
        write_json(out, json{{"suite", a.suite},
                             {"seed", a.seed},
                             {"pass", all},
                             {"results", items}});
    }
    return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"opfields: exact kernels for fields with operators"};
    app.require_subcommand(1);

    FreeMonoidArgs fm;
    auto* cmd_fm = app.add_subcommand("free-monoid", "free formal monoid on a pointed algebra");
    cmd_fm->add_option("--base", fm.base, "'dual-numbers' or an algebra JSON file");
    cmd_fm->add_option("--depth", fm.depth, "top tower level")->check(CLI::Range(0, 8));
    cmd_fm->add_option("--char", fm.characteristic, "field characteristic");
    cmd_fm->add_flag("--abelian", fm.abelian, "symmetrised variant");
    cmd_fm->add_option("-o,--output", fm.output, "output file (default stdout)");
    cmd_fm->add_option("--format", fm.format)->check(CLI::IsMember({"json", "table"}));

    CartierArgs ca;
    auto* cmd_ca = app.add_subcommand("cartier-dual", "Cartier dual of a commutative tower");
    cmd_ca->add_option("--input", ca.input, "tower JSON file");
    cmd_ca->add_option("--builtin", ca.builtin, "additive|multiplicative|nat|int|zmod");
    cmd_ca->add_option("--depth", ca.depth)->check(CLI::Range(0, 8));
    cmd_ca->add_option("--modulus", ca.modulus, "modulus for zmod");
    cmd_ca->add_option("--char", ca.characteristic, "field characteristic");
    cmd_ca->add_option("-o,--output", ca.output);

    JetArgs ja;
    auto* cmd_jet = app.add_subcommand("jet", "prolongation ideal of an affine scheme");
    cmd_jet->add_option("--input", ja.input, "ideal JSON file")->required();
    cmd_jet->add_option("--level", ja.level)->check(CLI::Range(0, 8));
    cmd_jet->add_option("--action", ja.action, "trivial|divided|shift");
    cmd_jet->add_option("-o,--output", ja.output);
    cmd_jet->add_option("--format", ja.format)->check(CLI::IsMember({"json", "table"}));

    TaumodArgs ta;
    auto* cmd_tau = app.add_subcommand("taumod", "prolong a difference module");
    cmd_tau->add_option("--input", ta.input, "difference module JSON file")->required();
    cmd_tau->add_option("--level", ta.level)->check(CLI::Range(0, 6));
    cmd_tau->add_flag("--check", ta.check, "run the full structure verifier");
    cmd_tau->add_option("--depth", ta.check_depth, "verifier depth bound")
        ->check(CLI::Range(0, 2));
    cmd_tau->add_option("-o,--output", ta.output);
    cmd_tau->add_option("--format", ta.format)->check(CLI::IsMember({"json", "table"}));

    ActionArgs aa;
    auto* cmd_act = app.add_subcommand("action", "build and verify a monoid action");
    cmd_act->add_option("--kind", aa.kind, "hs|shift|product|trivial|free-derivation");
    cmd_act->add_option("--sigma", aa.sigma, "identity|shift");
    cmd_act->add_option("--hs", aa.hs, "trivial|divided|naive|zero2|euler");
    cmd_act->add_option("--char", aa.characteristic, "field characteristic");
    cmd_act->add_option("--depth", aa.depth)->check(CLI::Range(0, 6));
    cmd_act->add_option("--samples", aa.samples, "scalar literals to test on");
    cmd_act->add_option("-o,--output", aa.output);
    cmd_act->add_option("--format", aa.format)->check(CLI::IsMember({"json", "table"}));

    CheckArgs ka;
    auto* cmd_chk = app.add_subcommand("check", "run the acceptance batteries");
    cmd_chk->add_option("--suite", ka.suite)
        ->check(CLI::IsMember({"kernel", "monoid", "jets", "galois", "all"}));
    cmd_chk->add_option("--seed", ka.seed, "seed for the randomized batteries");
    cmd_chk->add_option("-o,--output", ka.output);
    cmd_chk->add_option("--format", ka.format)->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (cmd_fm->parsed())
            return dispatch_field(fm.characteristic, false,
                                  [&]<field K>() { return run_free_monoid<K>(fm); });
        if (cmd_ca->parsed())
            return dispatch_field(ca.characteristic, false,
                                  [&]<field K>() { return run_cartier<K>(ca); });
        if (cmd_jet->parsed()) {
            FieldDescriptor fd = field_from_json(load_json_file(ja.input).at("field"));
            return dispatch_field(fd.characteristic, fd.function_field,
                                  [&]<field K>() { return run_jet<K>(ja); });
        }
        if (cmd_tau->parsed()) {
            FieldDescriptor fd = field_from_json(load_json_file(ta.input).at("field"));
            if (!fd.function_field)
                throw std::invalid_argument("difference modules need a function field");
            return dispatch_field(fd.characteristic, true,
                                  [&]<field K>() { return run_taumod<K>(ta); });
        }
        if (cmd_act->parsed()) {
            bool fun = aa.kind != "trivial";
            return dispatch_field(aa.characteristic, fun,
                                  [&]<field K>() { return run_action<K>(aa); });
        }
        if (cmd_chk->parsed()) return run_check(ka);
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "depth error: " << e.what() << "\n";
        return kExitDepth;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitParse;
}
