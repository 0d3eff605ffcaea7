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

#ifndef OPFIELDS_IO_HPP
#define OPFIELDS_IO_HPP

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "action.hpp"
#include "difference.hpp"
#include "module.hpp"
#include "mpoly.hpp"
#include "report.hpp"
#include "tower.hpp"

namespace opfields {

using json = nlohmann::json;

inline json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

struct FieldDescriptor {
    uint32_t characteristic = 0;
    bool function_field = false;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

inline json field_to_json(const FieldDescriptor& f)
{
    return json{{"char", f.characteristic}, {"t", f.function_field}};
}

inline FieldDescriptor field_from_json(const json& j)
{
    FieldDescriptor f;
    f.characteristic = j.at("char").get<uint32_t>();
    f.function_field = j.value("t", false);
    if (f.characteristic != 0 && !is_prime_u32(f.characteristic))
        throw std::invalid_argument("field characteristic must be 0 or prime");
    return f;
}

template <field K>
FieldDescriptor describe_field()
{
    return {field_char<K>, is_function_field<K>};
}

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices
// ---------------------------------------------------------------------------

template <field K>
json vec_to_json(const Vec<K>& v)
{
    json a = json::array();
    for (const auto& c : v) a.push_back(scalar_str(c));
    return a;
}

template <field K>
Vec<K> vec_from_json(const json& j)
{
    Vec<K> v;
    for (const auto& s : j) v.push_back(scalar_parse<K>(s.get<std::string>()));
    return v;
}

template <field K>
json matrix_to_json(const Matrix<K>& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

template <field K>
Matrix<K> matrix_from_json(const json& j)
{
    std::vector<Vec<K>> rows;
    for (const auto& r : j) rows.push_back(vec_from_json<K>(r));
    if (rows.empty()) return Matrix<K>(0, 0);
    return Matrix<K>::from_rows(rows);
}

// ---------------------------------------------------------------------------
// Algebras and modules
// ---------------------------------------------------------------------------

template <field K>
json algebra_to_json(const FiniteAlgebra<K>& e)
{
    json j;
    j["field"] = field_to_json(describe_field<K>());
    j["dim"] = e.dim();
    j["unit"] = vec_to_json(e.unit());
    json mul = json::array();
    for (int i = 0; i < e.dim(); ++i) {
        json row = json::array();
        for (int jj = 0; jj < e.dim(); ++jj) row.push_back(vec_to_json(e.product_coords(i, jj)));
        mul.push_back(row);
    }
    j["mul"] = mul;
    if (e.has_counit()) j["counit"] = vec_to_json(e.counit());
    if (e.has_radical()) {
        json rad = json::array();
        for (const auto& v : e.recorded_radical()) rad.push_back(vec_to_json(v));
        j["radical"] = rad;
    }
    j["tag"] = e.tag();
    j["names"] = e.basis_names();
    return j;
}

template <field K>
AlgebraPtr<K> algebra_from_json(const json& j)
{
    if (field_from_json(j.at("field")) != describe_field<K>())
        throw std::invalid_argument("algebra file field does not match the requested field");
    int dim = j.at("dim").get<int>();
    std::vector<std::vector<Vec<K>>> mul(dim, std::vector<Vec<K>>(dim));
    for (int i = 0; i < dim; ++i)
        for (int jj = 0; jj < dim; ++jj) mul[i][jj] = vec_from_json<K>(j.at("mul")[i][jj]);
    auto alg = std::make_shared<FiniteAlgebra<K>>(dim, vec_from_json<K>(j.at("unit")),
                                                  std::move(mul),
                                                  j.value("tag", std::string("custom")));
    if (j.contains("counit")) alg->set_counit(vec_from_json<K>(j.at("counit")));
    if (j.contains("radical")) {
        std::vector<Vec<K>> rad;
        for (const auto& v : j.at("radical")) rad.push_back(vec_from_json<K>(v));
        alg->set_radical(std::move(rad));
    }
    if (j.contains("names")) alg->set_basis_names(j.at("names").get<std::vector<std::string>>());
    return alg;
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

template <field K>
json fmodule_to_json(const FModule<K>& m)
{
    json j;
    j["algebra"] = algebra_to_json(*m.algebra);
    j["dim"] = m.dim;
    json act = json::array();
    for (const auto& a : m.action) act.push_back(matrix_to_json(a));
    j["action"] = act;
    return j;
}

/// "algebra" may be inline or a path string referencing an algebra file.
template <field K>
FModule<K> fmodule_from_json(const json& j)
{
    AlgebraPtr<K> alg;
    if (j.at("algebra").is_string())
        alg = algebra_from_json<K>(load_json_file(j.at("algebra").get<std::string>()));
    else
        alg = algebra_from_json<K>(j.at("algebra"));
    FModule<K> m{alg, j.at("dim").get<int>(), {}};
    for (const auto& a : j.at("action")) m.action.push_back(matrix_from_json<K>(a));
    if (static_cast<int>(m.action.size()) != alg->dim())
        throw std::invalid_argument("module file needs one action matrix per basis element");
    return m;
}

// ---------------------------------------------------------------------------
// Towers
// ---------------------------------------------------------------------------

template <field K>
json tower_to_json(const MonoidTower<K>& t)
{
    json j;
    j["field"] = field_to_json(describe_field<K>());
    j["kind"] = t.kind();
    j["commutative"] = t.commutative();
    j["max_level"] = t.max_level();
    json levels = json::array();
    for (int n = 0; n <= t.max_level(); ++n) levels.push_back(algebra_to_json(*t.level(n)));
    j["levels"] = levels;
    json trans = json::array();
    for (int n = 0; n < t.max_level(); ++n)
        trans.push_back(matrix_to_json(t.transition_matrix(n, n + 1)));
    j["transitions"] = trans;
    json prods = json::array();
    for (int k = 0; k <= t.max_level(); ++k)
        for (int l = 0; k + l <= t.max_level(); ++l)
            prods.push_back(json{{"k", k}, {"l", l}, {"matrix", matrix_to_json(t.product_matrix(k, l))}});
    j["product"] = prods;
    return j;
}

template <field K>
TowerPtr<K> tower_from_json(const json& j)
{
    std::vector<AlgebraPtr<K>> levels;
    for (const auto& l : j.at("levels")) levels.push_back(algebra_from_json<K>(l));
    std::vector<Matrix<K>> down;
    for (const auto& m : j.at("transitions")) down.push_back(matrix_from_json<K>(m));
    int top = static_cast<int>(levels.size()) - 1;
    std::vector<std::vector<Matrix<K>>> prod(top + 1);
    for (int k = 0; k <= top; ++k) prod[k].resize(top - k + 1, Matrix<K>());
    for (const auto& p : j.at("product")) {
        int k = p.at("k").get<int>(), l = p.at("l").get<int>();
        prod[k][l] = matrix_from_json<K>(p.at("matrix"));
    }
    return std::make_shared<MonoidTower<K>>(std::move(levels), std::move(down), std::move(prod),
                                            j.value("commutative", true),
                                            j.value("kind", std::string("custom")));
}

// ---------------------------------------------------------------------------
// Polynomials and ideals
// ---------------------------------------------------------------------------

template <field K>
json mpoly_to_json(const MPoly<K>& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"c", scalar_str(c)}, {"e", e}});
    return terms;
}

template <field K>
MPoly<K> mpoly_from_json(const json& j, int nvars)
{
    MPoly<K> p(nvars);
    for (const auto& t : j) {
        std::vector<int> e = t.at("e").get<std::vector<int>>();
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("polynomial term has the wrong number of variables");
        p = p + MPoly<K>::term(nvars, e, scalar_parse<K>(t.at("c").get<std::string>()));
    }
    return p;
}

template <field K>
struct IdealFile {
    std::vector<std::string> vars;
    std::vector<MPoly<K>> gens;
};

template <field K>
json ideal_to_json(const IdealFile<K>& f)
{
    json j;
    j["field"] = field_to_json(describe_field<K>());
    j["vars"] = f.vars;
    json gens = json::array();
    for (const auto& g : f.gens) gens.push_back(mpoly_to_json(g));
    j["gens"] = gens;
    return j;
}

template <field K>
IdealFile<K> ideal_from_json(const json& j)
{
    IdealFile<K> f;
    f.vars = j.at("vars").get<std::vector<std::string>>();
    for (const auto& g : j.at("gens"))
        f.gens.push_back(mpoly_from_json<K>(g, static_cast<int>(f.vars.size())));
    return f;
}

// ---------------------------------------------------------------------------
// Operator fields, actions, difference modules
// ---------------------------------------------------------------------------

inline SigmaKind sigma_from_string(const std::string& s)
{
    if (s == "identity") return SigmaKind::identity;
    if (s == "shift") return SigmaKind::shift;
    throw std::invalid_argument("unknown sigma kind: " + s);
}

inline HsKind hs_from_string(const std::string& s)
{
    if (s == "trivial") return HsKind::trivial;
    if (s == "divided") return HsKind::divided;
    if (s == "naive") return HsKind::naive_iterate;
    if (s == "zero2") return HsKind::truncated_two;
    if (s == "euler") return HsKind::euler;
    throw std::invalid_argument("unknown hs kind: " + s);
}

inline ActionKind action_from_string(const std::string& s)
{
    if (s == "trivial") return ActionKind::trivial;
    if (s == "hs" || s == "divided") return ActionKind::hs;
    if (s == "shift") return ActionKind::shift;
    if (s == "product") return ActionKind::product;
    if (s == "free-derivation") return ActionKind::free_derivation;
    throw std::invalid_argument("unknown action kind: " + s);
}

template <field K>
json difference_module_to_json(const DifferenceModule<K>& m)
{
    json j;
    j["field"] = field_to_json(describe_field<K>());
    j["sigma"] = to_string(m.field.sigma_kind());
    j["hs"] = to_string(m.field.hs_kind());
    j["depth"] = m.field.max_depth();
    j["dim"] = m.dim;
    j["matrix"] = matrix_to_json(m.matrix);
    return j;
}

template <field K>
DifferenceModule<K> difference_module_from_json(const json& j)
{
    if (field_from_json(j.at("field")) != describe_field<K>())
        throw std::invalid_argument("module file field does not match the requested field");
    OperatorField<K> f(sigma_from_string(j.at("sigma").get<std::string>()),
                       hs_from_string(j.at("hs").get<std::string>()), j.value("depth", 16));
    return make_difference_module(f, matrix_from_json<K>(j.at("matrix")));
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json report_to_json(const CheckReport& rep)
{
    json items = json::array();
    for (const auto& it : rep.items()) {
        json e{{"name", it.name}, {"pass", it.pass}};
        if (!it.witness.empty()) e["witness"] = it.witness;
        items.push_back(e);
    }
    return json{{"pass", rep.all_pass()}, {"items", items}};
}

inline void write_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace opfields

#endif
