#pragma once

// JSON forms of scalars, algebras, linear maps, parameter tuples and replay
// certificates. Every reader throws ParseError on malformed input.
//
//   Scalar      "p/q" or "p" (integers are also accepted on input)
//   Algebra     {"dim": n, "basis": [...], "table": [{"left": i, "right": j, "coords": [...]}]}
//   LinearMap   {"dim": n, "columns": [[...], ...]}, column i = image of b_i
//   AutParams   {"alpha": "p/q", "beta": ...}

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/families.hpp"
#include "leibniz/linear_map.hpp"
#include "leibniz/necessity.hpp"

namespace leibniz {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

inline std::size_t index_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

inline const Json& array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    return v;
}

inline std::string string_of(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace detail

inline Json scalar_to_json(const Scalar& s) { return to_string(s); }

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("scalar must be a \"p/q\" string or an integer");
}

inline Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

inline Vector vector_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw ParseError("coordinate list must be an array");
    if (j.size() != dim) throw ParseError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
    Vector v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

// --- Algebra ----------------------------------------------------------------

inline Json algebra_to_json(const Algebra& a) {
    Json table = Json::array();
    for (const auto& [key, value] : a.table())
        table.push_back({{"left", key.first}, {"right", key.second}, {"coords", vector_to_json(value)}});
    return {{"dim", a.dim()}, {"basis", a.labels()}, {"table", std::move(table)}};
}

inline Algebra algebra_from_json(const Json& j) {
    const std::size_t dim = detail::index_field(j, "dim");
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        for (const auto& l : detail::array_field(j, "basis")) labels.push_back(detail::string_of(l, "basis label"));
        if (labels.size() != dim) throw ParseError("basis has " + std::to_string(labels.size()) + " labels, dim is " + std::to_string(dim));
    } else {
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    }
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size()) throw ParseError("basis labels must be pairwise distinct");

    Algebra a(labels);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& entry : detail::array_field(j, "table")) {
        const std::size_t l = detail::index_field(entry, "left"), r = detail::index_field(entry, "right");
        if (l >= dim || r >= dim) throw ParseError("table index out of range");
        if (!seen.insert({l, r}).second) throw ParseError("duplicate table entry for pair (" + std::to_string(l) + "," + std::to_string(r) + ")");
        a.set_product(l, r, vector_from_json(detail::field(entry, "coords"), dim));
    }
    return a;
}

// --- LinearMap --------------------------------------------------------------

inline Json map_to_json(const LinearMap& m) {
    Json cols = Json::array();
    for (std::size_t i = 0; i < m.source_dim(); ++i) cols.push_back(vector_to_json(m.image(i)));
    return {{"dim", m.source_dim()}, {"columns", std::move(cols)}};
}

inline LinearMap map_from_json(const Json& j) {
    const std::size_t dim = detail::index_field(j, "dim");
    const Json& cols = detail::array_field(j, "columns");
    if (cols.size() != dim) throw ParseError("map needs " + std::to_string(dim) + " columns");
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set_col(i, vector_from_json(cols[i], dim));
    return LinearMap(std::move(m));
}

// --- AutParams --------------------------------------------------------------

inline Json params_to_json(const AutParams& p) {
    Json out = Json::object();
    const auto& names = parameter_names(p.family());
    for (std::size_t k = 0; k < names.size(); ++k) out[names[k]] = scalar_to_json(p[k]);
    return out;
}

inline AutParams params_from_json(FamilyId f, const Json& j) {
    if (!j.is_object()) throw ParseError("parameters must be an object");
    const auto& names = parameter_names(f);
    for (const auto& [key, value] : j.items())
        if (std::find(names.begin(), names.end(), key) == names.end())
            throw ParseError("unknown parameter '" + key + "' for " + to_string(f));
    std::vector<Scalar> values;
    for (const auto& name : names) values.push_back(scalar_from_json(detail::field(j, name.c_str())));
    return AutParams(f, std::move(values));
}

/// Parses "alpha=p/q,beta=p/q,...".
inline AutParams parse_params(FamilyId f, std::string_view text) {
    Json j = Json::object();
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, end - start);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected name=value in '" + std::string(item) + "'");
        const std::string name(item.substr(0, eq));
        if (j.contains(name)) throw ParseError("parameter '" + name + "' given twice");
        j[name] = std::string(item.substr(eq + 1));
        start = end + 1;
    }
    return params_from_json(f, j);
}

// --- Certificate ------------------------------------------------------------

inline Json constraint_to_json(const Constraint& c) {
    return {{"kind", to_string(c.kind)},
            {"var", c.var ? Json(*c.var) : Json(nullptr)},
            {"value_poly", c.value.to_string()},
            {"divided_by", c.divided_by},
            {"source", c.source}};
}

inline Constraint constraint_from_json(const Json& j) {
    Constraint c;
    c.kind = parse_constraint_kind(detail::string_of(detail::field(j, "kind"), "kind"));
    const Json& var = detail::field(j, "var");
    if (!var.is_null()) c.var = detail::string_of(var, "var");
    if ((c.kind == Constraint::Kind::Solved) != c.var.has_value())
        throw ParseError("a solved constraint carries a variable and no other kind does");
    c.value = Poly::parse(detail::string_of(detail::field(j, "value_poly"), "value_poly"));
    for (const auto& d : detail::array_field(j, "divided_by")) c.divided_by.push_back(detail::string_of(d, "divisor"));
    c.source = detail::string_of(detail::field(j, "source"), "source");
    return c;
}

inline Json certificate_to_json(const Certificate& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json cs = Json::array();
        for (const auto& k : s.constraints) cs.push_back(constraint_to_json(k));
        steps.push_back({{"pair", {s.left, s.right}},
                         {"assume_nonzero", s.assumed_nonzero},
                         {"harvest", s.harvested},
                         {"constraints", std::move(cs)}});
    }
    Json closing = Json::array();
    for (const auto& k : c.closing) closing.push_back(constraint_to_json(k));
    Json sides = Json::array();
    for (const auto& s : c.side_conditions)
        sides.push_back({{"var", s.var}, {"witness", s.witness ? Json(*s.witness) : Json(nullptr)}});
    Json params = Json::object();
    for (const auto& [name, var] : c.parameters) params[name] = var;
    Json images = Json::array();
    for (const auto& col : c.final_images) {
        Json row = Json::array();
        for (const auto& p : col) row.push_back(p.to_string());
        images.push_back(std::move(row));
    }
    return {{"family", to_string(c.family)},
            {"n", c.n},
            {"basis", c.basis},
            {"steps", std::move(steps)},
            {"closing", std::move(closing)},
            {"side_conditions", std::move(sides)},
            {"parameters", std::move(params)},
            {"final_images", std::move(images)},
            {"mismatches", c.mismatches},
            {"all_pairs_hold", c.all_pairs_hold},
            {"match", c.match}};
}

inline Certificate certificate_from_json(const Json& j) {
    using detail::array_field;
    using detail::field;
    using detail::string_of;
    Certificate c;
    c.family = parse_family(string_of(field(j, "family"), "family"));
    c.n = detail::index_field(j, "n");
    for (const auto& b : array_field(j, "basis")) c.basis.push_back(string_of(b, "basis label"));
    for (const auto& s : array_field(j, "steps")) {
        CertificateStep step;
        const Json& pair = array_field(s, "pair");
        if (pair.size() != 2) throw ParseError("a step pair has two entries");
        step.left = string_of(pair[0], "pair entry");
        step.right = string_of(pair[1], "pair entry");
        for (const auto& v : array_field(s, "assume_nonzero")) step.assumed_nonzero.push_back(string_of(v, "variable"));
        for (const auto& v : array_field(s, "harvest")) step.harvested.push_back(string_of(v, "label"));
        for (const auto& k : array_field(s, "constraints")) step.constraints.push_back(constraint_from_json(k));
        c.steps.push_back(std::move(step));
    }
    for (const auto& k : array_field(j, "closing")) c.closing.push_back(constraint_from_json(k));
    for (const auto& s : array_field(j, "side_conditions")) {
        SideCondition sc{string_of(field(s, "var"), "var"), std::nullopt};
        if (!field(s, "witness").is_null()) sc.witness = string_of(field(s, "witness"), "witness");
        c.side_conditions.push_back(std::move(sc));
    }
    const Json& params = field(j, "parameters");
    if (!params.is_object()) throw ParseError("parameters must be an object");
    for (const auto& name : parameter_names(c.family))
        c.parameters.emplace_back(name, string_of(field(params, name.c_str()), "parameter variable"));
    for (const auto& row : array_field(j, "final_images")) {
        if (!row.is_array()) throw ParseError("final image rows must be arrays");
        PolyVector col;
        for (const auto& p : row) col.push_back(Poly::parse(string_of(p, "polynomial")));
        c.final_images.push_back(std::move(col));
    }
    for (const auto& m : array_field(j, "mismatches")) c.mismatches.push_back(string_of(m, "label"));
    const auto flag = [&](const char* key) {
        const Json& v = field(j, key);
        if (!v.is_boolean()) throw ParseError(std::string(key) + " must be a boolean");
        return v.get<bool>();
    };
    c.all_pairs_hold = flag("all_pairs_hold");
    c.match = flag("match");
    return c;
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace leibniz
