#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgchar/central_ext.hpp"
#include "fgchar/char_table.hpp"
#include "fgchar/rep_analysis.hpp"
#include "fgchar/scan.hpp"

namespace fgchar::json_io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars

inline json rational(const mpq_class& q) { return json::array({q.get_num().get_str(), q.get_den().get_str()}); }

inline mpq_class rational_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        fail(ErrorCode::InvalidInput, "rational must be [\"num\", \"den\"]");
    mpq_class q;
    try {
        q = mpq_class(mpz_class(j[0].get<std::string>()), mpz_class(j[1].get<std::string>()));
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::InvalidInput, "rational has non-integer parts");
    }
    if (q.get_den() == 0) fail(ErrorCode::InvalidInput, "rational with zero denominator");
    q.canonicalize();
    return q;
}

inline json cycnum(const CycNum& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(rational(c));
    return {{"e", v.conductor()}, {"coeffs", coeffs}};
}

inline CycNum cycnum_from(const json& j) {
    std::vector<mpq_class> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from(x));
    return CycNum::from_canonical(j.at("e").get<int>(), std::move(c));
}

inline json elements(const std::vector<int>& v) { return json(v); }
inline json elements(const Subgroup& s) { return json(s.elements()); }

// ---------------------------------------------------------------------------
// Groups and tables

/// {"order", "mul", "labels"} plus the declared "names".
inline json group(const FiniteGroup& g) {
    json names = json::object();
    for (const auto& [n, v] : g.names()) names[n] = v;
    return {{"order", g.order()}, {"mul", g.table()}, {"labels", g.labels()}, {"names", names}};
}

inline GroupPtr group_from(const json& j) {
    try {
        const int n = j.at("order").get<int>();
        auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        else
            for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        if (static_cast<int>(mul.size()) != n) fail(ErrorCode::InvalidInput, "\"mul\" must have \"order\" rows");
        NamedElements names;
        if (j.contains("names"))
            for (const auto& [k, v] : j["names"].items()) names.emplace_back(k, v.get<int>());
        return FiniteGroup::from_multiplication_table(mul, std::move(labels), std::move(names));
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("group JSON: ") + e.what());
    }
}

inline json class_function(const ClassFunction& f) {
    json values = json::array();
    for (const auto& v : f.values) values.push_back(cycnum(v));
    return values;
}

inline json table(const CharacterTable& t) {
    const auto& cc = conjugacy_classes(t.group);
    json classes = json::array();
    for (const auto& c : cc.classes) classes.push_back(c);
    json rows = json::array();
    for (const auto& r : t.rows) {
        auto d = r.values[0].is_rational();
        rows.push_back({{"degree", d ? d->get_num().get_si() : 0}, {"values", class_function(r)}});
    }
    return {{"group", group(*t.group)}, {"classes", classes}, {"rows", rows}};
}

inline json decomposition(const Decomposition& d) {
    json out = json::array();
    for (auto [row, m] : d.components) out.push_back({{"row", row}, {"multiplicity", m}});
    return out;
}

// ---------------------------------------------------------------------------
// Reports

inline json constituent(const Constituent& c) {
    return {{"row", c.row}, {"multiplicity", c.multiplicity}, {"degree", c.degree}, {"faithful_on_h", c.faithful_on_h}, {"cp_on_h", c.cp_on_h}};
}

inline json cp_entry(const CpEntry& e) {
    json cs = json::array();
    for (const auto& c : e.constituents) cs.push_back(constituent(c));
    return {{"rho_row", e.rho_row ? json(*e.rho_row) : json(nullptr)}, {"constituents", cs}, {"satisfied", e.satisfied}};
}

inline json gaschutz(const GaschutzReport& r) {
    return {{"faithful_irreducible", r.faithful_irreducible},
            {"socle_single_class", r.socle_single_class},
            {"socle_abelian_single_class", r.socle_abelian_single_class},
            {"normals_in_socle_abelian_single_class", r.normals_in_socle_abelian_single_class},
            {"agree", r.agree()}};
}

inline json central_character(const CentralCharacter& chi) {
    json out = json::array();
    for (const auto& v : chi) out.push_back(rational(v));
    return out;
}

inline json scan_report(const ScanReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"check", f.check},
                            {"group_index", f.group_index},
                            {"group", f.group_spec},
                            {"group_order", f.group_order},
                            {"h_elements", f.h_elements},
                            {"rho_row", f.rho_row ? json(*f.rho_row) : json(nullptr)},
                            {"detail", f.detail}});
    json checks = json::object();
    for (const auto& [k, v] : r.checks_run) checks[k] = v;
    return {{"pairs_checked", r.pairs_checked},
            {"groups", r.groups},
            {"checks_run", checks},
            {"failures", failures},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

// ---------------------------------------------------------------------------
// Cocycles and extensions

inline json cocycle(const Cocycle& z) {
    json values = json::array();
    for (const auto& v : z.values) values.push_back(rational(v));
    return {{"order_base", z.base->order()}, {"values", values}};
}

inline Cocycle cocycle_from(const json& j, const GroupPtr& base) {
    try {
        const int n = j.at("order_base").get<int>();
        if (n != base->order()) fail(ErrorCode::GroupMismatch, "cocycle is over a group of order " + std::to_string(n));
        Cocycle z{base, {}};
        for (const auto& v : j.at("values")) z.values.push_back(rational_from(v));
        if (z.values.size() != static_cast<std::size_t>(n) * n) fail(ErrorCode::InvalidCocycle, "expected order_base^2 values");
        return z;
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("cocycle JSON: ") + e.what());
    }
}

inline json extension(const CentralExtension& ext) {
    json out = group(*ext.total);
    out["mu"] = ext.mu.elements();
    out["projection"] = ext.projection.image_of;
    return out;
}

}  // namespace fgchar::json_io
