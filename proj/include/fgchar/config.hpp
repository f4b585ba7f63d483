#pragma once

#include <string>
#include <vector>

#include <toml.hpp>

#include "fgchar/catalog.hpp"
#include "fgchar/scan.hpp"

namespace fgchar {

struct ScanConfig {
    std::string preset = "default";  // "default", "examples" or "none"
    int max_order = 64;
    std::vector<std::string> extra;  // additional specs, subject to max_order
    ScanOptions options;
};

namespace detail {

template <class T>
T toml_get(const toml::table& t, std::string_view section, std::string_view key, T fallback) {
    const auto* sec = t[section].as_table();
    if (!sec) return fallback;
    const auto* node = sec->get(key);
    if (!node) return fallback;
    auto v = node->template value<T>();
    if (!v) fail(ErrorCode::InvalidInput, "config key " + std::string(section) + "." + std::string(key) + " has the wrong type");
    return *v;
}

}  // namespace detail

inline ScanConfig parse_scan_config(const toml::table& t) {
    using detail::toml_get;
    static const std::vector<std::pair<std::string, std::vector<std::string>>> known = {
        {"catalog", {"preset", "max_order", "extra"}},
        {"scan", {"all_subgroups", "family_cap", "jobs"}},
        {"checks", {"main_theorem", "remark", "corollary_z2", "section", "main_tech", "gaschutz", "omega", "existence", "quasikernel"}},
    };
    for (const auto& [section, node] : t) {
        auto it = std::find_if(known.begin(), known.end(), [&](const auto& k) { return k.first == section.str(); });
        if (it == known.end()) fail(ErrorCode::InvalidInput, "unknown config section [" + std::string(section.str()) + "]");
        if (const auto* sec = node.as_table())
            for (const auto& [key, _] : *sec)
                if (std::find(it->second.begin(), it->second.end(), key.str()) == it->second.end())
                    fail(ErrorCode::InvalidInput, "unknown config key " + it->first + "." + std::string(key.str()));
    }
    ScanConfig c;
    c.preset = toml_get<std::string>(t, "catalog", "preset", c.preset);
    if (c.preset != "default" && c.preset != "examples" && c.preset != "none")
        fail(ErrorCode::InvalidInput, "catalog.preset must be default, examples or none");
    c.max_order = static_cast<int>(toml_get<int64_t>(t, "catalog", "max_order", c.max_order));
    if (const auto* cat = t["catalog"].as_table())
        if (const auto* arr = cat->get_as<toml::array>("extra"))
            for (const auto& e : *arr) {
                auto s = e.value<std::string>();
                if (!s) fail(ErrorCode::InvalidInput, "catalog.extra entries must be strings");
                c.extra.push_back(*s);
            }
    auto& o = c.options;
    o.all_subgroups = toml_get<bool>(t, "scan", "all_subgroups", o.all_subgroups);
    o.family_cap = static_cast<int>(toml_get<int64_t>(t, "scan", "family_cap", o.family_cap));
    o.jobs = static_cast<int>(toml_get<int64_t>(t, "scan", "jobs", o.jobs));
    o.main_theorem = toml_get<bool>(t, "checks", "main_theorem", o.main_theorem);
    o.remark = toml_get<bool>(t, "checks", "remark", o.remark);
    o.corollary_z2 = toml_get<bool>(t, "checks", "corollary_z2", o.corollary_z2);
    o.section = toml_get<bool>(t, "checks", "section", o.section);
    o.main_tech = toml_get<bool>(t, "checks", "main_tech", o.main_tech);
    o.gaschutz = toml_get<bool>(t, "checks", "gaschutz", o.gaschutz);
    o.omega = toml_get<bool>(t, "checks", "omega", o.omega);
    o.existence = toml_get<bool>(t, "checks", "existence", o.existence);
    o.quasikernel = toml_get<bool>(t, "checks", "quasikernel", o.quasikernel);
    if (o.jobs < 1 || o.family_cap < 1 || c.max_order < 1) fail(ErrorCode::InvalidInput, "jobs, family_cap and max_order must be positive");
    return c;
}

inline ScanConfig load_scan_config(const std::string& path) {
    try {
        return parse_scan_config(toml::parse_file(path));
    } catch (const toml::parse_error& e) {
        fail(ErrorCode::InvalidInput, "config " + path + ": " + std::string(e.description()));
    }
}

inline std::vector<CatalogEntry> build_catalog(const ScanConfig& c) {
    std::vector<std::string> specs;
    if (c.preset == "default") specs = default_catalog_specs(c.max_order);
    else if (c.preset == "examples") specs = catalog_examples();
    auto out = evaluate_catalog(specs, 0, false);
    auto extra = evaluate_catalog(c.extra, c.max_order, false);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

}  // namespace fgchar
