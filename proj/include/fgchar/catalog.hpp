#pragma once

#include <string>
#include <vector>

#include "fgchar/dsl.hpp"

namespace fgchar {

struct CatalogEntry {
    std::string spec;
    GroupPtr group;
    std::optional<Subgroup> designated;
};

/// Named groups used as-is.
inline std::vector<std::string> catalog_base_atoms() {
    return {"C(2)",  "C(3)",  "C(4)",  "C(5)",   "C(6)",   "C(7)",   "C(8)",    "C(9)",    "C(12)",   "C(16)",
            "D(6)",  "D(8)",  "D(10)", "D(12)",  "D(14)",  "D(16)",  "D(18)",   "D(20)",   "D(24)",   "D(32)",
            "Q(8)",  "Q(16)", "Q(32)", "S(4)",   "A(4)",   "A(5)",   "EA(2,2)", "EA(2,3)", "EA(2,4)", "EA(3,2)",
            "EA(5,2)", "Heis(3)", "Heis(4)"};
}

/// Factors combined pairwise by direct products.
inline std::vector<std::string> catalog_product_factors() {
    return {"C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(8)", "D(6)", "D(8)", "Q(8)", "D(10)", "A(4)", "EA(2,2)", "C(7)", "D(12)", "Q(16)", "D(16)", "S(4)"};
}

/// Abelian normal factors (exponent > 2) and acting groups for semidirect products.
inline std::vector<std::string> catalog_sdp_normals() {
    return {"C(3)", "C(4)", "C(5)", "C(6)", "C(7)", "C(8)", "C(9)", "C(12)", "C(16)", "EA(3,2)", "C(4) x C(2)", "C(4) x C(4)", "EA(5,2)"};
}
inline std::vector<std::string> catalog_sdp_actors() { return {"C(2)", "C(4)", "C(6)", "EA(2,2)", "D(8)", "Q(8)", "C(8)", "EA(2,3)"}; }

inline std::vector<std::string> catalog_examples() { return {"paper:ex-heis-pair", "paper:ex-d8cube", "paper:ex-d8xc4"}; }

/// Evaluates a list of specs, keeping those of order <= max_order (0 = no cap).
/// Specs that fail to evaluate are skipped when `skip_invalid`, otherwise rethrown.
inline std::vector<CatalogEntry> evaluate_catalog(const std::vector<std::string>& specs, int max_order, bool skip_invalid) {
    std::vector<CatalogEntry> out;
    for (const auto& s : specs) {
        try {
            auto ev = dsl::evaluate(s);
            if (max_order > 0 && ev.group->order() > max_order) continue;
            out.push_back({s, ev.group, ev.designated});
        } catch (const Error&) {
            if (!skip_invalid) throw;
        }
    }
    return out;
}

/// Specs of the default catalog: base atoms, binary direct products and
/// semidirect products under the two inversion actions, all of order at most
/// `max_order`, then the worked examples (which are exempt from the cap).
inline std::vector<std::string> default_catalog_specs(int max_order = 64) {
    std::vector<std::string> specs;
    auto order_of = [](const std::string& s) { return dsl::evaluate(s).group->order(); };
    for (const auto& s : catalog_base_atoms())
        if (order_of(s) <= max_order) specs.push_back(s);
    const auto factors = catalog_product_factors();
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i; j < factors.size(); ++j)
            if (order_of(factors[i]) * order_of(factors[j]) <= max_order) specs.push_back(factors[i] + " x " + factors[j]);
    for (const auto& n : catalog_sdp_normals())
        for (const auto& h : catalog_sdp_actors()) {
            if (order_of(n) * order_of(h) > max_order) continue;
            for (const char* action : {"inversion", "diagonal-inversion"}) {
                std::string spec = "sdp(" + n + ", " + h + ", " + action + ")";
                // cyclic actors have one generator: both actions coincide
                if (std::string(action) == "diagonal-inversion" && dsl::evaluate(h).group->generators().size() == 1) continue;
                try {
                    dsl::evaluate(spec);
                    specs.push_back(spec);
                } catch (const Error&) {
                    // the action does not define a homomorphism into Aut(N)
                }
            }
        }
    for (const auto& s : catalog_examples()) specs.push_back(s);
    return specs;
}

inline std::vector<CatalogEntry> default_catalog(int max_order = 64) {
    auto specs = default_catalog_specs(max_order);
    std::vector<CatalogEntry> out;
    for (const auto& s : specs) {
        auto ev = dsl::evaluate(s);
        out.push_back({s, ev.group, ev.designated});
    }
    return out;
}

}  // namespace fgchar
