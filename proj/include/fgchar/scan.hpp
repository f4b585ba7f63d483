#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "fgchar/catalog.hpp"
#include "fgchar/rep_analysis.hpp"

namespace fgchar {

struct ScanOptions {
    bool all_subgroups = false;  // skip conjugacy deduplication
    int family_cap = kDefaultSectionFamilyCap;
    int jobs = 1;
    // per-pair checks
    bool main_theorem = true;
    bool remark = true;
    bool corollary_z2 = true;
    bool section = true;
    bool main_tech = true;
    // per-group checks
    bool gaschutz = true;
    bool omega = true;
    bool existence = true;
    bool quasikernel = true;
};

struct ScanFailure {
    std::string check;
    int group_index = 0;
    std::string group_spec;
    int group_order = 0;
    std::vector<int> h_elements;  // empty for group-level checks
    std::optional<int> rho_row;
    std::string detail;
};

struct ScanReport {
    long pairs_checked = 0;  // (G, H, rho) triples
    int groups = 0;
    std::map<std::string, long> checks_run;
    std::vector<ScanFailure> failures;
    bool pass() const { return failures.empty(); }
};

namespace detail {

struct ItemResult {
    long triples = 0;
    std::map<std::string, long> checks;
    std::vector<ScanFailure> failures;
};

inline bool has_cyclic_center(const GroupPtr& g) {
    const auto& z = center(g);
    for (int x : z.elements())
        if (g->element_order(x) == z.order()) return true;
    return false;
}

inline std::string row_list(const std::vector<Constituent>& cs) {
    std::string out;
    for (const auto& c : cs)
        out += (out.empty() ? "" : ",") + std::to_string(c.row) + "(d" + std::to_string(c.degree) + (c.cp_on_h ? ",cp" : "") +
               (c.faithful_on_h ? "" : ",unfaithful") + ")";
    return out;
}

inline void scan_pair(const CatalogEntry& entry, int index, const Subgroup& h, const ScanOptions& opt, ItemResult& r) {
    auto emb = as_group(h);
    if (!has_cyclic_center(emb.group)) return;  // no faithful irreducible of H
    const auto& th = character_table(emb.group);
    const auto& tg = character_table(entry.group);
    const auto& iota = emb.inclusion;
    auto failure = [&](const std::string& check, int row, const std::string& detail) {
        r.failures.push_back({check, index, entry.spec, entry.group->order(), h.elements(), row, detail});
    };
    std::optional<SectionCheck> hyp;  // computed lazily, shared across rho
    const bool prime_power_center = detail::is_prime_power(center(emb.group).order());
    std::optional<HListChoices> hlists;
    for (int row : faithful_rows(th)) {
        const auto& rho = th.rows[row];
        ++r.triples;
        try {
            if (opt.main_theorem) {
                ++r.checks["main_theorem"];
                auto e = find_cp_constituents(rho, iota, tg);
                if (!e.satisfied) failure("main_theorem", row, "constituents " + row_list(e.constituents));
                for (const auto& c : e.constituents)
                    if (!c.faithful_on_h) failure("faithful_restriction", row, "constituent " + std::to_string(c.row));
            }
            if (opt.remark && prime_power_center) {
                ++r.checks["remark"];
                if (!remark_minimizer_check(rho, iota, tg)) failure("remark", row, "a minimizing constituent is not center-preserving on H");
            }
            if (opt.corollary_z2 && corollary_z2_hypotheses(rho, iota).hold()) {
                ++r.checks["corollary_z2"];
                if (!corollary_z2_check(rho, iota, tg)) failure("corollary_z2", row, "no constituent with the required kernel");
            }
            if (opt.section) {
                ++r.checks["section"];
                // hypothesis => conclusion can only fail when the conclusion fails
                if (!section_conclusion(rho, iota, tg)) {
                    if (!hyp) hyp = section_hypothesis(iota, opt.family_cap);
                    if (hyp->hypothesis.value_or(false)) failure("section", row, "hypothesis holds but no faithful constituent");
                }
            }
            if (opt.main_tech) {
                if (!hlists) hlists = main_tech_h_lists(iota);
                for (const auto& list : hlists->lists) {
                    ++r.checks["main_tech"];
                    if (!main_tech_check(rho, iota, list, tg)) {
                        std::string l;
                        for (int x : list) l += (l.empty() ? "" : ",") + emb.group->label(x);
                        failure("main_tech", row, "h_list [" + l + "]");
                    }
                }
            }
        } catch (const Error& e) {
            failure("error", row, e.what());
        }
    }
}

inline void scan_group_level(const CatalogEntry& entry, int index, const ScanOptions& opt, ItemResult& r) {
    const auto& g = entry.group;
    if (g->order() == 1) return;
    auto failure = [&](const std::string& check, const std::string& detail) {
        r.failures.push_back({check, index, entry.spec, g->order(), {}, std::nullopt, detail});
    };
    try {
        const auto& t = character_table(g);
        if (opt.gaschutz) {
            ++r.checks["gaschutz"];
            auto gr = gaschutz(g, t);
            if (!gr.agree())
                failure("gaschutz", std::string("flags ") + char('0' + gr.faithful_irreducible) + char('0' + gr.socle_single_class) +
                                        char('0' + gr.socle_abelian_single_class) + char('0' + gr.normals_in_socle_abelian_single_class));
        }
        if (opt.omega) {
            auto chars = central_characters(g);
            for (std::size_t i = 0; i < chars.size(); ++i) {
                ++r.checks["omega"];
                auto om = omega_chi(g, chars[i]);
                if (!om.agree()) failure("omega", "central character " + std::to_string(i));
            }
        }
        if (opt.existence) {
            ++r.checks["existence"];
            if (!cp_existence(g, t).routes_agree()) failure("existence", "routes disagree");
        }
        if (opt.quasikernel) {
            ++r.checks["quasikernel"];
            if (!(quasikernel_intersection(g, t) == center(g))) failure("quasikernel", "K1(G) differs from Z(G)");
        }
    } catch (const Error& e) {
        failure("error", e.what());
    }
}

/// Runs fn(i) for i in [0, n) on `jobs` threads; results land in caller-owned slots.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Subgroups of g the scan visits: conjugacy representatives unless disabled.
inline std::vector<Subgroup> scan_subgroups(const GroupPtr& g, bool all) {
    auto subs = all_subgroups(g, kMaxGroupOrder);
    return all ? subs : subgroup_class_representatives(subs);
}

/// Every check over every (G, H, rho) work item. The merged report is
/// independent of `jobs`: items are ordered by (|G|, catalog index, |H|, H elements)
/// and failures inside an item by rho row.
inline ScanReport scan(const std::vector<CatalogEntry>& catalog, const ScanOptions& opt = {}) {
    struct Item {
        int index;
        std::optional<Subgroup> h;  // absent: group-level checks
    };
    std::vector<int> order(catalog.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return catalog[a].group->order() < catalog[b].group->order(); });

    std::vector<std::vector<Subgroup>> subs(catalog.size());
    detail::parallel_for(catalog.size(), opt.jobs, [&](std::size_t i) { subs[i] = scan_subgroups(catalog[i].group, opt.all_subgroups); });

    std::vector<Item> items;
    for (int i : order) {
        items.push_back({i, std::nullopt});
        for (const auto& h : subs[i]) items.push_back({i, h});
    }
    std::vector<detail::ItemResult> results(items.size());
    detail::parallel_for(items.size(), opt.jobs, [&](std::size_t k) {
        const auto& it = items[k];
        if (it.h) detail::scan_pair(catalog[it.index], it.index, *it.h, opt, results[k]);
        else detail::scan_group_level(catalog[it.index], it.index, opt, results[k]);
    });

    ScanReport report;
    report.groups = static_cast<int>(catalog.size());
    for (auto& r : results) {
        report.pairs_checked += r.triples;
        for (const auto& [k, v] : r.checks) report.checks_run[k] += v;
        for (auto& f : r.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

}  // namespace fgchar
