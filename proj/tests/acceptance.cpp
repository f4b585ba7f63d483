// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                    exit 0 iff every criterion passes
//   acceptance --expect-fail 3    exit 0 iff exactly the listed criteria fail
//
// Library results are cross-checked against the brute-force oracles in
// oracles.hpp wherever a second route exists.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fgchar/catalog.hpp"
#include "fgchar/central_ext.hpp"
#include "fgchar/json_io.hpp"
#include "fgchar/scan.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fgchar;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [" << what << "]";
        }
    }
};

std::set<int> as_set(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

/// sigma(h) is scalar: chi(h x) = (chi(h)/chi(1)) chi(x) for all x.
bool acts_as_scalar(const FiniteGroup& g, const std::vector<CycNum>& chi, int h) {
    const mpq_class deg = *chi[g.identity()].is_rational();
    const CycNum lambda = chi[h].scaled(1 / deg);
    for (int x = 0; x < g.order(); ++x)
        if (!(chi[g.mul(h, x)] == lambda * chi[x])) return false;
    return true;
}

std::set<int> second_center_oracle(const FiniteGroup& g) {
    auto z = oracle::center(g);
    std::set<int> out;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int y = 0; y < g.order() && ok; ++y) ok = z.count(g.commutator(x, y)) > 0;
        if (ok) out.insert(x);
    }
    return out;
}

std::set<int> core_oracle(const FiniteGroup& g, const std::set<int>& k) {
    std::set<int> out;
    for (int a : k) {
        bool in_all = true;
        for (int x = 0; x < g.order() && in_all; ++x) in_all = k.count(g.mul(g.mul(x, a), g.inv(x))) > 0;
        if (in_all) out.insert(a);
    }
    return out;
}

// ---------------------------------------------------------------------------

void criterion_1(Outcome& o) {
    auto ex = example_heisenberg_pair();
    auto emb = as_group(ex.designated);
    const auto& th = character_table(emb.group);
    const auto& tg = character_table(ex.group);
    o.require(ex.group->order() == 16 && emb.group->order() == 4 && emb.group->is_abelian(), "|G| = 16, H = C4");
    auto report = cp_report(emb.inclusion, th, tg);
    o.require(report.faithful_rows.size() == 2, "two faithful linear characters of H");
    const auto zg = oracle::center(*ex.group);
    for (const auto& e : report.entries) {
        // degrees by an independent inner-product decomposition
        std::multiset<long> degs_lib, degs_oracle;
        for (const auto& c : e.constituents) degs_lib.insert(c.degree * c.multiplicity);
        auto ind = oracle::per_element(induce(th.rows[*e.rho_row], emb.inclusion));
        int both = 0, both_deg = 0;
        for (int r = 0; r < tg.size(); ++r) {
            auto sigma = oracle::per_element(tg.rows[r]);
            auto m = oracle::inner(*ex.group, ind, sigma).is_rational();
            if (!m || *m == 0) continue;
            degs_oracle.insert(tg.degree(r) * m->get_num().get_si());
            bool faithful = true, cp = true;
            for (int h : ex.designated.elements()) {
                if (h != ex.group->identity() && sigma[h] == sigma[ex.group->identity()]) faithful = false;
                if (!zg.count(h) && acts_as_scalar(*ex.group, sigma, h)) cp = false;
            }
            if (faithful && cp) {
                ++both;
                both_deg = static_cast<int>(tg.degree(r));
            }
        }
        o.require(degs_lib == std::multiset<long>{1, 1, 2}, "constituent degrees 2, 1, 1");
        o.require(degs_oracle == degs_lib, "oracle decomposition agrees");
        o.require(both == 1 && both_deg == 2, "exactly one faithful and center-preserving constituent, of degree 2");
        int lib_both = 0;
        for (const auto& c : e.constituents) lib_both += c.faithful_on_h && c.cp_on_h;
        o.require(lib_both == both, "library flags agree with oracle");
    }
    o.detail << " rho=2 each with degrees {2,1,1}, one faithful+cp constituent";
}

void criterion_2(Outcome& o) {
    auto ex = example_d8_cube();
    const auto& g = *ex.group;
    const auto& h = ex.designated;
    const auto& tg = character_table(ex.group);
    auto emb = as_group(h);
    o.require(g.order() == 256 && h.order() == 8 && emb.group->is_abelian() && emb.group->exponent() == 2, "|G| = 256, H = C2^3");
    const auto zg = oracle::center(g);
    int zh = 0;
    for (int x : h.elements()) zh += zg.count(x);
    o.require(zh == 1, "(a) Z(G) n H = 1");
    o.require(center(ex.group).intersect(h).is_trivial(), "(a) library agrees");

    int faithful_on_h = 0, cp_on_h = 0, abelian_kernels = 0;
    for (int r = 0; r < tg.size(); ++r) {
        auto chi = oracle::per_element(tg.rows[r]);
        bool faithful = true, cp = true;
        for (int x : h.elements()) {
            if (x != g.identity() && chi[x] == chi[g.identity()]) faithful = false;
            if (!zg.count(x) && acts_as_scalar(g, chi, x)) cp = false;
        }
        faithful_on_h += faithful;
        cp_on_h += cp;
        o.require(cp == row_cp_on(tg, r, emb.inclusion), "(c) library cp flag agrees for row " + std::to_string(r));
        abelian_kernels += oracle::is_abelian_set(g, oracle::kernel_elements(g, chi));
        o.require(is_abelian(row_kernels(tg)[r]) == oracle::is_abelian_set(g, oracle::kernel_elements(g, chi)), "(d) library agrees");
    }
    o.require(faithful_on_h > 0, "(b) some irreducible restricts faithfully to H");
    o.require(cp_on_h == 0, "(c) no irreducible is center-preserving on H");
    o.require(abelian_kernels == 0, "(d) every kernel is non-abelian");

    const auto& th = character_table(emb.group);
    int trivial_core = 0;
    for (int r = 0; r < th.size(); ++r) {
        std::set<int> k;
        for (int x : oracle::kernel_elements(*emb.group, oracle::per_element(th.rows[r]))) k.insert(emb.inclusion(x));
        trivial_core += core_oracle(g, k).size() == 1;
    }
    o.require(trivial_core > 0, "(e) some irreducible of H has trivial G-core of its kernel");
    o.detail << " classes=" << tg.size() << " faithful_on_H=" << faithful_on_h << " cp_on_H=" << cp_on_h << " abelian_kernels=" << abelian_kernels
             << " H_rows_trivial_core=" << trivial_core;
}

void criterion_3(Outcome& o) {
    auto ex = example_d8_c4();
    const auto& g = *ex.group;
    const auto& h = ex.designated;
    const auto& tg = character_table(ex.group);
    auto emb = as_group(h);
    o.require(g.order() == 32 && h.order() == 8, "|G| = 32, |H| = 8");
    const auto zg = oracle::center(g);

    std::vector<int> cp_rows;
    for (int r = 0; r < tg.size(); ++r) {
        auto chi = oracle::per_element(tg.rows[r]);
        bool cp = true;
        for (int x : h.elements())
            if (!zg.count(x) && acts_as_scalar(g, chi, x)) cp = false;
        o.require(cp == row_cp_on(tg, r, emb.inclusion), "(a) library cp flag agrees for row " + std::to_string(r));
        if (cp) cp_rows.push_back(r);
    }
    std::string rows;
    for (int r : cp_rows) rows += (rows.empty() ? "" : ",") + std::to_string(r) + "(d" + std::to_string(tg.degree(r)) + ")";
    o.require(cp_rows.empty(), "(a) no irreducible of G is center-preserving on H; found rows " + rows);

    const auto& th = character_table(emb.group);
    int linear_central = 0;
    for (int r = 0; r < th.size(); ++r) {
        if (th.degree(r) != 1) continue;
        bool inside = true;
        for (int x : oracle::kernel_elements(*emb.group, oracle::per_element(th.rows[r]))) inside = inside && zg.count(emb.inclusion(x)) > 0;
        linear_central += inside;
    }
    o.require(linear_central > 0, "(b) H has a linear character with kernel in Z(G)");

    auto z2 = second_center_oracle(g);
    o.require(z2 == as_set(second_center(ex.group)), "(c) library Z2 agrees");
    std::set<int> z2h, zh;
    for (int x : h.elements()) {
        if (z2.count(x)) z2h.insert(x);
        if (zg.count(x)) zh.insert(x);
    }
    o.require(z2h != zh, "(c) Z2(G) n H != Z(G) n H");
    o.detail << " cp_on_H_rows=" << cp_rows.size() << " linear_chars_kernel_in_Z=" << linear_central << " |Z2nH|=" << z2h.size()
             << " |ZnH|=" << zh.size();
}

std::string failure_summary(const ScanReport& r) {
    std::map<std::string, int> by;
    for (const auto& f : r.failures) ++by[f.check];
    std::string out;
    for (const auto& [k, v] : by) out += " " + k + "=" + std::to_string(v);
    return out;
}

ScanOptions only(const std::function<void(ScanOptions&)>& enable) {
    ScanOptions o;
    o.main_theorem = o.remark = o.corollary_z2 = o.section = o.main_tech = false;
    o.gaschutz = o.omega = o.existence = o.quasikernel = false;
    enable(o);
    return o;
}

void criterion_4(Outcome& o, const std::vector<CatalogEntry>& cat) {
    auto r = scan(cat, only([](ScanOptions& s) { s.main_theorem = true; }));
    o.require(r.pass(), "counterexamples:" + failure_summary(r));
    o.detail << " groups=" << r.groups << " triples=" << r.pairs_checked << " failures=" << r.failures.size();
}

void criterion_5(Outcome& o, const std::vector<CatalogEntry>& cat) {
    auto r = scan(cat, only([](ScanOptions& s) { s.gaschutz = true; }));
    o.require(r.pass(), "disagreements:" + failure_summary(r));
    o.detail << " groups_checked=" << r.checks_run["gaschutz"] << " failures=" << r.failures.size();
}

void criterion_6(Outcome& o, const std::vector<CatalogEntry>& cat) {
    auto r = scan(cat, only([](ScanOptions& s) { s.remark = true; }));
    o.require(r.pass(), "counterexamples:" + failure_summary(r));
    o.detail << " applicable_triples=" << r.checks_run["remark"] << " failures=" << r.failures.size();
}

void criterion_7(Outcome& o, const std::vector<CatalogEntry>& cat) {
    auto r = scan(cat, only([](ScanOptions& s) { s.omega = s.existence = true; }));
    o.require(r.pass(), "disagreements:" + failure_summary(r));
    int nilpotent = 0;
    for (const auto& e : cat) {
        if (e.group->order() == 1 || !is_nilpotent(e.group)) continue;
        ++nilpotent;
        auto ex = cp_existence(e.group);
        o.require(ex.omega_only.has_value() && *ex.omega_only == ex.exists(), "omega alone fails to predict existence for " + e.spec);
    }
    o.detail << " central_characters=" << r.checks_run["omega"] << " groups=" << r.checks_run["existence"] << " nilpotent=" << nilpotent
             << " failures=" << r.failures.size();
}

void criterion_8(Outcome& o, const std::vector<CatalogEntry>& cat) {
    int checked = 0;
    for (const auto& e : cat) {
        if (e.group->order() == 1) continue;
        ++checked;
        o.require(as_set(quasikernel_intersection(e.group)) == oracle::center(*e.group), "K1 != Z for " + e.spec);
    }
    o.detail << " groups=" << checked;
}

void criterion_9(Outcome& o, const std::vector<CatalogEntry>& cat) {
    int checked = 0;
    for (const auto& e : cat) {
        const auto& g = e.group;
        const auto& t = character_table(g);
        const auto& cc = conjugacy_classes(g);
        bool ok = t.size() == cc.size();
        long sum = 0;
        for (int i = 0; i < t.size(); ++i) sum += t.degree(i) * t.degree(i);
        ok = ok && sum == g->order();
        for (int i = 0; i < t.size() && ok; ++i)
            for (int j = i; j < t.size() && ok; ++j) ok = inner_product(t.rows[i], t.rows[j]) == CycNum(i == j ? 1 : 0);
        for (int a = 0; a < cc.size() && ok; ++a)
            for (int b = a; b < cc.size() && ok; ++b) {
                CycNum s(0);
                for (const auto& row : t.rows) s += row.values[a] * row.values[b].conj();
                ok = s == CycNum(a == b ? g->order() / cc.class_size(a) : 0);
            }
        // a second, independent evaluation of the same spec must serialize identically
        auto fresh = dsl::evaluate(e.spec).group;
        ok = ok && json_io::table(t).dump() == json_io::table(character_table(fresh)).dump();
        o.require(ok, "table integrity fails for " + e.spec);
        ++checked;
    }
    o.detail << " groups=" << checked;
}

void criterion_10(Outcome& o) {
    auto s = fixture::sl23();
    std::string flags;
    for (int k = 1; k <= 3; ++k) {
        auto m = fixture::natural_power(s, k);
        const bool lib = is_cyclic_module(m).cyclic;
        bool by_rank = false;
        for (int v = 0; v < m.order() && !by_rank; ++v) {
            std::vector<std::vector<int>> rows;
            for (int g = 0; g < m.actor->order(); ++g) rows.push_back(fixture::digits(m.act[g][v], 2 * k));
            by_rank = oracle::rank_mod_p(rows, 3) == 2 * k;
        }
        o.require(lib == by_rank, "rank oracle disagrees for V^" + std::to_string(k));
        o.require(lib == (k <= 2), "V^" + std::to_string(k) + " cyclicity");
        flags += std::string(" V^") + std::to_string(k) + "=" + (lib ? "cyclic" : "not-cyclic");
    }
    o.detail << flags;
}

mpq_class frac(mpq_class q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    q -= fl;
    q.canonicalize();
    return q;
}

bool splits_by_search(const CentralExtension& ext, const Subgroup& h) {
    for (const auto& s : oracle::subgroups_small(*ext.total)) {
        if (static_cast<int>(s.size()) != h.order()) continue;
        bool ok = true;
        for (int x : s) ok = ok && h.contains(ext.projection(x)) && (x == ext.total->identity() || !ext.mu.contains(x));
        if (ok) return true;
    }
    return false;
}

void criterion_11(Outcome& o) {
    std::mt19937 rng(2024);
    auto fixtures = fixture::extension_fixtures();
    int generated = 0;
    for (int i = 0; generated < 50; ++i, ++generated) {
        const auto& ext = fixtures[i % fixtures.size()].second;
        auto z = fixture::perturbed(cocycle_from_extension(ext), 1 + static_cast<int>(rng() % 3), rng);
        auto r = reduce_order(z);
        const auto& g = *z.base;
        bool killed = true;
        for (const auto& v : r.values) killed = killed && frac(v * g.order()) == 0;
        auto f = is_cohomologous_qz(z, r);
        bool witnessed = f.has_value();
        for (int a = 0; a < g.order() && witnessed; ++a)
            for (int b = 0; b < g.order() && witnessed; ++b)
                witnessed = frac(z.at(a, b) - r.at(a, b) - ((*f)[a] + (*f)[b] - (*f)[g.mul(a, b)])) == 0;
        o.require(killed && witnessed, "reduce_order on generated cocycle " + std::to_string(generated));
    }
    for (const char* spec : {"D(8)", "Q(8)"}) {
        auto g = dsl::evaluate(spec).group;
        auto z = cocycle_from_extension(fixture::central_quotient(center(g)));
        o.require(oracle::isomorphic(*extension_from_cocycle(z).total, *g), std::string("round trip ") + spec);
    }
    int kc = 0;
    for (const auto& [spec, ext] : fixtures) {
        std::set<int> expect;
        for (int x : oracle::center(*ext.total)) expect.insert(ext.projection(x));
        o.require(as_set(k_c(ext)) == expect && as_set(z_c(ext)) == expect, "k_c = z_c for " + spec);
        ++kc;
    }
    auto via_q8 = fixture::central_quotient(center(generalized_quaternion(8)));
    auto ea = elementary_abelian(2, 3);
    auto split = fixture::central_quotient(subgroup_generated(ea, std::vector<int>{*ea->named("c")}));
    int q8_splits = 0, split_splits = 0, involutions = 0;
    for (const auto& h : all_subgroups(via_q8.base())) {
        if (h.order() != 2) continue;
        ++involutions;
        bool lib = splits_over_subgroup(via_q8, h).has_value();
        o.require(lib == splits_by_search(via_q8, h), "Q8 split search oracle");
        q8_splits += lib;
    }
    for (const auto& h : all_subgroups(split.base())) {
        if (h.order() != 2) continue;
        bool lib = splits_over_subgroup(split, h).has_value();
        o.require(lib == splits_by_search(split, h), "split extension search oracle");
        split_splits += lib;
    }
    o.require(q8_splits == 0, "C2xC2 via Q8 splits over no order-2 subgroup");
    o.require(split_splits == involutions, "C2xC2 via the split extension splits over all");
    o.detail << " reduced=" << generated << " kc_fixtures=" << kc << " q8_splits=" << q8_splits << "/" << involutions
             << " split_splits=" << split_splits << "/" << involutions;
}

void criterion_12(Outcome& o, const std::vector<CatalogEntry>& cat) {
    std::mt19937 rng(12);
    std::map<int, std::vector<Subgroup>> subs;
    int sampled = 0, with_oracle_induce = 0;
    for (; sampled < 1000; ++sampled) {
        const int gi = static_cast<int>(rng() % cat.size());
        const auto& g = cat[gi].group;
        auto& list = subs[gi];
        if (list.empty()) list = all_subgroups(g);
        auto emb = as_group(list[rng() % list.size()]);
        const auto& th = character_table(emb.group);
        const auto& tg = character_table(g);
        const auto& rho = th.rows[rng() % th.size()];
        const auto& sigma = tg.rows[rng() % tg.size()];
        auto ind = oracle::per_element(induce(rho, emb.inclusion));
        if (g->order() <= 64) {
            std::vector<int> in_h(static_cast<std::size_t>(g->order()), -1);
            for (int x = 0; x < emb.group->order(); ++x) in_h[emb.inclusion(x)] = x;
            o.require(ind == oracle::induced_by_elements(*g, in_h, oracle::per_element(rho), emb.group->order()),
                      "induce differs from the element-sum formula on " + cat[gi].spec);
            ++with_oracle_induce;
        }
        auto lhs = oracle::inner(*g, ind, oracle::per_element(sigma));
        auto rhs = oracle::inner(*emb.group, oracle::per_element(rho), oracle::per_element(restrict(sigma, emb.inclusion)));
        o.require(lhs == rhs, "reciprocity fails on " + cat[gi].spec);
    }
    o.detail << " triples=" << sampled << " groups_touched=" << subs.size() << " induce_cross_checked=" << with_oracle_induce;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_fail;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            for (std::string tok; std::getline(ss, tok, ',');) expected_fail.insert(std::stoi(tok));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N[,N...]]\n";
            return 1;
        }
    }

    const auto catalog = default_catalog();
    struct Criterion {
        int id;
        const char* name;
        double budget_s;  // 0 = no stated bound
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "heis-pair exactly-one", 1, criterion_1},
        {2, "d8cube", 30, criterion_2},
        {3, "d8xc4", 5, criterion_3},
        {4, "main-theorem scan", 600, [&](Outcome& o) { criterion_4(o, catalog); }},
        {5, "gaschutz scan", 120, [&](Outcome& o) { criterion_5(o, catalog); }},
        {6, "prime-power-center remark scan", 0, [&](Outcome& o) { criterion_6(o, catalog); }},
        {7, "omega criterion and existence routes", 0, [&](Outcome& o) { criterion_7(o, catalog); }},
        {8, "K1 = Z", 0, [&](Outcome& o) { criterion_8(o, catalog); }},
        {9, "character-table integrity", 0, [&](Outcome& o) { criterion_9(o, catalog); }},
        {10, "SL(2,3) natural-module powers", 10, criterion_10},
        {11, "cocycle suite", 0, criterion_11},
        {12, "Frobenius reciprocity", 0, [&](Outcome& o) { criterion_12(o, catalog); }},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.pass = false;
            o.detail << " [over time budget " << c.budget_s << " s]";
        }
        if (!o.pass) failed.insert(c.id);
        std::printf("%s %2d %-38s %8.2fs%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (!expected_fail.empty()) {
        const bool match = failed == expected_fail;
        std::printf("expected failures %s\n", match ? "match" : "DO NOT match");
        return match ? 0 : 1;
    }
    return failed.empty() ? 0 : 1;
}
