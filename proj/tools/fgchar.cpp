// Command-line front end: one subcommand per analysis, JSON or text output.
// Exit codes: 0 success, 1 usage or input error, 2 mathematical counterexample.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgchar/central_ext.hpp"
#include "fgchar/config.hpp"
#include "fgchar/dsl.hpp"
#include "fgchar/json_io.hpp"
#include "fgchar/rep_analysis.hpp"
#include "fgchar/scan.hpp"

using namespace fgchar;
using nlohmann::json;

namespace {

struct Globals {
    std::string format = "text";
    std::string out;
    std::optional<long> seed;  // reserved: every algorithm is deterministic
};

struct Result {
    json data;
    std::string text;
    int code = 0;
};

std::string set_str(const GroupPtr& g, const std::vector<int>& els) {
    std::string s = "{";
    for (std::size_t i = 0; i < els.size(); ++i) s += (i ? ", " : "") + g->label(els[i]);
    return s + "}";
}
std::string set_str(const Subgroup& s) { return set_str(s.parent(), s.elements()); }

std::string yes(bool b) { return b ? "yes" : "no"; }

Subgroup subgroup_arg(const dsl::Evaluated& ev, const std::string& words) {
    if (!words.empty()) return dsl::subgroup_from_words(ev.group, words);
    if (ev.designated) return *ev.designated;
    fail(ErrorCode::InvalidInput, "--subgroup is required for groups without a designated subgroup");
}

// ---------------------------------------------------------------------------

Result cmd_table(const std::string& spec) {
    auto g = dsl::evaluate(spec).group;
    const auto& t = character_table(g);
    const auto& cc = conjugacy_classes(g);
    Result r{json_io::table(t), {}, 0};
    std::ostringstream os;
    os << "order " << g->order() << ", " << t.size() << " classes\nclass reps:";
    for (int k = 0; k < cc.size(); ++k) os << "  [" << k << "] " << g->label(cc.reps[k]) << " (size " << cc.class_size(k) << ")";
    os << "\n";
    for (int i = 0; i < t.size(); ++i) {
        os << "chi" << i << ":";
        for (const auto& v : t.rows[i].values) os << "  " << v;
        os << "\n";
    }
    r.text = os.str();
    return r;
}

Result cmd_socle(const std::string& spec) {
    auto g = dsl::evaluate(spec).group;
    json mins = json::array();
    std::ostringstream os;
    os << "minimal normal subgroups:\n";
    for (const auto& m : minimal_normal_subgroups(g)) {
        mins.push_back({{"elements", m.elements()}, {"order", m.order()}, {"abelian", is_abelian(m)}});
        os << "  order " << m.order() << (is_abelian(m) ? " abelian " : " non-abelian ") << set_str(m) << "\n";
    }
    const auto& s = socle(g);
    const auto& sa = socle_abelian(g);
    const auto& sh = socle_nonabelian(g);
    os << "socle order " << s.order() << ", abelian part " << sa.order() << ", non-abelian part " << sh.order() << "\n";
    os << "socle single class: " << yes(is_generated_by_single_class(s).generated) << "\n";
    return {{{"group_order", g->order()},
             {"minimal_normals", mins},
             {"socle", s.elements()},
             {"socle_abelian", sa.elements()},
             {"socle_nonabelian", sh.elements()},
             {"socle_single_class", is_generated_by_single_class(s).generated}},
            os.str(),
            0};
}

Result cmd_gaschutz(const std::string& spec) {
    auto g = dsl::evaluate(spec).group;
    auto rep = gaschutz(g);
    std::ostringstream os;
    os << "faithful irreducible:                 " << yes(rep.faithful_irreducible) << "\n"
       << "socle single class:                   " << yes(rep.socle_single_class) << "\n"
       << "abelian socle single class:           " << yes(rep.socle_abelian_single_class) << "\n"
       << "normals in abelian socle single class: " << yes(rep.normals_in_socle_abelian_single_class) << "\n"
       << "agree: " << yes(rep.agree()) << "\n";
    json j = json_io::gaschutz(rep);
    j["group_order"] = g->order();
    return {j, os.str(), rep.agree() ? 0 : 2};
}

Result cmd_induce(const std::string& spec, const std::string& words, std::optional<int> row) {
    auto ev = dsl::evaluate(spec);
    auto h = subgroup_arg(ev, words);
    auto emb = as_group(h);
    const auto& th = character_table(emb.group);
    const auto& tg = character_table(ev.group);
    json items = json::array();
    std::ostringstream os;
    os << "H = " << set_str(h) << " (order " << h.order() << ")\n";
    for (int i = 0; i < th.size(); ++i) {
        if (row && *row != i) continue;
        auto ind = induce(th.rows[i], emb.inclusion);
        auto dec = decompose(ind, tg);
        items.push_back({{"rho_row", i}, {"induced", json_io::class_function(ind)}, {"decomposition", json_io::decomposition(dec)}});
        os << "Ind(psi" << i << ") =";
        for (auto [k, m] : dec.components) os << " " << (m > 1 ? std::to_string(m) + "*" : "") << "chi" << k;
        os << "\n";
    }
    if (row && (*row < 0 || *row >= th.size())) fail(ErrorCode::InvalidInput, "--row out of range");
    return {{{"group_order", ev.group->order()}, {"subgroup", h.elements()}, {"induced", items}}, os.str(), 0};
}

Result cmd_cp_check(const std::string& spec, const std::string& words) {
    auto ev = dsl::evaluate(spec);
    const auto& g = ev.group;
    auto h = subgroup_arg(ev, words);
    auto emb = as_group(h);
    const auto& th = character_table(emb.group);
    const auto& tg = character_table(g);
    auto rep = cp_report(emb.inclusion, th, tg);
    std::vector<int> cp_rows, faithful_on_h_rows;
    for (int i = 0; i < tg.size(); ++i) {
        if (row_cp_on(tg, i, emb.inclusion)) cp_rows.push_back(i);
        if (preimage(emb.inclusion, row_kernels(tg)[i]).is_trivial()) faithful_on_h_rows.push_back(i);
    }
    json entries = json::array();
    for (const auto& e : rep.entries) entries.push_back(json_io::cp_entry(e));
    const bool z_meets_trivially = center(g).intersect(h).is_trivial();
    const bool z2_like_z = center(g).intersect(h) == second_center(g).intersect(h);
    std::ostringstream os;
    os << "H = " << set_str(h) << " (order " << h.order() << ")\n"
       << "faithful irreducibles of H: " << rep.faithful_rows.size() << "\n";
    for (const auto& e : rep.entries) {
        os << "  rho" << *e.rho_row << ":";
        for (const auto& c : e.constituents)
            os << " chi" << c.row << "(deg " << c.degree << (c.faithful_on_h ? ", faithful on H" : "") << (c.cp_on_h ? ", cp on H" : "") << ")";
        os << (e.satisfied ? "  ok" : "  COUNTEREXAMPLE") << "\n";
    }
    os << "irreducibles of G center-preserving on H: " << cp_rows.size() << "\n"
       << "irreducibles of G faithful on H: " << faithful_on_h_rows.size() << "\n"
       << "Z(G) n H trivial: " << yes(z_meets_trivially) << ", Z2(G) n H = Z(G) n H: " << yes(z2_like_z) << "\n"
       << "verdict: " << (rep.verdict ? "pass" : "fail") << "\n";
    return {{{"group_order", g->order()},
             {"subgroup", h.elements()},
             {"faithful_rows", rep.faithful_rows},
             {"entries", entries},
             {"cp_on_h_rows", cp_rows},
             {"faithful_on_h_rows", faithful_on_h_rows},
             {"center_meets_h_trivially", z_meets_trivially},
             {"z2_meets_h_like_center", z2_like_z},
             {"verdict", rep.verdict ? "pass" : "fail"}},
            os.str(),
            rep.verdict ? 0 : 2};
}

Result cmd_omega(const std::string& spec) {
    auto g = dsl::evaluate(spec).group;
    auto chars = central_characters(g);
    json items = json::array();
    bool agree = true;
    std::ostringstream os;
    os << "|Z(G)| = " << center(g).order() << ", |Z2(G)| = " << second_center(g).order() << "\n";
    for (std::size_t i = 0; i < chars.size(); ++i) {
        auto om = omega_chi(g, chars[i]);
        agree = agree && om.agree();
        json cosets = json::array();
        for (const auto& c : om.cosets) cosets.push_back({{"representative", c.representative}, {"on_generators", json_io::central_character(c.on_generators)}});
        items.push_back({{"index", i},
                         {"character", json_io::central_character(chars[i])},
                         {"cosets", cosets},
                         {"injective", om.injective},
                         {"quotient_center_preserving", om.quotient_cp},
                         {"agree", om.agree()}});
        os << "chi" << i << ": omega injective " << yes(om.injective) << ", G -> G/ker chi center-preserving " << yes(om.quotient_cp)
           << (om.agree() ? "" : "  DISAGREE") << "\n";
    }
    json j = {{"group_order", g->order()}, {"characters", items}};
    if (g->order() > 1) {
        auto ex = cp_existence(g);
        auto k1 = quasikernel_intersection(g);
        agree = agree && ex.routes_agree() && k1 == center(g);
        j["existence"] = {{"exists", ex.exists()},
                          {"via_table", ex.via_table ? json(*ex.via_table) : json(nullptr)},
                          {"via_criterion", ex.via_criterion ? json(*ex.via_criterion) : json(nullptr)},
                          {"omega_only", ex.omega_only ? json(*ex.omega_only) : json(nullptr)},
                          {"routes_agree", ex.routes_agree()}};
        j["quasikernel_intersection"] = k1.elements();
        j["quasikernel_equals_center"] = k1 == center(g);
        os << "center-preserving irreducible exists: " << yes(ex.exists()) << " (routes agree: " << yes(ex.routes_agree()) << ")\n"
           << "K1(G) = Z(G): " << yes(k1 == center(g)) << "\n";
    }
    j["agree"] = agree;
    return {j, os.str(), agree ? 0 : 2};
}

Result cmd_scan(const std::string& path, std::optional<int> jobs, bool all_subgroups) {
    auto cfg = load_scan_config(path);
    if (jobs) cfg.options.jobs = *jobs;
    if (all_subgroups) cfg.options.all_subgroups = true;
    auto catalog = build_catalog(cfg);
    auto rep = scan(catalog, cfg.options);
    std::ostringstream os;
    os << "groups: " << rep.groups << ", (G, H, rho) triples: " << rep.pairs_checked << "\n";
    for (const auto& [k, v] : rep.checks_run) os << "  " << k << ": " << v << "\n";
    for (const auto& f : rep.failures)
        os << "FAIL " << f.check << " on " << f.group_spec << " H=" << json(f.h_elements).dump() << (f.rho_row ? " rho" + std::to_string(*f.rho_row) : "")
           << ": " << f.detail << "\n";
    os << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
    return {json_io::scan_report(rep), os.str(), rep.pass() ? 0 : 2};
}

// ---------------------------------------------------------------------------
// Extensions

struct ExtArgs {
    std::string group, cocycle, total, mu, subgroup;
};

struct LoadedExt {
    CentralExtension ext;
    std::optional<Cocycle> z;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

Cocycle load_cocycle(const ExtArgs& a) {
    if (a.group.empty() || a.cocycle.empty()) fail(ErrorCode::InvalidInput, "need --group and --cocycle");
    return json_io::cocycle_from(read_json_file(a.cocycle), dsl::evaluate(a.group).group);
}

LoadedExt load_extension(const ExtArgs& a) {
    if (!a.total.empty()) {
        if (!a.group.empty() || !a.cocycle.empty()) fail(ErrorCode::InvalidInput, "use either --total/--mu or --group/--cocycle");
        auto e = dsl::evaluate(a.total).group;
        auto mu = dsl::subgroup_from_words(e, a.mu.empty() ? "[]" : a.mu);
        auto q = quotient(mu);
        return {make_extension(q.projection, mu), std::nullopt};
    }
    auto z = load_cocycle(a);
    return {extension_from_cocycle(z), z};
}

Result cmd_ext(const std::string& action, const ExtArgs& a) {
    std::ostringstream os;
    if (action == "build") {
        auto le = load_extension(a);
        const auto& ext = le.ext;
        os << "total order " << ext.total->order() << ", |mu| = " << ext.mu.order() << ", base order " << ext.base()->order() << "\n";
        return {json_io::extension(ext), os.str(), 0};
    }
    if (action == "reduce") {
        auto le = load_extension(a);
        Cocycle z = le.z ? *le.z : cocycle_from_extension(le.ext);
        auto red = reduce_order(z);
        os << "order " << cocycle_order(z) << " -> " << cocycle_order(red) << " (|G| = " << z.base->order() << ")\n";
        return {{{"input_order", cocycle_order(z)}, {"reduced_order", cocycle_order(red)}, {"cocycle", json_io::cocycle(red)}}, os.str(), 0};
    }
    if (action == "zc") {
        auto le = load_extension(a);
        auto zc = z_c(le.ext);
        auto kc = k_c(le.ext);
        os << "Z_c = " << set_str(zc) << "\nK_c = " << set_str(kc) << "\nequal: " << yes(zc == kc) << "\n";
        return {{{"z_c", zc.elements()}, {"k_c", kc.elements()}, {"equal", zc == kc}}, os.str(), zc == kc ? 0 : 2};
    }
    if (action == "cfaithful") {
        auto le = load_extension(a);
        auto row = has_c_faithful_irreducible(le.ext);
        os << "c-faithful irreducible: " << (row ? "chi" + std::to_string(*row) + " of the total group" : std::string("none")) << "\n";
        return {{{"exists", row.has_value()}, {"row", row ? json(*row) : json(nullptr)}}, os.str(), 0};
    }
    if (action == "split") {
        auto le = load_extension(a);
        if (a.subgroup.empty()) fail(ErrorCode::InvalidInput, "ext split needs --subgroup (words in the base group)");
        auto h = dsl::subgroup_from_words(le.ext.base(), a.subgroup);
        auto s = splits_over_subgroup(le.ext, h);
        os << "splits over " << set_str(h) << ": " << yes(s.has_value()) << "\n";
        return {{{"subgroup", h.elements()}, {"splits", s.has_value()}, {"complement", s ? json(s->elements()) : json(nullptr)}}, os.str(), 0};
    }
    fail(ErrorCode::InvalidInput, "unknown ext action '" + action + "'");
}

void emit(const Globals& gl, const Result& r) {
    std::string body = gl.format == "json" ? r.data.dump(2) + "\n" : r.text;
    if (gl.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(gl.out);
    if (!f) fail(ErrorCode::InvalidInput, "cannot write '" + gl.out + "'");
    f << body;
}

void report_error(const Globals& gl, const Error& e) {
    if (gl.format == "json") {
        json j = {{"error", std::string(to_string(e.code()))}, {"message", e.detail()}};
        if (const auto* se = dynamic_cast<const dsl::SyntaxError*>(&e)) {
            j["line"] = se->line();
            j["col"] = se->col();
            j["expected"] = se->expected();
        }
        std::cerr << j.dump() << "\n";
    } else {
        std::cerr << "error: " << e.what() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character-theoretic analysis of small finite groups"};
    app.require_subcommand(1);
    Globals gl;
    auto add_globals = [&](CLI::App* sub) {
        sub->add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", gl.out, "Write output to FILE instead of stdout");
        sub->add_option("--seed", gl.seed, "Reserved; all algorithms are deterministic");
    };

    std::string spec, words, config_path, ext_action;
    std::optional<int> row, jobs;
    bool all_subgroups = false;
    ExtArgs ext;

    auto* table = app.add_subcommand("table", "Character table");
    table->add_option("spec", spec, "Group spec")->required();
    auto* soc = app.add_subcommand("socle", "Minimal normal subgroups and socle");
    soc->add_option("spec", spec, "Group spec")->required();
    auto* gas = app.add_subcommand("gaschutz", "The four faithful-irreducible criteria");
    gas->add_option("spec", spec, "Group spec")->required();
    auto* ind = app.add_subcommand("induce", "Induce irreducibles of a subgroup and decompose");
    ind->add_option("spec", spec, "Group spec")->required();
    ind->add_option("--subgroup", words, "Generators as a word list, e.g. \"[x, y^2]\"")->required();
    ind->add_option("--row", row, "Only this row of the subgroup's table");
    auto* cp = app.add_subcommand("cp-check", "Center-preserving constituents of induced faithful irreducibles");
    cp->add_option("spec", spec, "Group spec")->required();
    cp->add_option("--subgroup", words, "Generators as a word list; defaults to the designated subgroup of a worked example");
    auto* om = app.add_subcommand("omega", "omega_chi for every character of the center, existence and K1");
    om->add_option("spec", spec, "Group spec")->required();
    auto* sc = app.add_subcommand("scan", "Catalog-wide verification scan");
    sc->add_option("--config", config_path, "TOML configuration")->required()->check(CLI::ExistingFile);
    sc->add_option("--jobs", jobs, "Worker threads (overrides the config)")->check(CLI::PositiveNumber);
    sc->add_flag("--all-subgroups", all_subgroups, "Visit every subgroup, not one per conjugacy class");
    auto* ex = app.add_subcommand("ext", "Central extensions from cocycles or from a total group");
    ex->add_option("action", ext_action, "build | reduce | zc | cfaithful | split")
        ->required()
        ->check(CLI::IsMember({"build", "reduce", "zc", "cfaithful", "split"}));
    ex->add_option("--group", ext.group, "Base group spec (with --cocycle)");
    ex->add_option("--cocycle", ext.cocycle, "Cocycle JSON file")->check(CLI::ExistingFile);
    ex->add_option("--total", ext.total, "Total group spec (with --mu)");
    ex->add_option("--mu", ext.mu, "Central cyclic subgroup of the total group as a word list");
    ex->add_option("--subgroup", ext.subgroup, "Subgroup of the base group (split)");
    for (auto* s : {table, soc, gas, ind, cp, om, sc, ex}) add_globals(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Result r;
        if (*table) r = cmd_table(spec);
        else if (*soc) r = cmd_socle(spec);
        else if (*gas) r = cmd_gaschutz(spec);
        else if (*ind) r = cmd_induce(spec, words, row);
        else if (*cp) r = cmd_cp_check(spec, words);
        else if (*om) r = cmd_omega(spec);
        else if (*sc) r = cmd_scan(config_path, jobs, all_subgroups);
        else r = cmd_ext(ext_action, ext);
        emit(gl, r);
        return r.code;
    } catch (const Error& e) {
        report_error(gl, e);
        return 1;
    } catch (const std::exception& e) {
        report_error(gl, Error(ErrorCode::InvalidInput, e.what()));
        return 1;
    }
}
