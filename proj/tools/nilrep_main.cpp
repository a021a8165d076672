// nilrep — exact monomial representations of the groups H(s1,...,sn).
//
// Subcommands: info, induce, analyze, rank-one, general, corollary,
// polarize, selftest. Reports are JSON (default) or plain tables.
// Exit codes: 0 ok, 1 a verification failed, 2 bad input.

#include "nilrep/json_io.hpp"
#include "nilrep/selftest.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using nilrep::Json;

struct Options {
    std::string group;      // "s1,s2,..."
    std::string config;     // JSON file path
    std::string chi;        // "p/q" central value
    std::string subgroup;   // inline JSON
    std::string character;  // inline JSON
    long N = 0;
    long n = 0;
    std::uint64_t seed = 0;
    long budget = 100;
    long dim_cap = 0;
    bool table = false;
    bool json = false;
};

[[noreturn]] void input_error(const std::string& what) {
    std::cerr << "input error: " << what << "\n";
    std::exit(2);
}

Json load_config(const Options& opt) {
    if (opt.config.empty()) return Json::object();
    std::ifstream in(opt.config);
    if (!in) input_error("config: cannot open " + opt.config);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        input_error(std::string("config: ") + e.what());
    }
    // JSON wins on conflict by rejection, not merging.
    if (!opt.group.empty() && j.contains("group"))
        input_error("both --group and config group given; pick one");
    if (opt.N != 0 && j.contains("N")) input_error("both --N and config N given; pick one");
    if (opt.n != 0 && j.contains("n")) input_error("both --n and config n given; pick one");
    if (!opt.chi.empty() && j.contains("chi_central"))
        input_error("both --chi and config chi_central given; pick one");
    if (!opt.subgroup.empty() && j.contains("subgroup"))
        input_error("both --subgroup and config subgroup given; pick one");
    if (!opt.character.empty() && j.contains("character"))
        input_error("both --character and config character given; pick one");
    return j;
}

nilrep::GroupSpec parse_group(const Options& opt, const Json& cfg) {
    if (cfg.contains("group")) return nilrep::group_from_json(cfg["group"]);
    if (opt.group.empty()) input_error("group: missing (--group \"s1,s2\" or config)");
    std::vector<nilrep::Int> s;
    std::string cur;
    for (char c : opt.group + ",") {
        if (c == ',') {
            if (cur.empty()) input_error("group: empty entry in \"" + opt.group + "\"");
            s.emplace_back(cur);
            cur.clear();
        } else if ((c >= '0' && c <= '9') || c == '-') {
            cur += c;
        } else if (c != ' ') {
            input_error("group: bad character in \"" + opt.group + "\"");
        }
    }
    try {
        return nilrep::GroupSpec(std::move(s));
    } catch (const std::exception& e) {
        input_error(std::string("group: ") + e.what());
    }
}

nilrep::Angle parse_chi(const Options& opt, const Json& cfg) {
    if (cfg.contains("chi_central"))
        return nilrep::Angle::rational(
            nilrep::rat_from_string(cfg["chi_central"].get<std::string>()));
    if (!opt.chi.empty()) return nilrep::Angle::rational(nilrep::rat_from_string(opt.chi));
    if (opt.N > 0 || cfg.contains("N")) {
        long N = opt.N > 0 ? opt.N : cfg["N"].get<long>();
        return nilrep::Angle::rational(nilrep::Rat(1, N));
    }
    input_error("character: missing (--N, --chi \"p/q\", or config chi_central)");
}

std::size_t numeric_cap(const Options& opt) {
    if (std::getenv("NILREP_DIM_CAP")) return nilrep::default_dim_cap();  // env wins
    if (opt.dim_cap > 0) return static_cast<std::size_t>(opt.dim_cap);
    return nilrep::default_dim_cap();
}

void render(const Json& j, const Options& opt) {
    if (opt.table && !opt.json) {
        for (const auto& [key, val] : j.items())
            std::cout << key << " = " << (val.is_string() ? val.get<std::string>() : val.dump())
                      << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

int finish(const Json& j, const Options& opt) {
    render(j, opt);
    if (j.contains("ok") && j["ok"].is_boolean() && !j["ok"].get<bool>()) return 1;
    return 0;
}

std::pair<nilrep::TriSeq, nilrep::Character> parse_subgroup_character(
    const nilrep::GroupSpec& g, const Options& opt, const Json& cfg) {
    Json sub, chr;
    if (cfg.contains("subgroup")) sub = cfg["subgroup"];
    else if (!opt.subgroup.empty()) sub = Json::parse(opt.subgroup);
    else input_error("subgroup: missing (--subgroup or config)");
    if (cfg.contains("character")) chr = cfg["character"];
    else if (!opt.character.empty()) chr = Json::parse(opt.character);
    else input_error("character: missing (--character or config)");
    nilrep::TriSeq h = nilrep::subgroup_from_json(g, sub);
    if (!chr.contains("subgroup")) chr["subgroup"] = nilrep::subgroup_to_json(h);
    nilrep::Character c = nilrep::character_from_json(g, chr);
    if (!(c.domain == h)) input_error("character: subgroup differs from the analyzed one");
    return {std::move(h), std::move(c)};
}

int run_info(const Options& opt, const Json& cfg) {
    nilrep::GroupSpec g = parse_group(opt, cfg);
    Json out;
    out["ok"] = true;
    out["group"] = nilrep::group_to_json(g);
    out["derived"] = "(0,0," + g.s[0].str() + ")Z";
    out["center_rank"] = 1;
    out["center"] = "(0,0,1)Z";
    out["derived_subgroup"] = nilrep::subgroup_to_json(nilrep::derived_subgroup(g));
    out["center_subgroup"] = nilrep::subgroup_to_json(nilrep::center(g));
    return finish(out, opt);
}

int run_induce(const Options& opt, const Json& cfg) {
    nilrep::GroupSpec g = parse_group(opt, cfg);
    auto [h, c] = parse_subgroup_character(g, opt, cfg);
    nilrep::MonomialRep r = nilrep::induce(h, c);
    Json out;
    out["ok"] = true;
    out["group"] = nilrep::group_to_json(g);
    out["subgroup"] = nilrep::subgroup_to_json(h);
    out["character"] = nilrep::character_to_json(c);
    out["representation"] = nilrep::rep_to_json(r);
    return finish(out, opt);
}

int run_analyze(const Options& opt, const Json& cfg) {
    nilrep::GroupSpec g = parse_group(opt, cfg);
    auto [h, c] = parse_subgroup_character(g, opt, cfg);
    nilrep::MonomialRep r = nilrep::induce(h, c);
    nilrep::IrreducibilityVerdict verdict = nilrep::is_irreducible(r);
    Json out;
    out["ok"] = true;
    out["group"] = nilrep::group_to_json(g);
    out["subgroup"] = nilrep::subgroup_to_json(h);
    out["index"] = nilrep::int_to_json(*nilrep::index(h));
    out["dim"] = r.dim();
    out["irreducible"] = verdict.irreducible;
    out["witness"] = verdict.witness ? Json(verdict.witness->str()) : Json(nullptr);
    out["endo_dim"] = verdict.endo_dim;
    std::size_t cap = numeric_cap(opt);
    if (r.dim() <= cap) out["commutant_dim_numeric"] = nilrep::commutant_dim_numeric(r, cap);
    out["weight_dim"] = nilrep::weight_space_dim(r, h, c);
    return finish(out, opt);
}

int run_rank_one(const Options& opt, const Json& cfg) {
    nilrep::GroupSpec g = parse_group(opt, cfg);
    nilrep::RankOneReport r = nilrep::rank_one_report(g, parse_chi(opt, cfg));
    Json out;
    out["ok"] = (r.constructed_dim == r.predicted_dim) && r.irreducible;
    out["group"] = nilrep::group_to_json(g);
    Json rep = nilrep::rank_one_report_to_json(r);
    for (auto& [key, val] : rep.items()) out[key] = val;
    return finish(out, opt);
}

int run_general(const Options& opt, const Json& cfg) {
    nilrep::GroupSpec g = parse_group(opt, cfg);
    nilrep::MonomialRep r = [&] {
        if (cfg.contains("subgroup") || !opt.subgroup.empty()) {
            auto [h, c] = parse_subgroup_character(g, opt, cfg);
            return nilrep::induce(h, c);
        }
        nilrep::RankOneReport rep = nilrep::rank_one_report(g, parse_chi(opt, cfg));
        return nilrep::induce(rep.subgroup_A, rep.delta);
    }();
    nilrep::GeneralCaseReport rep = nilrep::general_case_report(r);
    Json out;
    out["ok"] = rep.divisibility_ok && rep.sqrt_ok;
    out["group"] = nilrep::group_to_json(g);
    Json body = nilrep::general_case_report_to_json(rep);
    for (auto& [key, val] : body.items()) out[key] = val;
    return finish(out, opt);
}

int run_corollary(const Options& opt, const Json& cfg) {
    long n = opt.n > 0 ? opt.n : (cfg.contains("n") ? cfg["n"].get<long>() : 0);
    long N = opt.N > 0 ? opt.N : (cfg.contains("N") ? cfg["N"].get<long>() : 0);
    if (n <= 0) input_error("n: missing or non-positive");
    if (N <= 0) input_error("N: missing or non-positive");
    nilrep::CorollaryReport r = nilrep::corollary_check(static_cast<std::size_t>(n), nilrep::Int(N));
    return finish(nilrep::corollary_report_to_json(r), opt);
}

int run_polarize(const Options& opt, const Json& cfg) {
    nilrep::GroupSpec g = parse_group(opt, cfg);
    nilrep::CentralPairing p = nilrep::pairing_from_character(g, parse_chi(opt, cfg));
    auto [h, chi] = nilrep::polarization(p);
    nilrep::MonomialRep r = nilrep::induce(h, chi);
    nilrep::Int center_index = nilrep::lattice_index(nilrep::pairing_radical(p));
    bool irred = nilrep::is_irreducible(r).irreducible;
    Json out;
    out["ok"] = irred && nilrep::Int(r.dim()) * nilrep::Int(r.dim()) == center_index;
    out["group"] = nilrep::group_to_json(g);
    out["subgroup"] = nilrep::subgroup_to_json(h);
    out["character"] = nilrep::character_to_json(chi);
    out["dim"] = r.dim();
    out["center_index"] = nilrep::int_to_json(center_index);
    out["irreducible"] = irred;
    return finish(out, opt);
}

int run_selftest_task(const Options& opt, const Json& cfg) {
    std::uint64_t seed = cfg.contains("seed") ? cfg["seed"].get<std::uint64_t>() : opt.seed;
    long budget = cfg.contains("budget") ? cfg["budget"].get<long>() : opt.budget;
    if (budget < 0) input_error("budget: must be non-negative");
    nilrep::SelftestReport rep = nilrep::run_selftest(seed, static_cast<std::size_t>(budget));
    Json out;
    out["ok"] = rep.ok;
    out["seed"] = rep.seed;
    out["budget"] = rep.budget;
    Json props = Json::array();
    for (const nilrep::PropertyResult& p : rep.properties) {
        Json pj;
        pj["name"] = p.name;
        pj["cases"] = p.cases;
        pj["failures"] = p.failures;
        if (!p.note.empty()) pj["note"] = p.note;
        props.push_back(std::move(pj));
    }
    out["properties"] = std::move(props);
    return finish(out, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact monomial representations of H(s1,...,sn)"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", opt.group, "twist vector, e.g. \"1,2\"");
        sub->add_option("--config", opt.config, "JSON config file");
        sub->add_flag("--json", opt.json, "JSON output (default)");
        sub->add_flag("--table", opt.table, "plain table output");
        sub->add_option("--dim-cap", opt.dim_cap, "numeric-oracle dimension cap");
        sub->add_option("--seed", opt.seed, "PRNG seed");
        return sub;
    };

    CLI::App* info = add_common(app.add_subcommand("info", "group facts"));
    CLI::App* induce = add_common(app.add_subcommand("induce", "build Ind_H^G(chi)"));
    induce->add_option("--subgroup", opt.subgroup, "inline subgroup JSON");
    induce->add_option("--character", opt.character, "inline character JSON");
    CLI::App* analyze = add_common(app.add_subcommand("analyze", "irreducibility analysis"));
    analyze->add_option("--subgroup", opt.subgroup, "inline subgroup JSON");
    analyze->add_option("--character", opt.character, "inline character JSON");
    CLI::App* rank_one = add_common(app.add_subcommand("rank-one", "rank-one dimension formula"));
    rank_one->add_option("--N", opt.N, "central order N1 (chi = 1/N1)");
    rank_one->add_option("--chi", opt.chi, "central value \"p/q\"");
    CLI::App* general = add_common(app.add_subcommand("general", "two-step dimension laws"));
    general->add_option("--N", opt.N, "central order N1");
    general->add_option("--chi", opt.chi, "central value \"p/q\"");
    general->add_option("--subgroup", opt.subgroup, "inline subgroup JSON");
    general->add_option("--character", opt.character, "inline character JSON");
    CLI::App* corollary = add_common(app.add_subcommand("corollary", "H(1,...,1) equivalences"));
    corollary->add_option("--n", opt.n, "rank");
    corollary->add_option("--N", opt.N, "central order");
    CLI::App* polarize = add_common(app.add_subcommand("polarize", "maximal isotropic construction"));
    polarize->add_option("--N", opt.N, "central order N1");
    polarize->add_option("--chi", opt.chi, "central value \"p/q\"");
    CLI::App* selftest = add_common(app.add_subcommand("selftest", "seeded property suite"));
    selftest->add_option("--budget", opt.budget, "cases per property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        Json cfg = load_config(opt);
        if (info->parsed()) return run_info(opt, cfg);
        if (induce->parsed()) return run_induce(opt, cfg);
        if (analyze->parsed()) return run_analyze(opt, cfg);
        if (rank_one->parsed()) return run_rank_one(opt, cfg);
        if (general->parsed()) return run_general(opt, cfg);
        if (corollary->parsed()) return run_corollary(opt, cfg);
        if (polarize->parsed()) return run_polarize(opt, cfg);
        if (selftest->parsed()) return run_selftest_task(opt, cfg);
    } catch (const nilrep::PreconditionError& e) {
        input_error(e.what());
    } catch (const nilrep::DomainError& e) {
        input_error(e.what());
    } catch (const nilrep::DimensionError& e) {
        input_error(e.what());
    } catch (const nilrep::InfiniteIndexError& e) {
        input_error(e.what());
    } catch (const nilrep::UnsupportedError& e) {
        input_error(e.what());
    } catch (const Json::exception& e) {
        input_error(e.what());
    }
    return 2;
}
