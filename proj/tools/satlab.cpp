// satlab: batch front end for the saturation laboratory.
//
// Subcommands: sat, enumerate, check, verify, table, sporadics derive.
// Exit codes: 0 success / all cases pass, 1 verification failure,
// 2 usage error, 3 capacity error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "satlab/constructors.hpp"
#include "satlab/enumeration.hpp"
#include "satlab/graph6.hpp"
#include "satlab/saturation.hpp"
#include "satlab/verify.hpp"

namespace {

void write_json(const std::string& path, const std::string& payload) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write JSON report to '" + path + "'");
    out << payload << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"saturation-number laboratory for joins of cliques with paths"};
    app.require_subcommand(1);

    satlab::SearchOptions opts;
    opts.cache_dir = satlab::default_cache_dir();
    app.add_option("--jobs", opts.jobs, "worker count (default: available parallelism)");

    // sat
    auto* sat = app.add_subcommand("sat", "compute sat(n, pattern) by exhaustive search");
    int sat_n = 0;
    std::string sat_pat, sat_json;
    bool sat_prune = false;
    sat->add_option("--n", sat_n, "graph order")->required();
    sat->add_option("--pattern", sat_pat, "pattern, e.g. K2vP3")->required();
    sat->add_flag("--prune", sat_prune, "skip classes failing the structural necessary conditions");
    sat->add_option("--json", sat_json, "write the machine-readable result here");

    // enumerate
    auto* enumer = app.add_subcommand("enumerate", "list saturated classes at a fixed edge count");
    int en_n = 0, en_m = 0;
    std::string en_pat, en_out;
    enumer->add_option("--n", en_n, "graph order")->required();
    enumer->add_option("--pattern", en_pat, "pattern")->required();
    enumer->add_option("--edges", en_m, "edge count")->required();
    enumer->add_option("--out", en_out, "directory for minimal.g6 + meta.json");

    // check
    auto* check = app.add_subcommand("check", "saturation verdict for one graph6 graph");
    std::string ck_g6, ck_pat, ck_json;
    bool ck_certs = false;
    check->add_option("--g6", ck_g6, "graph6 bytes")->required();
    check->add_option("--pattern", ck_pat, "pattern")->required();
    check->add_flag("--certificates", ck_certs, "attach one witness per non-edge");
    check->add_option("--json", ck_json, "write the verdict JSON here");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string vf_suite, vf_json;
    int vf_nmax = -1;
    verify->add_option("--suite", vf_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(satlab::suite_names()));
    verify->add_option("--n-max", vf_nmax, "cap the suite grid");
    verify->add_option("--json", vf_json, "write the report JSON here");

    // table
    auto* table = app.add_subcommand("table", "saturation-number comparison table");
    bool table_tsv = false;
    table->add_flag("--tsv", table_tsv, "tab-separated output (the default format)");

    // sporadics derive
    auto* sporadics = app.add_subcommand("sporadics", "sporadic extremal graph registry");
    sporadics->require_subcommand(1);
    auto* derive = sporadics->add_subcommand("derive", "regenerate the registry by search");
    std::string sp_store = "sporadics";
    derive->add_option("--store", sp_store, "store directory (default: ./sporadics)");

    // lets global flags like --jobs appear after the subcommand name
    for (CLI::App* s : {sat, enumer, check, verify, table, sporadics, derive}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*sat) {
        opts.use_pruning = sat_prune;
        satlab::SearchResult res =
            satlab::find_saturation_number(sat_n, satlab::parse_pattern(sat_pat), opts);
        std::cout << "sat=" << res.sat_number << "\n";
        std::cout << "n=" << res.n << " pattern=" << to_string(res.pattern)
                  << " classes=" << res.minimal_graphs.size() << " scanned=" << res.scanned
                  << " pruned=" << res.pruned << (res.pruning_enabled ? " (pruning on)" : "")
                  << "\n";
        for (const auto& k : res.minimal_graphs) std::cout << k << "\n";
        if (!sat_json.empty()) write_json(sat_json, satlab::search_result_to_json(res));
        return 0;
    }

    if (*enumer) {
        auto keys = satlab::enumerate_minimal_saturated(en_n, satlab::parse_pattern(en_pat), en_m,
                                                        opts);
        for (const auto& k : keys) std::cout << k << "\n";
        if (!en_out.empty()) {
            std::filesystem::create_directories(en_out);
            std::ofstream g6(std::filesystem::path(en_out) / "minimal.g6");
            for (const auto& k : keys) g6 << k << "\n";
            nlohmann::json meta;
            meta["n"] = en_n;
            meta["pattern"] = to_string(satlab::parse_pattern(en_pat));
            meta["m"] = en_m;
            meta["classes"] = keys.size();
            meta["version"] = std::string(satlab::kCodeVersion);
            std::ofstream mj(std::filesystem::path(en_out) / "meta.json");
            mj << meta.dump(2) << "\n";
        }
        return 0;
    }

    if (*check) {
        satlab::Graph g = satlab::graph6_decode(ck_g6);
        satlab::PatternSpec p = satlab::parse_pattern(ck_pat);
        satlab::SaturationVerdict v = satlab::is_saturated(g, p, ck_certs);
        std::cout << to_string(v.status);
        if (v.failing_nonedge)
            std::cout << " " << v.failing_nonedge->first << "-" << v.failing_nonedge->second;
        std::cout << "\n";
        if (v.per_nonedge_witnesses)
            std::cout << "witnesses=" << v.per_nonedge_witnesses->size() << "\n";
        if (!ck_json.empty()) write_json(ck_json, satlab::verdict_to_json(g, p, v));
        return 0;
    }

    if (*verify) {
        satlab::VerificationReport rep = satlab::run_suite(vf_suite, vf_nmax, opts);
        std::cout << satlab::report_to_text(rep);
        if (!vf_json.empty()) write_json(vf_json, satlab::report_to_json(rep));
        return rep.all_passed() ? 0 : 1;
    }

    if (*table) {
        std::cout << satlab::table1_tsv();
        return 0;
    }

    if (*derive) {
        satlab::SporadicStoreOptions so;
        so.dir = sp_store;
        so.search = opts;
        auto entries = satlab::derive_sporadics(so);
        for (const auto& e : entries)
            std::cout << e.id << " pattern=" << e.pattern << " n=" << e.order
                      << " edges=" << e.edges << " key=" << e.key << "\n";
        std::cout << entries.size() << " sporadic classes -> " << sp_store << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const satlab::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const satlab::format_error& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
