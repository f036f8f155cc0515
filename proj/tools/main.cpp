// pebblelab CLI: graph construction and stats, reachability/solvability
// queries, exact domination numbers, bound reports, optimal pebbling and
// rubbling numbers, and the published-results verification run. Links the
// shared C API; results are JSON on stdout and may be cached on disk.
//
// Exit codes: 0 success, 2 input error, 3 inconclusive (budget), 4
// verification failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "pebblelab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
    cache::Store store;
    unsigned seed = 0; // reserved; every command is deterministic
    bool json = false;
};

int exit_code_for(plab_status status) {
    switch (status) {
        case PLAB_OK: return kExitOk;
        case PLAB_ERR_INVALID:
        case PLAB_ERR_PARSE:
        case PLAB_ERR_SIZE: return kExitInput;
        case PLAB_INCONCLUSIVE: return kExitInconclusive;
        default: return kExitInternal;
    }
}

int fail(plab_status status) {
    std::cerr << "pebblelab: " << plab_last_error() << "\n";
    return exit_code_for(status);
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "pebblelab: cannot open '" << path << "'\n";
        return std::nullopt;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GraphHandle {
    plab_graph* g = nullptr;
    ~GraphHandle() { plab_graph_free(g); }
};

struct DistHandle {
    plab_dist* d = nullptr;
    ~DistHandle() { plab_dist_free(d); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { plab_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

// "N" or "A..B"
bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// Runs `compute` under the result cache: a warm hit reprints the stored
// bytes; only exit-0 results are stored.
int run_cached(const Options& opts, const std::string& command,
               const std::vector<std::pair<std::string, std::string>>& inputs,
               const std::function<std::pair<int, std::string>()>& compute) {
    std::string key = cache::input_key(command, plab_version(), inputs);
    if (auto hit = opts.store.lookup(key)) {
        std::cout << *hit;
        return kExitOk;
    }
    auto start = std::chrono::steady_clock::now();
    auto [code, output] = compute();
    std::cout << output;
    if (code == kExitOk && opts.store.enabled()) {
        long wall_ms = static_cast<long>(std::chrono::duration<double, std::milli>(
                                             std::chrono::steady_clock::now() - start)
                                             .count());
        opts.store.store(key, command, output, wall_ms);
    }
    return code;
}

int cmd_graph(const Options& opts, const std::vector<std::string>& family_tokens,
              const std::string& graph_file, bool stats, const std::string& out_file) {
    std::string text;
    if (!family_tokens.empty()) {
        if (family_tokens.front() != "family") {
            std::cerr << "pebblelab: expected 'family <name> <params...>', got '"
                      << family_tokens.front() << "'\n";
            return kExitInput;
        }
        std::ostringstream join;
        for (const std::string& tok : family_tokens) join << tok << " ";
        text = join.str() + "\n";
    } else if (!graph_file.empty()) {
        auto content = read_file(graph_file);
        if (!content) return kExitInput;
        text = *content;
    } else {
        std::cerr << "pebblelab: graph needs a family spec or --graph FILE\n";
        return kExitInput;
    }

    GraphHandle graph;
    if (plab_status st = plab_graph_from_text(text.c_str(), 0, &graph.g); st != PLAB_OK)
        return fail(st);

    if (!out_file.empty()) {
        OwnedString saved;
        if (plab_status st = plab_graph_to_text(graph.g, &saved.s); st != PLAB_OK)
            return fail(st);
        std::ofstream out(out_file, std::ios::binary);
        if (!out) {
            std::cerr << "pebblelab: cannot write '" << out_file << "'\n";
            return kExitInput;
        }
        out << saved.str();
    }

    if (stats || out_file.empty()) {
        OwnedString stats_json;
        if (plab_status st = plab_graph_stats_json(graph.g, &stats_json.s); st != PLAB_OK)
            return fail(st);
        if (opts.json) {
            std::cout << stats_json.str() << "\n";
        } else {
            nlohmann::json doc = nlohmann::json::parse(stats_json.str());
            if (doc.contains("name")) std::cout << "name: " << doc["name"].get<std::string>() << "\n";
            std::cout << "n: " << doc["n"] << "\n"
                      << "m: " << doc["m"] << "\n"
                      << "diameter: " << doc["diameter"] << "\n"
                      << "radius: " << doc["radius"] << "\n";
            std::cout << "degrees:";
            for (const auto& row : doc["degree_histogram"])
                std::cout << " " << row["degree"] << "x" << row["count"];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// Shared plumbing for the query commands: load graph (and optional
// distribution), then emit one JSON document through the cache.
struct QueryInputs {
    std::string graph_text;
    GraphHandle graph;
    std::string dist_text;
    DistHandle dist;
};

int load_query_inputs(const std::string& graph_file, const std::string& dist_file,
                      QueryInputs& q) {
    if (graph_file.empty()) {
        std::cerr << "pebblelab: --graph FILE is required\n";
        return kExitInput;
    }
    auto gtext = read_file(graph_file);
    if (!gtext) return kExitInput;
    q.graph_text = *gtext;
    if (plab_status st = plab_graph_from_text(q.graph_text.c_str(), 0, &q.graph.g);
        st != PLAB_OK)
        return fail(st);
    if (!dist_file.empty()) {
        auto dtext = read_file(dist_file);
        if (!dtext) return kExitInput;
        q.dist_text = *dtext;
        if (plab_status st = plab_dist_from_text(q.graph.g, q.dist_text.c_str(), &q.dist.d);
            st != PLAB_OK)
            return fail(st);
    }
    return kExitOk;
}

int emit_query(const Options& opts, const std::string& command,
               std::vector<std::pair<std::string, std::string>> inputs,
               const std::function<plab_status(char**)>& call) {
    return run_cached(opts, command, std::move(inputs), [&]() -> std::pair<int, std::string> {
        OwnedString out;
        plab_status st = call(&out.s);
        if (st != PLAB_OK && st != PLAB_INCONCLUSIVE) return {fail(st), ""};
        return {exit_code_for(st), out.str() + "\n"};
    });
}

int cmd_verify_paper(const Options& opts, bool no_filters) {
    return run_cached(
        opts, "verify-paper",
        {{"no_filters", no_filters ? "1" : "0"}, {"json", opts.json ? "1" : "0"}},
        [&]() -> std::pair<int, std::string> {
            OwnedString out;
            plab_status st = plab_verify_paper_json(no_filters ? 1 : 0, &out.s);
            if (st != PLAB_OK) return {fail(st), ""};
            nlohmann::json doc = nlohmann::json::parse(out.str());
            bool all_pass = doc["all_pass"].get<bool>();
            std::string printed;
            if (opts.json) {
                printed = out.str() + "\n";
            } else {
                std::ostringstream lines;
                for (const auto& item : doc["items"]) {
                    lines << (item["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                          << item["id"].get<int>() << ": " << item["name"].get<std::string>()
                          << " [" << item["detail"].get<std::string>() << "]\n";
                }
                lines << (all_pass ? "verification passed" : "verification FAILED") << "\n";
                printed = lines.str();
            }
            return {all_pass ? kExitOk : kExitVerifyFailed, printed};
        });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pebblelab - exact graph pebbling and rubbling toolkit"};
    app.require_subcommand(1);

    Options opts;
    std::string cache_dir;
    if (const char* env = std::getenv("PEBBLELAB_CACHE")) cache_dir = env;
    app.add_option("--cache-dir", cache_dir,
                   "result cache directory (env PEBBLELAB_CACHE); caching is off without it");
    app.add_option("--seed", opts.seed, "seed for randomized extensions (results are deterministic)");
    app.add_flag("--json", opts.json, "machine-readable output where a human form is the default");

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "build or inspect a graph");
    std::vector<std::string> family_tokens;
    std::string graph_file, out_file, dist_file;
    bool stats = false;
    graph_cmd->add_option("spec", family_tokens, "family spec, e.g. family hamming 3 2");
    graph_cmd->add_option("--graph", graph_file, "graph file to load");
    graph_cmd->add_flag("--stats", stats, "print order, size, diameter, degree histogram");
    graph_cmd->add_option("--out", out_file, "write the graph in canonical explicit form");

    // shared query options
    std::string system_name = "pebbling";
    int target = -1;
    int gamma_k = -1;
    std::string k_range, opt_k_range;
    std::uint64_t budget = 10'000'000;
    bool no_filters = false;

    auto add_graph_opt = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "graph file")->required();
    };
    auto add_system_opt = [&](CLI::App* cmd) {
        cmd->add_option("--system", system_name, "pebbling|rubbling (default pebbling)");
    };

    auto* reach_cmd = app.add_subcommand("reach", "is a vertex reachable from a distribution");
    add_graph_opt(reach_cmd);
    reach_cmd->add_option("--dist", dist_file, "distribution file")->required();
    reach_cmd->add_option("--target", target, "target vertex")->required();
    add_system_opt(reach_cmd);

    auto* solv_cmd = app.add_subcommand("solvable", "is every vertex reachable");
    add_graph_opt(solv_cmd);
    solv_cmd->add_option("--dist", dist_file, "distribution file")->required();
    add_system_opt(solv_cmd);

    auto* gamma_cmd = app.add_subcommand("gamma", "exact distance-k domination number");
    add_graph_opt(gamma_cmd);
    gamma_cmd->add_option("--k", gamma_k, "domination distance (k >= 0)")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "bound report over a k range");
    add_graph_opt(bounds_cmd);
    bounds_cmd->add_option("--k", k_range, "k or a range A..B (k >= 2)")->required();

    auto* pi_cmd = app.add_subcommand("pi-opt", "exact optimal pebbling number");
    auto* rho_cmd = app.add_subcommand("rho-opt", "exact optimal rubbling number");
    for (CLI::App* cmd : {pi_cmd, rho_cmd}) {
        add_graph_opt(cmd);
        cmd->add_option("--budget", budget, "reachability-query budget");
        cmd->add_option("--k-range", opt_k_range, "theorem bound range A..B");
        cmd->add_flag("--no-filters", no_filters,
                      "audit mode: no enumeration filters, no theorem shortcut");
    }

    auto* verify_cmd = app.add_subcommand("verify-paper", "re-derive the published values");
    verify_cmd->add_flag("--no-filters", no_filters, "audit mode for the enumeration items");

    auto* cache_cmd = app.add_subcommand("cache", "result cache maintenance");
    auto* gc_cmd = cache_cmd->add_subcommand("gc", "drop records from other engine versions");
    bool gc_all = false;
    gc_cmd->add_flag("--all", gc_all, "drop every record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    opts.store = cache::Store{cache_dir, plab_version()};

    if (graph_cmd->parsed())
        return cmd_graph(opts, family_tokens, graph_file, stats, out_file);

    if (cache_cmd->parsed()) {
        if (!gc_cmd->parsed()) {
            std::cerr << "pebblelab: cache needs a subcommand (gc)\n";
            return kExitInput;
        }
        if (!opts.store.enabled()) {
            std::cerr << "pebblelab: no cache directory (use --cache-dir or PEBBLELAB_CACHE)\n";
            return kExitInput;
        }
        std::cout << "removed " << opts.store.gc(gc_all) << " cache entries\n";
        return kExitOk;
    }

    if (verify_cmd->parsed())
        return cmd_verify_paper(opts, no_filters);

    plab_move_system sys = PLAB_PEBBLING;
    if (system_name == "rubbling") {
        sys = PLAB_RUBBLING;
    } else if (system_name != "pebbling") {
        std::cerr << "pebblelab: unknown system '" << system_name << "' (pebbling|rubbling)\n";
        return kExitInput;
    }

    QueryInputs q;
    if (int code = load_query_inputs(graph_file, dist_file, q); code != kExitOk) return code;

    if (reach_cmd->parsed()) {
        return emit_query(opts, "reach",
                          {{"graph", q.graph_text},
                           {"dist", q.dist_text},
                           {"target", std::to_string(target)},
                           {"system", system_name}},
                          [&](char** out) {
                              return plab_reach_json(q.graph.g, q.dist.d, target, sys, out);
                          });
    }
    if (solv_cmd->parsed()) {
        return emit_query(opts, "solvable",
                          {{"graph", q.graph_text},
                           {"dist", q.dist_text},
                           {"system", system_name}},
                          [&](char** out) {
                              return plab_solvable_json(q.graph.g, q.dist.d, sys, out);
                          });
    }
    if (gamma_cmd->parsed()) {
        return emit_query(opts, "gamma",
                          {{"graph", q.graph_text}, {"k", std::to_string(gamma_k)}},
                          [&](char** out) { return plab_gamma_json(q.graph.g, gamma_k, out); });
    }
    if (bounds_cmd->parsed()) {
        int lo = 0, hi = 0;
        if (!parse_range(k_range, lo, hi)) {
            std::cerr << "pebblelab: invalid --k '" << k_range << "'\n";
            return kExitInput;
        }
        return emit_query(opts, "bounds",
                          {{"graph", q.graph_text},
                           {"k_lo", std::to_string(lo)},
                           {"k_hi", std::to_string(hi)}},
                          [&](char** out) { return plab_bounds_json(q.graph.g, lo, hi, out); });
    }
    if (pi_cmd->parsed() || rho_cmd->parsed()) {
        sys = pi_cmd->parsed() ? PLAB_PEBBLING : PLAB_RUBBLING;
        int lo = 0, hi = 0;
        if (!opt_k_range.empty() && !parse_range(opt_k_range, lo, hi)) {
            std::cerr << "pebblelab: invalid --k-range '" << opt_k_range << "'\n";
            return kExitInput;
        }
        std::string command = pi_cmd->parsed() ? "pi-opt" : "rho-opt";
        return emit_query(opts, command,
                          {{"graph", q.graph_text},
                           {"budget", std::to_string(budget)},
                           {"k_range", opt_k_range},
                           {"no_filters", no_filters ? "1" : "0"}},
                          [&](char** out) {
                              return plab_optimal_json(q.graph.g, sys, budget, lo, hi,
                                                       no_filters ? 1 : 0, out);
                          });
    }

    std::cerr << "pebblelab: no command\n";
    return kExitInput;
}
