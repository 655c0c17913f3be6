// Command-line front end over the library: batch solving, sequence
// verification, witness generation, theorem check suites, and extremal
// search. Streaming output is JSON lines; summaries are CSV.
//
// Exit codes (worst outcome wins):
//   0 success        3 a solve exhausted its node budget
//   1 invalid input sequence (verify)
//   2 malformed input line or bad construction parameters
//   4 a theorem check failed
//   5 internal self-check failure (a result our own engine rejects)
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grundy/constructions.hpp"
#include "grundy/engine.hpp"
#include "grundy/graph.hpp"
#include "grundy/graph6.hpp"
#include "grundy/harness.hpp"
#include "grundy/solver.hpp"

using json = nlohmann::ordered_json;
using namespace grundy;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;
constexpr int kExitTheoremFail = 4;
constexpr int kExitInternal = 5;

struct RunConfig {
    std::string variant = "l";
    int memo_cap = 24;  // 0 disables memoization
    std::uint64_t node_budget = 0;  // 0 means unlimited
    std::uint64_t seed = 42;
    int workers = 1;
    std::string format = "csv";  // summary tables only; streams are JSON
    std::string out_path;
    bool one_indexed = false;

    // The exact flag set that reproduces this run (byte-for-byte output,
    // elapsed_ms aside), suitable for copy-paste behind any subcommand.
    std::string flags() const {
        std::ostringstream s;
        s << "--variant " << variant << " --memo-cap " << memo_cap;
        if (node_budget > 0) s << " --node-budget " << node_budget;
        s << " --seed " << seed << " --workers " << workers << " --format "
          << format;
        if (!out_path.empty()) s << " --out " << out_path;
        if (one_indexed) s << " --one-indexed";
        return s.str();
    }

    SolveOptions solve_options() const {
        SolveOptions o;
        o.memo_enabled = memo_cap > 0;
        o.memo_cap = memo_cap > 0 ? memo_cap : 0;
        if (node_budget > 0) o.node_budget = node_budget;
        return o;
    }
};

bool log_enabled() {
    const char* v = std::getenv("GRUNDY_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "[grundy] " << msg << "\n";
}

// All output honors --out; stdout otherwise.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const RunConfig& cfg) {
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file)
                throw std::runtime_error("cannot open for writing: " +
                                         cfg.out_path);
            os = &file;
        }
    }
    void line(const std::string& s) { *os << s << "\n"; }
};

int shift(const RunConfig& cfg) { return cfg.one_indexed ? 1 : 0; }

json witness_json(const std::vector<int>& w, const RunConfig& cfg) {
    json a = json::array();
    for (int v : w) a.push_back(v + shift(cfg));
    return a;
}

json mask_json(std::uint64_t mask, int n, const RunConfig& cfg) {
    json a = json::array();
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) a.push_back(v + shift(cfg));
    return a;
}

// ---- input streams --------------------------------------------------------

struct StreamItem {
    int line_no = 0;      // 1-based line of the graph6 line or edge-list header
    bool ok = false;
    Graph graph;
    std::string error;
};

bool looks_like_edge_header(const std::string& line) {
    std::istringstream in(line);
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra)) return false;
    return !a.empty() && std::isdigit(static_cast<unsigned char>(a[0]));
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// graph6 lines and multi-line edge lists, freely mixed. graph6 bytes start
// at '?' (63), so a leading digit is unambiguous.
std::vector<StreamItem> read_graph_stream(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    std::vector<StreamItem> items;
    size_t i = 0;
    while (i < lines.size()) {
        if (blank(lines[i])) {
            ++i;
            continue;
        }
        StreamItem item;
        item.line_no = static_cast<int>(i) + 1;
        if (looks_like_edge_header(lines[i])) {
            std::istringstream head(lines[i]);
            long long n = -1, m = -1;
            head >> n >> m;
            std::string text = lines[i];
            ++i;
            for (long long e = 0; e < m && i < lines.size(); ++e, ++i)
                text += "\n" + lines[i];
            try {
                item.graph = parse_edge_list(text);
                item.ok = true;
            } catch (const FormatError& ex) {
                item.error = ex.what();
            }
        } else {
            try {
                item.graph = parse_graph6(lines[i]);
                item.ok = true;
            } catch (const FormatError& ex) {
                item.error = ex.what();
            }
            ++i;
        }
        items.push_back(std::move(item));
    }
    return items;
}

// Sequence arguments: any mix of separate tokens and quoted "0 1 3 2" /
// "0,1,3,2" lists. Indices honor --one-indexed.
std::vector<int> parse_sequence(const std::vector<std::string>& args,
                                const RunConfig& cfg) {
    std::vector<int> seq;
    for (const std::string& arg : args) {
        std::string cleaned = arg;
        for (char& c : cleaned)
            if (c == ',') c = ' ';
        std::istringstream in(cleaned);
        std::string tok;
        while (in >> tok) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw FormatError("sequence: not a vertex index: '" + tok + "'");
            }
            if (used != tok.size())
                throw FormatError("sequence: not a vertex index: '" + tok + "'");
            seq.push_back(v - shift(cfg));
        }
    }
    return seq;
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const RunConfig& cfg) {
    Sink sink(cfg);
    Variant variant = variant_from_name(cfg.variant);
    SolveOptions opts = cfg.solve_options();

    std::vector<StreamItem> items = read_graph_stream(std::cin);
    log_line("solve: " + std::to_string(items.size()) + " input graphs");

    std::vector<std::optional<SolveResult>> results(items.size());
    auto run_block = [&](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; ++k)
            if (items[k].ok) results[k] = solve(items[k].graph, variant, opts);
    };
    int workers = std::max(1, cfg.workers);
    if (workers == 1 || items.size() < 2) {
        run_block(0, items.size());
    } else {
        // static contiguous blocks: output order is input order regardless
        std::vector<std::future<void>> fs;
        size_t per = (items.size() + workers - 1) / workers;
        for (size_t lo = 0; lo < items.size(); lo += per)
            fs.push_back(std::async(std::launch::async, run_block, lo,
                                    std::min(lo + per, items.size())));
        for (auto& f : fs) f.get();
    }

    int code = 0;
    for (size_t k = 0; k < items.size(); ++k) {
        json rec;
        if (!items[k].ok) {
            rec["line"] = items[k].line_no;
            rec["error"] = items[k].error;
            code = std::max(code, kExitMalformed);
        } else {
            const SolveResult& r = *results[k];
            rec["graph6"] = to_graph6(items[k].graph);
            rec["n"] = items[k].graph.order();
            rec["variant"] = cfg.variant;
            rec["gamma"] = r.value;
            rec["witness"] = witness_json(r.witness, cfg);
            rec["nodes_explored"] = r.nodes_explored;
            rec["elapsed_ms"] = r.elapsed_ms;
            rec["exact"] = r.exact();
            if (!r.exact()) code = std::max(code, kExitBudget);
        }
        rec["config"] = cfg.flags();
        sink.line(rec.dump());
    }
    return code;
}

// ---- verify ---------------------------------------------------------------

std::string sequence_error_name(SequenceError e) {
    switch (e) {
        case SequenceError::none: return "none";
        case SequenceError::out_of_range: return "out-of-range";
        case SequenceError::duplicate: return "duplicate";
        case SequenceError::no_new_footprint: return "no-new-footprint";
    }
    return "unknown";
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& seq_args) {
    Sink sink(cfg);
    Variant variant = variant_from_name(cfg.variant);

    std::vector<StreamItem> items = read_graph_stream(std::cin);
    if (items.empty()) {
        sink.line(json{{"error", "verify: no graph on stdin"}}.dump());
        return kExitMalformed;
    }
    if (!items[0].ok) {
        sink.line(json{{"line", items[0].line_no}, {"error", items[0].error}}
                      .dump());
        return kExitMalformed;
    }
    const Graph& g = items[0].graph;

    std::vector<int> seq;
    try {
        seq = parse_sequence(seq_args, cfg);
    } catch (const FormatError& ex) {
        sink.line(json{{"error", ex.what()}}.dump());
        return kExitMalformed;
    }

    ValidationResult vr = validate_sequence(g, variant, seq);

    json rec;
    rec["graph6"] = to_graph6(g);
    rec["variant"] = cfg.variant;
    rec["sequence"] = witness_json(seq, cfg);
    rec["valid"] = vr.ok;
    // on failure: the number of steps that were accepted before the offender
    rec["length"] = vr.ok ? static_cast<int>(seq.size()) : vr.fail_index;
    rec["fail_index"] =
        vr.ok ? -1 : vr.fail_index + (cfg.one_indexed ? 1 : 0);
    rec["error"] = sequence_error_name(vr.error);
    json steps = json::array();
    for (size_t i = 0; i < vr.log.newly.size(); ++i) {
        json step;
        step["index"] = static_cast<int>(i) + shift(cfg);
        step["vertex"] = seq[i] + shift(cfg);
        step["newly_footprinted"] = mask_json(vr.log.newly[i], g.order(), cfg);
        steps.push_back(std::move(step));
    }
    rec["steps"] = std::move(steps);
    rec["config"] = cfg.flags();
    sink.line(rec.dump());
    return vr.ok ? 0 : kExitInvalid;
}

// ---- generate -------------------------------------------------------------

int cmd_generate(const RunConfig& cfg, const std::string& family_arg, int n,
                 int k, const std::vector<std::string>& seq_args) {
    Sink sink(cfg);
    Family family = family_from_name(family_arg);

    ConstructionOutput out;
    try {
        switch (family) {
            case Family::cycle: out = cycle_witness(n); break;
            case Family::cycle_with_leaf: out = cycle_with_leaf(n); break;
            case Family::clique_with_leaves: out = clique_with_leaves(k); break;
            case Family::double_cycle_bridge:
                out = double_cycle_bridge(n);
                break;
            case Family::saturate:
            case Family::leaf_augment: {
                std::vector<StreamItem> items = read_graph_stream(std::cin);
                if (items.empty() || !items[0].ok) {
                    sink.line(json{{"error",
                                    "generate: base graph expected on stdin"}}
                                  .dump());
                    return kExitMalformed;
                }
                if (family == Family::leaf_augment) {
                    out = leaf_augment(items[0].graph);
                } else {
                    out = saturate(items[0].graph, parse_sequence(seq_args, cfg));
                }
                break;
            }
        }
    } catch (const FormatError& ex) {
        sink.line(json{{"error", ex.what()}}.dump());
        return kExitMalformed;
    } catch (const std::invalid_argument& ex) {
        sink.line(json{{"error", ex.what()}}.dump());
        return kExitMalformed;
    }

    json rec;
    rec["family"] = family_name(out.provenance);
    rec["graph6"] = to_graph6(out.graph);
    rec["n"] = out.graph.order();
    rec["expected_gamma"] = out.expected_gamma;
    rec["witness"] = witness_json(out.witness, cfg);
    rec["degenerate"] = out.degenerate;
    rec["config"] = cfg.flags();
    sink.line(rec.dump());
    return 0;
}

// ---- check ----------------------------------------------------------------

void merge_summary(std::vector<SweepSummaryRow>& total,
                   const std::vector<SweepSummaryRow>& part) {
    for (const SweepSummaryRow& row : part) {
        bool found = false;
        for (SweepSummaryRow& t : total) {
            if (t.theorem_id != row.theorem_id) continue;
            t.graphs_checked += row.graphs_checked;
            t.passes += row.passes;
            t.fails += row.fails;
            t.inconclusive += row.inconclusive;
            found = true;
            break;
        }
        if (!found) total.push_back(row);
    }
}

std::vector<SweepSummaryRow> tally(const std::vector<TheoremReport>& reports) {
    std::vector<SweepSummaryRow> rows;
    for (const TheoremReport& r : reports) {
        SweepSummaryRow* slot = nullptr;
        for (SweepSummaryRow& t : rows)
            if (t.theorem_id == r.theorem_id) slot = &t;
        if (slot == nullptr) {
            SweepSummaryRow fresh;
            fresh.theorem_id = r.theorem_id;
            rows.push_back(fresh);
            slot = &rows.back();
        }
        slot->graphs_checked += 1;
        if (r.verdict == Verdict::pass) slot->passes += 1;
        if (r.verdict == Verdict::fail) slot->fails += 1;
        if (r.verdict == Verdict::inconclusive) slot->inconclusive += 1;
    }
    return rows;
}

// Seeded corpus for the removal suites: mixed densities, solver-friendly
// orders.
std::vector<Graph> removal_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double probs[3] = {0.2, 0.5, 0.8};
    std::vector<Graph> corpus;
    for (int i = 0; i < 150; ++i) {
        int n = 4 + static_cast<int>(rng() % 6);
        corpus.push_back(random_graph(n, probs[i % 3], rng()));
    }
    return corpus;
}

// Small fixed set of graphs whose values and removal behavior are known
// exactly; every check applies to each.
std::vector<Graph> landmark_graphs() {
    std::vector<Graph> gs;
    gs.push_back(cartesian_product(complete_graph(4), complete_graph(2)));
    gs.push_back(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    gs.push_back(path_graph(4));
    for (int n = 3; n <= 6; ++n) gs.push_back(double_cycle_bridge(n).graph);
    gs.push_back(cycle_with_leaf(5).graph);
    gs.push_back(clique_with_leaves(4).graph);
    return gs;
}

int cmd_check(const RunConfig& cfg, const std::string& suite, int order,
              const std::vector<std::string>& only) {
    Sink sink(cfg);

    std::vector<SweepSummaryRow> summary;
    std::vector<TheoremReport> nonpass;
    bool internal_failure = false;

    auto absorb_reports = [&](const std::vector<TheoremReport>& reports) {
        merge_summary(summary, tally(reports));
        for (const TheoremReport& r : reports)
            if (r.verdict != Verdict::pass) nonpass.push_back(r);
    };

    try {
        if (suite == "exhaustive" || suite == "all") {
            log_line("check: exhaustive sweep on " + std::to_string(order) +
                     " vertices");
            SweepResult r = exhaustive_sweep(order, cfg.workers, only);
            merge_summary(summary, r.summary);
            for (const TheoremReport& rep : r.reports) nonpass.push_back(rep);
        }
        if (suite == "edge-removal" || suite == "all") {
            log_line("check: removal corpus, seed " + std::to_string(cfg.seed));
            std::vector<TheoremReport> reports;
            for (const Graph& g : removal_corpus(cfg.seed)) {
                reports.push_back(check_edge_removal(g));
                if (suite == "all")
                    reports.push_back(check_vertex_removal(g));
            }
            absorb_reports(reports);
        }
        if (suite == "all") {
            log_line("check: random corpus sweep");
            CorpusOptions co;
            co.seed = cfg.seed;
            co.workers = cfg.workers;
            SweepResult r = random_corpus_sweep(co);
            merge_summary(summary, r.summary);
            for (const TheoremReport& rep : r.reports) nonpass.push_back(rep);

            log_line("check: landmark graphs");
            std::vector<TheoremReport> reports;
            for (const Graph& g : landmark_graphs()) {
                reports.push_back(check_delta_bound(g));
                reports.push_back(check_full_implies_leaf(g));
                reports.push_back(check_triple_twin(g));
                reports.push_back(check_complete_characterization(g));
                reports.push_back(check_edge_removal(g));
                reports.push_back(check_vertex_removal(g));
            }
            absorb_reports(reports);
        }
    } catch (const InternalCheckError& ex) {
        sink.line(json{{"error", ex.what()}}.dump());
        internal_failure = true;
    }

    for (const TheoremReport& r : nonpass) sink.line(report_to_json(r));

    if (cfg.format == "json") {
        for (const SweepSummaryRow& row : summary) {
            json j;
            j["theorem_id"] = row.theorem_id;
            j["graphs_checked"] = row.graphs_checked;
            j["passes"] = row.passes;
            j["fails"] = row.fails;
            j["inconclusive"] = row.inconclusive;
            sink.line(j.dump());
        }
    } else {
        std::string csv = summary_to_csv(summary);
        while (!csv.empty() && csv.back() == '\n') csv.pop_back();
        sink.line(csv);
    }

    if (internal_failure) return kExitInternal;
    for (const SweepSummaryRow& row : summary)
        if (row.fails > 0) return kExitTheoremFail;
    return 0;
}

// ---- search ---------------------------------------------------------------

int cmd_search(const RunConfig& cfg, const std::string& target_arg,
               const SearchOptions& base, const std::string& seed_graph6) {
    Sink sink(cfg);
    DeltaTarget target = delta_target_from_name(target_arg);

    SearchOptions opts = base;
    opts.seed = cfg.seed;

    std::optional<Graph> seed_graph;
    if (!seed_graph6.empty()) {
        try {
            seed_graph = parse_graph6(seed_graph6);
        } catch (const FormatError& ex) {
            sink.line(json{{"error", ex.what()}}.dump());
            return kExitMalformed;
        }
    }

    SearchState st;
    try {
        st = extremal_search(target, opts, seed_graph);
    } catch (const TheoremViolation& ex) {
        sink.line(json{{"error", ex.what()}}.dump());
        return kExitTheoremFail;
    }

    json rec;
    rec["target"] = delta_target_name(target);
    rec["graph6"] = to_graph6(st.current);
    rec["n"] = st.current.order();
    json deltas = json::array();
    for (int d : st.realized_deltas) deltas.push_back(d);
    rec["realized_deltas"] = std::move(deltas);
    rec["score"] = st.score;
    rec["steps"] = st.step_count;
    rec["seed"] = st.rng_seed;
    std::ostringstream extra;
    extra << " --steps " << opts.steps << " --restarts " << opts.restarts
          << " --min-n " << opts.min_n << " --max-n " << opts.max_n;
    if (!seed_graph6.empty()) extra << " --seed-graph " << seed_graph6;
    rec["config"] = cfg.flags() + extra.str();
    sink.line(rec.dump());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Grundy domination toolkit: longest dominating-sequence numbers "
        "(classic, total, L), witnesses, and theorem check suites"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--variant", cfg.variant, "Sequence variant")
        ->check(CLI::IsMember({"classic", "total", "l"}))
        ->capture_default_str();
    app.add_option("--memo-cap", cfg.memo_cap,
                   "Memoize subsets below this order; 0 disables")
        ->capture_default_str();
    app.add_option("--node-budget", cfg.node_budget,
                   "Search node cap per graph; 0 means unlimited")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized corpora")
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "Parallel worker count")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_option("--format", cfg.format,
                   "Summary table format (streams are always JSON lines)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "Write output to a file");
    app.add_flag("--one-indexed", cfg.one_indexed,
                 "Read and render vertices 1-based");

    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "Solve each graph6 or edge-list graph from stdin");
    solve_cmd->fallthrough();

    std::vector<std::string> seq_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Validate a sequence against the graph on stdin");
    verify_cmd->fallthrough();
    verify_cmd->add_option("sequence", seq_args, "Vertex sequence, e.g. 0 1 3 2")
        ->required()
        ->take_all();

    std::string family_arg;
    int gen_n = 5;
    int gen_k = 3;
    std::vector<std::string> gen_seq;
    CLI::App* generate_cmd = app.add_subcommand(
        "generate", "Emit a known extremal family member with its witness");
    generate_cmd->fallthrough();
    generate_cmd->add_option("family", family_arg, "Construction family")
        ->required()
        ->check(CLI::IsMember({"cycle", "cycle-with-leaf", "clique-with-leaves",
                               "saturate", "leaf-augment",
                               "double-cycle-bridge"}));
    generate_cmd->add_option("-n,--order", gen_n,
                             "Cycle length for the sized families")
        ->capture_default_str();
    generate_cmd->add_option("-k,--clique", gen_k,
                             "Clique order for clique-with-leaves")
        ->capture_default_str();
    generate_cmd->add_option("--sequence", gen_seq,
                             "Base witness for saturate, e.g. \"0 2 4 3\"");

    std::string suite;
    int check_order = 5;
    std::vector<std::string> only;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Run theorem check suites");
    check_cmd->fallthrough();
    check_cmd->add_option("suite", suite, "Which suite to run")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "edge-removal", "all"}));
    check_cmd->add_option("--order", check_order,
                          "Vertex count for the exhaustive sweep")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    check_cmd->add_option("--only", only,
                          "Restrict the exhaustive sweep to named checks");

    std::string target_arg;
    SearchOptions search_opts;
    std::string seed_graph6;
    CLI::App* search_cmd = app.add_subcommand(
        "search", "Hill-climb for graphs realizing many removal deltas");
    search_cmd->fallthrough();
    search_cmd->add_option("target", target_arg, "Which delta set to chase")
        ->required()
        ->check(CLI::IsMember({"edge-deltas", "vertex-deltas"}));
    search_cmd->add_option("--steps", search_opts.steps, "Steps per restart")
        ->capture_default_str();
    search_cmd->add_option("--restarts", search_opts.restarts, "Restart count")
        ->capture_default_str();
    search_cmd->add_option("--min-n", search_opts.min_n, "Smallest order")
        ->capture_default_str();
    search_cmd->add_option("--max-n", search_opts.max_n, "Largest order")
        ->capture_default_str();
    search_cmd->add_option("--seed-graph", seed_graph6,
                           "graph6 starting point for the first restart");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg, seq_args);
        if (generate_cmd->parsed())
            return cmd_generate(cfg, family_arg, gen_n, gen_k, gen_seq);
        if (check_cmd->parsed()) return cmd_check(cfg, suite, check_order, only);
        if (search_cmd->parsed())
            return cmd_search(cfg, target_arg, search_opts, seed_graph6);
    } catch (const InternalCheckError& ex) {
        std::cerr << "internal check failed: " << ex.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitMalformed;
    }
    return 0;
}
