#include "svcp/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "svcp/covers.hpp"
#include "svcp/errors.hpp"
#include "svcp/formulas.hpp"
#include "svcp/graph.hpp"
#include "svcp/pebbling.hpp"
#include "svcp/reductions.hpp"
#include "svcp/report_json.hpp"
#include "svcp/solver.hpp"

namespace svcp::cli {

namespace {

// A checked property failed (sandwich, reduction correspondence, ...).
struct Violation {};

std::pair<int, int> parse_range(const std::string& text, const std::string& what) {
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            std::size_t used = 0;
            int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        if (b < a) throw InvalidArgument(what + ": empty range " + text);
        return {a, b};
    } catch (const InvalidArgument&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidArgument(what + ": expected an integer or a..b range, got '" + text + "'");
    }
}

int parse_single(const std::string& text, const std::string& what) {
    auto [a, b] = parse_range(text, what);
    if (a != b) throw InvalidArgument(what + ": a single value is required here");
    return a;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidArgument(what + ": bad integer '" + item + "'");
        }
    }
    return out;
}

// "complete:3", "multipartite:2,2,1", "wheel:5"
FamilySpec parse_compact_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidArgument("family operand must look like name:params, got '" + text + "'");
    FamilySpec spec;
    spec.family = parse_family_name(text.substr(0, colon));
    const std::string params = text.substr(colon + 1);
    if (spec.family == Family::complete_multipartite) spec.parts = parse_int_list(params, "parts");
    else spec.n = parse_single(params, "family parameter");
    return spec;
}

FamilySpec family_spec(const RunConfig& cfg, std::optional<int> override_param = std::nullopt) {
    FamilySpec spec;
    spec.family = parse_family_name(cfg.family);
    switch (spec.family) {
        case Family::complete_multipartite:
            if (cfg.parts.empty()) throw InvalidArgument("--parts is required for the multipartite family");
            spec.parts = parse_int_list(cfg.parts, "--parts");
            break;
        case Family::wheel:
            if (override_param) spec.n = *override_param;
            else if (!cfg.rim.empty()) spec.n = parse_single(cfg.rim, "--rim");
            else if (!cfg.n.empty()) spec.n = parse_single(cfg.n, "--n");
            else throw InvalidArgument("--rim is required for the wheel family");
            break;
        case Family::join:
        case Family::union_:
            if (cfg.left.empty() || cfg.right.empty()) throw InvalidArgument("--left and --right are required for " + cfg.family);
            spec.operands = {parse_compact_family(cfg.left), parse_compact_family(cfg.right)};
            break;
        default:
            if (override_param) spec.n = *override_param;
            else if (!cfg.n.empty()) spec.n = parse_single(cfg.n, "--n");
            else throw InvalidArgument("--n is required for the " + cfg.family + " family");
            break;
    }
    validate(spec);
    return spec;
}

Graph load_graph(const RunConfig& cfg) {
    if (!cfg.graph_path.empty() && !cfg.family.empty()) throw InvalidArgument("use either --graph or --family, not both");
    if (!cfg.graph_path.empty()) return read_edge_list_file(cfg.graph_path);
    if (!cfg.family.empty()) return build(family_spec(cfg));
    throw InvalidArgument("a graph is required: --graph FILE or --family NAME");
}

Graph load_connected(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    if (!g.is_connected()) throw DisconnectedGraph();
    return g;
}

SolverOptions solver_options(const RunConfig& cfg) {
    SolverOptions o;
    o.max_distributions = cfg.distribution_cap;
    o.max_states = cfg.state_cap;
    o.enumeration_cap = cfg.enumeration_cap;
    o.jobs = cfg.jobs;
    return o;
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& j) {
    if (cfg.format == OutputFormat::plain && j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
        return;
    }
    out << j.dump(2) << '\n';
}

VertexSet parse_target(const std::string& text, const Graph& g) {
    VertexSet t;
    for (int v : parse_int_list(text, "--target")) {
        if (!g.contains(v)) throw InvalidArgument("--target vertex out of range: " + std::to_string(v));
        t.insert(v);
    }
    return t;
}

std::vector<Graph> corpus_or_single(const RunConfig& cfg, int corpus_n) {
    if (corpus_n > 0) {
        std::vector<Graph> all;
        for (int k = 1; k <= corpus_n; ++k) {
            auto part = connected_graphs(k);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    return {load_graph(cfg)};
}

Json edges_json(const Graph& g) {
    Json e = Json::array();
    for (const Edge& x : g.edges()) e.push_back(Json::array({x.u, x.v}));
    return e;
}

std::string csv_field(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }
        return s;
    }
    return v.dump();
}

std::string parameters_of(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::complete_multipartite: {
            std::string s = "parts=";
            for (std::size_t i = 0; i < spec.parts.size(); ++i) s += (i ? "," : "") + std::to_string(spec.parts[i]);
            return s;
        }
        case Family::wheel:
            return "rim=" + std::to_string(spec.n) + " s=" + std::to_string(spec.wheel_s()) + " l=" + std::to_string(spec.wheel_l());
        case Family::join:
        case Family::union_: return describe(spec);
        default: return "n=" + std::to_string(spec.n);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact secure vertex cover pebbling computations on small graphs", "svcp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");

    std::string format = "json";
    app.add_option("--format", format, "json | csv | plain (csv only for family-table)")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)")->envname("SVCP_JOBS")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--cap-states", cfg.state_cap, "max states per reachability search (0 = unlimited)")->envname("SVCP_CAP_STATES");
    app.add_option("--cap-distributions", cfg.distribution_cap, "max distributions in one scan level")
        ->envname("SVCP_CAP_DISTRIBUTIONS")->check(CLI::PositiveNumber);
    app.add_option("--cap-vertices", cfg.enumeration_cap, "max vertices for subset enumeration")
        ->envname("SVCP_CAP_VERTICES")->check(CLI::Range(1, 30));
    app.add_flag("--timing", cfg.timing, "include wall-clock time in reports");

    auto add_graph_opts = [&](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph_path, "edge-list file");
        sub->add_option("--family", cfg.family, "path|cycle|complete|star|multipartite|friendship|wheel|join|union");
        sub->add_option("--n", cfg.n, "family size parameter (value or a..b range)");
        sub->add_option("--parts", cfg.parts, "multipartite part sizes, e.g. 2,2,1");
        sub->add_option("--rim", cfg.rim, "wheel rim length (value or a..b range)");
        sub->add_option("--left", cfg.left, "join/union left operand, e.g. complete:2");
        sub->add_option("--right", cfg.right, "join/union right operand");
    };

    bool minimal = false;
    std::string dist_text, target_text, target_family_name;
    int trials = 0;
    int corpus_n = 0;
    int probe_k = 0;
    std::string reduce_kind, out_path;
    bool with_oracle = false;
    std::string table_invariant = "f_svcp";

    auto* c_alpha = app.add_subcommand("alpha-s", "secure vertex cover number");
    add_graph_opts(c_alpha);
    auto* c_covers = app.add_subcommand("secure-covers", "list secure vertex covers");
    add_graph_opts(c_covers);
    c_covers->add_flag("--minimal", minimal, "only inclusion-minimal covers");
    auto* c_solv = app.add_subcommand("solvable", "decide whether a distribution reaches a target");
    add_graph_opts(c_solv);
    c_solv->add_option("--dist", dist_text, "distribution: 0:27,3:1 or [27,0,0]")->required();
    c_solv->add_option("--target", target_text, "0-based target vertices, e.g. 0,1,3");
    c_solv->add_option("--target-family", target_family_name, "secure | cover | all")
        ->check(CLI::IsMember({"secure", "cover", "all"}));
    c_solv->add_option("--monotonicity-trials", trials, "random pebble-addition checks")->check(CLI::NonNegativeNumber);
    auto* c_svcp = app.add_subcommand("svcp", "secure vertex cover pebbling number");
    add_graph_opts(c_svcp);
    auto* c_gamma = app.add_subcommand("gamma", "cover pebbling number");
    add_graph_opts(c_gamma);
    auto* c_sigma = app.add_subcommand("sigma", "covering cover pebbling number");
    add_graph_opts(c_sigma);
    auto* c_sand = app.add_subcommand("sandwich", "check sigma <= f_svcp <= gamma and n-1 <= f_svcp <= (n-1)2^(d-1)");
    add_graph_opts(c_sand);
    c_sand->add_option("--corpus", corpus_n, "all connected graphs on up to N vertices")->check(CLI::Range(1, 6));
    auto* c_table = app.add_subcommand("family-table", "closed-form values for a family, optionally checked by brute force");
    add_graph_opts(c_table);
    c_table->add_flag("--oracle", with_oracle, "also compute the brute-force value");
    c_table->add_option("--invariant", table_invariant, "f_svcp | alpha_s")->check(CLI::IsMember({"f_svcp", "alpha_s"}));
    auto* c_wn = app.add_subcommand("wn", "minimum secure cover weight of P_n");
    c_wn->add_option("--n", cfg.n, "value or a..b range")->required();
    auto* c_reduce = app.add_subcommand("reduce", "build a reduction gadget");
    add_graph_opts(c_reduce);
    c_reduce->add_option("kind", reduce_kind, "clique-layer | apex")->required()->check(CLI::IsMember({"clique-layer", "apex"}));
    c_reduce->add_option("--out", out_path, "write the constructed graph as an edge list");
    auto* c_verify = app.add_subcommand("verify-reduction", "exhaustively check the clique-layer correspondence");
    add_graph_opts(c_verify);
    c_verify->add_option("--corpus", corpus_n, "all connected graphs on up to N vertices")->check(CLI::Range(1, 6));
    auto* c_probe = app.add_subcommand("probe-apex", "compare f_svcp(K_1 + G) with the claimed pebble counts");
    add_graph_opts(c_probe);
    c_probe->add_option("--k", probe_k, "secure cover size bound")->required()->check(CLI::PositiveNumber);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    cfg.format = format == "csv" ? OutputFormat::csv : format == "plain" ? OutputFormat::plain : OutputFormat::json;
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.format == OutputFormat::csv && cfg.command != "family-table")
            throw InvalidArgument("--format csv is only available for family-table");
        const SolverOptions opts = solver_options(cfg);

        if (cfg.command == "alpha-s") {
            Graph g = load_graph(cfg);
            auto covers = minimal_secure_covers(g, cfg.enumeration_cap);
            const int a = alpha_s(g, cfg.enumeration_cap);
            std::vector<VertexSet> smallest;
            for (VertexSet s : covers)
                if (s.size() == a) smallest.push_back(s);
            Json j;
            j["graph"] = graph_summary(g);
            j["alpha_s"] = a;
            j["minimum_covers"] = to_json(smallest);
            emit(out, cfg, j);
        } else if (cfg.command == "secure-covers") {
            Graph g = load_graph(cfg);
            auto covers = enumerate_secure_covers(g, minimal, cfg.enumeration_cap);
            Json j;
            j["graph"] = graph_summary(g);
            j["minimal"] = minimal;
            j["count"] = covers.size();
            Json sets = Json::array(), labels = Json::array();
            for (const CoverSet& c : covers) {
                sets.push_back(to_json(c.members));
                labels.push_back(label(c.members));
            }
            j["covers"] = sets;
            j["labels"] = labels;
            emit(out, cfg, j);
        } else if (cfg.command == "solvable") {
            Graph g = load_connected(cfg);
            Distribution d = parse_distribution(dist_text, g.order());
            std::vector<VertexSet> targets;
            if (!target_text.empty() && !target_family_name.empty())
                throw InvalidArgument("use either --target or --target-family");
            if (!target_text.empty()) targets.push_back(parse_target(target_text, g));
            else if (target_family_name == "secure") targets = minimal_secure_covers(g, cfg.enumeration_cap);
            else if (target_family_name == "cover") targets = minimal_vertex_covers(g, cfg.enumeration_cap);
            else if (target_family_name == "all") targets = {g.vertex_set()};
            else throw InvalidArgument("a target is required: --target or --target-family");

            ReachabilityEngine engine(g, {cfg.state_cap, true});
            auto r = engine.reach_any(d, targets);
            Json j;
            j["reachable"] = r.reachable;
            j["target"] = r.target_index ? to_json(targets[*r.target_index]) : Json(nullptr);
            j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
            j["final"] = r.certificate ? to_json(r.certificate->replay(g, d)) : Json(nullptr);
            j["states_expanded"] = engine.last_states();
            bool violated = false;
            if (trials > 0) {
                std::mt19937_64 rng(cfg.seed);
                std::uniform_int_distribution<int> pick_v(0, g.order() - 1), pick_k(1, 3);
                int bad = 0;
                ReachabilityEngine check(g, {cfg.state_cap, false});
                for (int t = 0; t < trials && r.reachable; ++t) {
                    Distribution bigger = d;
                    bigger.add(pick_v(rng), pick_k(rng));
                    if (!check.reach_any(bigger, targets).reachable) ++bad;
                }
                j["monotonicity"] = {{"trials", trials}, {"seed", cfg.seed}, {"violations", bad}};
                violated = bad > 0;
            }
            emit(out, cfg, j);
            if (violated) throw Violation{};
        } else if (cfg.command == "svcp" || cfg.command == "gamma" || cfg.command == "sigma") {
            Graph g = load_connected(cfg);
            const Invariant inv = cfg.command == "svcp" ? Invariant::f_svcp
                                  : cfg.command == "gamma" ? Invariant::gamma
                                                           : Invariant::sigma;
            emit(out, cfg, to_json(compute_invariant(g, inv, opts), cfg.timing));
        } else if (cfg.command == "sandwich") {
            bool all_ok = true;
            Json rows = Json::array();
            for (const Graph& g : corpus_or_single(cfg, corpus_n)) {
                if (!g.is_connected()) throw DisconnectedGraph();
                auto rep = check_sandwich(g, opts);
                all_ok = all_ok && rep.ok();
                Json row = to_json(rep, cfg.timing);
                if (corpus_n > 0) row["edges"] = edges_json(g);
                rows.push_back(row);
            }
            if (corpus_n > 0) emit(out, cfg, Json{{"graphs", rows.size()}, {"all_hold", all_ok}, {"results", rows}});
            else emit(out, cfg, rows.front());
            if (!all_ok) throw Violation{};
        } else if (cfg.command == "family-table") {
            if (cfg.family.empty()) throw InvalidArgument("family-table needs --family");
            const Family fam = parse_family_name(cfg.family);
            std::vector<FamilySpec> specs;
            if (fam == Family::complete_multipartite || fam == Family::join || fam == Family::union_) {
                specs.push_back(family_spec(cfg));
            } else {
                const std::string& range_text = fam == Family::wheel && !cfg.rim.empty() ? cfg.rim : cfg.n;
                if (range_text.empty()) throw InvalidArgument(fam == Family::wheel ? "--rim is required" : "--n is required");
                auto [a, b] = parse_range(range_text, fam == Family::wheel ? "--rim" : "--n");
                for (int k = a; k <= b; ++k) specs.push_back(family_spec(cfg, k));
            }
            Json rows = Json::array();
            for (const FamilySpec& spec : specs) {
                FormulaResult f = table_invariant == "alpha_s" ? alpha_s_formula(spec) : f_svcp_formula(spec);
                Json row;
                row["family"] = family_name(spec.family);
                row["parameters"] = parameters_of(spec);
                row["formula"] = f.formula;
                Json fj = to_json(f);
                row["value"] = fj["value"];
                if (with_oracle) {
                    Graph g = build(spec);
                    int oracle = table_invariant == "alpha_s" ? alpha_s(g, cfg.enumeration_cap) : compute_f_svcp(g, opts).value;
                    row["oracle"] = oracle;
                    row["match"] = f.value ? Json(*f.value == oracle) : Json(nullptr);
                } else {
                    row["oracle"] = nullptr;
                    row["match"] = nullptr;
                }
                row["note"] = f.applicable ? f.note : f.reason;
                rows.push_back(row);
            }
            if (cfg.format == OutputFormat::csv) {
                out << "family,parameters,formula,value,oracle,match,note\n";
                for (const auto& row : rows) {
                    bool first = true;
                    for (const char* key : {"family", "parameters", "formula", "value", "oracle", "match", "note"}) {
                        out << (first ? "" : ",") << csv_field(row[key]);
                        first = false;
                    }
                    out << '\n';
                }
            } else if (cfg.format == OutputFormat::plain) {
                for (const auto& row : rows) out << row.dump() << '\n';
            } else {
                out << rows.dump(2) << '\n';
            }
            bool mismatch = false;
            for (const auto& row : rows)
                if (row["match"].is_boolean() && !row["match"].get<bool>()) mismatch = true;
            if (mismatch) throw Violation{};
        } else if (cfg.command == "wn") {
            auto [a, b] = parse_range(cfg.n, "--n");
            if (a < 0) throw InvalidArgument("--n must be >= 0");
            Json rows = Json::array();
            for (int k = a; k <= b; ++k) {
                Json row;
                row["n"] = k;
                row["w_n"] = w_n(k).str();
                row["w_n_recurrence"] = w_n_recurrence(k).str();
                if (k >= 2 && k <= VertexSet::kMaxSetVertices) {
                    VertexSet s = path_canonical_cover(k);
                    row["S_n"] = to_json(s);
                    row["weight_S_n"] = weight(s).str();
                }
                rows.push_back(row);
            }
            if (a == b) emit(out, cfg, rows.front());
            else out << rows.dump(2) << '\n';
        } else if (cfg.command == "reduce") {
            Graph g = load_graph(cfg);
            ReductionInstance inst = reduce_kind == "apex" ? build_apex(g) : build_clique_layer(g);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw InvalidArgument("cannot write " + out_path);
                write_edge_list(f, inst.constructed);
            }
            if (cfg.format == OutputFormat::plain) {
                write_edge_list(out, inst.constructed);
            } else {
                Json j;
                j["kind"] = reduce_kind;
                j["n"] = inst.constructed.order();
                j["edges"] = edges_json(inst.constructed);
                j["image"] = inst.image;
                if (inst.kind == ReductionKind::clique_layer) j["copy"] = inst.copy;
                else j["apex"] = inst.apex;
                emit(out, cfg, j);
            }
        } else if (cfg.command == "verify-reduction") {
            bool all_ok = true;
            Json rows = Json::array();
            for (const Graph& g : corpus_or_single(cfg, corpus_n)) {
                auto rep = verify_clique_layer_correspondence(g);
                all_ok = all_ok && rep.holds();
                Json row = to_json(rep);
                row["edges"] = edges_json(g);
                row["n"] = g.order();
                rows.push_back(row);
            }
            if (corpus_n > 0) emit(out, cfg, Json{{"graphs", rows.size()}, {"all_hold", all_ok}, {"results", rows}});
            else emit(out, cfg, rows.front());
            if (!all_ok) throw Violation{};
        } else if (cfg.command == "probe-apex") {
            Graph g = load_connected(cfg);
            emit(out, cfg, to_json(probe_apex_pebble_counts(g, probe_k, opts)));
        }
    } catch (const Violation&) {
        return 1;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace svcp::cli
