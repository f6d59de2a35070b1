#include "dichi/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dichi/dicolor.hpp"
#include "dichi/generate.hpp"
#include "dichi/io.hpp"
#include "dichi/oracle.hpp"
#include "dichi/structure.hpp"

namespace dichi {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class Output {
public:
    Output(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

    // One record: a JSON line, or "key: value" lines for people.
    void emit(const json& rec) {
        if (json_) {
            out_ << rec.dump() << '\n';
            return;
        }
        for (const auto& [key, value] : rec.items()) {
            out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    bool json_mode() const { return json_; }
    std::ostream& raw() { return out_; }

private:
    std::ostream& out_;
    bool json_;
};

OrientedGraph load_graph(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_graph(text);
    }
    return parse_graph(read_file(path));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DICHI_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("DICHI_SEED is not a number: ") + env);
        }
    }
    return 1;
}

PatternId pattern_or_throw(const std::string& s) {
    if (auto h = parse_pattern(s)) return *h;
    throw CLI::ValidationError("--pattern", "unknown pattern '" + s + "' (use p4, a4, q4 or q4p)");
}

json witness_json(const PatternWitness& w) {
    return json{{"pattern", std::string(to_string(w.pattern))},
                {"vertices", std::vector<Vertex>(w.vertices.begin(), w.vertices.end())}};
}

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json base_record(const std::string& command, const OrientedGraph& g) {
    return json{{"command", command}, {"digest", graph_digest(g)}, {"n", g.order()}, {"m", g.size()}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int run_pipeline(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dicoloring toolkit for oriented graphs excluding an orientation of P4", "dichi"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "one JSON record per line");

    std::string graph_path, coloring_path, pattern_name = "q4", output_path;
    std::size_t cap = 0;
    std::optional<std::size_t> limit;
    bool verify_on = false, verify_off = false, with_oracle = false;

    auto* omega_cmd = app.add_subcommand("omega", "clique number and maximum-tournament count");
    omega_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();

    auto* scc_cmd = app.add_subcommand("scc", "strongly connected components in topological order");
    scc_cmd->add_option("graph", graph_path)->required();

    auto* free_cmd = app.add_subcommand("free", "is the graph free of the pattern?");
    free_cmd->add_option("graph", graph_path)->required();
    free_cmd->add_option("--pattern", pattern_name, "p4, a4, q4 or q4p")->required();

    auto* ct_cmd = app.add_subcommand("closed-tournament", "path-minimizing closed tournament");
    ct_cmd->add_option("graph", graph_path)->required();
    ct_cmd->add_option("--cap", cap, "maximum tournaments to examine (0 = all)");

    auto* dip_cmd = app.add_subcommand("dipolar", "dipolar set N[C + X] with its witness partition");
    dip_cmd->add_option("graph", graph_path)->required();
    dip_cmd->add_option("--pattern", pattern_name)->required();
    dip_cmd->add_option("--cap", cap);

    auto* dic_cmd = app.add_subcommand("dicolor", "dicoloring within the binding function");
    dic_cmd->add_option("graph", graph_path)->required();
    dic_cmd->add_option("--pattern", pattern_name)->required();
    auto* vflag = dic_cmd->add_flag("--verify", verify_on, "always check pattern-freeness first");
    dic_cmd->add_flag("--no-verify", verify_off, "never check up front (runtime assertions only)")->excludes(vflag);
    dic_cmd->add_flag("--oracle", with_oracle, "also compute the exact dichromatic number");
    dic_cmd->add_option("--limit", limit, "node limit for --oracle");
    dic_cmd->add_option("--cap", cap);
    dic_cmd->add_option("-o,--output", output_path, "write the coloring file here");

    auto* exact_cmd = app.add_subcommand("exact-dichi", "exact dichromatic number (small graphs)");
    exact_cmd->add_option("graph", graph_path)->required();
    exact_cmd->add_option("--limit", limit, "search node limit");
    exact_cmd->add_option("-o,--output", output_path, "write the optimal coloring here");

    std::string kind;
    std::size_t gen_n = 10, max_tries = 1000, max_omega = 0, cycle = 0;
    double gen_p = 0.3;
    std::optional<std::uint64_t> seed;
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("kind", kind, "random-oriented, random-tournament, transitive-tournament, directed-cycle, "
                                      "chorded-path, hfree-rejection, hfree-greedy")
        ->required()
        ->check(CLI::IsMember({"random-oriented", "random-tournament", "transitive-tournament", "directed-cycle",
                               "chorded-path", "hfree-rejection", "hfree-greedy"}));
    gen_cmd->add_option("-n", gen_n, "vertex count");
    gen_cmd->add_option("-p", gen_p, "pair probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", seed, "seed (default: $DICHI_SEED or 1)");
    gen_cmd->add_option("--pattern", pattern_name, "pattern for hfree-* kinds");
    gen_cmd->add_option("--max-tries", max_tries, "hfree-rejection attempts");
    gen_cmd->add_option("--max-omega", max_omega, "clique cap for hfree-greedy (0 = none)");
    gen_cmd->add_option("--cycle", cycle, "hfree-greedy: start from a directed cycle of this length");
    gen_cmd->add_option("-o,--output", output_path, "write the graph here instead of stdout");

    auto* ver_cmd = app.add_subcommand("verify-coloring", "check a coloring file against a graph");
    ver_cmd->add_option("graph", graph_path)->required();
    ver_cmd->add_option("coloring", coloring_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitIo;
    }

    Output o(out, as_json);
    const auto t0 = Clock::now();
    try {
        if (omega_cmd->parsed()) {
            const OrientedGraph g = load_graph(graph_path);
            const MaximumTournaments mt = maximum_tournaments(g);
            json rec = base_record("omega", g);
            rec["omega"] = mt.omega;
            rec["maximum_tournaments"] = mt.tournaments.size();
            rec["timing_ms"] = elapsed_ms(t0);
            o.emit(rec);
        } else if (scc_cmd->parsed()) {
            const OrientedGraph g = load_graph(graph_path);
            const SccDecomposition d = scc(g);
            json rec = base_record("scc", g);
            rec["count"] = d.count();
            rec["components"] = d.components;
            rec["timing_ms"] = elapsed_ms(t0);
            o.emit(rec);
        } else if (free_cmd->parsed()) {
            const PatternId h = pattern_or_throw(pattern_name);
            const OrientedGraph g = load_graph(graph_path);
            const auto w = find_pattern(g, h);
            json rec = base_record("free", g);
            rec["pattern"] = to_string(h);
            rec["free"] = !w.has_value();
            if (w) rec["witness"] = witness_json(*w);
            rec["timing_ms"] = elapsed_ms(t0);
            o.emit(rec);
            return w ? kExitNotHFree : kExitOk;
        } else if (ct_cmd->parsed()) {
            const OrientedGraph g = load_graph(graph_path);
            const ClosedTournament ct = path_minimizing_closed_tournament(g, {cap});
            json rec = base_record("closed-tournament", g);
            rec["omega"] = ct.k.size();
            rec["k"] = ct.k;
            rec["path"] = ct.p.vertices;
            rec["c"] = ct.c;
            rec["path_length"] = ct.path_length();
            rec["timing_ms"] = elapsed_ms(t0);
            o.emit(rec);
        } else if (dip_cmd->parsed()) {
            const PatternId h = pattern_or_throw(pattern_name);
            const OrientedGraph g = load_graph(graph_path);
            const ClosedTournament ct = path_minimizing_closed_tournament(g, {cap});
            const DipolarConstruction d = build_dipolar_set(g, ct, h);
            const DipolarCheck check = verify_dipolar(g, d.set);
            json rec = base_record("dipolar", g);
            rec["pattern"] = to_string(h);
            rec["path_length"] = ct.path_length();
            rec["s_plus"] = d.set.s_plus;
            rec["s_minus"] = d.set.s_minus;
            rec["c"] = d.parts.c;
            rec["x"] = d.parts.x;
            rec["z"] = d.parts.z;
            rec["y"] = d.parts.y;
            rec["valid"] = check.ok;
            if (!check.ok) rec["reason"] = check.reason;
            rec["timing_ms"] = elapsed_ms(t0);
            o.emit(rec);
        } else if (dic_cmd->parsed()) {
            const PatternId h = pattern_or_throw(pattern_name);
            const OrientedGraph g = load_graph(graph_path);
            DicolorOptions opts;
            opts.tournament_cap = cap;
            if (verify_on) opts.verify = true;
            if (verify_off) opts.verify = false;
            DicolorTrace trace;
            const Dicoloring d = dicolor_forbidding(g, h, opts, &trace);
            const ColoringCheck check = validate_dicoloring(g, d);
            bool stages_ok = true;
            for (const StageAccount& a : trace.stages) stages_ok = stages_ok && !check_stage_budgets(a);

            json rec = base_record("dicolor", g);
            rec["pattern"] = to_string(h);
            rec["omega"] = trace.omega;
            rec["path_length"] = trace.path_length ? json(*trace.path_length) : json(nullptr);
            rec["colors_used"] = d.colors_used;
            rec["budget"] = d.claimed_bound.str();
            rec["certificate"] = check.valid ? "valid" : "invalid";
            rec["peels"] = trace.peels;
            rec["stage_budgets"] = stages_ok ? "ok" : "violated";
            if (with_oracle) {
                const OracleReport exact = exact_dichromatic_number(g, limit);
                rec["exact"] = exact.exact_value;
                rec["oracle_nodes"] = exact.nodes_explored;
            }
            rec["timing_ms"] = elapsed_ms(t0);
            if (!output_path.empty()) write_text(output_path, serialize_coloring(d, h));
            o.emit(rec);
            return check.valid ? kExitOk : kExitInvalid;
        } else if (exact_cmd->parsed()) {
            const OrientedGraph g = load_graph(graph_path);
            const OracleReport r = exact_dichromatic_number(g, limit);
            json rec = base_record("exact-dichi", g);
            rec["exact"] = r.exact_value;
            rec["nodes"] = r.nodes_explored;
            rec["timing_ms"] = elapsed_ms(t0);
            if (!output_path.empty()) write_text(output_path, serialize_coloring(r.witness, std::nullopt));
            o.emit(rec);
        } else if (gen_cmd->parsed()) {
            const std::uint64_t s = seed.value_or(default_seed());
            OrientedGraph g;
            if (kind == "random-oriented") {
                g = random_oriented(gen_n, gen_p, s);
            } else if (kind == "random-tournament") {
                g = random_tournament(gen_n, s);
            } else if (kind == "transitive-tournament") {
                g = transitive_tournament(gen_n);
            } else if (kind == "directed-cycle") {
                g = directed_cycle(gen_n);
            } else if (kind == "chorded-path") {
                g = chorded_path(gen_n, gen_p, s);
            } else if (kind == "hfree-rejection") {
                const PatternId h = pattern_or_throw(pattern_name);
                g = hfree_rejection([&](std::uint64_t k) { return random_oriented(gen_n, gen_p, k); }, h, max_tries, s);
            } else {
                const PatternId h = pattern_or_throw(pattern_name);
                g = hfree_greedy({gen_n, gen_p, max_omega, cycle}, h, s);
            }
            const std::string text = serialize_graph(g);
            if (!output_path.empty()) {
                write_text(output_path, text);
            } else if (!o.json_mode()) {
                out << text;
                return kExitOk;
            }
            json rec = base_record("gen", g);
            rec["kind"] = kind;
            rec["seed"] = s;
            if (output_path.empty()) {
                rec["graph"] = text;
            } else {
                rec["output"] = output_path;
            }
            o.emit(rec);
        } else if (ver_cmd->parsed()) {
            const OrientedGraph g = load_graph(graph_path);
            const ColoringFile f = parse_coloring(read_file(coloring_path));
            json rec = base_record("verify-coloring", g);
            ColoringCheck check;
            if (f.n != g.order()) {
                check.valid = false;
                check.reason = "coloring has " + std::to_string(f.n) + " vertices, graph has " +
                               std::to_string(g.order());
            } else {
                check = check_color_map(g, f.color_of);
            }
            const std::size_t used = [&] {
                std::vector<Color> c = f.color_of;
                std::sort(c.begin(), c.end());
                return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
            }();
            if (check.valid && used != f.colors) {
                check.valid = false;
                check.reason = "header claims " + std::to_string(f.colors) + " colors, file uses " +
                               std::to_string(used);
            }
            if (check.valid && f.budget != "-") {
                BigInt budget;
                try {
                    budget = BigInt(f.budget);
                } catch (const std::exception&) {
                    throw ParseError(1, 1, "budget '" + f.budget + "' is not an integer");
                }
                if (BigInt(used) > budget) {
                    check.valid = false;
                    check.reason = "uses " + std::to_string(used) + " colors, budget is " + f.budget;
                }
            }
            rec["colors_used"] = used;
            rec["budget"] = f.budget;
            rec["certificate"] = check.valid ? "valid" : "invalid";
            if (!check.valid) {
                rec["reason"] = check.reason;
                if (check.color) rec["color"] = *check.color;
                if (!check.cycle.empty()) rec["cycle"] = check.cycle;
            }
            rec["timing_ms"] = elapsed_ms(t0);
            o.emit(rec);
            return check.valid ? kExitOk : kExitInvalid;
        }
    } catch (const NotHFree& e) {
        json rec{{"error", "not-h-free"}, {"where", e.where()}, {"witness", witness_json(e.witness())}};
        o.emit(rec);
        err << "dichi: " << e.what() << '\n';
        return kExitNotHFree;
    } catch (const NotDipolar& e) {
        json rec{{"error", "not-h-free"}, {"vertex", e.vertex()}, {"witness", witness_json(e.witness())}};
        o.emit(rec);
        err << "dichi: " << e.what() << '\n';
        return kExitNotHFree;
    } catch (const ParseError& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitIo;
    } catch (const GraphError& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitIo;
    } catch (const NotStronglyConnected& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const BudgetExceeded& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const EnumerationCapExceeded& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const MaxTriesExceeded& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::runtime_error& e) {
        err << "dichi: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace dichi
