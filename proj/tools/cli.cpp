#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pidecomp/baker.hpp"
#include "pidecomp/checkers.hpp"
#include "pidecomp/decomposition.hpp"
#include "pidecomp/errors.hpp"
#include "pidecomp/experiments.hpp"
#include "pidecomp/extremal.hpp"
#include "pidecomp/generators.hpp"
#include "pidecomp/patterns.hpp"
#include "pidecomp/report.hpp"
#include "pidecomp/witness.hpp"

namespace pidecomp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

json graph_input(const std::string& path, const Graph& g) {
    return json{{"path", path}, {"hash", graph_hash(g)}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("not an index list: " + text);
        }
    }
    return out;
}

// Shared state filled by CLI11 option callbacks, one slot per flag.
struct Options {
    std::string report_path;

    // gen
    std::string family;
    std::optional<long> n, s, t, rows, cols, d, permille;
    std::uint64_t seed = 0;
    std::string out;

    // graph inputs
    std::string graph;
    std::string decomp;
    std::string checker;
    std::string strategy = "baker";
    int p = 2;
    int root = 0;
    int D = 2;

    // compose / intersect
    std::string outer;
    std::vector<std::string> inner;
    std::string a, b, checker_a, checker_b;

    // mining / mis
    int limit = -1;
    bool compare = false;
    bool brute = false;

    // experiments
    int runs = -1;
    int m = 30;
    int parts = 3;

    // report
    std::string check;
};

class Runner {
public:
    Runner(const Options& o, std::vector<std::string> command, std::ostream& out)
        : o_(o), report_(make_report(command)), out_(out) {}

    int gen() {
        FamilySpec spec{parse_family(o_.family), {}, o_.seed};
        auto need = [&](const std::optional<long>& v, const char* flag) {
            if (!v) throw InputError("gen --family " + o_.family + " needs --" + flag);
            spec.params.push_back(*v);
        };
        switch (spec.family) {
            case Family::complete:
            case Family::path:
            case Family::cycle:
            case Family::half_graph: need(o_.n, "n"); break;
            case Family::biclique: need(o_.s, "s"); need(o_.t, "t"); break;
            case Family::grid: need(o_.rows, "rows"); need(o_.cols, "cols"); break;
            case Family::random_regular: need(o_.n, "n"); need(o_.d, "d"); break;
            case Family::gnp: need(o_.n, "n"); need(o_.permille, "permille"); break;
        }
        const Graph g = generate(spec);
        if (o_.out.empty()) {
            out_ << save_edge_list(g);
            return kOk;
        }
        write_file(o_.out, save_edge_list(g));
        report_["result"] = json{{"spec", family_json(spec)},
                                 {"out", o_.out},
                                 {"hash", graph_hash(g)},
                                 {"vertices", g.vertex_count()},
                                 {"edges", g.edge_count()}};
        return emit(kOk);
    }

    int decompose() {
        auto g = load_graph();
        json result{{"strategy", o_.strategy}};
        std::optional<Decomposition> d;
        if (o_.strategy == "baker") {
            const auto layers = bfs_layers(*g, o_.root);
            d = layers_to_decomposition(g, layers, o_.D, o_.p);
            result["root"] = o_.root;
            result["D"] = o_.D;
            result["layers"] = layers.height();
            result["bfs_roots"] = layers.roots;
        } else if (o_.strategy == "power-coloring") {
            const auto pc = decompose_power_coloring(g, o_.p);
            d = pc.decomposition;
            const bool classic_holds = BigInt(pc.decomposition.part_count()) <= pc.classic_bound;
            result["max_degree"] = pc.max_degree;
            result["power_max_degree"] = pc.power_max_degree;
            result["greedy_bound"] = pc.greedy_bound;
            result["classic_bound"] = pc.classic_bound.str();
            result["classic_bound_holds"] = classic_holds;
            result["greedy_bound_holds"] = pc.decomposition.part_count() <= pc.greedy_bound;
            result["component_bound"] = pc.component_bound;
            // d^p + 1 presumes max degree of G^p <= d^p; flag graphs where it is weaker.
            result["classic_bound_weaker_than_greedy"] = BigInt(pc.greedy_bound) > pc.classic_bound;
        } else if (o_.strategy == "from-file") {
            if (o_.decomp.empty()) throw InputError("decompose --strategy from-file needs --decomp");
            d = read_decomposition_file(o_.decomp, g);
        } else {
            throw InputError("unknown strategy: " + o_.strategy);
        }
        if (!o_.out.empty()) {
            write_file(o_.out, write_decomposition(*d));
            result["out"] = o_.out;
        }
        result["decomposition"] = decomposition_json(*d);
        report_["result"] = result;
        return emit(kOk);
    }

    int verify_cmd() {
        auto g = load_graph();
        const auto d = read_decomposition_file(require(o_.decomp, "--decomp"), g);
        report_["inputs"]["decomposition"] = o_.decomp;
        const auto checker = parse_checker(require(o_.checker, "--checker"));
        const auto start = Clock::now();
        const auto verdict = verify(d, checker);
        json result{{"checker", checker.describe()},
                    {"p", d.p()},
                    {"part_count", d.part_count()},
                    {"unions_checked", verdict.unions_checked},
                    {"verdict", verdict.pass ? "pass" : "fail"}};
        if (!verdict.pass) {
            const auto u = union_parts(d, verdict.counterexample);
            result["counterexample"] = json{{"parts", verdict.counterexample}, {"vertices", u.to_parent}};
        }
        report_["result"] = result;
        report_["timing_ms"] = elapsed_ms(start);
        return emit(verdict.pass ? kOk : kRefuted);
    }

    int compose_cmd() {
        auto g = load_graph();
        const auto outer = read_decomposition_file(require(o_.outer, "--outer"), g);
        InnerMap inner;
        for (const auto& spec : o_.inner) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos) throw InputError("--inner expects I=path, e.g. 0,1=inner01.txt");
            auto subset = parse_index_list(spec.substr(0, eq));
            std::sort(subset.begin(), subset.end());
            const auto u = union_parts(outer, subset);
            inner.emplace(subset, read_decomposition_file(spec.substr(eq + 1), share(u.graph)));
        }
        const auto composed = compose(outer, inner);
        const bool within = BigInt(composed.decomposition.part_count()) <= composed.bound;
        json result{{"outer_parts", outer.part_count()},
                    {"composed_parts", composed.decomposition.part_count()},
                    {"bound", composed.bound.str()},
                    {"bound_holds", within},
                    {"degenerate", composed.degenerate}};
        bool ok = within;
        if (!o_.checker.empty()) {
            const auto verdict = verify(composed.decomposition, parse_checker(o_.checker));
            result["checker"] = o_.checker;
            result["verdict"] = verdict.pass ? "pass" : "fail";
            if (!verdict.pass) result["counterexample"] = verdict.counterexample;
            ok = ok && verdict.pass;
        }
        if (!o_.out.empty()) {
            write_file(o_.out, write_decomposition(composed.decomposition));
            result["out"] = o_.out;
        }
        result["decomposition"] = decomposition_json(composed.decomposition);
        report_["result"] = result;
        return emit(ok ? kOk : kRefuted);
    }

    int intersect_cmd() {
        auto g = load_graph();
        const auto da = read_decomposition_file(require(o_.a, "--a"), g);
        const auto db = read_decomposition_file(require(o_.b, "--b"), g);
        const auto both = intersect(da, db);
        json result{{"parts_a", da.part_count()}, {"parts_b", db.part_count()}, {"parts", both.part_count()},
                    {"bound", da.part_count() * db.part_count()}};
        bool ok = true;
        for (const auto& [flag, text] : {std::pair{"checker_a", o_.checker_a}, std::pair{"checker_b", o_.checker_b}}) {
            if (text.empty()) continue;
            const auto verdict = verify(both, parse_checker(text));
            result[flag] = json{{"checker", text}, {"verdict", verdict.pass ? "pass" : "fail"}};
            if (!verdict.pass) result[flag]["counterexample"] = verdict.counterexample;
            ok = ok && verdict.pass;
        }
        if (!o_.out.empty()) {
            write_file(o_.out, write_decomposition(both));
            result["out"] = o_.out;
        }
        result["decomposition"] = decomposition_json(both);
        report_["result"] = result;
        return emit(ok ? kOk : kRefuted);
    }

    int mine(const std::string& what) {
        auto g = load_graph();
        const auto start = Clock::now();
        json result{{"miner", what}};
        if (what == "half-graph") {
            const auto r = half_graph_order(*g, o_.limit < 0 ? 16 : o_.limit);
            result["order"] = r.order;
            result["exact"] = r.exact;
            result["witness"] = witness_json(r.witness);
        } else if (what == "vc") {
            const auto r = vc_dimension(*g, o_.limit < 0 ? 6 : o_.limit);
            result["dimension"] = r.dimension;
            result["capped"] = r.capped;
            result["witness"] = witness_json(r.witness);
        } else {
            const long s = o_.s.value_or(2), t = o_.t.value_or(2);
            const auto r = contains_biclique_subgraph(*g, static_cast<int>(s), static_cast<int>(t));
            result["s"] = s;
            result["t"] = t;
            result["found"] = r.found;
            if (r.found) result["witness"] = biclique_json(r.left, r.right);
        }
        report_["result"] = result;
        report_["timing_ms"] = elapsed_ms(start);
        return emit(kOk);
    }

    int kst() {
        if (!o_.n || !o_.s || !o_.t) throw InputError("kst needs --n, --s and --t");
        const auto bound = kst_bound(*o_.n, *o_.s, *o_.t);
        json result{{"n", *o_.n}, {"s", *o_.s}, {"t", *o_.t}, {"bound", rational_json(bound.value)},
                    {"exact", bound.exact}};
        if (o_.brute) {
            const int ex = zarankiewicz_brute(static_cast<int>(*o_.n), static_cast<int>(*o_.s), static_cast<int>(*o_.t));
            result["zarankiewicz"] = ex;
            result["within_bound"] = BigRational(ex) <= bound.value;
        }
        report_["result"] = result;
        return emit(kOk);
    }

    int mis(const std::string& mode) {
        auto g = load_graph();
        const auto start = Clock::now();
        json result;
        bool ok = true;
        if (mode == "exact") {
            result = mis_json(exact_mis(*g));
        } else {
            const auto r = baker_mis(*g, o_.root, o_.D);
            result = mis_json(r);
            result["root"] = o_.root;
            if (o_.compare) {
                const long opt = exact_mis(*g).size();
                const long guarantee = baker_guarantee(o_.D, opt);
                result["optimum"] = opt;
                result["guarantee"] = guarantee;
                result["guarantee_holds"] = r.size() >= guarantee;
                ok = r.size() >= guarantee;
            }
        }
        report_["result"] = result;
        report_["timing_ms"] = elapsed_ms(start);
        return emit(ok ? kOk : kRefuted);
    }

    int experiment(const std::string& which) {
        const auto start = Clock::now();
        json result;
        bool pass = false;
        if (which == "weakly-sparse") {
            const auto e = run_weakly_sparse(o_.n.value_or(64), o_.runs < 0 ? 100 : o_.runs, o_.seed);
            result = experiment_json(e);
            pass = e.pass;
        } else if (which == "half-graph-pigeonhole") {
            const auto e = run_half_graph_pigeonhole(o_.m, o_.parts, o_.runs < 0 ? 100 : o_.runs, o_.seed);
            result = experiment_json(e);
            pass = e.pass;
        } else if (which == "composition") {
            const auto e = run_composition(o_.runs < 0 ? 200 : o_.runs, o_.p, o_.seed);
            result = experiment_json(e);
            pass = e.pass;
        } else {
            const auto e = run_intersection(o_.runs < 0 ? 200 : o_.runs, o_.p, o_.seed);
            result = experiment_json(e);
            pass = e.pass;
        }
        report_["result"] = result;
        report_["timing_ms"] = elapsed_ms(start);
        return emit(pass ? kOk : kRefuted);
    }

    int check_report() {
        std::ifstream f(o_.check);
        if (!f) throw InputError("cannot open " + o_.check);
        json doc;
        try {
            doc = json::parse(f);
        } catch (const json::exception& e) {
            throw InputError(o_.check + ": " + e.what());
        }
        if (doc.value("format", "") != "pidecomp-report") throw InputError(o_.check + " is not a pidecomp report");
        std::optional<Graph> host;
        if (!o_.graph.empty()) {
            host = load_edge_list_file(o_.graph);
        } else if (doc.contains("inputs") && doc["inputs"].contains("graph")) {
            host = load_edge_list_file(doc["inputs"]["graph"].at("path").get<std::string>());
        }
        if (host && doc.contains("inputs") && doc["inputs"].contains("graph") &&
            doc["inputs"]["graph"].value("hash", "") != graph_hash(*host))
            throw InputError("graph hash does not match the report's input");
        const auto r = revalidate(doc, host ? &*host : nullptr);
        report_["result"] = json{{"report", o_.check}, {"witnesses_checked", r.checked}, {"problems", r.problems}};
        return emit(r.problems.empty() ? kOk : kRefuted);
    }

private:
    GraphPtr load_graph() {
        auto g = share(load_edge_list_file(require(o_.graph, "--graph")));
        report_["inputs"]["graph"] = graph_input(o_.graph, *g);
        return g;
    }

    static const std::string& require(const std::string& v, const char* flag) {
        if (v.empty()) throw InputError(std::string("missing ") + flag);
        return v;
    }

    int emit(int code) {
        report_["exit_code"] = code;
        const std::string text = report_.dump(2) + "\n";
        if (o_.report_path.empty())
            out_ << text;
        else
            write_file(o_.report_path, text);
        return code;
    }

    const Options& o_;
    json report_;
    std::ostream& out_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Vertex-partition decompositions, their algebra, and extremal witness mining", "pidecomp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolkitVersion);

    auto add_report = [&](CLI::App* sub) { sub->add_option("--report", o.report_path, "Write the report here instead of stdout"); };
    auto add_graph = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--graph", o.graph, "Edge-list file");
        if (required) opt->required();
    };

    auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
    gen->add_option("--family", o.family, "complete|biclique|half_graph|path|cycle|grid|random_regular|gnp")->required();
    gen->add_option("--n", o.n);
    gen->add_option("--s", o.s);
    gen->add_option("--t", o.t);
    gen->add_option("--rows", o.rows);
    gen->add_option("--cols", o.cols);
    gen->add_option("--d", o.d, "Degree for random_regular");
    gen->add_option("--permille", o.permille, "Edge probability x 1000 for gnp");
    gen->add_option("--seed", o.seed);
    gen->add_option("--out", o.out, "Edge-list destination (stdout when omitted)");
    add_report(gen);

    auto* dec = app.add_subcommand("decompose", "Build a decomposition");
    add_graph(dec);
    dec->add_option("--strategy", o.strategy, "baker|power-coloring|from-file")
        ->check(CLI::IsMember({"baker", "power-coloring", "from-file"}));
    dec->add_option("--p", o.p)->check(CLI::PositiveNumber);
    dec->add_option("--root", o.root, "BFS root for baker");
    dec->add_option("--D", o.D, "Layer modulus for baker")->check(CLI::Range(2, 1 << 30));
    dec->add_option("--decomp", o.decomp, "Decomposition file for from-file");
    dec->add_option("--out", o.out, "Decomposition destination");
    add_report(dec);

    auto* ver = app.add_subcommand("verify", "Check every union of p parts against a checker");
    add_graph(ver);
    ver->add_option("--decomp", o.decomp)->required();
    ver->add_option("--checker", o.checker, "name:k1,k2")->required();
    add_report(ver);

    auto* com = app.add_subcommand("compose", "Refine an outer decomposition by inner ones");
    add_graph(com);
    com->add_option("--outer", o.outer)->required();
    com->add_option("--inner", o.inner, "I=path for each p-subset I of outer parts, e.g. 0,1=inner.txt");
    com->add_option("--checker", o.checker, "Verify the result against this checker");
    com->add_option("--out", o.out);
    add_report(com);

    auto* inter = app.add_subcommand("intersect", "Common refinement of two decompositions");
    add_graph(inter);
    inter->add_option("--a", o.a)->required();
    inter->add_option("--b", o.b)->required();
    inter->add_option("--checker-a", o.checker_a);
    inter->add_option("--checker-b", o.checker_b);
    inter->add_option("--out", o.out);
    add_report(inter);

    auto* mine = app.add_subcommand("mine", "Search for witnesses");
    mine->require_subcommand(1);
    std::map<CLI::App*, std::string> miners;
    for (const char* name : {"half-graph", "vc", "biclique"}) {
        auto* sub = mine->add_subcommand(name);
        add_graph(sub);
        if (std::string(name) == "biclique") {
            sub->add_option("--s", o.s);
            sub->add_option("--t", o.t);
        } else {
            sub->add_option("--limit", o.limit, "Exact-search limit");
        }
        add_report(sub);
        miners[sub] = name;
    }

    auto* kst = app.add_subcommand("kst", "Kovari-Sos-Turan bound");
    kst->add_option("--n", o.n)->required();
    kst->add_option("--s", o.s)->required();
    kst->add_option("--t", o.t)->required();
    kst->add_flag("--brute", o.brute, "Also compute ex(n, K_{s,t}) exhaustively (n <= 7)");
    add_report(kst);

    auto* mis = app.add_subcommand("mis", "Maximum independent set");
    mis->require_subcommand(1);
    std::map<CLI::App*, std::string> mis_modes;
    for (const char* name : {"exact", "baker"}) {
        auto* sub = mis->add_subcommand(name);
        add_graph(sub);
        if (std::string(name) == "baker") {
            sub->add_option("--root", o.root);
            sub->add_option("--D", o.D)->check(CLI::Range(2, 1 << 30));
            sub->add_flag("--compare", o.compare, "Check the guarantee against the exact optimum");
        }
        add_report(sub);
        mis_modes[sub] = name;
    }

    auto* exp = app.add_subcommand("experiment", "Seeded desk-scale experiments");
    exp->require_subcommand(1);
    std::map<CLI::App*, std::string> experiments;
    for (const char* name : {"weakly-sparse", "half-graph-pigeonhole", "composition", "intersection"}) {
        auto* sub = exp->add_subcommand(name);
        sub->add_option("--seed", o.seed);
        sub->add_option("--runs", o.runs)->check(CLI::NonNegativeNumber);
        if (std::string(name) == "weakly-sparse") sub->add_option("--n", o.n, "Side of K_{n,n}");
        if (std::string(name) == "half-graph-pigeonhole") {
            sub->add_option("--m", o.m, "Half-graph order")->check(CLI::PositiveNumber);
            sub->add_option("--parts", o.parts, "Parts per random partition")->check(CLI::PositiveNumber);
        }
        if (std::string(name) == "composition" || std::string(name) == "intersection")
            sub->add_option("--p", o.p)->check(CLI::PositiveNumber);
        add_report(sub);
        experiments[sub] = name;
    }

    auto* rep = app.add_subcommand("report", "Re-validate the witnesses embedded in a report");
    rep->add_option("--check", o.check)->required();
    add_graph(rep, false);
    add_report(rep);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolkitVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }

    std::vector<std::string> command{"pidecomp"};
    command.insert(command.end(), args.begin(), args.end());
    Runner run(o, command, out);
    try {
        if (gen->parsed()) return run.gen();
        if (dec->parsed()) return run.decompose();
        if (ver->parsed()) return run.verify_cmd();
        if (com->parsed()) return run.compose_cmd();
        if (inter->parsed()) return run.intersect_cmd();
        if (kst->parsed()) return run.kst();
        if (rep->parsed()) return run.check_report();
        for (const auto& [sub, name] : miners)
            if (sub->parsed()) return run.mine(name);
        for (const auto& [sub, name] : mis_modes)
            if (sub->parsed()) return run.mis(name);
        for (const auto& [sub, name] : experiments)
            if (sub->parsed()) return run.experiment(name);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const SizeError& e) {
        err << "size error: " << e.what() << "\n";
        return kInputError;
    }
    err << app.help();
    return kInputError;
}

}  // namespace pidecomp::cli
