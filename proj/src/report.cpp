#include "pidecomp/report.hpp"

#include "pidecomp/errors.hpp"
#include "pidecomp/witness.hpp"

namespace pidecomp {

json make_report(const std::vector<std::string>& command) {
    json r;
    r["format"] = "pidecomp-report";
    r["version"] = kReportVersion;
    r["toolkit"] = kToolkitVersion;
    r["command"] = command;
    return r;
}

json witness_json(const HalfGraphWitness& w) {
    json j{{"kind", "half_graph"}, {"order", w.order()}, {"a", w.a}, {"b", w.b}};
    // Cross-adjacency pattern, one row per a_i: '1' where a_i ~ b_j.
    json rows = json::array();
    for (int i = 0; i < w.order(); ++i) {
        std::string row;
        for (int k = 0; k < w.order(); ++k) row += i <= k ? '1' : '0';
        rows.push_back(row);
    }
    j["pattern"] = rows;
    return j;
}

json witness_json(const ShatterWitness& w) {
    return json{{"kind", "shatter"}, {"set", w.set}, {"realizers", w.realizers}};
}

json biclique_json(const std::vector<int>& left, const std::vector<int>& right) {
    return json{{"kind", "biclique"}, {"left", left}, {"right", right}};
}

json forest_json(const TreedepthForest& f) {
    return json{{"kind", "treedepth_forest"}, {"depth", f.depth}, {"parent", f.parent}};
}

json independent_set_json(const std::vector<int>& vertices) {
    return json{{"kind", "independent_set"}, {"size", vertices.size()}, {"vertices", vertices}};
}

json induced_map_json(const std::vector<int>& map, const Graph& pattern) {
    return json{{"kind", "induced_map"}, {"map", map}, {"pattern", save_edge_list(pattern)}};
}

json subdivision_json(int p, const SubdivisionResult& r) {
    return json{{"kind", "clique_subdivision"}, {"p", p}, {"branch", r.branch}, {"paths", r.paths}};
}

json family_json(const FamilySpec& spec) {
    return json{{"family", family_name(spec.family)}, {"params", spec.params}, {"seed", spec.seed}};
}

json decomposition_json(const Decomposition& d) {
    return json{{"graph_hash", graph_hash(d.graph())},
                {"vertices", d.graph().vertex_count()},
                {"p", d.p()},
                {"part_count", d.part_count()},
                {"parts", d.parts()}};
}

json rational_json(const BigRational& value) {
    return json{{"numerator", boost::multiprecision::numerator(value).str()},
                {"denominator", boost::multiprecision::denominator(value).str()},
                {"approx", value.convert_to<double>()}};
}

json mis_json(const MisResult& r) {
    json j{{"mode", r.mode == MisMode::exact ? "exact" : "baker"}, {"size", r.size()}};
    if (r.mode == MisMode::baker) {
        j["D"] = r.D;
        j["shift"] = r.shift;
        j["shift_sizes"] = r.shift_sizes;
    }
    j["set"] = independent_set_json(r.vertices);
    return j;
}

json experiment_json(const WeaklySparseExperiment& e) {
    const FamilySpec host{Family::biclique, {e.n, e.n}, 0};
    json runs = json::array();
    for (const auto& r : e.runs) {
        json w = biclique_json(r.biclique.left, r.biclique.right);
        w["graph"] = family_json(host);
        runs.push_back(json{{"parts", r.parts},
                            {"pair", {r.pair.i, r.pair.j}},
                            {"edges", r.pair.edges},
                            {"guaranteed", r.pair.guaranteed},
                            {"union_vertices", r.union_vertices},
                            {"union_kst_bound", rational_json(r.union_bound.value)},
                            {"biclique_found", r.biclique.found},
                            {"witness", w},
                            {"pass", r.pass}});
    }
    return json{{"experiment", "weakly-sparse"}, {"n", e.n},         {"seed", e.seed},
                {"kst_bound_2n", rational_json(e.full_bound.value)}, {"runs", runs},
                {"pass", e.pass}};
}

json experiment_json(const PigeonholeExperiment& e) {
    const FamilySpec host{Family::half_graph, {e.m}, 0};
    json runs = json::array();
    for (const auto& r : e.runs) {
        json w = witness_json(r.result.witness);
        w["graph"] = family_json(host);
        runs.push_back(json{{"parts", r.parts},
                            {"part_pair", {r.result.parts.first, r.result.parts.second}},
                            {"order", r.result.witness.order()},
                            {"guaranteed", r.result.guaranteed},
                            {"witness", w},
                            {"pass", r.pass}});
    }
    return json{{"experiment", "half-graph-pigeonhole"}, {"m", e.m}, {"parts", e.parts}, {"seed", e.seed},
                {"runs", runs}, {"pass", e.pass}};
}

json experiment_json(const CompositionExperiment& e) {
    json runs = json::array();
    for (const auto& r : e.runs)
        runs.push_back(json{{"vertices", r.vertices},
                            {"outer_parts", r.outer_parts},
                            {"max_inner_parts", r.max_inner_parts},
                            {"composed_parts", r.composed_parts},
                            {"bound", r.bound.str()},
                            {"checker", r.checker},
                            {"inner_verified", r.inner_verified},
                            {"composed_verified", r.composed_verified},
                            {"pass", r.pass}});
    return json{{"experiment", "composition"}, {"p", e.p}, {"seed", e.seed}, {"runs", runs}, {"pass", e.pass}};
}

json experiment_json(const IntersectionExperiment& e) {
    json runs = json::array();
    for (const auto& r : e.runs)
        runs.push_back(json{{"vertices", r.vertices},
                            {"parts_a", r.parts_a},
                            {"parts_b", r.parts_b},
                            {"parts", r.parts},
                            {"checker_a", r.checker_a},
                            {"checker_b", r.checker_b},
                            {"pass", r.pass}});
    return json{{"experiment", "intersection"}, {"p", e.p}, {"seed", e.seed}, {"runs", runs}, {"pass", e.pass}};
}

// ---------------------------------------------------------------------------

namespace {

std::string check_one(const json& w, const Graph& host) {
    const std::string kind = w.at("kind");
    if (kind == "half_graph")
        return check_half_graph(host, {w.at("a").get<std::vector<int>>(), w.at("b").get<std::vector<int>>()});
    if (kind == "shatter")
        return check_shatter(host, {w.at("set").get<std::vector<int>>(), w.at("realizers").get<std::vector<int>>()});
    if (kind == "biclique")
        return check_biclique(host, w.at("left").get<std::vector<int>>(), w.at("right").get<std::vector<int>>());
    if (kind == "treedepth_forest")
        return check_treedepth_forest(host, {w.at("parent").get<std::vector<int>>(), w.at("depth").get<int>()});
    if (kind == "independent_set") return check_independent(host, w.at("vertices").get<std::vector<int>>());
    if (kind == "induced_map")
        return check_induced_map(host, load_edge_list(w.at("pattern").get<std::string>()),
                                 w.at("map").get<std::vector<int>>());
    if (kind == "clique_subdivision") {
        SubdivisionResult r{true, w.at("branch").get<std::vector<int>>(),
                            w.at("paths").get<std::vector<std::vector<int>>>()};
        return check_clique_subdivision(host, w.at("p").get<int>(), r);
    }
    return "unknown witness kind " + kind;
}

void walk(const json& node, const Graph* input, Revalidation& out) {
    if (node.is_object()) {
        if (node.contains("kind") && node["kind"].is_string()) {
            ++out.checked;
            try {
                std::string problem;
                if (node.contains("graph")) {
                    const auto& spec = node["graph"];
                    const FamilySpec fs{parse_family(spec.at("family").get<std::string>()),
                                        spec.at("params").get<std::vector<long>>(),
                                        spec.value("seed", std::uint64_t{0})};
                    problem = check_one(node, generate(fs));
                } else if (input) {
                    problem = check_one(node, *input);
                } else {
                    problem = "no host graph for witness";
                }
                if (!problem.empty()) out.problems.push_back(node["kind"].get<std::string>() + ": " + problem);
            } catch (const std::exception& e) {
                out.problems.push_back(std::string("malformed witness: ") + e.what());
            }
        }
        for (const auto& [key, value] : node.items())
            if (key != "graph") walk(value, input, out);
    } else if (node.is_array()) {
        for (const auto& value : node) walk(value, input, out);
    }
}

}  // namespace

Revalidation revalidate(const json& report, const Graph* input) {
    Revalidation out;
    walk(report, input, out);
    return out;
}

}  // namespace pidecomp
