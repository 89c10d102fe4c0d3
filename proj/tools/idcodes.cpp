#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "idcodes/enumerate.hpp"
#include "idcodes/families.hpp"
#include "idcodes/graph6.hpp"
#include "idcodes/solver.hpp"
#include "idcodes/verify.hpp"

namespace {

using idcodes::Graph;
using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoi(token));
    }
    return out;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
    std::istringstream in(read_all(path));
    if (format == "edgelist") return {idcodes::parse_edge_list(in)};
    return idcodes::read_graph6_stream(in);
}

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

void print_graph(const Graph& g, const std::string& format, const json& extra = json::object()) {
    if (format == "graph6") {
        std::cout << idcodes::write_graph6(g) << "\n";
    } else if (format == "edgelist") {
        std::cout << idcodes::write_edge_list(g);
    } else {
        json j = graph_to_json(g);
        for (auto& [key, value] : extra.items()) j[key] = value;
        std::cout << j.dump() << "\n";
    }
}

std::vector<idcodes::GrowOp> parse_grow_ops(const std::string& text) {
    std::vector<idcodes::GrowOp> ops;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        size_t at = token.find('@');
        if (at == std::string::npos || token.substr(0, 3) != "phi")
            throw std::runtime_error("bad op \"" + token + "\", expected phi1@V or phi2@V");
        idcodes::GrowOp op;
        op.phi = std::stoi(token.substr(3, at - 3));
        op.attach = std::stoi(token.substr(at + 1));
        ops.push_back(op);
    }
    return ops;
}

int default_jobs() {
    if (const char* env = std::getenv("IDCODES_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

struct GenOptions {
    std::string family;
    std::string format = "graph6";
    int k = 0;
    int n = 0;
    int m = 1;
    int t = 3;
    bool universal = false;
    std::string parts;
    std::string ops;
    std::string base;
    std::string input = "-";
};

int run_gen(const GenOptions& o) {
    if (o.family == "calT") {
        idcodes::StatusedTree t = idcodes::grow_statused_tree(parse_grow_ops(o.ops));
        json extra;
        extra["status"] = json::array();
        for (idcodes::TreeStatus s : t.status)
            extra["status"].push_back(std::string(1, idcodes::tree_status_name(s)));
        print_graph(t.tree, o.format, extra);
        return 0;
    }
    Graph g;
    if (o.family == "a_k") {
        g = idcodes::a_k(o.k);
    } else if (o.family == "calA") {
        g = idcodes::family_a(parse_int_list(o.parts), o.universal);
    } else if (o.family == "extremal-tid") {
        g = idcodes::extremal_tid(parse_int_list(o.parts), o.universal, o.m);
    } else if (o.family == "corona") {
        Graph base = o.base.empty() ? read_graphs(o.input, "graph6").at(0) : idcodes::parse_graph6(o.base);
        g = idcodes::corona(base, o.t);
    } else if (o.family == "path") {
        g = idcodes::path_graph(o.n);
    } else if (o.family == "cycle") {
        g = idcodes::cycle_graph(o.n);
    } else if (o.family == "star") {
        g = idcodes::star_graph(o.n);
    } else if (o.family == "complete") {
        g = idcodes::complete_graph(o.n);
    } else if (o.family == "complete-minus-matching") {
        g = idcodes::complete_minus_matching(o.n);
    } else if (o.family == "subdivided-star") {
        g = idcodes::subdivided_star(o.k);
    } else if (o.family == "ld-gap") {
        g = idcodes::ld_gap(o.k);
    } else if (o.family == "sid-gap") {
        g = idcodes::sid_gap(o.k);
    } else if (o.family == "eid-gap") {
        g = idcodes::eid_gap(o.k);
    } else {
        throw std::runtime_error("unknown family: " + o.family);
    }
    print_graph(g, o.format);
    return 0;
}

json solve_to_json(const idcodes::SolveResult& res) {
    json j;
    if (res.optimal()) {
        j["size"] = res.size;
        j["witness"] = res.witness.to_vector();
    } else {
        j["status"] = "infeasible";
        j["reason"] = res.infeasibility_reason;
    }
    return j;
}

int run_solve(const std::string& code, const std::string& input, bool all_optima, bool oracle) {
    auto kind = idcodes::code_kind_from_name(code);
    if (!kind) throw std::runtime_error("unknown code kind: " + code);
    std::vector<Graph> graphs = read_graphs(input, "graph6");
    for (const Graph& g : graphs) {
        if (all_optima) {
            idcodes::SolveResult res = idcodes::minimum_code(g, *kind);
            json j;
            if (!res.optimal()) {
                j = solve_to_json(res);
            } else {
                std::vector<idcodes::VertexSet> optima = idcodes::all_minimum_codes(g, *kind);
                j["size"] = res.size;
                j["count"] = optima.size();
                j["optima"] = json::array();
                for (const auto& c : optima) j["optima"].push_back(c.to_vector());
            }
            std::cout << j.dump() << "\n";
        } else {
            idcodes::SolveResult res =
                oracle ? idcodes::minimum_code_oracle(g, *kind) : idcodes::minimum_code(g, *kind);
            std::cout << solve_to_json(res).dump() << "\n";
        }
    }
    return 0;
}

int run_check(const std::string& code, const std::string& set_list, const std::string& input) {
    auto kind = idcodes::code_kind_from_name(code);
    if (!kind) throw std::runtime_error("unknown code kind: " + code);
    Graph g = read_graphs(input, "graph6").at(0);
    idcodes::VertexSet candidate(g.n());
    for (int v : parse_int_list(set_list)) candidate.set(v);
    auto violation = idcodes::violation_witness(g, *kind, candidate);
    json j;
    j["valid"] = !violation.has_value();
    if (violation) j["violation"] = violation->describe();
    std::cout << j.dump() << "\n";
    return violation ? 1 : 0;
}

int run_enum(bool connected, bool trees, int n, bool twin_free, int min_girth, bool identifiable,
             const std::string& format) {
    if (connected == trees) throw std::runtime_error("pick exactly one of --connected / --trees");
    idcodes::StreamFilters filters;
    filters.twin_free = twin_free;
    filters.identifiable = identifiable;
    filters.min_girth = min_girth;
    const std::vector<Graph>& all = trees ? idcodes::enumerate_trees(n) : idcodes::enumerate_connected(n);
    for (const Graph& g : all)
        if (filters.accept(g)) print_graph(g, format);
    return 0;
}

int run_verify(const std::string& claim_text, int max_n, const std::string& source, int jobs, bool relaxed) {
    auto claim = idcodes::claim_from_name(claim_text);
    if (!claim) throw std::runtime_error("unknown claim: " + claim_text);
    idcodes::VerifyOptions opts;
    if (max_n > 0) opts.max_n = max_n;
    if (!source.empty()) opts.source_file = source;
    opts.jobs = jobs;
    opts.relaxed_tightness = relaxed;
    idcodes::Report report = idcodes::verify_claim(*claim, opts);
    std::cout << report.to_json() << "\n";
    if (*claim == idcodes::ClaimId::Girth5Tight) return 0;
    return report.pass() ? 0 : 1;
}

int run_convert(const std::string& from, const std::string& to, const std::string& input) {
    for (const Graph& g : read_graphs(input, from)) print_graph(g, to);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"idcodes: exact solvers, generators and verification for identification-type dominating codes"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a named family graph");
    cmd_gen->add_option("--family", gen.family,
                        "a_k|calA|extremal-tid|corona|path|cycle|star|complete|"
                        "complete-minus-matching|subdivided-star|ld-gap|sid-gap|eid-gap|calT")
        ->required();
    cmd_gen->add_option("--format", gen.format, "graph6|edgelist|json");
    cmd_gen->add_option("--k", gen.k, "parameter k");
    cmd_gen->add_option("--n", gen.n, "order for path/cycle/star/complete variants");
    cmd_gen->add_option("--m", gen.m, "clique size for extremal-tid");
    cmd_gen->add_option("--t", gen.t, "tail length for corona (1..3)");
    cmd_gen->add_flag("--universal", gen.universal, "join one universal vertex");
    cmd_gen->add_option("--parts", gen.parts, "comma list of A_k block sizes, e.g. 1,1,2,3");
    cmd_gen->add_option("--ops", gen.ops, "calT growth ops, e.g. phi2@3,phi1@0");
    cmd_gen->add_option("--base", gen.base, "base graph as a graph6 string (corona)");
    cmd_gen->add_option("--in", gen.input, "base graph file or - (corona)");

    std::string solve_code, solve_in = "-";
    bool solve_all = false, solve_oracle = false, solve_json = false;
    CLI::App* cmd_solve = app.add_subcommand("solve", "compute a minimum code");
    cmd_solve->add_option("--code", solve_code, "d|td|sep|id|tid|ld|tld|old|sid|eid|4id")->required();
    cmd_solve->add_option("--in", solve_in, "graph6 file or -");
    cmd_solve->add_flag("--all-optima", solve_all, "list every minimum code");
    cmd_solve->add_flag("--oracle", solve_oracle, "use the exhaustive oracle solver");
    cmd_solve->add_flag("--json", solve_json, "JSON output (the default)");

    std::string check_code, check_set, check_in = "-";
    CLI::App* cmd_check = app.add_subcommand("check", "validate a user-supplied code");
    cmd_check->add_option("--code", check_code, "code kind")->required();
    cmd_check->add_option("--set", check_set, "comma list of vertices")->required();
    cmd_check->add_option("--in", check_in, "graph6 file or -");

    bool enum_connected = false, enum_trees = false, enum_twin_free = false, enum_identifiable = false;
    int enum_n = 0, enum_min_girth = 0;
    std::string enum_format = "graph6";
    CLI::App* cmd_enum = app.add_subcommand("enum", "enumerate graphs up to isomorphism");
    cmd_enum->add_flag("--connected", enum_connected, "connected graphs (n <= 7)");
    cmd_enum->add_flag("--trees", enum_trees, "free trees (n <= 12)");
    cmd_enum->add_option("--n", enum_n, "order")->required();
    cmd_enum->add_flag("--twin-free", enum_twin_free, "keep twin-free graphs only");
    cmd_enum->add_flag("--identifiable", enum_identifiable, "keep identifiable graphs only");
    cmd_enum->add_option("--min-girth", enum_min_girth, "minimum girth (acyclic passes)");
    cmd_enum->add_option("--format", enum_format, "graph6|edgelist|json");

    std::string verify_claim_text, verify_source;
    int verify_max_n = -1, verify_jobs = default_jobs();
    bool verify_relaxed = false;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run one claim checker");
    cmd_verify->add_option("--claim", verify_claim_text, "claim id, e.g. thm-2.4")->required();
    cmd_verify->add_option("--max-n", verify_max_n, "largest order to scan");
    cmd_verify->add_option("--source", verify_source, "graph6 file instead of builtin enumeration");
    cmd_verify->add_option("--jobs", verify_jobs, "worker threads (default $IDCODES_JOBS or 1)");
    cmd_verify->add_flag("--relaxed", verify_relaxed, "girth5-tight: compare against ceil(3n/4)");

    std::string conv_from = "graph6", conv_to = "graph6", conv_in = "-";
    CLI::App* cmd_convert = app.add_subcommand("convert", "convert between graph formats");
    cmd_convert->add_option("--from", conv_from, "graph6|edgelist");
    cmd_convert->add_option("--to", conv_to, "graph6|edgelist|json");
    cmd_convert->add_option("--in", conv_in, "file or -");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_solve->parsed()) return run_solve(solve_code, solve_in, solve_all, solve_oracle);
        if (cmd_check->parsed()) return run_check(check_code, check_set, check_in);
        if (cmd_enum->parsed())
            return run_enum(enum_connected, enum_trees, enum_n, enum_twin_free, enum_min_girth,
                            enum_identifiable, enum_format);
        if (cmd_verify->parsed())
            return run_verify(verify_claim_text, verify_max_n, verify_source, verify_jobs, verify_relaxed);
        if (cmd_convert->parsed()) return run_convert(conv_from, conv_to, conv_in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
