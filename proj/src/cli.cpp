#include "skewrank/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewrank/builders.hpp"
#include "skewrank/caps.hpp"
#include "skewrank/classify.hpp"
#include "skewrank/error.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/oracle.hpp"
#include "skewrank/skew_rank.hpp"
#include "skewrank/sweep.hpp"
#include "skewrank/witness.hpp"

namespace skewrank::cli {

namespace {

using nlohmann::json;

struct InputArgs {
    std::string path;
    std::string format = "auto";
};

Graph read_graph(const InputArgs& a, std::istream& in) {
    std::string text;
    if (a.path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(a.path, std::ios::binary);
        if (!file) throw ParseError(ParseError::Kind::MalformedHeader, "cannot open '" + a.path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    GraphFormat f;
    if (a.format == "auto") {
        f = guess_format(text);
    } else if (a.format == "edge-list") {
        f = GraphFormat::EdgeList;
    } else {
        f = GraphFormat::Graph6;
    }
    return parse_graph(text, f);
}

std::string shape_text(const Graph& g) {
    const Shape s = classify_shape(g);
    if (s.kind == ShapeKind::Unicyclic) return "unicyclic (C_" + std::to_string(s.cycle->length()) + ")";
    return to_string(s.kind);
}

std::string terminal_text(const StarReductionTrace& t) {
    if (t.terminal_is_cycle()) return "cycle C_" + std::to_string(std::get<CycleInfo>(t.terminal_form).length());
    const auto& d = std::get<PartialDandelion>(t.terminal_form);
    const std::string k = std::to_string(d.cycle.length());
    if (d.is_sun()) return "partial dandelion (" + k + "-sun)";
    if (d.is_partial_sun()) return "partial dandelion (partial " + k + "-sun)";
    return "partial dandelion on C_" + k;
}

json matrix_json(const SkewIntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dimension(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dimension(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json path_json(const std::optional<Path>& p) { return p ? json(p->vertices) : json(nullptr); }

// ---- rank ------------------------------------------------------------------

struct RankArgs {
    InputArgs input;
    bool witness = false;
    bool certify = false;
    bool json_out = false;
    std::uint64_t seed = 1;
};

int cmd_rank(const RankArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = read_graph(a.input, in);
    std::optional<SkewRankCertificate> cert;
    std::string method;
    std::optional<int> lower;
    std::optional<SkewIntMatrix> witness;
    try {
        cert = min_skew_rank(g);
        method = to_string(cert->method);
    } catch (const UnsupportedShape& e) {
        const bool small = static_cast<int>(g.size()) <= oracle_edge_cap(kBruteRankEdgeCap) &&
                           g.order() <= kZeroForcingOrderCap;
        if (!small) {
            err << "unsupported shape: not tree/unicyclic (|E| exceeds oracle cap)\n";
            return kUnsupported;
        }
        lower = g.order() - skew_zero_forcing_number(g);
        const int upper = brute_min_skew_rank(g, kDefaultEntrySet, *lower);
        if (upper != *lower) {
            err << "unsupported shape: not tree/unicyclic and brute-force bounds do not meet (" << *lower
                << " <= mr- <= " << upper << ")\n";
            return kUnsupported;
        }
        cert = SkewRankCertificate{};
        cert->value = upper;
        method = "brute-force";
    }
    const int value = cert->value;
    const int match = matching_number(g);
    if (a.certify && !lower && g.order() <= kZeroForcingOrderCap) lower = g.order() - skew_zero_forcing_number(g);
    if (a.witness || a.certify) {
        if (is_tree(g) || is_connected_unicyclic(g) || classify_shape(g).kind == ShapeKind::Forest) {
            witness = construct_min_witness(g, a.seed);
        } else {
            witness = min_witness_search(g, value, a.seed);
        }
        if (!witness && g.size() == 0) witness = SkewIntMatrix(IntMatrix::Zero(g.order(), g.order()));
    }
    const int witness_rank = witness ? exact_rank(*witness) : -1;
    const bool certified = a.certify && witness_rank == value && (!lower || *lower == value);

    if (a.json_out) {
        json j;
        j["kind"] = "rank";
        j["graph6"] = to_graph6(g);
        j["order"] = g.order();
        j["size"] = g.size();
        j["shape"] = to_string(classify_shape(g).kind);
        j["mr_minus"] = value;
        j["MR_minus"] = 2 * match;
        j["match"] = match;
        j["method"] = method;
        if (cert->trace) {
            j["trace"] = {{"steps", cert->trace->steps.size()},
                          {"s", cert->trace->s},
                          {"terminal", terminal_text(*cert->trace)}};
        } else {
            j["trace"] = nullptr;
        }
        j["witness"] = witness ? matrix_json(*witness) : json(nullptr);
        j["witness_rank"] = witness ? json(witness_rank) : json(nullptr);
        j["lower_bound"] = lower ? json(*lower) : json(nullptr);
        j["certified"] = certified;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "graph6       " << to_graph6(g) << '\n';
    out << "shape        " << shape_text(g) << '\n';
    out << "mr-          " << value << '\n';
    out << "MR-          " << 2 * match << '\n';
    out << "match        " << match << '\n';
    out << "method       " << method << '\n';
    if (cert->trace)
        out << "trace        " << cert->trace->steps.size() << " step(s), s = " << cert->trace->s << ", terminal "
            << terminal_text(*cert->trace) << '\n';
    if (lower) out << "lower bound  " << *lower << " (|G| - Z-)\n";
    if (a.certify) out << "certified    " << (certified ? "yes" : "no") << '\n';
    if (witness) out << "witness rank " << witness_rank << '\n' << to_text(*witness);
    if (!certified && a.certify) return kVerifyFailed;
    return kOk;
}

// ---- classify --------------------------------------------------------------

struct SimpleArgs {
    InputArgs input;
    bool json_out = false;
};

int cmd_classify(const SimpleArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = read_graph(a.input, in);
    ClassificationVerdict v;
    if (is_tree(g)) {
        v = tree_classification(g);
    } else if (is_connected_unicyclic(g)) {
        v = unicyclic_classification(g);
    } else {
        err << "unsupported shape: classification needs a tree or a connected unicyclic graph\n";
        return kUnsupported;
    }
    const int value = min_skew_rank(g).value;
    const int path_value = smr_path(v.n);
    if (a.json_out) {
        json j;
        j["kind"] = "classify";
        j["graph6"] = to_graph6(g);
        j["shape"] = to_string(classify_shape(g).kind);
        j["holds"] = v.holds;
        j["clause"] = v.clause;
        j["reason"] = v.explanation;
        j["n"] = v.n;
        j["mr_minus"] = value;
        j["path_mr_minus"] = path_value;
        j["spine"] = path_json(v.spine);
        j["joints"] = v.centipede ? json(v.centipede->joints()) : json(nullptr);
        j["j"] = v.j ? json(*v.j) : json(nullptr);
        j["cycle_on_path"] = v.cycle_on_path;
        j["cycle_off_path"] = v.cycle_off_path;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "graph6     " << to_graph6(g) << '\n';
    out << "verdict    " << (v.holds ? "holds" : "fails") << "  (mr- = " << value << ", mr-(P_" << v.n
        << ") = " << path_value << ")\n";
    out << "clause     " << v.clause << '\n';
    out << "reason     " << v.explanation << '\n';
    if (v.spine) {
        out << "spine     ";
        for (Vertex x : v.spine->vertices) out << ' ' << x;
        out << '\n';
    }
    if (v.centipede) {
        out << "joints    ";
        for (int i : v.centipede->joints()) out << " v_" << i;
        out << '\n';
    }
    if (v.j) out << "j          " << *v.j << '\n';
    return kOk;
}

// ---- reduce ----------------------------------------------------------------

int cmd_reduce(const SimpleArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = read_graph(a.input, in);
    if (!is_connected_unicyclic(g)) {
        err << "unsupported shape: star reduction needs a connected unicyclic graph\n";
        return kUnsupported;
    }
    const StarReductionTrace t = star_reduce(g);
    const int total = evaluate_trace(t);
    if (a.json_out) {
        json j;
        j["kind"] = "reduce";
        j["graph6"] = to_graph6(g);
        j["steps"] = json::array();
        for (const auto& s : t.steps)
            j["steps"].push_back({{"center", s.star.center}, {"leaves", s.star.leaves}, {"s", s.s},
                                  {"remaining", to_graph6(s.remaining)}});
        j["s"] = t.s;
        j["terminal"] = terminal_text(t);
        j["terminal_graph6"] = to_graph6(t.terminal);
        j["mr_minus"] = total;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "graph6    " << to_graph6(g) << '\n';
    int k = 0;
    for (const auto& s : t.steps) {
        out << "step " << ++k << "    remove center " << s.star.center << " with leaves";
        for (Vertex x : s.star.leaves) out << ' ' << x;
        out << "; s = " << s.s << "; remaining " << to_graph6(s.remaining) << '\n';
    }
    if (t.steps.empty()) out << "no pendant stars\n";
    out << "terminal  " << terminal_text(t) << " (" << to_graph6(t.terminal) << ")\n";
    out << "total     " << total << '\n';
    return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string family;
    int n = 0;
    std::string checks;
    int jobs = 1;
    std::uint64_t seed = 1;
    int min_order = 0;
    std::string json_path;
    std::string csv_path;
    bool small_cases = false;
};

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Family family = parse_family(a.family);
    SweepOptions o;
    o.jobs = a.jobs;
    o.seed = a.seed;
    o.min_order = a.min_order;
    std::stringstream ids(a.checks);
    for (std::string id; std::getline(ids, id, ',');)
        if (!id.empty()) o.checks.push_back(id);
    SweepReport r;
    try {
        r = run_sweep(family, a.n, o);
    } catch (const CapExceeded& e) {
        err << e.what() << '\n';
        return kUnsupported;
    }
    std::optional<SmallCaseCatalog> catalog;
    if (a.small_cases) catalog = small_case_catalog(std::min(a.n, kMaxUnicyclicOrder));

    const bool quiet_stdout = a.json_path == "-" || a.csv_path == "-";
    if (!quiet_stdout) {
        out << to_string(r.family) << " n = " << r.min_order << ".." << r.max_order << ", " << r.graph_count
            << " graphs\n";
        out << "check                        pass   fail   skip   info\n";
        for (const auto& [id, t] : r.checks) {
            std::string row = id;
            row.resize(28, ' ');
            out << row << ' ' << std::setw(6) << t.pass << ' ' << std::setw(6) << t.fail << ' ' << std::setw(6)
                << t.skip << ' ' << std::setw(6) << t.info << '\n';
        }
        for (const auto& c : r.counterexamples())
            out << "counterexample " << c.check << ' ' << c.graph6 << ": " << c.details << '\n';
        if (catalog) {
            for (const auto& [d, list] : catalog->skeletons) {
                out << "diameter " << d << ": " << catalog->members[d].size() << " graphs, " << list.size()
                    << " after collapsing twin leaves:";
                for (const auto& s : list) out << ' ' << s;
                out << '\n';
            }
        }
        out << (r.ok() ? "ok" : "FAILED") << '\n';
    }
    if (!a.json_path.empty()) {
        json j = json::parse(to_json(r));
        if (catalog) j["small_cases"] = json::parse(to_json(*catalog));
        write_to(a.json_path, j.dump(2) + "\n", out);
    }
    if (!a.csv_path.empty()) write_to(a.csv_path, to_csv(r), out);
    return r.ok() ? kOk : kVerifyFailed;
}

// ---- gen -------------------------------------------------------------------

std::map<int, int> parse_index_map(const std::string& text) {
    std::map<int, int> m;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected index:count, got '" + item + "'");
        m[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return m;
}

struct GenArgs {
    std::string builder;
    std::vector<std::string> params;
    std::string format = "graph6";
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    auto need = [&](std::size_t k) {
        if (a.params.size() != k)
            throw std::invalid_argument(a.builder + " takes " + std::to_string(k) + " parameter(s)");
    };
    auto integer = [&](std::size_t i) { return std::stoi(a.params.at(i)); };
    Graph g;
    const std::string& b = a.builder;
    if (b == "path") {
        need(1);
        g = path_graph(integer(0));
    } else if (b == "cycle") {
        need(1);
        g = cycle_graph(integer(0));
    } else if (b == "star") {
        need(1);
        g = star_graph(integer(0));
    } else if (b == "centipede") {
        if (a.params.size() == 1) {
            g = centipede(integer(0), {});
        } else {
            need(2);
            g = centipede(integer(0), parse_index_map(a.params[1]));
        }
    } else if (b == "n-sun" || b == "sun") {
        need(1);
        g = n_sun(integer(0));
    } else if (b == "dandelion") {
        need(2);
        g = dandelion(integer(0), parse_index_map(a.params[1]));
    } else if (b == "pineapple") {
        need(4);
        g = pineapple_graph(integer(0), integer(1), integer(2), integer(3));
    } else {
        err << "unknown builder '" << b << "' (path, cycle, star, centipede, n-sun, dandelion, pineapple)\n";
        return kParseError;
    }
    out << serialize_graph(g, a.format == "edge-list" ? GraphFormat::EdgeList : GraphFormat::Graph6);
    return kOk;
}

void add_input(CLI::App* sub, InputArgs& a) {
    sub->add_option("input", a.path, "graph file, or - for stdin")->required();
    sub->add_option("--format", a.format, "input format")
        ->check(CLI::IsMember({"auto", "edge-list", "graph6"}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum skew rank of trees and unicyclic graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "skewrank 1.0");

    RankArgs rank;
    auto* rank_cmd = app.add_subcommand("rank", "compute mr-, MR- and match with certificates");
    add_input(rank_cmd, rank.input);
    rank_cmd->add_flag("--witness", rank.witness, "print a matrix attaining mr-");
    rank_cmd->add_flag("--certify", rank.certify, "check witness rank against |G| - Z-");
    rank_cmd->add_flag("--json", rank.json_out, "machine-readable output");
    rank_cmd->add_option("--seed", rank.seed, "seed for randomized witness search")->capture_default_str();

    SimpleArgs classify;
    auto* classify_cmd = app.add_subcommand("classify", "decide mr-(G) = mr-(P_n) by the structural theorems");
    add_input(classify_cmd, classify.input);
    classify_cmd->add_flag("--json", classify.json_out, "machine-readable output");

    SimpleArgs reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "print the pendant-star reduction of a unicyclic graph");
    add_input(reduce_cmd, reduce.input);
    reduce_cmd->add_flag("--json", reduce.json_out, "machine-readable output");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the property sweep over a graph family");
    verify_cmd->add_option("family", verify.family, "trees, unicyclic or labeled")->required();
    verify_cmd->add_option("n", verify.n, "largest order")->required();
    verify_cmd->add_option("--checks", verify.checks, "comma-separated check ids (default: all that apply)");
    verify_cmd->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "sweep seed")->capture_default_str();
    verify_cmd->add_option("--min-order", verify.min_order, "smallest order to include");
    verify_cmd->add_option("--json", verify.json_path, "write the JSON report to a file (- for stdout)");
    verify_cmd->add_option("--csv", verify.csv_path, "write the CSV summary to a file (- for stdout)");
    verify_cmd->add_flag("--small-cases", verify.small_cases, "list unicyclic graphs of diameter <= 3 reaching mr-(P)");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "emit a fixture graph");
    gen_cmd->add_option("builder", gen.builder, "path, cycle, star, centipede, n-sun, dandelion, pineapple")
        ->required();
    gen_cmd->add_option("params", gen.params, "builder parameters");
    gen_cmd->add_option("--format", gen.format, "output format")
        ->check(CLI::IsMember({"edge-list", "graph6"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*rank_cmd) return cmd_rank(rank, in, out, err);
        if (*classify_cmd) return cmd_classify(classify, in, out, err);
        if (*reduce_cmd) return cmd_reduce(reduce, in, out, err);
        if (*verify_cmd) return cmd_verify(verify, out, err);
        if (*gen_cmd) return cmd_gen(gen, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const GraphError& e) {
        err << "invalid graph: " << e.what() << '\n';
        return kParseError;
    } catch (const UnsupportedShape& e) {
        err << "unsupported shape: " << e.what() << '\n';
        return kUnsupported;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kUnsupported;
    } catch (const InternalContradiction& e) {
        err << "internal contradiction: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    return kParseError;
}

}  // namespace skewrank::cli
