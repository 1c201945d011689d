#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "analyze.hpp"
#include "mbsr/error.hpp"
#include "mbsr/families.hpp"
#include "mbsr/graph_io.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/products.hpp"
#include "play.hpp"
#include "verify.hpp"

namespace mbsr::cli {

namespace {

const std::map<std::string, GraphFormat> kInputFormats{
    {"auto", GraphFormat::Auto}, {"edges", GraphFormat::EdgeList}, {"json", GraphFormat::Json}};

Graph load(const std::string& path, GraphFormat format, std::istream& in) {
    if (path != "-")
        return read_graph_file(path, format);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), format);
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw PreconditionError("expected an integer parameter, got '" + s + "'");
    return v;
}

std::vector<int> to_ints(const std::vector<std::string>& params) {
    std::vector<int> out;
    for (const auto& p : params)
        out.push_back(to_int(p));
    return out;
}

Graph generate(const std::string& family, const std::vector<std::string>& params) {
    auto one = [&](const char* what) {
        if (params.size() != 1)
            throw PreconditionError(family + " takes exactly one parameter (" + what + ")");
        return to_int(params[0]);
    };
    if (family == "path")
        return path(one("n"));
    if (family == "cycle")
        return cycle(one("n"));
    if (family == "complete")
        return complete(one("n"));
    if (family == "star")
        return star(one("x"));
    if (family == "empty")
        return empty_graph(one("n"));
    if (family == "petersen") {
        if (!params.empty())
            throw PreconditionError("petersen takes no parameters");
        return petersen();
    }
    if (family == "multipartite")
        return complete_multipartite(to_ints(params));
    if (family == "spider")
        return spider(to_ints(params));
    if (family == "tree") {
        // "r" marks the root; -1 is accepted too.
        std::vector<int> parents;
        for (const auto& p : params)
            parents.push_back(p == "r" ? -1 : to_int(p));
        return tree_from_parents(parents);
    }
    throw PreconditionError("unknown family '" + family + "'");
}

std::string render(const Graph& g, const std::string& format, const std::vector<std::string>& comments) {
    if (format == "json")
        return format_graph_json(g) + "\n";
    if (format == "dot")
        return to_dot(g);
    return format_edge_list(g, comments);
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
    if (output.empty() || output == "-") {
        out << text;
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file)
        throw PreconditionError("cannot write " + output);
    file << text;
}

int default_workers() {
    if (const char* env = std::getenv("MBSR_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0)
            return w;
    }
    return 1;
}

Player parse_player(const std::string& s) { return s == "breaker" ? Player::Breaker : Player::Maker; }

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maker-Breaker strong resolving game toolkit", "mbsr"};
    app.require_subcommand(1);
    app.fallthrough();

    Limits limits = kDefaultLimits;
    app.add_option("--exact-limit", limits.game_board, "largest board for the exact MBSRG solver")
        ->capture_default_str()
        ->check(CLI::Range(1, 31));
    app.add_option("--rg-limit", limits.rg_board, "largest board for the exact MBRG solver")
        ->capture_default_str()
        ->check(CLI::Range(1, 31));
    app.add_option("--iso-limit", limits.isomorphism, "largest order for exact isomorphism tests")
        ->capture_default_str()
        ->check(CLI::Range(1, 64));

    // analyze
    auto* analyze = app.add_subcommand("analyze", "report sdim, dim, SR graph and game outcomes");
    std::string analyze_input;
    GraphFormat analyze_format = GraphFormat::Auto;
    bool analyze_json = false;
    bool analyze_no_rg = false;
    analyze->add_option("input", analyze_input, "graph file, '-' for stdin")->required();
    analyze->add_option("--format", analyze_format, "input format")
        ->transform(CLI::CheckedTransformer(kInputFormats, CLI::ignore_case));
    analyze->add_flag("--json", analyze_json, "emit one JSON record instead of text");
    analyze->add_flag("--no-rg", analyze_no_rg, "skip the resolving game");

    // generate
    auto* gen = app.add_subcommand("generate", "write a named graph family member");
    std::string family;
    std::vector<std::string> params;
    std::string gen_output;
    std::string gen_format = "edges";
    gen->add_option("family", family,
                    "path N | cycle N | complete N | star X | empty N | petersen | multipartite A,B,.. | "
                    "spider L1,L2,.. | tree P0,P1,.. (root as r)")
        ->required();
    gen->add_option("params", params, "family parameters (separate or comma-separated)")->delimiter(',');
    gen->add_option("-o,--output", gen_output, "output file (default stdout)");
    gen->add_option("--format", gen_format, "edges | json | dot")->check(CLI::IsMember({"edges", "json", "dot"}));

    // product
    auto* prod = app.add_subcommand("product", "build a graph product");
    std::string op, input_a, input_b, prod_output;
    prod->add_option("operation", op)
        ->required()
        ->check(CLI::IsMember({"corona", "join", "cartesian", "direct", "lexicographic", "modular", "complement-a"}));
    prod->add_option("a", input_a, "first factor file")->required();
    prod->add_option("b", input_b, "second factor file (not used by complement-a)");
    prod->add_option("-o,--output", prod_output, "output file (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "run the claim verification suite");
    VerifyOptions vopts;
    vopts.workers = default_workers();
    std::string report_path;
    ver->add_option("--max-n", vopts.max_n, "exhaustive sweeps cover orders 2..N")
        ->capture_default_str()
        ->check(CLI::Range(2, 7));
    ver->add_option("--samples", vopts.samples, "random graphs in the sampled sweep")->capture_default_str();
    ver->add_option("--seed", vopts.seed, "seed for sampled sweeps")->capture_default_str();
    ver->add_option("--workers", vopts.workers, "worker threads (default $MBSR_WORKERS or 1)");
    ver->add_option("--report", report_path, "write JSON lines here instead of stdout");
    std::string filter;
    ver->add_option("--claim", filter, "only run claims whose id starts with this prefix");

    // play
    auto* play_cmd = app.add_subcommand("play", "play a game against the engine");
    std::string play_input, game = "srg", human = "none", first = "maker";
    play_cmd->add_option("input", play_input, "graph file")->required();
    play_cmd->add_option("--game", game, "srg | rg")->check(CLI::IsMember({"srg", "rg"}));
    play_cmd->add_option("--human", human, "maker | breaker | none")
        ->check(CLI::IsMember({"maker", "breaker", "none"}));
    play_cmd->add_option("--first", first, "maker | breaker")->check(CLI::IsMember({"maker", "breaker"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            const Graph g = load(analyze_input, analyze_format, in);
            AnalyzeOptions opts{limits, !analyze_no_rg};
            const AnalysisReport r = analyze_graph(g, analyze_input, opts);
            out << (analyze_json ? to_json(r).dump() + "\n" : render_text(r));
            return kOk;
        }
        if (*gen) {
            const Graph g = generate(family, params);
            std::string desc = family;
            for (const auto& p : params)
                desc += " " + p;
            emit(render(g, gen_format, {desc}), gen_output, out);
            return kOk;
        }
        if (*prod) {
            const Graph a = load(input_a, GraphFormat::Auto, in);
            std::vector<std::string> comments;
            Graph result;
            if (op == "complement-a") {
                result = complement(a);
                comments = {"complement of " + input_a};
            } else {
                if (input_b.empty())
                    throw PreconditionError(op + " needs two input graphs");
                const Graph b = load(input_b, GraphFormat::Auto, in);
                comments = {op + " product of " + input_a + " (G) and " + input_b + " (H)"};
                if (op == "corona") {
                    result = corona(a, b);
                    comments.push_back("vertex u of G -> u; vertex j of the copy of H at u -> |V(G)| + u*|V(H)| + j");
                } else if (op == "join") {
                    result = join(a, b);
                    comments.push_back("vertex u of G -> u; vertex w of H -> |V(G)| + w");
                } else {
                    if (op == "cartesian")
                        result = cartesian(a, b);
                    else if (op == "direct")
                        result = direct(a, b);
                    else if (op == "lexicographic")
                        result = lexicographic(a, b);
                    else
                        result = modular(a, b);
                    comments.push_back("vertex (u,w) -> u*|V(H)| + w with |V(H)| = " + std::to_string(b.order()));
                }
            }
            emit(format_edge_list(result, comments), prod_output, out);
            return kOk;
        }
        if (*ver) {
            vopts.limits = limits;
            auto checks = verification_catalogue(vopts);
            if (!filter.empty())
                std::erase_if(checks, [&](const Check& c) { return c.claim_id.rfind(filter, 0) != 0; });
            const auto records = run_checks(checks, vopts.workers);
            int failures = 0;
            if (report_path.empty()) {
                failures = write_report(records, out);
            } else {
                std::ofstream file(report_path);
                if (!file)
                    throw PreconditionError("cannot write " + report_path);
                failures = write_report(records, file);
            }
            err << records.size() << " checks, " << failures << " failed\n";
            return failures ? kVerifyFailed : kOk;
        }
        if (*play_cmd) {
            const Graph g = load(play_input, GraphFormat::Auto, in);
            PlayOptions opts;
            opts.game = game == "rg" ? GameKind::Resolving : GameKind::StrongResolving;
            if (human != "none")
                opts.human = parse_player(human);
            opts.first = parse_player(first);
            opts.limits = limits;
            play(g, opts, in, out);
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return kLimit;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace mbsr::cli
