// bchrome: generate graphs, census the hypotheses, build and verify
// b-colorings, and compute exact b-chromatic numbers.

#include "bchrome/construct.hpp"
#include "bchrome/error.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/io.hpp"
#include "bchrome/oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace bchrome;

namespace {

enum Exit : int {
    kOk = 0,
    kReject = 1,
    kNotApplicable = 2,
    kParseError = 3,
    kBudget = 4,
    kConstructionFailed = 5,
};

std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorCode::MalformedGraph6, "cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

/// FNV-1a, enough to tie a certificate to its input bytes.
std::string digest(std::string_view bytes)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

unsigned thread_count()
{
    if (const char* env = std::getenv("BCHROME_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void dump_failure(const Graph& g, const std::string& source, const ConstructionFailed* cf, const Error& e)
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
    const std::string path = std::string("bchrome-failure-") + stamp + ".txt";
    std::ofstream out(path);
    out << "graph6 " << write_graph6(g) << "\n";
    out << "input " << source << "\n";
    out << "error " << e.what() << "\n";
    if (cf) {
        out << "step " << cf->step << "\n";
        for (const auto& line : cf->log)
            out << "log " << line << "\n";
    }
    std::cerr << "counterexample candidate written to " << path << "\n";
}

int exit_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::MalformedGraph6:
    case ErrorCode::MalformedDimacs:
    case ErrorCode::SchemaViolation:
        return kParseError;
    case ErrorCode::GenerationFailed:
        return kBudget;
    case ErrorCode::ConstructionFailed:
    case ErrorCode::RepairStuck:
    case ErrorCode::InternalInvariantViolation:
    case ErrorCode::HallFailure:
    case ErrorCode::CompletionFailed:
        return kConstructionFailed;
    default:
        return kNotApplicable;
    }
}

void print_b_table(const Certificate& cert)
{
    std::cout << "strategy " << cert.strategy << "  center " << cert.center << "  k " << cert.k << "\n";
    std::cout << "class  b-vertex\n";
    for (auto [cls, v] : cert.b_vertices)
        std::cout << std::setw(5) << cls << "  " << v << "\n";
}

int cmd_gen(const std::string& family_name, int d, int n, std::uint64_t seed, int girth_min, const std::string& format)
{
    const auto family = parse_family(family_name);
    if (!family)
        throw Error(ErrorCode::InvalidParameter, "unknown family '" + family_name + "'");
    GenSpec spec;
    spec.family = *family;
    spec.d = d;
    spec.n = n;
    spec.seed = seed;
    spec.girth_min = girth_min;
    const auto g = generate(spec);
    if (format == "dimacs")
        std::cout << write_dimacs(g);
    else
        std::cout << write_graph6(g) << "\n";
    return kOk;
}

int cmd_info(const Graph& g, std::optional<Vertex> vertex)
{
    const auto facts = GraphFacts::of(g);
    std::vector<VertexCensus> census;
    if (vertex) {
        require_vertex(g, *vertex);
        census.push_back(census_vertex(g, facts, *vertex));
    } else {
        census = hypothesis_report(g, thread_count()).vertices;
    }
    std::cout << census_json(g, census);
    return kOk;
}

Certificate build(const Graph& g, const std::string& strategy, std::optional<Vertex> vertex)
{
    if (strategy == "auto") {
        if (!vertex)
            return auto_color(g);
        const auto facts = GraphFacts::of(g);
        require_vertex(g, *vertex);
        const auto census = census_vertex(g, facts, *vertex);
        if (census.strategies.empty()) {
            std::string why;
            for (const auto& r : census.reasons)
                why += r + "; ";
            throw Error(ErrorCode::NoStrategyApplies, "vertex " + std::to_string(*vertex) + ": " + why);
        }
        return run_strategy(census.strategies.front(), g, facts, *vertex);
    }
    const auto s = parse_strategy(strategy);
    if (!s)
        throw Error(ErrorCode::InvalidParameter, "unknown strategy '" + strategy + "'");
    const auto facts = GraphFacts::of(g);
    if (vertex) {
        require_vertex(g, *vertex);
        return run_strategy(*s, g, facts, *vertex);
    }
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto census = census_vertex(g, facts, static_cast<Vertex>(v));
        for (Strategy candidate : census.strategies)
            if (candidate == *s)
                return run_strategy(*s, g, facts, static_cast<Vertex>(v));
    }
    if (g.order() == 0)
        throw Error(ErrorCode::NoStrategyApplies, "empty graph");
    // Nothing qualifies; running at vertex 0 surfaces the precise reason.
    run_strategy(*s, g, facts, 0);
    throw Error(ErrorCode::NoStrategyApplies, std::string(to_string(*s)) + " applies at no vertex");
}

int cmd_color(const Graph& g, const std::string& source, const std::string& strategy, std::optional<Vertex> vertex,
              const std::string& out_path)
{
    auto cert = build(g, strategy, vertex);
    cert.provenance = source;
    const auto verdict = verify_certificate(cert, g);
    if (!verdict) {
        std::cerr << "Reject: " << to_string(verdict.reason) << " " << verdict.detail << "\n";
        return kReject;
    }
    const auto doc = write_certificate(cert);
    if (out_path.empty() || out_path == "-") {
        std::cout << doc;
        std::cerr << "b-vertices: ";
        for (auto [cls, v] : cert.b_vertices)
            std::cerr << cls << ":" << v << " ";
        std::cerr << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw Error(ErrorCode::InvalidParameter, "cannot write " + out_path);
        out << doc;
        print_b_table(cert);
    }
    return kOk;
}

int cmd_verify(const Graph& g, const std::string& cert_path)
{
    const auto cert = read_certificate(read_input(cert_path));
    const auto verdict = verify_certificate(cert, g);
    if (verdict) {
        std::cout << "Accept k=" << cert.k << "\n";
        return kOk;
    }
    std::cout << "Reject " << to_string(verdict.reason) << ": " << verdict.detail << "\n";
    return kReject;
}

int cmd_bchrom(const Graph& g, double time_budget, std::uint64_t node_budget, std::size_t max_vertices)
{
    SearchLimits limits;
    limits.time_budget = std::chrono::milliseconds(static_cast<long long>(time_budget * 1000));
    limits.node_budget = node_budget;
    limits.max_vertices = max_vertices;
    const auto result = exact_b_chromatic(g, limits);
    if (result.exact) {
        std::cout << result.value << "\n";
        return kOk;
    }
    std::cout << "LowerBoundOnly " << result.value << "\n";
    return kBudget;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"b-colorings of regular girth-5 graphs"};
    app.require_subcommand(1);

    std::string family = "petersen", format = "g6";
    int d = 7, n = 50, girth_min = 5;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--family", family, "petersen, cycle, hoffman-singleton, robertson, random-regular")->required();
    gen->add_option("--d", d, "degree (random-regular)");
    gen->add_option("--n", n, "order (cycle, random-regular)");
    gen->add_option("--seed", seed);
    gen->add_option("--girth-min", girth_min, "random-regular: minimum girth (<= 5)");
    gen->add_option("--format", format)->check(CLI::IsMember({"g6", "dimacs"}));

    std::string file, cert_path, out_path, strategy = "auto";
    std::optional<Vertex> vertex;
    auto* info = app.add_subcommand("info", "structure and six-cycle census");
    info->add_option("file", file, "graph6 or DIMACS, '-' for stdin")->required();
    info->add_option("--vertex", vertex);

    auto* hypcheck = app.add_subcommand("hypcheck", "which constructions apply where");
    hypcheck->add_option("file", file)->required();

    auto* color = app.add_subcommand("color", "construct and self-verify a (d+1)-b-coloring");
    color->add_option("file", file)->required();
    color->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "no-c6", "bounded-c6", "two-bunch"}));
    color->add_option("--vertex", vertex);
    color->add_option("--out", out_path, "certificate path; stdout when omitted");

    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    verify->add_option("file", file)->required();
    verify->add_option("cert", cert_path)->required();

    double time_budget = 60;
    std::uint64_t node_budget = SearchLimits{}.node_budget;
    std::size_t max_vertices = SearchLimits{}.max_vertices;
    auto* bchrom = app.add_subcommand("bchrom", "exact b-chromatic number");
    bchrom->add_option("file", file)->required();
    bchrom->add_option("--time-budget", time_budget, "seconds");
    bchrom->add_option("--node-budget", node_budget);
    bchrom->add_option("--max-vertices", max_vertices);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    std::optional<Graph> graph;
    std::string source;
    try {
        if (gen->parsed())
            return cmd_gen(family, d, n, seed, girth_min, format);

        const auto text = read_input(file);
        source = "input " + (file == "-" ? std::string("<stdin>") : file) + " " + digest(text);
        graph = parse_graph(text);

        if (info->parsed())
            return cmd_info(*graph, vertex);
        if (hypcheck->parsed()) {
            std::cout << hypothesis_report_json(hypothesis_report(*graph, thread_count()));
            return kOk;
        }
        if (color->parsed())
            return cmd_color(*graph, source, strategy, vertex, out_path);
        if (verify->parsed())
            return cmd_verify(*graph, cert_path);
        if (bchrom->parsed())
            return cmd_bchrom(*graph, time_budget, node_budget, max_vertices);
    } catch (const ConstructionFailed& e) {
        std::cerr << e.what() << "\n";
        if (graph)
            dump_failure(*graph, source, &e, e);
        return kConstructionFailed;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        const int code = exit_for(e.code());
        if (code == kConstructionFailed && graph)
            dump_failure(*graph, source, nullptr, e);
        return code;
    }
    return kOk;
}
