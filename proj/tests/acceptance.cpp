// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Time limits are wall-clock on the calling thread.

#include "bchrome/construct.hpp"
#include "bchrome/error.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/io.hpp"
#include "bchrome/oracle.hpp"
#include "bchrome/transversal.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace bchrome;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass)
        ++failures;
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", seconds_since(start));
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "C" << id << " " << title << ": " << out.detail << " ("
              << elapsed << ")" << std::endl;
}

Outcome petersen_value()
{
    const auto start = Clock::now();
    const auto r = exact_b_chromatic(petersen());
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "value " << r.value << (r.exact ? " exact" : " lower bound") << " in " << t << "s (limit 10s)";
    return {r.exact && r.value == 3 && t < 10.0 && r.witness && is_b_coloring(*r.witness, petersen()), d.str()};
}

Outcome c5_value()
{
    const auto c5 = cycle(5);
    const auto start = Clock::now();
    const auto r = exact_b_chromatic(c5);
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "value " << r.value << " = d+1 = 3 expected, " << t << "s (limit 1s)";
    return {r.exact && r.value == 3 && t < 1.0 && c5.regular_degree() == 2 && girth(c5) == 5, d.str()};
}

Outcome two_bunch_everywhere()
{
    const auto hs = hoffman_singleton();
    const auto facts = GraphFacts::of(hs);
    const auto start = Clock::now();
    int accepted = 0;
    for (Vertex x = 0; x < 50; ++x) {
        const auto cert = color_two_bunch(hs, facts, x);
        if (cert.k == 8 && verify_certificate(cert, hs).accepted)
            ++accepted;
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << accepted << "/50 centers accepted with k=8, " << t << "s (limit 30s)";
    return {accepted == 50 && t < 30.0, d.str()};
}

Outcome requirements_and_mutations()
{
    const auto hs = hoffman_singleton();
    const auto facts = GraphFacts::of(hs);
    std::mt19937_64 rng(404);
    int valid = 0, matrices = 0, mutations = 0, caught = 0;
    std::map<Requirement, int> by_requirement;
    for (Vertex x = 0; x < 50; ++x) {
        const auto bs = bunches(hs, x);
        const auto closed = closed_bunches(hs, x);
        // The default pair plus one further ordered pair of closed bunches.
        const std::vector<std::pair<int, int>> pairs{{closed[0], closed[1]}, {closed[6], closed[2]}};
        for (auto [a, b] : pairs) {
            const auto m = order_two_bunch(hs, facts, x, bs.neighbor(a), bs.neighbor(b));
            ++matrices;
            if (check_requirements(hs, m).empty())
                ++valid;
            std::uniform_int_distribution<int> row(1, m.rows()), col(1, m.d), any(0, 49);
            for (int i = 0; i < 3; ++i) {
                // Replace one cell by some other vertex of the graph.
                auto mutated = m;
                const int r = row(rng), c = col(rng);
                Vertex v = m.cell(r, c);
                while (v == m.cell(r, c))
                    v = static_cast<Vertex>(any(rng));
                mutated.cell(r, c) = v;
                ++mutations;
                const auto violations = check_requirements(hs, mutated);
                if (!violations.empty()) {
                    ++caught;
                    ++by_requirement[violations.front().requirement];
                }
            }
            // Exchange two cells of one column.
            auto exchanged = m;
            const int c = col(rng), r1 = row(rng);
            int r2 = row(rng);
            while (r2 == r1)
                r2 = row(rng);
            std::swap(exchanged.cell(r1, c), exchanged.cell(r2, c));
            ++mutations;
            const auto violations = check_requirements(hs, exchanged);
            if (!violations.empty()) {
                ++caught;
                ++by_requirement[violations.front().requirement];
            }
        }
    }
    std::ostringstream d;
    d << valid << "/" << matrices << " matrices satisfy all requirements; " << caught << "/" << mutations
      << " mutations rejected (";
    for (auto [req, n] : by_requirement)
        d << to_string(req) << " " << n << " ";
    d << ")";
    return {valid == matrices && mutations >= 100 && caught == mutations, d.str()};
}

Outcome c6_formula_equivalence(const std::vector<Graph>& corpus)
{
    std::size_t graphs = 0, checks = 0, mismatches = 0;
    std::map<int, int> by_degree;
    for (const auto& g : corpus) {
        if (g.order() > 60 || !g.regular_degree() || girth(g).value_or(0) < 5)
            continue;
        ++graphs;
        ++by_degree[*g.regular_degree()];
        for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
            ++checks;
            if (count_c6_in_n2(g, x) != testing::brute_c6_in_n2(g, x))
                ++mismatches;
        }
    }
    std::ostringstream d;
    d << graphs << " graphs (";
    for (auto [deg, n] : by_degree)
        d << "d=" << deg << ": " << n << " ";
    d << "), " << checks << " vertices, " << mismatches << " mismatches";
    return {graphs >= 200 && by_degree.size() == 3 && mismatches == 0, d.str()};
}

Outcome hall_equivalence()
{
    std::mt19937_64 rng(6);
    int disagreements = 0, bad_certificates = 0, with_transversal = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int s = std::uniform_int_distribution<int>(1, 8)(rng);
        const int k = std::uniform_int_distribution<int>(1, 8)(rng);
        const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
        SetFamily fam{{}, k};
        for (int i = 0; i < s; ++i) {
            std::vector<Color> set;
            for (Color c = 1; c <= k; ++c)
                if (std::bernoulli_distribution(density)(rng))
                    set.push_back(c);
            fam.sets.push_back(std::move(set));
        }
        const auto fast = find_transversal(fam);
        const bool exists = transversal_backtrack(fam).has_value();
        if (fast.found() != exists)
            ++disagreements;
        if (fast.found()) {
            ++with_transversal;
            std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
            for (std::size_t i = 0; i < fam.sets.size(); ++i) {
                const Color c = (*fast.assignment)[i];
                const auto& set = fam.sets[i];
                if (std::find(set.begin(), set.end(), c) == set.end() || used[static_cast<std::size_t>(c)])
                    ++bad_certificates;
                used[static_cast<std::size_t>(c)] = 1;
            }
        } else if (fast.violator.empty() || fast.violator.size() <= union_size(fam, fast.violator)) {
            ++bad_certificates;
        }
    }
    std::ostringstream d;
    d << "10000 families (" << with_transversal << " with a transversal), " << disagreements << " disagreements, "
      << bad_certificates << " invalid certificates";
    return {disagreements == 0 && bad_certificates == 0, d.str()};
}

Outcome lemma_seed()
{
    const auto hs = hoffman_singleton();
    const auto facts = GraphFacts::of(hs);
    int good = 0;
    std::size_t fewest = 1000;
    for (Vertex x = 0; x < 50; ++x) {
        const auto bs = bunches(hs, x);
        const auto c = lemma_extension(hs, facts, bs);
        const auto found = b_vertices(c, hs);
        fewest = std::min(fewest, found.size());
        bool named = is_proper(c, hs) && is_b_vertex(c, hs, x);
        for (int t = 1; t <= 4; ++t)
            named = named && is_b_vertex(c, hs, bs.neighbor(t)) && c[bs.neighbor(t)] == t;
        if (named && found.size() >= 5)
            ++good;
    }
    std::ostringstream d;
    d << good << "/50 centers with x and x_1..x_4 as b-vertices; fewest b-vertices " << fewest;
    return {good == 50, d.str()};
}

Outcome swap_repair_trials()
{
    std::mt19937_64 rng(8);
    int trials = 0, clean = 0, repairs = 0;
    std::size_t swaps = 0;
    std::map<char, std::size_t> rules;
    for (; trials < 1200; ++trials) {
        const int d = std::uniform_int_distribution<int>(7, 12)(rng);
        const double density = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
        const auto config = testing::synthetic_no_c6(d, density, rng);
        const auto bs = bunches(config.graph, 0);
        PartialColoring c(config.graph.order(), d + 1);
        c.assign(0, d + 1);
        for (int t = 1; t <= d; ++t) {
            c.assign(bs.neighbor(t), t);
            Color next = 1;
            for (Vertex v : bs.bunch(t)) {
                if (next == t)
                    ++next;
                c.assign(v, next++);
            }
        }
        bool ok = true;
        try {
            for (int t = 2; t <= d; ++t) {
                const auto trace = swap_repair(c, config.graph, bs, t);
                ++repairs;
                for (std::size_t i = 1; i < trace.counts.size(); ++i)
                    ok = ok && trace.counts[i] < trace.counts[i - 1];
                ok = ok && trace.counts.back() == 0 && backward_conflicts(c, config.graph, bs, t) == 0;
                swaps += trace.rules.size();
                for (char r : trace.rules)
                    ++rules[r];
            }
        } catch (const Error&) {
            ok = false;
        }
        if (ok && is_proper(c, config.graph))
            ++clean;
    }
    std::ostringstream d;
    d << clean << "/" << trials << " trials clean over " << repairs << " bunch repairs, " << swaps << " swaps (rules";
    for (auto [r, n] : rules)
        d << " " << r << ":" << n;
    d << ")";
    return {trials >= 1000 && clean == trials, d.str()};
}

struct Instance {
    std::string name;
    Graph graph;
};

Outcome strategies_confirmed(const std::vector<Instance>& corpus)
{
    std::size_t runs = 0, accepted = 0, construction_failed = 0, other_errors = 0, confirmed = 0, instances = 0;
    std::map<std::string, std::size_t> by_strategy;
    std::string first_problem;
    for (const auto& inst : corpus) {
        const auto& g = inst.graph;
        const auto report = hypothesis_report(g, 4);
        const auto facts = GraphFacts::of(g);
        std::size_t applicable = 0;
        for (const auto& v : report.vertices)
            for (Strategy s : v.strategies) {
                ++applicable;
                ++runs;
                try {
                    const auto cert = run_strategy(s, g, facts, v.vertex);
                    if (cert.k == *report.d + 1 && verify_certificate(cert, g).accepted) {
                        ++accepted;
                        ++by_strategy[cert.strategy];
                    }
                } catch (const ConstructionFailed& e) {
                    ++construction_failed;
                    if (first_problem.empty())
                        first_problem = inst.name + " vertex " + std::to_string(v.vertex) + ": " + e.what();
                } catch (const Error& e) {
                    ++other_errors;
                    if (first_problem.empty())
                        first_problem = inst.name + " vertex " + std::to_string(v.vertex) + ": " + e.what();
                }
            }
        if (applicable == 0)
            continue;
        ++instances;
        const auto oracle = exact_b_chromatic(g);
        if (oracle.exact && oracle.value == *report.d + 1 && oracle.witness && is_b_coloring(*oracle.witness, g))
            ++confirmed;
        else if (first_problem.empty())
            first_problem = inst.name + ": oracle gave " + std::to_string(oracle.value);
    }
    std::ostringstream d;
    d << instances << " instances with an applicable strategy, " << confirmed << " oracle-confirmed chi_b = d+1; "
      << accepted << "/" << runs << " runs accepted (";
    for (auto [s, n] : by_strategy)
        d << s << " " << n << " ";
    d << "), ConstructionFailed " << construction_failed << ", other errors " << other_errors;
    if (!first_problem.empty())
        d << "; first problem: " << first_problem;
    return {instances > 0 && confirmed == instances && accepted == runs && construction_failed == 0 &&
                other_errors == 0 && by_strategy.size() == 3,
            d.str()};
}

Outcome round_trips_and_fuzz(const std::vector<Graph>& corpus)
{
    std::size_t g6_fail = 0, dimacs_fail = 0;
    for (const auto& g : corpus) {
        const auto text = write_graph6(g);
        const auto back = parse_graph6(text);
        if (!(back == g) || write_graph6(back) != text)
            ++g6_fail;
        const auto dim = write_dimacs(g);
        const auto again = parse_dimacs(dim);
        if (again.edges() != g.edges() || again.order() != g.order() || write_dimacs(again) != dim)
            ++dimacs_fail;
    }

    std::mt19937_64 rng(10);
    std::size_t parsed = 0, rejected = 0, crashes = 0;
    const std::string seed_text = write_graph6(petersen());
    for (int i = 0; i < 100000; ++i) {
        std::string s;
        const int mode = i % 3;
        if (mode == 2) {
            // Near-miss: a valid string with one byte changed, dropped or added.
            s = seed_text;
            const auto pos = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
            const char byte = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
            switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0: s[pos] = byte; break;
            case 1: s.erase(pos, 1); break;
            default: s.insert(pos, 1, byte); break;
            }
        } else {
            const auto len = std::uniform_int_distribution<std::size_t>(0, 48)(rng);
            const int lo = mode == 0 ? 0 : 63;
            const int hi = mode == 0 ? 255 : 126;
            for (std::size_t j = 0; j < len; ++j)
                s.push_back(static_cast<char>(std::uniform_int_distribution<int>(lo, hi)(rng)));
        }
        try {
            const auto g = parse_graph6(s);
            ++parsed;
            if (parse_graph6(write_graph6(g)) != g)
                ++crashes;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::MalformedGraph6)
                ++rejected;
            else
                ++crashes;
        } catch (...) {
            ++crashes;
        }
    }
    std::ostringstream d;
    d << corpus.size() << " graphs: graph6 failures " << g6_fail << ", DIMACS failures " << dimacs_fail
      << "; fuzz 100000 strings: " << parsed << " parsed, " << rejected << " rejected, " << crashes
      << " unexpected outcomes";
    return {g6_fail == 0 && dimacs_fail == 0 && crashes == 0 && parsed + rejected == 100000, d.str()};
}

} // namespace

int main()
{
    std::cout << "building corpora..." << std::endl;
    const auto small = testing::small_girth5_corpus();

    std::vector<Instance> theorem_corpus;
    theorem_corpus.push_back({"hoffman-singleton", hoffman_singleton()});
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        theorem_corpus.push_back({"hoffman-singleton relabeled " + std::to_string(seed), relabel(hoffman_singleton(), seed)});
    for (int n : {200, 300, 400, 600})
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            theorem_corpus.push_back({"random 7-regular n=" + std::to_string(n) + " seed " + std::to_string(seed),
                                      random_regular_girth({Family::RandomRegular, 7, n, 5, seed, 20})});
    // Large enough that some vertices lie on no six-cycle at all.
    theorem_corpus.push_back({"random 7-regular n=6000 seed 7", random_regular_girth({Family::RandomRegular, 7, 6000, 5, 7, 20})});

    std::vector<Graph> all = small;
    for (const auto& inst : theorem_corpus)
        all.push_back(inst.graph);

    report(1, "Petersen b-chromatic number is 3", petersen_value);
    report(2, "C5 b-chromatic number is 3", c5_value);
    report(3, "two-bunch coloring at every Hoffman-Singleton center", two_bunch_everywhere);
    report(4, "matrix requirements checker and mutation suite", requirements_and_mutations);
    report(5, "six-cycle formula matches enumeration", [&] { return c6_formula_equivalence(small); });
    report(6, "matching solver agrees with backtracking", hall_equivalence);
    report(7, "lemma seed yields at least five b-vertices", lemma_seed);
    report(8, "swap repair on synthetic no-C6 bunches", swap_repair_trials);
    report(9, "constructed colorings are oracle-confirmed", [&] { return strategies_confirmed(theorem_corpus); });
    report(10, "graph6 and DIMACS round trips, graph6 fuzzing", [&] { return round_trips_and_fuzz(all); });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
