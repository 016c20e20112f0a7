// Command-line front end: compile CNF formulas into chain-shaped planning
// problems, replay and synthesize plans, and check the solvable/satisfiable
// correspondence with exhaustive search.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <chainplan/chainplan.hpp>

namespace {

using namespace chainplan;

CnfFormula load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ModelError("cannot open " + path);
    return parse_dimacs(in);
}

PlanningProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ModelError("cannot open " + path);
    return parse_chainplan(in);
}

Plan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ModelError("cannot open " + path);
    return parse_plan(in);
}

// Accepts either a literal bit string ("011") or a path to an assignment file.
Assignment load_assignment(const std::string& spec) {
    if (!spec.empty() && spec.find_first_not_of("01") == std::string::npos) {
        Assignment sigma;
        for (char c : spec)
            sigma.push_back(c == '1');
        return sigma;
    }
    std::ifstream in(spec);
    if (!in)
        throw ModelError("cannot open " + spec);
    return parse_assignment(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ModelError("cannot open " + path + " for writing");
    out << text;
}

Variant need_variant(const std::string& s) {
    if (auto v = variant_from_string(s))
        return *v;
    throw ModelError("unknown variant " + s + " (expected 5, 7 or 11)");
}

SearchLimits make_limits(std::size_t max_states, double max_seconds) {
    SearchLimits limits;
    limits.max_states = max_states;
    limits.max_seconds = max_seconds;
    return limits;
}

std::size_t default_max_states() {
    if (const char* env = std::getenv("CHAINPLAN_MAX_STATES"))
        return std::strtoull(env, nullptr, 10);
    return SearchLimits{}.max_states;
}

int cmd_reduce(const std::string& variant, const std::string& cnf, const std::string& out) {
    write_text(out, to_chainplan_text(reduce(load_cnf(cnf), need_variant(variant))));
    return 0;
}

int cmd_validate(const std::string& problem_path, const std::string& plan_path,
                 const std::string& trace_path) {
    PlanningProblem p = load_problem(problem_path);
    Plan plan = load_plan(plan_path);
    RunResult r = run(p, plan);
    if (!r.ok()) {
        const StepFailure& f = *r.failure;
        std::cout << "INAPPLICABLE step=" << f.step_index << " op=" << f.operator_id << " var="
                  << f.variable << " required=" << f.required << " actual=" << f.actual << "\n";
        return 1;
    }
    bool ok = p.goal_satisfied(r.final_state());
    std::cout << "SOLVES " << (ok ? "true" : "false") << "\n";
    try {
        ReductionLayout layout = reduction_layout(p);
        std::cout << "ADMISSIBLE "
                  << (is_admissible(p, r.states, layout.variant) ? "true" : "false") << "\n";
        ChangeCounts counts = change_counts(p, r.states, layout.variant);
        for (std::size_t v = 0; v < p.num_variables(); ++v)
            std::cout << "PI " << p.variable(static_cast<VariableId>(v)).name << " " << counts[v]
                      << "\n";
    } catch (const ModelError&) {
        // not a generated problem: plain replay only
    }
    if (!trace_path.empty()) {
        std::ofstream t(trace_path);
        if (!t)
            throw ModelError("cannot open " + trace_path + " for writing");
        write_trace_tsv(p, plan, r.states, t);
    }
    return ok ? 0 : 1;
}

int cmd_synthesize(const std::string& variant, const std::string& cnf,
                   const std::string& assignment, const std::string& out) {
    CnfFormula f = load_cnf(cnf);
    Assignment sigma = load_assignment(assignment);
    if (sigma.size() != static_cast<std::size_t>(f.num_vars))
        throw ModelError("assignment has " + std::to_string(sigma.size()) +
                         " bits but the formula has " + std::to_string(f.num_vars) +
                         " variables");
    Plan plan = synthesize(f, sigma, need_variant(variant));
    std::ostringstream text;
    print_plan(plan, text);
    write_text(out, text.str());
    return 0;
}

int cmd_decode(const std::string& problem_path, const std::string& plan_path) {
    PlanningProblem p = load_problem(problem_path);
    Plan plan = load_plan(plan_path);
    try {
        Message message = extract_message(p, plan);
        std::string bits;
        for (bool b : message)
            bits += b ? '1' : '0';
        std::cout << bits << "\n";
        return 0;
    } catch (const NotAdmissibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ApplicabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_oracle(const std::string& problem_path, std::size_t max_states, double max_seconds,
               const std::string& out) {
    PlanningProblem p = load_problem(problem_path);
    SearchOutcome outcome = bfs_plan_exists(p, make_limits(max_states, max_seconds));
    switch (outcome.verdict) {
    case Verdict::solvable:
        std::cout << "SOLVABLE len=" << outcome.plan->length() << " states="
                  << outcome.stats.visited << "\n";
        if (!out.empty()) {
            std::ostringstream text;
            print_plan(*outcome.plan, text);
            write_text(out, text.str());
        }
        return 0;
    case Verdict::unsolvable:
        std::cout << "UNSOLVABLE states=" << outcome.stats.visited << "\n";
        return 1;
    case Verdict::limit_exceeded:
    default:
        std::cout << "LIMIT states=" << outcome.stats.visited << "\n";
        return 3;
    }
}

int cmd_verify(const std::string& variant, const std::string& cnf, std::size_t max_states,
               double max_seconds) {
    EquivalenceReport report =
        verify_equivalence(load_cnf(cnf), need_variant(variant), make_limits(max_states, max_seconds));
    std::cout << report_line(report) << "\n";
    if (report.status == EquivalenceStatus::fail) {
        std::cerr << "error: " << report.detail << "\n";
        return 1;
    }
    return report.status == EquivalenceStatus::pass ? 0 : 3;
}

int cmd_export(const std::string& problem_path, const std::string& graph,
               const std::string& out) {
    PlanningProblem p = load_problem(problem_path);
    if (graph == "causal") {
        write_text(out, to_dot(causal_graph(p), "causal"));
        return 0;
    }
    if (graph.rfind("dtg:", 0) == 0) {
        std::string name = graph.substr(4);
        VariableId v = p.variable_index(name);
        if (v < 0)
            throw ModelError("no variable named " + name);
        write_text(out, to_dot(dtg(p, v), "dtg " + name));
        return 0;
    }
    throw ModelError("unknown graph " + graph + " (expected causal or dtg:<variable>)");
}

int cmd_stats(const std::string& variant_str, const std::string& cnf) {
    CnfFormula f = load_cnf(cnf);
    Variant variant = need_variant(variant_str);
    PlanningProblem p = reduce(f, variant);
    std::size_t n = static_cast<std::size_t>(f.num_vars);
    std::size_t k = f.num_clauses();
    std::cout << "variant=" << variant_name(variant) << "\n";
    std::cout << "n=" << n << "\n";
    std::cout << "k=" << k << "\n";
    std::cout << "variables=" << p.num_variables() << "\n";
    std::cout << "operators=" << p.operators().size() << "\n";
    std::cout << "max_domain=" << max_domain_size(p) << "\n";
    switch (variant) {
    case Variant::k11:
        std::cout << "plan_length=" << 2 * n * (k * n + 2 * n + 1) << "\n";
        break;
    case Variant::k5:
        std::cout << "plan_length=" << 2 * n * (2 * k * n + 2 * n + 1) << "\n";
        break;
    case Variant::k7:
        std::cout << "plan_length_min=" << 2 * n * (3 * k * n + 2 * n + 1) << "\n";
        break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain-structured planning problems from CNF formulas"};
    app.require_subcommand(1);

    std::string variant, cnf, problem, plan, assignment, out, trace, graph = "causal";
    std::size_t max_states = default_max_states();
    double max_seconds = 120.0;

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "compile a CNF formula into a problem");
    reduce_cmd->add_option("--variant", variant, "domain size family: 5, 7 or 11")->required();
    reduce_cmd->add_option("--cnf", cnf, "DIMACS input")->required();
    reduce_cmd->add_option("--out", out, "output path (default stdout)");

    CLI::App* validate_cmd = app.add_subcommand("validate", "replay a plan and report counters");
    validate_cmd->add_option("--problem", problem, "problem file")->required();
    validate_cmd->add_option("--plan", plan, "plan file, one operator id per line")->required();
    validate_cmd->add_option("--trace", trace, "also write the visited states as TSV");

    CLI::App* synthesize_cmd =
        app.add_subcommand("synthesize", "build a plan from a truth assignment");
    synthesize_cmd->add_option("--variant", variant, "domain size family: 5, 7 or 11")->required();
    synthesize_cmd->add_option("--cnf", cnf, "DIMACS input")->required();
    synthesize_cmd
        ->add_option("--assignment", assignment, "bit string like 011, or a file with one")
        ->required();
    synthesize_cmd->add_option("--out", out, "output path (default stdout)");

    CLI::App* decode_cmd = app.add_subcommand("decode", "read the assignment a plan transmits");
    decode_cmd->add_option("--problem", problem, "problem file")->required();
    decode_cmd->add_option("--plan", plan, "plan file")->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive plan search");
    oracle_cmd->add_option("--problem", problem, "problem file")->required();
    oracle_cmd->add_option("--max-states", max_states, "state budget");
    oracle_cmd->add_option("--max-seconds", max_seconds, "time budget");
    oracle_cmd->add_option("--out", out, "write a shortest plan here when solvable");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check solvable == satisfiable on one formula");
    verify_cmd->add_option("--variant", variant, "domain size family: 5, 7 or 11")->required();
    verify_cmd->add_option("--cnf", cnf, "DIMACS input")->required();
    verify_cmd->add_option("--max-states", max_states, "state budget");
    verify_cmd->add_option("--max-seconds", max_seconds, "time budget");

    CLI::App* export_cmd = app.add_subcommand("export", "emit graphs in DOT format");
    export_cmd->add_option("--problem", problem, "problem file")->required();
    export_cmd->add_option("--graph", graph, "causal (default) or dtg:<variable>");
    export_cmd->add_option("--out", out, "output path (default stdout)");

    CLI::App* stats_cmd = app.add_subcommand("stats", "sizes and plan length for a formula");
    stats_cmd->add_option("--variant", variant, "domain size family: 5, 7 or 11")->required();
    stats_cmd->add_option("--cnf", cnf, "DIMACS input")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reduce_cmd->parsed())
            return cmd_reduce(variant, cnf, out);
        if (validate_cmd->parsed())
            return cmd_validate(problem, plan, trace);
        if (synthesize_cmd->parsed())
            return cmd_synthesize(variant, cnf, assignment, out);
        if (decode_cmd->parsed())
            return cmd_decode(problem, plan);
        if (oracle_cmd->parsed())
            return cmd_oracle(problem, max_states, max_seconds, out);
        if (verify_cmd->parsed())
            return cmd_verify(variant, cnf, max_states, max_seconds);
        if (export_cmd->parsed())
            return cmd_export(problem, graph, out);
        if (stats_cmd->parsed())
            return cmd_stats(variant, cnf);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
