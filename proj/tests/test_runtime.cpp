#include <doctest.h>

#include <fstream>
#include <sstream>

#include <chainplan/cnf.hpp>
#include <chainplan/reduction.hpp>
#include <chainplan/runtime.hpp>
#include <chainplan/synthesis.hpp>

using namespace chainplan;

namespace {

CnfFormula demo() {
    std::istringstream in("p cnf 2 1\n1 2 0\n");
    return parse_dimacs(in);
}

Plan reference_plan() {
    std::ifstream in(FIXTURE_DIR "/x1_or_x2_reference.plan");
    REQUIRE(in.good());
    return parse_plan(in);
}

std::string symbol_at(const PlanningProblem& p, const State& s, const std::string& var) {
    VariableId v = p.variable_index(var);
    REQUIRE(v >= 0);
    return p.symbol(v, s[v]);
}

} // namespace

TEST_SUITE("runtime") {

TEST_CASE("the checked-in reference plan solves the worked example") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    Plan plan = reference_plan();
    REQUIRE(plan.length() == 28);

    RunResult r = run(p, plan);
    REQUIRE(r.ok());
    CHECK(r.states.size() == 29);
    CHECK(p.goal_satisfied(r.final_state()));
    CHECK(solves(p, plan));

    CHECK(symbol_at(p, r.final_state(), "v1_2") == "g_x");
    CHECK(symbol_at(p, r.final_state(), "ve") == "0");
    CHECK(symbol_at(p, r.final_state(), "e1") == "1");
    CHECK(symbol_at(p, r.final_state(), "e2") == "0");
    CHECK(symbol_at(p, r.final_state(), "e3") == "1");
}

TEST_CASE("change counters match the admissible profile") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    RunResult r = run(p, reference_plan());
    REQUIRE(r.ok());
    ChangeCounts counts = change_counts(p, r.states, Variant::k11);
    auto at = [&](const std::string& name) {
        return counts[static_cast<std::size_t>(p.variable_index(name))];
    };
    CHECK(at("s1") == 1);
    CHECK(at("s2") == 2);
    CHECK(at("s3") == 3);
    CHECK(at("vs") == 4);
    CHECK(at("v1_1") == 4);
    CHECK(at("v1_2") == 4);
    CHECK(at("ve") == 4);
    CHECK(at("e1") == 3);
    CHECK(at("e2") == 2);
    CHECK(at("e3") == 1);
    CHECK(is_admissible(p, r.states, Variant::k11));
}

TEST_CASE("a plan that fires too early reports the violated binding") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    Plan plan = reference_plan();
    std::swap(plan.steps[0], plan.steps[1]);

    RunResult r = run(p, plan);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->step_index == 0);
    CHECK(r.failure->operator_id == "v1_1/(4)");
    CHECK(r.failure->variable == "vs");
    CHECK(r.failure->required == "0");
    CHECK(r.failure->actual == "x");
    CHECK(r.states.size() == 1); // stopped before anything changed
}

TEST_CASE("empty and unknown plans") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    RunResult r = run(p, Plan{});
    CHECK(r.ok());
    CHECK(r.states.size() == 1);
    CHECK_FALSE(p.goal_satisfied(r.final_state()));
    CHECK_FALSE(solves(p, Plan{}));

    Plan bogus;
    bogus.steps = {"no/such/operator"};
    CHECK_THROWS_AS(run(p, bogus), ModelError);
}

TEST_CASE("a solving plan spells out the assignment on the bit pump") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    Plan plan = reference_plan();
    Message m = extract_message(p, plan);
    CHECK(m == Message{false, true});

    RunResult r = run(p, plan);
    CHECK(value_sequence(p, r.states, p.variable_index("vs")) ==
          std::vector<std::string>{"x", "0", "x", "1", "x"});
}

TEST_CASE("truncated plans do not carry a full message") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    Plan plan = reference_plan();
    plan.steps.resize(8); // first wave only: vs saw x,0
    try {
        extract_message(p, plan);
        FAIL("expected NotAdmissibleError");
    } catch (const NotAdmissibleError& e) {
        CHECK(e.index == 2); // sequence stopped after two distinct values
    }
}

TEST_CASE("the 7-value family counts subscript changes, not value changes") {
    CnfFormula f = demo();
    PlanningProblem p = reduce(f, Variant::k7);
    Plan plan = synthesize(f, Assignment{false, true}, Variant::k7);
    RunResult r = run(p, plan);
    REQUIRE(r.ok());

    ChangeCounts raw = value_change_counts(p, r.states);
    ChangeCounts sampled = change_counts(p, r.states, Variant::k7);
    auto idx = [&](const std::string& name) {
        return static_cast<std::size_t>(p.variable_index(name));
    };
    // position 2 is past the satisfying index, so its triple detours through
    // the goal marker: one extra value change that the sampling ignores
    for (const char* name : {"v1_2_1", "v1_2_2", "v1_2_3"}) {
        CHECK(raw[idx(name)] == 5);
        CHECK(sampled[idx(name)] == 4);
    }
    for (const char* name : {"v1_1_1", "v1_1_2", "v1_1_3"}) {
        CHECK(raw[idx(name)] == 4);
        CHECK(sampled[idx(name)] == 4);
    }
    CHECK(is_admissible(p, r.states, Variant::k7));

    CHECK(value_sequence(p, r.states, p.variable_index("v1_2_2")) ==
          std::vector<std::string>{"a_x", "a_0", "a_x", "g_x", "g_1", "g_x"});
    CHECK(subscript_sequence(p, r.states, p.variable_index("v1_2_2")) ==
          std::vector<std::string>{"a_x", "a_0", "a_x", "g_1", "g_x"});
}

TEST_CASE("plan files ignore comments and round-trip") {
    std::istringstream in("# leading comment\nvs/emit/m=0\n\n  v1_1/(4)  \n# done\n");
    Plan plan = parse_plan(in);
    CHECK(plan.steps == std::vector<std::string>{"vs/emit/m=0", "v1_1/(4)"});

    std::ostringstream out;
    print_plan(plan, out);
    std::istringstream back(out.str());
    CHECK(parse_plan(back).steps == plan.steps);
}

TEST_CASE("trace export is one row per visited state") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    Plan plan = reference_plan();
    RunResult r = run(p, plan);
    std::ostringstream out;
    write_trace_tsv(p, plan, r.states, out);

    std::istringstream lines(out.str());
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "step\top\ts1\ts2\ts3\tvs\tv1_1\tv1_2\tve\te1\te2\te3");
    std::size_t rows = 0;
    std::string row;
    while (std::getline(lines, row))
        ++rows;
    CHECK(rows == 29);
}

TEST_CASE("short counters are not admissible") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    Plan one_step;
    one_step.steps = {"s3/set"};
    CHECK_FALSE(is_admissible(p, one_step, Variant::k11));
}

} // TEST_SUITE
