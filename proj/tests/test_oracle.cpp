#include <doctest.h>

#include <sstream>

#include <chainplan/cnf.hpp>
#include <chainplan/oracle.hpp>
#include <chainplan/reduction.hpp>
#include <chainplan/runtime.hpp>

using namespace chainplan;

namespace {

CnfFormula from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

CnfFormula demo() { return from_text("p cnf 2 1\n1 2 0\n"); }

CnfFormula contradiction() { return from_text("p cnf 1 2\n1 0\n-1 0\n"); }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("search finds shortest plans of the predicted length") {
    CnfFormula f = demo();
    struct Row {
        Variant variant;
        std::size_t length;
    };
    for (Row row : {Row{Variant::k11, 28}, Row{Variant::k5, 36}, Row{Variant::k7, 47}}) {
        PlanningProblem p = reduce(f, row.variant);
        SearchOutcome o = bfs_plan_exists(p);
        REQUIRE(o.verdict == Verdict::solvable);
        REQUIRE(o.plan.has_value());
        CHECK(o.plan->length() == row.length);
        CHECK(solves(p, *o.plan));
        CHECK(o.stats.visited > 0);
    }
}

TEST_CASE("search proves unsolvability by exhaustion") {
    for (Variant variant : {Variant::k11, Variant::k5, Variant::k7}) {
        PlanningProblem p = reduce(contradiction(), variant);
        SearchOutcome o = bfs_plan_exists(p);
        CHECK(o.verdict == Verdict::unsolvable);
        CHECK_FALSE(o.plan.has_value());
        CHECK(o.stats.visited > 1);
    }
}

TEST_CASE("a goal that already holds needs no steps") {
    PartialState goal;
    goal.bind(0, 0);
    PlanningProblem p({{"only", {"0", "1"}}}, State({0}), goal,
                      {{"only/set", PartialState{}, Binding{0, 1}}});
    SearchOutcome o = bfs_plan_exists(p);
    REQUIRE(o.verdict == Verdict::solvable);
    CHECK(o.plan->length() == 0);
    CHECK(o.stats.visited == 1);
}

TEST_CASE("search is deterministic") {
    PlanningProblem p = reduce(demo(), Variant::k11);
    SearchOutcome a = bfs_plan_exists(p);
    SearchOutcome b = bfs_plan_exists(p);
    REQUIRE(a.plan.has_value());
    REQUIRE(b.plan.has_value());
    CHECK(a.plan->steps == b.plan->steps);
    CHECK(a.stats.visited == b.stats.visited);
    CHECK(a.stats.expanded == b.stats.expanded);
}

TEST_CASE("budgets turn into limit verdicts") {
    PlanningProblem p = reduce(demo(), Variant::k11);

    SearchLimits tiny;
    tiny.max_states = 1;
    CHECK(bfs_plan_exists(p, tiny).verdict == Verdict::limit_exceeded);

    SearchLimits short_plans;
    short_plans.max_plan_length = 5;
    CHECK(bfs_plan_exists(p, short_plans).verdict == Verdict::limit_exceeded);

    SearchLimits exact;
    exact.max_plan_length = 28;
    SearchOutcome o = bfs_plan_exists(p, exact);
    REQUIRE(o.verdict == Verdict::solvable);
    CHECK(o.plan->length() == 28);
}

TEST_CASE("brute-force satisfiability returns the first witness") {
    std::optional<Assignment> w = sat_brute_force(demo());
    REQUIRE(w.has_value());
    CHECK(*w == Assignment{false, true}); // 00 fails, 01 is the first hit

    CHECK_FALSE(sat_brute_force(contradiction()).has_value());

    CnfFormula wide;
    wide.num_vars = 25;
    wide.clauses = {Clause{Literal{1, true}}};
    CHECK_THROWS_AS(sat_brute_force(wide), ModelError);
}

TEST_CASE("equivalence verdicts and report lines") {
    EquivalenceReport r = verify_equivalence(demo(), Variant::k11);
    CHECK(r.status == EquivalenceStatus::pass);
    CHECK(r.sat);
    CHECK(r.plan_found);
    CHECK(r.plan_length == 28);
    CHECK(report_line(r) ==
          "PASS sat=true plan=true states=" + std::to_string(r.states) + " len=28");

    EquivalenceReport u = verify_equivalence(contradiction(), Variant::k5);
    CHECK(u.status == EquivalenceStatus::pass);
    CHECK_FALSE(u.sat);
    CHECK_FALSE(u.plan_found);
    CHECK(report_line(u) ==
          "PASS sat=false plan=false states=" + std::to_string(u.states) + " len=0");

    SearchLimits tiny;
    tiny.max_states = 1;
    EquivalenceReport inc = verify_equivalence(demo(), Variant::k11, tiny);
    CHECK(inc.status == EquivalenceStatus::inconclusive);
    CHECK_FALSE(inc.plan_found);
    CHECK(inc.plan_length == 0);
    CHECK(report_line(inc).rfind("INCONCLUSIVE sat=true plan=false", 0) == 0);
}

} // TEST_SUITE
