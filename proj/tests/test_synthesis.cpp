#include <doctest.h>

#include <sstream>

#include <chainplan/cnf.hpp>
#include <chainplan/oracle.hpp>
#include <chainplan/reduction.hpp>
#include <chainplan/runtime.hpp>
#include <chainplan/synthesis.hpp>

#include "support/corpus.hpp"

using namespace chainplan;

namespace {

CnfFormula from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

CnfFormula demo() { return from_text("p cnf 2 1\n1 2 0\n"); }

} // namespace

TEST_SUITE("synthesis") {

TEST_CASE("the satisficing index is the first satisfied position") {
    CnfFormula f = demo();
    CHECK(satisficing_index(f, {false, true}, 1) == 2);
    CHECK(satisficing_index(f, {true, false}, 1) == 1);
    CHECK(satisficing_index(f, {true, true}, 1) == 1);
    CHECK(satisficing_index(f, {false, false}, 1) == 3); // n + 1: never satisfied

    CnfFormula empty_clause = from_text("p cnf 2 1\n0\n");
    CHECK(satisficing_index(empty_clause, {true, true}, 1) == 3);

    CnfFormula two = from_text("p cnf 2 2\n1 2 0\n-2 0\n");
    CHECK(satisficing_index(two, {false, true}, 2) == 3);
    CHECK(satisficing_index(two, {false, false}, 2) == 2);
}

TEST_CASE("the satisficing index characterizes satisfaction") {
    for (int n : {1, 2}) {
        for (const CnfFormula& f : testsupport::small_formulas(n)) {
            for (unsigned bits = 0; bits < (1u << n); ++bits) {
                Assignment sigma;
                for (int j = 0; j < n; ++j)
                    sigma.push_back((bits >> (n - 1 - j)) & 1u);
                bool all_within = true;
                for (int i = 1; i <= f.num_clauses(); ++i)
                    if (satisficing_index(f, sigma, i) > n)
                        all_within = false;
                CHECK(evaluate(f, sigma) == all_within);
            }
        }
    }
}

TEST_CASE("predicted value sequences for the worked example") {
    CnfFormula f = demo();
    SequencePrediction q = predict_sequences(f, {false, true}, Variant::k11);
    REQUIRE(q.sequences.size() == 1);
    REQUIRE(q.sequences[0].size() == 5); // 2n + 1 rows
    CHECK(q.sequences[0][0] == std::vector<std::string>{"a_x", "a_x"});
    CHECK(q.sequences[0][1] == std::vector<std::string>{"b_0", "a_0"});
    CHECK(q.sequences[0][2] == std::vector<std::string>{"c_x", "a_x"});
    CHECK(q.sequences[0][3] == std::vector<std::string>{"c_1", "g_1"});
    CHECK(q.sequences[0][4] == std::vector<std::string>{"c_x", "g_x"});

    SequencePrediction miss = predict_sequences(f, {false, false}, Variant::k11);
    CHECK(miss.sequences[0][4] == std::vector<std::string>{"c_x", "c_x"});
}

TEST_CASE("predicted diagonals for the 5-value family") {
    CnfFormula f = demo();
    SequencePrediction q = predict_sequences(f, {false, true}, Variant::k5);
    REQUIRE(q.diagonals.size() == 1);
    CHECK(q.diagonals[0] == std::vector<std::string>{"b_x", "a_x"});
    CHECK(predict_sequences(f, {true, false}, Variant::k5).diagonals[0] ==
          std::vector<std::string>{"a_x", "a_x"});
    CHECK(predict_sequences(f, {false, false}, Variant::k5).diagonals[0] ==
          std::vector<std::string>{"b_x", "b_x"});
}

TEST_CASE("synthesized plans have the expected length and solve") {
    CnfFormula f = demo();
    Assignment sigma{false, true};

    Plan p11 = synthesize(f, sigma, Variant::k11);
    CHECK(p11.length() == 28); // 2n(kn + 2n + 1)
    CHECK(solves(reduce(f, Variant::k11), p11));

    Plan p5 = synthesize(f, sigma, Variant::k5);
    CHECK(p5.length() == 36); // 2n(2kn + 2n + 1)
    CHECK(solves(reduce(f, Variant::k5), p5));

    // base length plus one detour triple for positions at or past the
    // satisficing index: 44 + 3 * (n - 2 + 1)
    Plan p7 = synthesize(f, sigma, Variant::k7);
    CHECK(p7.length() == 47);
    CHECK(solves(reduce(f, Variant::k7), p7));

    CHECK(synthesize(f, {true, false}, Variant::k7).length() == 50); // T = 1: two detours
}

TEST_CASE("synthesized plans replay the assignment") {
    for (Variant variant : {Variant::k11, Variant::k5, Variant::k7}) {
        for (int n : {1, 2}) {
            for (const CnfFormula& f : testsupport::small_formulas(n)) {
                if (f.num_clauses() > 1)
                    continue; // single-clause slice keeps this quick
                PlanningProblem p = reduce(f, variant);
                for (unsigned bits = 0; bits < (1u << n); ++bits) {
                    Assignment sigma;
                    for (int j = 0; j < n; ++j)
                        sigma.push_back((bits >> (n - 1 - j)) & 1u);
                    Plan plan = synthesize(f, sigma, variant);
                    CHECK(is_admissible(p, plan, variant));
                    CHECK(solves(p, plan) == evaluate(f, sigma));
                    CHECK(extract_message(p, plan) == sigma);
                }
            }
        }
    }
}

TEST_CASE("suppressed goal markers keep the plan admissible but not solving") {
    CnfFormula f = demo();
    Assignment sigma{false, true};
    PlanningProblem p = reduce(f, Variant::k7);
    Plan plan = synthesis_detail::synthesize_k7_suppressing(f, sigma, {true});
    CHECK(is_admissible(p, plan, Variant::k7));
    CHECK_FALSE(solves(p, plan));
    CHECK(extract_message(p, plan) == sigma);
}

TEST_CASE("assignment text round-trips") {
    std::istringstream in("# the assignment\n01\n");
    Assignment sigma = parse_assignment(in);
    CHECK(sigma == Assignment{false, true});

    std::ostringstream out;
    print_assignment(sigma, out);
    CHECK(out.str() == "01\n");

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_assignment(empty), ParseError);
    std::istringstream junk("012\n");
    CHECK_THROWS_AS(parse_assignment(junk), ParseError);
    std::istringstream twice("01\n10\n");
    CHECK_THROWS_AS(parse_assignment(twice), ParseError);
}

TEST_CASE("synthesis rejects a wrong-width assignment") {
    CHECK_THROWS_AS(synthesize(demo(), {true}, Variant::k11), ModelError);
}

} // TEST_SUITE
