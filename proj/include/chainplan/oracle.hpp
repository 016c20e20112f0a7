#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chainplan/cnf.hpp"
#include "chainplan/model.hpp"
#include "chainplan/reduction.hpp"
#include "chainplan/runtime.hpp"
#include "chainplan/synthesis.hpp"

namespace chainplan {

struct SearchLimits {
    std::size_t max_states = 10'000'000;
    double max_seconds = 120.0;
    std::size_t max_plan_length = std::numeric_limits<std::size_t>::max();
};

enum class Verdict { solvable, unsolvable, limit_exceeded };

struct SearchStats {
    std::size_t expanded = 0;
    std::size_t visited = 0;
    std::size_t frontier_peak = 0;
    double seconds = 0.0;
};

struct SearchOutcome {
    Verdict verdict = Verdict::limit_exceeded;
    std::optional<Plan> plan; // set iff verdict == solvable; a shortest plan
    SearchStats stats;
};

namespace oracle_detail {

// States are packed into byte strings for hashing; one nibble per variable
// when every domain fits in 16 values, one byte otherwise.
struct StateCodec {
    std::size_t num_vars;
    bool nibble;

    explicit StateCodec(const PlanningProblem& p)
        : num_vars(p.num_variables()), nibble(true) {
        for (const Variable& v : p.variables())
            if (v.domain.size() > 16)
                nibble = false;
    }

    std::string pack(const State& s) const {
        std::string out;
        if (nibble) {
            out.resize((num_vars + 1) / 2, '\0');
            for (std::size_t i = 0; i < num_vars; ++i) {
                unsigned value = s[static_cast<VariableId>(i)];
                out[i / 2] = static_cast<char>(static_cast<unsigned char>(out[i / 2]) |
                                               (i % 2 ? value << 4 : value));
            }
        } else {
            out.resize(num_vars);
            for (std::size_t i = 0; i < num_vars; ++i)
                out[i] = static_cast<char>(s[static_cast<VariableId>(i)]);
        }
        return out;
    }

    State unpack(const std::string& packed) const {
        std::vector<ValueIndex> values(num_vars);
        if (nibble) {
            for (std::size_t i = 0; i < num_vars; ++i) {
                unsigned char byte = static_cast<unsigned char>(packed[i / 2]);
                values[i] = static_cast<ValueIndex>(i % 2 ? byte >> 4 : byte & 0xf);
            }
        } else {
            for (std::size_t i = 0; i < num_vars; ++i)
                values[i] = static_cast<ValueIndex>(static_cast<unsigned char>(packed[i]));
        }
        return State(std::move(values));
    }
};

} // namespace oracle_detail

// Breadth-first exploration of the reachable state space. Deterministic:
// successors are generated in operator id order, so identical inputs yield
// identical plans and statistics. Returns a shortest plan when one exists
// within the limits; exhausting the reachable space proves unsolvability.
inline SearchOutcome bfs_plan_exists(const PlanningProblem& p, const SearchLimits& limits = {}) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - started).count(); };

    SearchOutcome out;
    oracle_detail::StateCodec codec(p);

    std::vector<int> op_order(p.operators().size());
    for (std::size_t i = 0; i < op_order.size(); ++i)
        op_order[i] = static_cast<int>(i);
    std::sort(op_order.begin(), op_order.end(), [&](int a, int b) {
        return p.operators()[static_cast<std::size_t>(a)].id <
               p.operators()[static_cast<std::size_t>(b)].id;
    });

    std::unordered_map<std::string, std::int32_t> index_of;
    std::vector<const std::string*> key_of;
    std::vector<std::pair<std::int32_t, std::int32_t>> came_from; // (parent, op index)
    std::vector<std::size_t> depth;
    std::deque<std::int32_t> frontier;

    auto build_plan = [&](std::int32_t node) {
        Plan plan;
        for (std::int32_t at = node; came_from[static_cast<std::size_t>(at)].first >= 0;
             at = came_from[static_cast<std::size_t>(at)].first)
            plan.steps.push_back(
                p.operators()[static_cast<std::size_t>(
                                  came_from[static_cast<std::size_t>(at)].second)]
                    .id);
        std::reverse(plan.steps.begin(), plan.steps.end());
        return plan;
    };

    {
        auto [it, fresh] = index_of.emplace(codec.pack(p.init()), 0);
        (void)fresh;
        key_of.push_back(&it->first);
        came_from.emplace_back(-1, -1);
        depth.push_back(0);
        frontier.push_back(0);
    }
    if (p.goal_satisfied(p.init())) {
        out.verdict = Verdict::solvable;
        out.plan = Plan{};
        out.stats.visited = 1;
        out.stats.seconds = elapsed();
        return out;
    }

    bool depth_cut = false;
    while (!frontier.empty()) {
        if (index_of.size() > limits.max_states ||
            (out.stats.expanded % 1024 == 0 && elapsed() > limits.max_seconds)) {
            out.verdict = Verdict::limit_exceeded;
            out.stats.visited = index_of.size();
            out.stats.seconds = elapsed();
            return out;
        }
        out.stats.frontier_peak = std::max(out.stats.frontier_peak, frontier.size());
        std::int32_t node = frontier.front();
        frontier.pop_front();
        ++out.stats.expanded;
        if (depth[static_cast<std::size_t>(node)] >= limits.max_plan_length) {
            depth_cut = true;
            continue;
        }
        State s = codec.unpack(*key_of[static_cast<std::size_t>(node)]);
        for (int oi : op_order) {
            const Operator& op = p.operators()[static_cast<std::size_t>(oi)];
            if (s[op.post.var] == op.post.value || !is_applicable(s, op))
                continue;
            ValueIndex saved = s[op.post.var];
            s.set(op.post.var, op.post.value);
            std::string packed = codec.pack(s);
            auto [it, fresh] =
                index_of.emplace(std::move(packed), static_cast<std::int32_t>(key_of.size()));
            if (fresh) {
                key_of.push_back(&it->first);
                came_from.emplace_back(node, oi);
                depth.push_back(depth[static_cast<std::size_t>(node)] + 1);
                if (p.goal_satisfied(s)) {
                    out.verdict = Verdict::solvable;
                    out.plan = build_plan(static_cast<std::int32_t>(key_of.size() - 1));
                    out.stats.visited = index_of.size();
                    out.stats.seconds = elapsed();
                    return out;
                }
                frontier.push_back(static_cast<std::int32_t>(key_of.size() - 1));
            }
            s.set(op.post.var, saved);
        }
    }
    out.verdict = depth_cut ? Verdict::limit_exceeded : Verdict::unsolvable;
    out.stats.visited = index_of.size();
    out.stats.seconds = elapsed();
    return out;
}

// Smallest satisfying assignment in lexicographic order (x_1 weighs most), or
// nullopt. Guarded to keep enumeration affordable.
inline std::optional<Assignment> sat_brute_force(const CnfFormula& f) {
    if (f.num_vars > 24)
        throw ModelError("brute-force satisfiability is limited to 24 variables");
    const int n = f.num_vars;
    for (std::uint32_t word = 0; word < (1u << n); ++word) {
        Assignment sigma(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            sigma[static_cast<std::size_t>(j)] = (word >> (n - 1 - j)) & 1u;
        if (evaluate(f, sigma))
            return sigma;
    }
    return std::nullopt;
}

enum class EquivalenceStatus { pass, fail, inconclusive };

struct EquivalenceReport {
    EquivalenceStatus status = EquivalenceStatus::inconclusive;
    bool sat = false;
    bool plan_found = false;
    std::size_t states = 0;
    std::size_t plan_length = 0;
    std::string detail; // reason when status == fail
};

// Confronts the gadget with ground truth: the generated problem must be
// solvable exactly when the formula is satisfiable. On the satisfiable side
// the synthesized plan must solve the problem too, and any plan the search
// returns must itself solve and be admissible.
inline EquivalenceReport verify_equivalence(const CnfFormula& f, Variant variant,
                                            const SearchLimits& limits = {}) {
    EquivalenceReport report;
    std::optional<Assignment> sigma = sat_brute_force(f);
    report.sat = sigma.has_value();

    PlanningProblem problem = reduce(f, variant);
    SearchOutcome outcome = bfs_plan_exists(problem, limits);
    report.states = outcome.stats.visited;
    if (outcome.verdict == Verdict::limit_exceeded) {
        report.status = EquivalenceStatus::inconclusive;
        return report;
    }
    report.plan_found = outcome.verdict == Verdict::solvable;
    if (report.plan_found)
        report.plan_length = outcome.plan->length();

    auto fail = [&](std::string why) {
        report.status = EquivalenceStatus::fail;
        report.detail = std::move(why);
        return report;
    };
    if (report.sat != report.plan_found)
        return fail(report.sat ? "satisfiable formula but no plan found"
                               : "plan found for an unsatisfiable formula");
    if (report.plan_found) {
        if (!solves(problem, *outcome.plan))
            return fail("search returned a plan that does not reach the goal");
        if (!is_admissible(problem, *outcome.plan, variant))
            return fail("search returned a plan with wrong change counters");
        if (!evaluate(f, extract_message(problem, *outcome.plan)))
            return fail("the found plan's message does not satisfy the formula");
        Plan synthesized = synthesize(f, *sigma, variant);
        if (!solves(problem, synthesized))
            return fail("synthesized plan does not reach the goal");
    }
    report.status = EquivalenceStatus::pass;
    return report;
}

inline std::string report_line(const EquivalenceReport& r) {
    std::string status = r.status == EquivalenceStatus::pass ? "PASS"
                         : r.status == EquivalenceStatus::fail ? "FAIL"
                                                               : "INCONCLUSIVE";
    return status + " sat=" + (r.sat ? "true" : "false") +
           " plan=" + (r.plan_found ? "true" : "false") +
           " states=" + std::to_string(r.states) + " len=" + std::to_string(r.plan_length);
}

} // namespace chainplan
