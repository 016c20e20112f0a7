#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chainplan/model.hpp"
#include "chainplan/reduction.hpp"
#include "chainplan/symbols.hpp"
#include "chainplan/textio.hpp"

namespace chainplan {

// A plan is an ordered list of operator ids resolved against the owning
// problem at execution time.
struct Plan {
    std::vector<std::string> steps;

    std::size_t length() const { return steps.size(); }
};

using Trace = std::vector<State>;

struct StepFailure {
    std::size_t step_index = 0; // 0-based position in the plan
    std::string operator_id;
    std::string variable;
    std::string required;
    std::string actual;
};

// States visited by the plan prefix that executed; states.front() is the
// initial state. failure is set when some step was not applicable, in which
// case states stops just before that step.
struct RunResult {
    Trace states;
    std::optional<StepFailure> failure;

    bool ok() const { return !failure.has_value(); }
    const State& final_state() const { return states.back(); }
};

// Executes the plan from the initial state. Unknown operator ids throw
// ModelError; inapplicable steps are reported in the result.
inline RunResult run(const PlanningProblem& p, const Plan& plan) {
    RunResult result;
    result.states.reserve(plan.steps.size() + 1);
    result.states.push_back(p.init());
    for (std::size_t step = 0; step < plan.steps.size(); ++step) {
        const Operator* op = p.find_operator(plan.steps[step]);
        if (!op)
            throw ModelError("plan step " + std::to_string(step) + " names unknown operator " +
                             plan.steps[step]);
        const State& s = result.states.back();
        if (auto bad = violated_binding(s, *op)) {
            result.failure = StepFailure{step, op->id, p.variable(bad->var).name,
                                         p.symbol(bad->var, bad->value),
                                         p.symbol(bad->var, s[bad->var])};
            return result;
        }
        State next = s;
        next.set(op->post.var, op->post.value);
        result.states.push_back(std::move(next));
    }
    return result;
}

inline bool solves(const PlanningProblem& p, const Plan& plan) {
    RunResult r = run(p, plan);
    return r.ok() && p.goal_satisfied(r.final_state());
}

// Per-variable change counters along a trace.
using ChangeCounts = std::vector<std::size_t>;

inline ChangeCounts value_change_counts(const PlanningProblem& p, const Trace& trace) {
    ChangeCounts counts(p.num_variables(), 0);
    for (std::size_t t = 1; t < trace.size(); ++t)
        for (std::size_t v = 0; v < p.num_variables(); ++v)
            if (trace[t][static_cast<VariableId>(v)] != trace[t - 1][static_cast<VariableId>(v)])
                ++counts[v];
    return counts;
}

// For the 7-value gadget, clause-row variables are counted by subscript
// changes (a value change within one subscript, such as a_x -> g_x, does not
// advance the counter); all other variables and the other gadgets count plain
// value changes.
inline ChangeCounts change_counts(const PlanningProblem& p, const Trace& trace,
                                  Variant variant) {
    if (variant != Variant::k7)
        return value_change_counts(p, trace);
    ReductionLayout lay = reduction_layout(p);
    ChangeCounts counts(p.num_variables(), 0);
    for (std::size_t t = 1; t < trace.size(); ++t) {
        for (std::size_t vi = 0; vi < p.num_variables(); ++vi) {
            VariableId v = static_cast<VariableId>(vi);
            ValueIndex prev = trace[t - 1][v];
            ValueIndex cur = trace[t][v];
            if (prev == cur)
                continue;
            if (lay.is_middle(v)) {
                Subscript b = subscript_of(p.symbol(v, prev));
                Subscript a = subscript_of(p.symbol(v, cur));
                if (b != a)
                    ++counts[vi];
            } else {
                ++counts[vi];
            }
        }
    }
    return counts;
}

inline ChangeCounts change_counts(const PlanningProblem& p, const Plan& plan, Variant variant) {
    RunResult r = run(p, plan);
    if (!r.ok())
        throw ApplicabilityError(r.failure->operator_id, r.failure->variable,
                                 r.failure->required, r.failure->actual);
    return change_counts(p, r.states, variant);
}

// A plan is admissible when every counter hits its ceiling: i for s_i, 2n for
// the pump, the clause rows and ve, and 2n-i for e_i.
inline bool is_admissible(const PlanningProblem& p, const Trace& trace, Variant variant) {
    ReductionLayout lay = reduction_layout(p);
    ChangeCounts counts = change_counts(p, trace, variant);
    const std::size_t two_n = static_cast<std::size_t>(2 * lay.n);
    for (int i = 1; i <= 2 * lay.n - 1; ++i) {
        if (counts[static_cast<std::size_t>(lay.s(i))] != static_cast<std::size_t>(i))
            return false;
        if (counts[static_cast<std::size_t>(lay.e(i))] != two_n - static_cast<std::size_t>(i))
            return false;
    }
    if (counts[static_cast<std::size_t>(lay.vs)] != two_n)
        return false;
    if (counts[static_cast<std::size_t>(lay.ve)] != two_n)
        return false;
    for (VariableId v = lay.first_middle(); v < lay.ve; ++v)
        if (counts[static_cast<std::size_t>(v)] != two_n)
            return false;
    return true;
}

inline bool is_admissible(const PlanningProblem& p, const Plan& plan, Variant variant) {
    RunResult r = run(p, plan);
    if (!r.ok())
        throw ApplicabilityError(r.failure->operator_id, r.failure->variable,
                                 r.failure->required, r.failure->actual);
    return is_admissible(p, r.states, variant);
}

// Message bits m_1..m_n in order.
using Message = std::vector<bool>;

// Reads the message off the pump variable's trajectory, which must alternate
// x, m_1, x, m_2, ..., m_n, x. Throws NotAdmissibleError at the first index
// of the change sequence where that shape breaks.
inline Message extract_message(const PlanningProblem& p, const Trace& trace) {
    ReductionLayout lay = reduction_layout(p);
    std::vector<std::string> sequence;
    for (std::size_t t = 0; t < trace.size(); ++t) {
        const std::string& symbol = p.symbol(lay.vs, trace[t][lay.vs]);
        if (sequence.empty() || sequence.back() != symbol)
            sequence.push_back(symbol);
    }
    Message message;
    for (std::size_t idx = 0; idx < sequence.size(); ++idx) {
        if (idx % 2 == 0) {
            if (sequence[idx] != "x")
                throw NotAdmissibleError(idx, "pump value " + sequence[idx] + " at change " +
                                                  std::to_string(idx) + " where x was expected");
        } else {
            if (sequence[idx] == "1")
                message.push_back(true);
            else if (sequence[idx] == "0")
                message.push_back(false);
            else
                throw NotAdmissibleError(idx, "pump value " + sequence[idx] + " at change " +
                                                  std::to_string(idx) +
                                                  " where a bit was expected");
        }
    }
    const std::size_t expected = 2 * static_cast<std::size_t>(lay.n) + 1;
    if (sequence.size() != expected)
        throw NotAdmissibleError(sequence.size(),
                                 "pump changed value " + std::to_string(sequence.size() - 1) +
                                     " times; a full message needs " +
                                     std::to_string(expected - 1));
    return message;
}

inline Message extract_message(const PlanningProblem& p, const Plan& plan) {
    RunResult r = run(p, plan);
    if (!r.ok())
        throw ApplicabilityError(r.failure->operator_id, r.failure->variable,
                                 r.failure->required, r.failure->actual);
    return extract_message(p, r.states);
}

// Plan files: one operator id per line, '#' comments, blank lines ignored.
inline Plan parse_plan(std::istream& in) {
    Plan plan;
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::string text = textio_detail::strip(raw);
        if (!text.empty())
            plan.steps.push_back(text);
    }
    return plan;
}

inline void print_plan(const Plan& plan, std::ostream& out) {
    for (const std::string& step : plan.steps)
        out << step << "\n";
}

// Sequence of values a variable takes on along a trace: its initial value
// plus every changed-to value, in order.
inline std::vector<std::string> value_sequence(const PlanningProblem& p, const Trace& trace,
                                               VariableId v) {
    std::vector<std::string> seq;
    for (const State& s : trace) {
        const std::string& symbol = p.symbol(v, s[v]);
        if (seq.empty() || seq.back() != symbol)
            seq.push_back(symbol);
    }
    return seq;
}

// Like value_sequence, but a new value is recorded only when its subscript
// differs from the previously recorded one. This is the sampling under which
// the 7-value gadget's clause rows advance exactly once per message half-step.
inline std::vector<std::string> subscript_sequence(const PlanningProblem& p, const Trace& trace,
                                                   VariableId v) {
    std::vector<std::string> seq;
    for (const State& s : trace) {
        const std::string& symbol = p.symbol(v, s[v]);
        if (seq.empty() || subscript_of(seq.back()) != subscript_of(symbol))
            seq.push_back(symbol);
    }
    return seq;
}

// Tab-separated trace: one row per visited state, leading columns give the
// step number and the operator that produced the state.
inline void write_trace_tsv(const PlanningProblem& p, const Plan& plan, const Trace& trace,
                            std::ostream& out) {
    out << "step\top";
    for (const Variable& v : p.variables())
        out << "\t" << v.name;
    out << "\n";
    for (std::size_t t = 0; t < trace.size(); ++t) {
        out << t << "\t";
        if (t > 0)
            out << plan.steps[t - 1];
        for (std::size_t v = 0; v < p.num_variables(); ++v)
            out << "\t" << p.symbol(static_cast<VariableId>(v), trace[t][static_cast<VariableId>(v)]);
        out << "\n";
    }
}

} // namespace chainplan
