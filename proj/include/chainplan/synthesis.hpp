#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "chainplan/cnf.hpp"
#include "chainplan/reduction.hpp"
#include "chainplan/runtime.hpp"
#include "chainplan/symbols.hpp"

namespace chainplan {

// Builds plans directly from assignments, without search. A satisfying
// assignment yields a plan that solves the generated problem; any assignment
// yields an admissible plan (all change counters reach their ceilings).

// Smallest bit position whose assigned value satisfies the clause, or n+1 if
// none does. 1-based clause index.
inline int satisficing_index(const CnfFormula& f, const Assignment& sigma, int clause_index) {
    for (int j = 1; j <= f.num_vars; ++j)
        if (literal_satisfies(f, clause_index, j, sigma[static_cast<std::size_t>(j - 1)]))
            return j;
    return f.num_vars + 1;
}

// Predicted value sequences of the clause-row variables under any admissible
// plan carrying this assignment as its message.
//
// For the 11-value gadget, sequences[i-1][t-1] lists, for t in [1..2n+1], the
// t-th value of v_{i1}..v_{in}. For the 7-value gadget the inner list flattens
// the triples (3n entries, subscript-sampled values). For the 5-value gadget
// only the diagonal is determined: diagonals[i-1][j-1] is the (2j+1)-th value
// of the first variable of pair (i, n-j+1).
struct SequencePrediction {
    Variant variant = Variant::k11;
    int n = 0;
    int k = 0;
    std::vector<std::vector<std::vector<std::string>>> sequences;
    std::vector<std::vector<std::string>> diagonals;
};

namespace synthesis_detail {

inline std::string sym(char letter, bool m) { return make_symbol(letter, bit_char(m)); }

inline std::vector<std::string> predict_row_k11(int n, int t_index, int t_sat,
                                                const Assignment& sigma) {
    std::vector<std::string> row;
    row.reserve(static_cast<std::size_t>(n));
    if (t_index % 2 == 1) {
        int half = (t_index - 1) / 2;
        if (half < t_sat) {
            for (int pos = 1; pos <= n; ++pos)
                row.push_back(pos <= half ? "c_x" : "a_x");
        } else {
            for (int pos = 1; pos <= n; ++pos)
                row.push_back(pos < t_sat ? "c_x" : "g_x");
        }
    } else {
        int j = t_index / 2;
        bool m = sigma[static_cast<std::size_t>(j - 1)];
        if (j < t_sat) {
            for (int pos = 1; pos <= n; ++pos)
                row.push_back(pos < j ? sym('c', m) : pos == j ? sym('b', m) : sym('a', m));
        } else {
            int guard = j == t_sat ? j : t_sat;
            for (int pos = 1; pos <= n; ++pos)
                row.push_back(pos < guard ? sym('c', m) : sym('g', m));
        }
    }
    return row;
}

inline std::vector<std::string> predict_row_k7(int n, int t_index, int t_sat,
                                               const Assignment& sigma) {
    std::vector<std::string> row;
    row.reserve(static_cast<std::size_t>(3 * n));
    auto triple = [&](const std::string& a, const std::string& b, const std::string& c) {
        row.push_back(a);
        row.push_back(b);
        row.push_back(c);
    };
    if (t_index % 2 == 1) {
        int half = (t_index - 1) / 2;
        for (int pos = 1; pos <= n; ++pos) {
            if (half < t_sat)
                pos <= half ? triple("b_x", "b_x", "b_x") : triple("a_x", "a_x", "a_x");
            else
                pos < t_sat ? triple("b_x", "b_x", "b_x") : triple("b_x", "g_x", "b_x");
        }
    } else {
        int j = t_index / 2;
        bool m = sigma[static_cast<std::size_t>(j - 1)];
        std::string am = sym('a', m), bm = sym('b', m), gm = sym('g', m);
        for (int pos = 1; pos <= n; ++pos) {
            if (j < t_sat) {
                if (pos < j)
                    triple(bm, am, bm);
                else if (pos == j)
                    triple(bm, am, am);
                else
                    triple(am, am, am);
            } else {
                pos < t_sat ? triple(bm, am, bm) : triple(bm, gm, bm);
            }
        }
    }
    return row;
}

} // namespace synthesis_detail

inline SequencePrediction predict_sequences(const CnfFormula& f, const Assignment& sigma,
                                            Variant variant) {
    if (static_cast<int>(sigma.size()) != f.num_vars)
        throw ModelError("assignment length does not match the formula");
    SequencePrediction pred;
    pred.variant = variant;
    pred.n = f.num_vars;
    pred.k = f.num_clauses();
    for (int i = 1; i <= pred.k; ++i) {
        int t_sat = satisficing_index(f, sigma, i);
        if (variant == Variant::k5) {
            std::vector<std::string> diag;
            for (int j = 1; j <= pred.n; ++j)
                diag.push_back(j < t_sat ? "b_x" : "a_x");
            pred.diagonals.push_back(std::move(diag));
            continue;
        }
        std::vector<std::vector<std::string>> rows;
        for (int t = 1; t <= 2 * pred.n + 1; ++t)
            rows.push_back(variant == Variant::k11
                               ? synthesis_detail::predict_row_k11(pred.n, t, t_sat, sigma)
                               : synthesis_detail::predict_row_k7(pred.n, t, t_sat, sigma));
        pred.sequences.push_back(std::move(rows));
    }
    return pred;
}

namespace synthesis_detail {

// Emits operators against a running state. Every move must resolve to exactly
// one applicable operator; anything else indicates a construction bug and
// throws.
struct Driver {
    const PlanningProblem& p;
    ReductionLayout lay;
    State state;
    Plan plan;
    std::vector<std::vector<const Operator*>> ops_by_var;

    explicit Driver(const PlanningProblem& problem)
        : p(problem), lay(reduction_layout(problem)), state(problem.init()) {
        ops_by_var.resize(p.num_variables());
        for (const Operator& op : p.operators())
            ops_by_var[static_cast<std::size_t>(op.post.var)].push_back(&op);
    }

    void apply_op(const Operator& op) {
        state = apply(p, state, op);
        plan.steps.push_back(op.id);
    }

    // The unique applicable operator changing var's value.
    void step(VariableId var) {
        const Operator* found = nullptr;
        for (const Operator* op : ops_by_var[static_cast<std::size_t>(var)]) {
            if (op->post.value == state[var] || !is_applicable(state, *op))
                continue;
            if (found)
                throw ModelError("synthesis: several operators can move " +
                                 p.variable(var).name);
            found = op;
        }
        if (!found)
            throw ModelError("synthesis: no operator can move " + p.variable(var).name);
        apply_op(*found);
    }

    // The unique applicable operator taking var to the given symbol.
    void step_to(VariableId var, const std::string& target) {
        ValueIndex value = p.value_index(var, target);
        const Operator* found = nullptr;
        for (const Operator* op : ops_by_var[static_cast<std::size_t>(var)]) {
            if (op->post.value != value || !is_applicable(state, *op))
                continue;
            if (found)
                throw ModelError("synthesis: several operators take " + p.variable(var).name +
                                 " to " + target);
            found = op;
        }
        if (!found)
            throw ModelError("synthesis: no operator takes " + p.variable(var).name + " to " +
                             target + " here");
        apply_op(*found);
    }
};

inline void k5_wave_targets(const CnfFormula& f, const Assignment& sigma, int clause,
                            std::vector<std::vector<std::string>>& x_grid,
                            std::vector<std::vector<std::string>>& y_grid) {
    const int n = f.num_vars;
    x_grid.assign(static_cast<std::size_t>(n) + 1,
                  std::vector<std::string>(static_cast<std::size_t>(2 * n) + 2));
    y_grid.assign(static_cast<std::size_t>(n) + 1,
                  std::vector<std::string>(static_cast<std::size_t>(2 * n) + 2));
    for (int j = 1; j <= n; ++j)
        x_grid[j][1] = y_grid[j][1] = "a_x";
    for (int p = 1; p <= n; ++p) {
        bool m = sigma[static_cast<std::size_t>(p - 1)];
        for (int j = 1; j <= n; ++j)
            x_grid[j][2 * p] = sym('a', m);
        y_grid[n][2 * p] = sym('b', m);
        for (int j = 1; j < n; ++j)
            y_grid[j][2 * p] = x_grid[j + 1][2 * p - 1] == "b_x" ? sym('b', m) : sym('a', m);
        for (int j = 1; j <= n; ++j) {
            y_grid[j][2 * p + 1] = "a_x";
            if (y_grid[j][2 * p] == sym('a', m))
                x_grid[j][2 * p + 1] = "a_x";
            else
                x_grid[j][2 * p + 1] =
                    literal_satisfies(f, clause, n - j + 1, m) ? "a_x" : "b_x";
        }
    }
}

// suppress[i-1], for the 7-value gadget only, makes clause i's row ignore its
// satisficing step: the mandatory pass through g_x still happens (there is no
// other way to register a satisfying bit) but the g marker is dropped
// immediately, producing an admissible plan that no longer reaches the goal
// for that clause.
inline Plan drive(const PlanningProblem& prob, const CnfFormula& f, const Assignment& sigma,
                  Variant variant, const std::vector<bool>& suppress) {
    Driver d(prob);
    const int n = f.num_vars;
    const int k = f.num_clauses();

    std::vector<std::vector<std::vector<std::string>>> x_grids, y_grids;
    if (variant == Variant::k5) {
        x_grids.resize(static_cast<std::size_t>(k));
        y_grids.resize(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i)
            k5_wave_targets(f, sigma, i, x_grids[static_cast<std::size_t>(i - 1)],
                            y_grids[static_cast<std::size_t>(i - 1)]);
    }

    for (int t = 1; t <= 2 * n; ++t) {
        const bool odd = t % 2 == 1;
        const int p_bit = (t + 1) / 2;
        const bool m = sigma[static_cast<std::size_t>(p_bit - 1)];

        for (int i = 2 * n - t + 1; i <= 2 * n - 1; ++i)
            d.step(d.lay.s(i));
        d.step_to(d.lay.vs, odd ? std::string(1, bit_char(m)) : "x");

        for (int i = 1; i <= k; ++i) {
            const bool skip = !suppress.empty() && suppress[static_cast<std::size_t>(i - 1)];
            switch (variant) {
            case Variant::k11:
                for (int j = 1; j <= n; ++j)
                    d.step(d.lay.middle(i, j));
                break;
            case Variant::k5: {
                const auto& xg = x_grids[static_cast<std::size_t>(i - 1)];
                const auto& yg = y_grids[static_cast<std::size_t>(i - 1)];
                for (int j = 1; j <= n; ++j) {
                    d.step_to(d.lay.middle(i, j, 1), xg[static_cast<std::size_t>(j)]
                                                       [static_cast<std::size_t>(t + 1)]);
                    d.step_to(d.lay.middle(i, j, 2), yg[static_cast<std::size_t>(j)]
                                                       [static_cast<std::size_t>(t + 1)]);
                }
                break;
            }
            case Variant::k7: {
                const int t_sat = satisficing_index(f, sigma, i);
                const std::string am = sym('a', m), bm = sym('b', m), gm = sym('g', m);
                auto move3 = [&](int j, const std::string& a, const std::string& b,
                                 const std::string& c) {
                    d.step_to(d.lay.middle(i, j, 1), a);
                    d.step_to(d.lay.middle(i, j, 2), b);
                    d.step_to(d.lay.middle(i, j, 3), c);
                };
                if (odd) {
                    if (!skip && p_bit == t_sat) {
                        for (int j = 1; j <= n; ++j) {
                            if (j < p_bit)
                                move3(j, bm, am, bm);
                            else
                                move3(j, "g_x", "g_x", "g_x");
                        }
                        for (int j = p_bit; j <= n; ++j)
                            move3(j, bm, gm, bm);
                    } else if (!skip && p_bit > t_sat) {
                        for (int j = 1; j <= n; ++j) {
                            if (j < t_sat)
                                move3(j, bm, am, bm);
                            else
                                move3(j, bm, gm, bm);
                        }
                    } else {
                        for (int j = 1; j <= n; ++j) {
                            if (j < p_bit) {
                                move3(j, bm, am, bm);
                            } else if (j == p_bit) {
                                if (skip && literal_satisfies(f, i, p_bit, m))
                                    d.step_to(d.lay.middle(i, j, 1), "g_x");
                                move3(j, bm, am, am);
                            } else {
                                move3(j, am, am, am);
                            }
                        }
                    }
                } else {
                    const int guard = skip ? n + 1 : t_sat;
                    for (int j = 1; j <= n; ++j) {
                        if (p_bit < guard)
                            j <= p_bit ? move3(j, "b_x", "b_x", "b_x")
                                       : move3(j, "a_x", "a_x", "a_x");
                        else
                            j < guard ? move3(j, "b_x", "b_x", "b_x")
                                      : move3(j, "b_x", "g_x", "b_x");
                    }
                }
                break;
            }
            }
        }

        d.step_to(d.lay.ve, odd ? "1" : "0");
        for (int i = 1; i <= 2 * n - t; ++i)
            d.step_to(d.lay.e(i), odd ? "1" : "0");
    }
    return d.plan;
}

// Test scaffolding: an admissible plan for the 7-value gadget that drops the
// goal markers of the selected clauses.
inline Plan synthesize_k7_suppressing(const CnfFormula& f, const Assignment& sigma,
                                      const std::vector<bool>& suppress) {
    PlanningProblem prob = reduce(f, Variant::k7);
    return drive(prob, f, sigma, Variant::k7, suppress);
}

} // namespace synthesis_detail

inline Plan synthesize(const CnfFormula& f, const Assignment& sigma, Variant variant) {
    if (static_cast<int>(sigma.size()) != f.num_vars)
        throw ModelError("assignment length does not match the formula");
    PlanningProblem prob = reduce(f, variant);
    return synthesis_detail::drive(prob, f, sigma, variant, {});
}

// Assignment files: one line of characters from {0,1}, most significant bit
// (x_1) first. '#' comments and blank lines are ignored.
inline Assignment parse_assignment(std::istream& in) {
    std::string raw;
    int line = 0;
    Assignment bits;
    bool seen = false;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::string text = textio_detail::strip(raw);
        if (text.empty())
            continue;
        if (seen)
            throw ParseError(line, "more than one assignment line");
        for (char c : text) {
            if (c == '0')
                bits.push_back(false);
            else if (c == '1')
                bits.push_back(true);
            else
                throw ParseError(line, std::string("assignment character '") + c +
                                           "' is not 0 or 1");
        }
        seen = true;
    }
    if (!seen)
        throw ParseError(line, "no assignment line");
    return bits;
}

inline void print_assignment(const Assignment& sigma, std::ostream& out) {
    for (bool bit : sigma)
        out << (bit ? '1' : '0');
    out << "\n";
}

} // namespace chainplan
