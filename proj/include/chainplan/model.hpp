#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chainplan/errors.hpp"

namespace chainplan {

// Core model: finite-domain variables arranged in a fixed storage order (the
// intended chain order), total states, partial states, and unary operators
// that write exactly one variable. Values are stored as indices into the
// owning variable's domain; the domain lists the value symbols.

using VariableId = int;       // 0-based position in the variable list
using ValueIndex = std::uint8_t;

struct Binding {
    VariableId var = -1;
    ValueIndex value = 0;

    bool operator==(const Binding&) const = default;
};

// A consistent set of bindings, at most one per variable, kept sorted by
// variable for deterministic iteration.
class PartialState {
public:
    PartialState() = default;

    // Overwrites any existing binding for var.
    void bind(VariableId var, ValueIndex value) {
        auto it = std::lower_bound(bindings_.begin(), bindings_.end(), var,
                                   [](const Binding& b, VariableId v) { return b.var < v; });
        if (it != bindings_.end() && it->var == var)
            it->value = value;
        else
            bindings_.insert(it, Binding{var, value});
    }

    std::optional<ValueIndex> value_of(VariableId var) const {
        auto it = std::lower_bound(bindings_.begin(), bindings_.end(), var,
                                   [](const Binding& b, VariableId v) { return b.var < v; });
        if (it != bindings_.end() && it->var == var)
            return it->value;
        return std::nullopt;
    }

    bool binds(VariableId var) const { return value_of(var).has_value(); }
    std::size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }
    auto begin() const { return bindings_.begin(); }
    auto end() const { return bindings_.end(); }

    bool operator==(const PartialState&) const = default;

private:
    std::vector<Binding> bindings_;
};

// A total assignment of one domain value per variable.
class State {
public:
    State() = default;
    explicit State(std::vector<ValueIndex> values) : values_(std::move(values)) {}

    ValueIndex operator[](VariableId var) const { return values_[static_cast<std::size_t>(var)]; }
    void set(VariableId var, ValueIndex value) { values_[static_cast<std::size_t>(var)] = value; }
    std::size_t size() const { return values_.size(); }
    const std::vector<ValueIndex>& values() const { return values_; }

    bool operator==(const State&) const = default;

private:
    std::vector<ValueIndex> values_;
};

struct StateHash {
    std::size_t operator()(const State& s) const {
        // FNV-1a over the value bytes; states of one problem share a length.
        std::size_t h = 1469598103934665603ull;
        for (ValueIndex v : s.values()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct Variable {
    std::string name;
    std::vector<std::string> domain;

    // Index of symbol within the domain, or -1.
    int index_of(std::string_view symbol) const {
        for (std::size_t i = 0; i < domain.size(); ++i)
            if (domain[i] == symbol)
                return static_cast<int>(i);
        return -1;
    }
};

struct Operator {
    std::string id;
    PartialState pre;   // may bind any variables; empty means always applicable
    Binding post;       // writes exactly one variable
};

class PlanningProblem {
public:
    PlanningProblem(std::vector<Variable> variables, State init, PartialState goal,
                    std::vector<Operator> operators)
        : variables_(std::move(variables)),
          init_(std::move(init)),
          goal_(std::move(goal)),
          operators_(std::move(operators)) {
        validate_and_index();
    }

    const std::vector<Variable>& variables() const { return variables_; }
    const Variable& variable(VariableId v) const { return variables_[static_cast<std::size_t>(v)]; }
    std::size_t num_variables() const { return variables_.size(); }
    const State& init() const { return init_; }
    const PartialState& goal() const { return goal_; }
    const std::vector<Operator>& operators() const { return operators_; }

    VariableId variable_index(std::string_view name) const {
        auto it = var_index_.find(std::string(name));
        return it == var_index_.end() ? -1 : it->second;
    }

    // nullptr when no operator has this id.
    const Operator* find_operator(std::string_view id) const {
        auto it = op_index_.find(std::string(id));
        return it == op_index_.end() ? nullptr : &operators_[static_cast<std::size_t>(it->second)];
    }

    int operator_index(std::string_view id) const {
        auto it = op_index_.find(std::string(id));
        return it == op_index_.end() ? -1 : it->second;
    }

    // Maps a symbol to its index in var's domain; throws ModelError if the
    // symbol is not in the domain.
    ValueIndex value_index(VariableId var, std::string_view symbol) const {
        int idx = variable(var).index_of(symbol);
        if (idx < 0)
            throw ModelError("value " + std::string(symbol) + " not in domain of " +
                             variable(var).name);
        return static_cast<ValueIndex>(idx);
    }

    const std::string& symbol(VariableId var, ValueIndex value) const {
        return variable(var).domain[value];
    }

    bool goal_satisfied(const State& s) const {
        for (const Binding& b : goal_)
            if (s[b.var] != b.value)
                return false;
        return true;
    }

private:
    void validate_and_index() {
        if (variables_.empty())
            throw ModelError("problem has no variables");
        for (std::size_t v = 0; v < variables_.size(); ++v) {
            const Variable& var = variables_[v];
            if (var.name.empty())
                throw ModelError("variable with empty name");
            if (var.domain.empty())
                throw ModelError("variable " + var.name + " has an empty domain");
            if (var.domain.size() > 256)
                throw ModelError("variable " + var.name + " has more than 256 values");
            for (std::size_t a = 0; a < var.domain.size(); ++a)
                for (std::size_t b = a + 1; b < var.domain.size(); ++b)
                    if (var.domain[a] == var.domain[b])
                        throw ModelError("variable " + var.name + " repeats value " +
                                         var.domain[a]);
            if (!var_index_.emplace(var.name, static_cast<VariableId>(v)).second)
                throw ModelError("duplicate variable name " + var.name);
        }
        if (init_.size() != variables_.size())
            throw ModelError("initial state does not bind every variable exactly once");
        for (std::size_t v = 0; v < variables_.size(); ++v)
            check_value(static_cast<VariableId>(v), init_[static_cast<VariableId>(v)],
                        "initial state");
        if (goal_.empty())
            throw ModelError("goal binds no variables");
        for (const Binding& b : goal_) {
            check_var(b.var, "goal");
            check_value(b.var, b.value, "goal");
        }
        for (std::size_t i = 0; i < operators_.size(); ++i) {
            const Operator& op = operators_[i];
            if (op.id.empty())
                throw ModelError("operator with empty id");
            check_var(op.post.var, "operator " + op.id);
            check_value(op.post.var, op.post.value, "operator " + op.id);
            for (const Binding& b : op.pre) {
                check_var(b.var, "operator " + op.id);
                check_value(b.var, b.value, "operator " + op.id);
            }
            if (!op_index_.emplace(op.id, static_cast<int>(i)).second)
                throw ModelError("duplicate operator id " + op.id);
        }
    }

    void check_var(VariableId v, const std::string& where) const {
        if (v < 0 || static_cast<std::size_t>(v) >= variables_.size())
            throw ModelError(where + " refers to an unknown variable index");
    }

    void check_value(VariableId v, ValueIndex value, const std::string& where) const {
        if (value >= variables_[static_cast<std::size_t>(v)].domain.size())
            throw ModelError(where + " uses a value outside the domain of " +
                             variables_[static_cast<std::size_t>(v)].name);
    }

    std::vector<Variable> variables_;
    State init_;
    PartialState goal_;
    std::vector<Operator> operators_;
    std::unordered_map<std::string, VariableId> var_index_;
    std::unordered_map<std::string, int> op_index_;
};

// An operator is applicable in s when the state agrees with every
// precondition binding.
inline bool is_applicable(const State& s, const Operator& op) {
    for (const Binding& b : op.pre)
        if (s[b.var] != b.value)
            return false;
    return true;
}

// First precondition binding violated in s, if any.
inline std::optional<Binding> violated_binding(const State& s, const Operator& op) {
    for (const Binding& b : op.pre)
        if (s[b.var] != b.value)
            return b;
    return std::nullopt;
}

// Successor state; throws ApplicabilityError when op is not applicable.
inline State apply(const PlanningProblem& p, const State& s, const Operator& op) {
    if (auto bad = violated_binding(s, op))
        throw ApplicabilityError(op.id, p.variable(bad->var).name,
                                 p.symbol(bad->var, bad->value), p.symbol(bad->var, s[bad->var]));
    State next = s;
    next.set(op.post.var, op.post.value);
    return next;
}

} // namespace chainplan
