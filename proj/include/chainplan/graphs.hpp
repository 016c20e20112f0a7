#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chainplan/model.hpp"

namespace chainplan {

// Directed graph with string nodes and an optional label set per edge.
// Used both for causal graphs (labels empty) and domain transition graphs
// (labels name the predecessor values that enable the transition).
struct LabelledGraph {
    struct Edge {
        std::string from;
        std::string to;
        std::vector<std::string> labels; // sorted, possibly empty
        bool operator==(const Edge&) const = default;
    };

    std::vector<std::string> nodes;
    std::vector<Edge> edges;

    bool has_edge(std::string_view from, std::string_view to) const {
        for (const Edge& e : edges)
            if (e.from == from && e.to == to)
                return true;
        return false;
    }
};

// Edge (u, v) whenever u != v and some operator mentions u in its
// preconditions or effect and writes v. Edges are emitted in variable order.
inline LabelledGraph causal_graph(const PlanningProblem& p) {
    std::set<std::pair<VariableId, VariableId>> edge_set;
    for (const Operator& op : p.operators()) {
        VariableId v = op.post.var;
        for (const Binding& b : op.pre)
            if (b.var != v)
                edge_set.insert({b.var, v});
    }
    LabelledGraph g;
    for (const Variable& var : p.variables())
        g.nodes.push_back(var.name);
    for (auto [u, v] : edge_set)
        g.edges.push_back({p.variable(u).name, p.variable(v).name, {}});
    return g;
}

// True iff the causal graph is exactly the directed path along the variable
// storage order. A single variable forms a trivial path. Any extra edge,
// missing edge, or backward edge fails the check; the order is verified, never
// inferred.
inline bool validate_chain(const PlanningProblem& p) {
    std::set<std::pair<VariableId, VariableId>> edge_set;
    for (const Operator& op : p.operators()) {
        VariableId v = op.post.var;
        for (const Binding& b : op.pre)
            if (b.var != v)
                edge_set.insert({b.var, v});
    }
    const std::size_t n = p.num_variables();
    if (edge_set.size() != n - 1)
        return false;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!edge_set.count({static_cast<VariableId>(i), static_cast<VariableId>(i + 1)}))
            return false;
    return true;
}

// Domain transition graph of one variable: nodes are its domain symbols, one
// edge per distinct (value before, value after) pair realized by an operator
// writing the variable, labelled by the predecessor values those operators
// require. An operator with no precondition on the variable itself can fire
// from any value and contributes edges from every other value.
inline LabelledGraph dtg(const PlanningProblem& p, VariableId v) {
    std::map<std::pair<ValueIndex, ValueIndex>, std::set<std::string>> edge_map;
    for (const Operator& op : p.operators()) {
        if (op.post.var != v)
            continue;
        std::set<std::string> labels;
        for (const Binding& b : op.pre)
            if (b.var != v)
                labels.insert(p.symbol(b.var, b.value));
        auto self = op.pre.value_of(v);
        std::vector<ValueIndex> froms;
        if (self)
            froms.push_back(*self);
        else
            for (std::size_t i = 0; i < p.variable(v).domain.size(); ++i)
                if (static_cast<ValueIndex>(i) != op.post.value)
                    froms.push_back(static_cast<ValueIndex>(i));
        for (ValueIndex from : froms)
            edge_map[{from, op.post.value}].insert(labels.begin(), labels.end());
    }
    LabelledGraph g;
    g.nodes = p.variable(v).domain;
    for (const auto& [key, labels] : edge_map)
        g.edges.push_back({p.symbol(v, key.first), p.symbol(v, key.second),
                           std::vector<std::string>(labels.begin(), labels.end())});
    return g;
}

inline std::size_t max_domain_size(const PlanningProblem& p) {
    std::size_t m = 0;
    for (const Variable& v : p.variables())
        m = std::max(m, v.domain.size());
    return m;
}

inline std::string to_dot(const LabelledGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=LR;\n";
    for (const std::string& node : g.nodes)
        out << "  \"" << node << "\";\n";
    for (const LabelledGraph::Edge& e : g.edges) {
        out << "  \"" << e.from << "\" -> \"" << e.to << "\"";
        if (!e.labels.empty()) {
            out << " [label=\"";
            for (std::size_t i = 0; i < e.labels.size(); ++i) {
                if (i)
                    out << ",";
                out << e.labels[i];
            }
            out << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace chainplan
