#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chainplan/model.hpp"

namespace chainplan {

// Line-based text format for chain planning problems:
//
//   CHAINPLAN 1
//   VAR <name> <sym> <sym> ...
//   INIT <sym> ...                      one symbol per variable, in order
//   GOAL <name>=<sym> <name>=<sym> ...
//   OP <id> | PRE <name>=<sym>[,<name>=<sym>...] | POST <name>=<sym>
//
// '#' starts a comment; blank lines are ignored. An empty precondition is
// written as `PRE -`. Printing is deterministic: identical problems print
// byte-identically.

namespace textio_detail {

inline std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
        ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "name=sym" with both parts nonempty.
inline std::pair<std::string, std::string> parse_pair(const std::string& tok, int line) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw ParseError(line, "expected <name>=<symbol>, got '" + tok + "'");
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

} // namespace textio_detail

inline PlanningProblem parse_chainplan(std::istream& in) {
    using namespace textio_detail;

    std::vector<Variable> variables;
    std::vector<ValueIndex> init_values;
    bool saw_init = false;
    PartialState goal;
    bool saw_goal = false;
    std::vector<Operator> operators;
    bool saw_header = false;

    auto var_id = [&](const std::string& name, int line) -> VariableId {
        for (std::size_t i = 0; i < variables.size(); ++i)
            if (variables[i].name == name)
                return static_cast<VariableId>(i);
        throw ParseError(line, "unknown variable '" + name + "'");
    };
    auto value_of = [&](VariableId v, const std::string& sym, int line) -> ValueIndex {
        int idx = variables[static_cast<std::size_t>(v)].index_of(sym);
        if (idx < 0)
            throw ParseError(line, "symbol '" + sym + "' not in domain of " +
                                       variables[static_cast<std::size_t>(v)].name);
        return static_cast<ValueIndex>(idx);
    };

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::string text = strip(raw);
        if (text.empty())
            continue;
        if (!saw_header) {
            if (text != "CHAINPLAN 1")
                throw ParseError(line, "expected header 'CHAINPLAN 1'");
            saw_header = true;
            continue;
        }
        auto sp = text.find(' ');
        std::string keyword = text.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : strip(text.substr(sp + 1));
        if (keyword == "VAR") {
            auto toks = split_ws(rest);
            if (toks.size() < 2)
                throw ParseError(line, "VAR needs a name and at least one value");
            Variable v;
            v.name = toks[0];
            v.domain.assign(toks.begin() + 1, toks.end());
            variables.push_back(std::move(v));
        } else if (keyword == "INIT") {
            if (saw_init)
                throw ParseError(line, "duplicate INIT");
            auto toks = split_ws(rest);
            if (toks.size() != variables.size())
                throw ParseError(line, "INIT binds " + std::to_string(toks.size()) +
                                           " values but there are " +
                                           std::to_string(variables.size()) + " variables");
            for (std::size_t i = 0; i < toks.size(); ++i)
                init_values.push_back(value_of(static_cast<VariableId>(i), toks[i], line));
            saw_init = true;
        } else if (keyword == "GOAL") {
            if (saw_goal)
                throw ParseError(line, "duplicate GOAL");
            auto toks = split_ws(rest);
            if (toks.empty())
                throw ParseError(line, "GOAL binds nothing");
            for (const std::string& tok : toks) {
                auto [name, sym] = parse_pair(tok, line);
                VariableId v = var_id(name, line);
                goal.bind(v, value_of(v, sym, line));
            }
            saw_goal = true;
        } else if (keyword == "OP") {
            auto parts = split_on(rest, '|');
            if (parts.size() != 3)
                throw ParseError(line, "OP needs '<id> | PRE ... | POST ...'");
            Operator op;
            op.id = strip(parts[0]);
            if (op.id.empty())
                throw ParseError(line, "operator id is empty");
            std::string pre_part = strip(parts[1]);
            std::string post_part = strip(parts[2]);
            if (pre_part.rfind("PRE", 0) != 0)
                throw ParseError(line, "expected PRE section");
            if (post_part.rfind("POST", 0) != 0)
                throw ParseError(line, "expected POST section");
            pre_part = strip(pre_part.substr(3));
            post_part = strip(post_part.substr(4));
            if (pre_part != "-") {
                for (const std::string& item : split_on(pre_part, ',')) {
                    auto [name, sym] = parse_pair(strip(item), line);
                    VariableId v = var_id(name, line);
                    if (op.pre.binds(v))
                        throw ParseError(line, "operator " + op.id + " binds " + name +
                                                   " twice in PRE");
                    op.pre.bind(v, value_of(v, sym, line));
                }
            }
            auto [pname, psym] = parse_pair(post_part, line);
            VariableId pv = var_id(pname, line);
            op.post = Binding{pv, value_of(pv, psym, line)};
            operators.push_back(std::move(op));
        } else {
            throw ParseError(line, "unknown keyword '" + keyword + "'");
        }
    }
    if (!saw_header)
        throw ParseError(line, "missing 'CHAINPLAN 1' header");
    if (!saw_init)
        throw ParseError(line, "missing INIT");
    if (!saw_goal)
        throw ParseError(line, "missing GOAL");
    try {
        return PlanningProblem(std::move(variables), State(std::move(init_values)),
                               std::move(goal), std::move(operators));
    } catch (const ModelError& e) {
        throw ParseError(line, e.what());
    }
}

inline void print_chainplan(const PlanningProblem& p, std::ostream& out) {
    out << "CHAINPLAN 1\n";
    for (const Variable& v : p.variables()) {
        out << "VAR " << v.name;
        for (const std::string& sym : v.domain)
            out << " " << sym;
        out << "\n";
    }
    out << "INIT";
    for (std::size_t i = 0; i < p.num_variables(); ++i) {
        VariableId v = static_cast<VariableId>(i);
        out << " " << p.symbol(v, p.init()[v]);
    }
    out << "\n";
    out << "GOAL";
    for (const Binding& b : p.goal())
        out << " " << p.variable(b.var).name << "=" << p.symbol(b.var, b.value);
    out << "\n";
    for (const Operator& op : p.operators()) {
        out << "OP " << op.id << " | PRE ";
        if (op.pre.empty()) {
            out << "-";
        } else {
            bool first = true;
            for (const Binding& b : op.pre) {
                if (!first)
                    out << ",";
                first = false;
                out << p.variable(b.var).name << "=" << p.symbol(b.var, b.value);
            }
        }
        out << " | POST " << p.variable(op.post.var).name << "="
            << p.symbol(op.post.var, op.post.value) << "\n";
    }
}

inline std::string to_chainplan_text(const PlanningProblem& p) {
    std::ostringstream out;
    print_chainplan(p, out);
    return out.str();
}

} // namespace chainplan
