#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "chainplan/cnf.hpp"
#include "chainplan/model.hpp"
#include "chainplan/symbols.hpp"

namespace chainplan {

// Compiles a CNF formula into a chain planning problem whose goal is
// reachable iff the formula is satisfiable. Three gadget families are
// supported, named by the largest variable domain they need.
enum class Variant { k5, k7, k11 };

inline const char* variant_name(Variant v) {
    switch (v) {
    case Variant::k5: return "5";
    case Variant::k7: return "7";
    case Variant::k11: return "11";
    }
    return "?";
}

inline std::optional<Variant> variant_from_string(std::string_view s) {
    if (s == "5" || s == "k5")
        return Variant::k5;
    if (s == "7" || s == "k7")
        return Variant::k7;
    if (s == "11" || s == "k11")
        return Variant::k11;
    return std::nullopt;
}

// Every generated operator id names the gadget rule it instantiates:
//
//   <variable>/<ref>[/m=<bit>][/pre=<symbol>]
//
// <ref> is either a numbered middle-variable rule like "(14)" or a tag for
// the bit-pump and tail chains (set, reset, emit). /m= appears when the rule
// is parameterized by a message bit; /pre= appears when the rule's
// predecessor precondition is set-valued and was expanded into one concrete
// operator per value.
struct OperatorRef {
    std::string variable;
    std::string ref;
    std::optional<bool> m;
    std::optional<std::string> pre;

    std::string to_id() const {
        std::string id = variable + "/" + ref;
        if (m)
            id += std::string("/m=") + (*m ? "1" : "0");
        if (pre)
            id += "/pre=" + *pre;
        return id;
    }

    bool operator==(const OperatorRef&) const = default;
};

inline OperatorRef parse_operator_ref(const std::string& id) {
    OperatorRef r;
    auto first = id.find('/');
    if (first == std::string::npos || first == 0)
        throw ModelError("operator id '" + id + "' has no rule reference");
    r.variable = id.substr(0, first);
    std::string rest = id.substr(first + 1);
    auto next = rest.find('/');
    r.ref = rest.substr(0, next);
    if (r.ref.empty())
        throw ModelError("operator id '" + id + "' has an empty rule reference");
    while (next != std::string::npos) {
        rest = rest.substr(next + 1);
        next = rest.find('/');
        std::string field = rest.substr(0, next);
        if (field == "m=0")
            r.m = false;
        else if (field == "m=1")
            r.m = true;
        else if (field.rfind("pre=", 0) == 0 && field.size() > 4)
            r.pre = field.substr(4);
        else
            throw ModelError("operator id '" + id + "' has malformed field '" + field + "'");
    }
    return r;
}

// Positions of the generated variables within the chain:
// s_1..s_{2n-1}, v_s, the clause-row variables, v_e, e_1..e_{2n-1}.
struct ReductionLayout {
    Variant variant = Variant::k11;
    int n = 0;
    int k = 0;
    int width = 0; // clause-row variables per (clause, bit position)
    VariableId vs = -1;
    VariableId ve = -1;

    VariableId s(int i) const { return i - 1; }   // i in [1..2n-1]
    VariableId e(int i) const { return ve + i; }  // i in [1..2n-1]
    VariableId first_middle() const { return vs + 1; }
    int num_middles() const { return k * n * width; }

    // i in [1..k], j in [1..n], l in [1..width]
    VariableId middle(int i, int j, int l = 1) const {
        return first_middle() + ((i - 1) * n + (j - 1)) * width + (l - 1);
    }

    bool is_middle(VariableId v) const { return v > vs && v < ve; }
};

namespace reduction_detail {

struct Builder {
    std::vector<Variable> variables;
    std::vector<ValueIndex> init_values;
    PartialState goal;
    std::vector<Operator> operators;

    VariableId add_variable(std::string name, std::vector<std::string> domain,
                            const std::string& init_symbol) {
        Variable v{std::move(name), std::move(domain)};
        int init_idx = v.index_of(init_symbol);
        variables.push_back(std::move(v));
        init_values.push_back(static_cast<ValueIndex>(init_idx));
        return static_cast<VariableId>(variables.size() - 1);
    }

    void add_goal(VariableId v, const std::string& symbol) {
        goal.bind(v, value(v, symbol));
    }

    ValueIndex value(VariableId v, const std::string& symbol) const {
        return static_cast<ValueIndex>(variables[static_cast<std::size_t>(v)].index_of(symbol));
    }

    // One gadget rule. pred_symbols lists the admissible predecessor values;
    // more than one expands into one operator per value and marks ids with
    // /pre=. pred may be -1 for the head of the chain (no predecessor
    // precondition at all).
    void row(VariableId var, VariableId pred, const std::string& ref,
             const std::vector<std::string>& pred_symbols, const std::string& self_symbol,
             const std::string& post_symbol, std::optional<bool> m) {
        const std::string& name = variables[static_cast<std::size_t>(var)].name;
        bool expand = pred_symbols.size() > 1;
        if (pred < 0) {
            emit(OperatorRef{name, ref, m, std::nullopt}, var, pred, "", self_symbol,
                 post_symbol);
            return;
        }
        for (const std::string& pred_symbol : pred_symbols) {
            OperatorRef r{name, ref, m,
                          expand ? std::optional<std::string>(pred_symbol) : std::nullopt};
            emit(r, var, pred, pred_symbol, self_symbol, post_symbol);
        }
    }

    void emit(const OperatorRef& r, VariableId var, VariableId pred,
              const std::string& pred_symbol, const std::string& self_symbol,
              const std::string& post_symbol) {
        Operator op;
        op.id = r.to_id();
        if (pred >= 0)
            op.pre.bind(pred, value(pred, pred_symbol));
        op.pre.bind(var, value(var, self_symbol));
        op.post = Binding{var, value(var, post_symbol)};
        operators.push_back(std::move(op));
    }
};

inline const std::vector<std::string>& bit_domain() {
    static const std::vector<std::string> d{"0", "1"};
    return d;
}

inline const std::vector<std::string>& pump_domain() {
    static const std::vector<std::string> d{"0", "1", "x"};
    return d;
}

// The chain prefix s_1..s_{2n-1}, v_s that pumps out message bits.
inline void build_prefix(Builder& b, int n) {
    VariableId prev = -1;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        VariableId s = b.add_variable("s" + std::to_string(i), bit_domain(), "0");
        if (i == 1) {
            b.row(s, -1, "set", {}, "0", "1", std::nullopt);
        } else {
            b.row(s, prev, "set", {"0"}, "0", "1", std::nullopt);
            b.row(s, prev, "reset", {"1"}, "1", "0", std::nullopt);
        }
        prev = s;
    }
    VariableId vs = b.add_variable("vs", pump_domain(), "x");
    for (bool m : {false, true}) {
        std::string bit(1, bit_char(m));
        b.row(vs, prev, "emit", {"0"}, "x", bit, m);
        b.row(vs, prev, "reset", {"1"}, bit, "x", m);
    }
}

// The chain suffix v_e, e_1..e_{2n-1} that counts delivered bits.
// busy/idle are the values the last clause-row variable can hold right after
// a bit arrives resp. after it is withdrawn.
inline void build_suffix(Builder& b, int n, VariableId last_middle,
                         const std::vector<std::string>& busy,
                         const std::vector<std::string>& idle) {
    VariableId ve = b.add_variable("ve", bit_domain(), "0");
    b.row(ve, last_middle, "set", busy, "0", "1", std::nullopt);
    b.row(ve, last_middle, "reset", idle, "1", "0", std::nullopt);
    b.add_goal(ve, "0");
    VariableId prev = ve;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        VariableId e = b.add_variable("e" + std::to_string(i), bit_domain(), "0");
        b.row(e, prev, "set", {"1"}, "0", "1", std::nullopt);
        b.row(e, prev, "reset", {"0"}, "1", "0", std::nullopt);
        b.add_goal(e, i % 2 == 1 ? "1" : "0");
        prev = e;
    }
}

inline std::string sym(char letter, bool m) { return make_symbol(letter, bit_char(m)); }

inline void build_middle_k11(Builder& b, const CnfFormula& f, VariableId vs) {
    static const std::vector<std::string> domain{"g_x", "g_0", "g_1", "a_x", "a_0", "a_1",
                                                 "b_0", "b_1", "c_x", "c_0", "c_1"};
    const int n = f.num_vars;
    const int k = f.num_clauses();
    VariableId prev = vs;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= n; ++j) {
            VariableId v = b.add_variable("v" + std::to_string(i) + "_" + std::to_string(j),
                                          domain, "a_x");
            VariableId pred = prev;
            if (j == 1) {
                // The first position reacts directly to the arriving bit. For
                // clause rows after the first, the "bit" is read off the
                // previous row's last variable.
                auto bit_syms = [&](bool m) -> std::vector<std::string> {
                    if (i == 1)
                        return {std::string(1, bit_char(m))};
                    return {sym('a', m), sym('b', m), sym('g', m)};
                };
                std::vector<std::string> x_syms =
                    i == 1 ? std::vector<std::string>{"x"}
                           : std::vector<std::string>{"a_x", "c_x", "g_x"};
                bool pos = literal_satisfies(f, i, 1, true);
                b.row(v, pred, pos ? "(1)" : "(2)", bit_syms(true), "a_x",
                      pos ? "g_1" : "b_1", std::nullopt);
                bool neg = literal_satisfies(f, i, 1, false);
                b.row(v, pred, neg ? "(3)" : "(4)", bit_syms(false), "a_x",
                      neg ? "g_0" : "b_0", std::nullopt);
                for (bool m : {false, true}) {
                    b.row(v, pred, "(5)", bit_syms(m), "c_x", sym('c', m), m);
                    b.row(v, pred, "(6)", bit_syms(m), "g_x", sym('g', m), m);
                    b.row(v, pred, "(7)", x_syms, sym('b', m), "c_x", m);
                    b.row(v, pred, "(8)", x_syms, sym('c', m), "c_x", m);
                    b.row(v, pred, "(9)", x_syms, sym('g', m), "g_x", m);
                }
            } else {
                bool pos = literal_satisfies(f, i, j, true);
                b.row(v, pred, pos ? "(10)" : "(11)", {"c_1"}, "a_x", pos ? "g_1" : "b_1",
                      std::nullopt);
                bool neg = literal_satisfies(f, i, j, false);
                b.row(v, pred, neg ? "(12)" : "(13)", {"c_0"}, "a_x", neg ? "g_0" : "b_0",
                      std::nullopt);
                for (bool m : {false, true}) {
                    b.row(v, pred, "(14)", {sym('a', m), sym('b', m)}, "a_x", sym('a', m), m);
                    b.row(v, pred, "(15)", {sym('g', m)}, "a_x", sym('g', m), m);
                    b.row(v, pred, "(16)", {sym('c', m)}, "c_x", sym('c', m), m);
                    b.row(v, pred, "(17)", {sym('c', m), sym('g', m)}, "g_x", sym('g', m), m);
                    b.row(v, pred, "(18)", {"a_x", "c_x"}, sym('a', m), "a_x", m);
                    b.row(v, pred, "(19)", {"c_x"}, sym('b', m), "c_x", m);
                    b.row(v, pred, "(20)", {"c_x"}, sym('c', m), "c_x", m);
                    b.row(v, pred, "(21)", {"c_x", "g_x"}, sym('g', m), "g_x", m);
                }
            }
            if (j == n)
                b.add_goal(v, "g_x");
            prev = v;
        }
    }
}

inline void build_middle_k5(Builder& b, const CnfFormula& f, VariableId vs) {
    static const std::vector<std::string> dom1{"a_x", "a_0", "a_1", "b_x"};
    static const std::vector<std::string> dom2{"a_x", "a_0", "a_1", "b_0", "b_1"};
    static const std::vector<std::string> dom2_last{"a_x", "b_0", "b_1"};
    const int n = f.num_vars;
    const int k = f.num_clauses();
    VariableId prev = vs;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::string base = "v" + std::to_string(i) + "_" + std::to_string(j);
            VariableId v1 = b.add_variable(base + "_1", dom1, "a_x");
            VariableId pred = prev;
            if (i == 1 && j == 1) {
                for (bool m : {false, true}) {
                    std::string bit(1, bit_char(m));
                    b.row(v1, pred, "(1)", {bit}, "a_x", sym('a', m), m);
                    b.row(v1, pred, "(2)", {"x"}, sym('a', m), "a_x", m);
                    b.row(v1, pred, "(3)", {"x"}, sym('a', m), "b_x", m);
                }
            } else if (j == 1) {
                for (bool m : {false, true}) {
                    b.row(v1, pred, "(4)", {sym('b', m)}, "a_x", sym('a', m), m);
                    b.row(v1, pred, "(5)", {"a_x"}, sym('a', m), "a_x", m);
                    b.row(v1, pred, "(6)", {"a_x"}, sym('a', m), "b_x", m);
                }
            } else {
                for (bool m : {false, true}) {
                    b.row(v1, pred, "(7)", {sym('a', m)}, "a_x", sym('a', m), m);
                    b.row(v1, pred, "(8)", {"a_x"}, sym('a', m), "a_x", m);
                    b.row(v1, pred, "(9)", {sym('b', m)}, "b_x", sym('a', m), m);
                    b.row(v1, pred, "(10)", {"a_x"}, sym('a', m), "b_x", m);
                }
            }
            if (j == 1)
                b.add_goal(v1, "a_x");

            // The second variable of the pair checks bit n-j+1: bits are
            // checked in reverse order because the checking index travels
            // backwards along the chain.
            VariableId v2 = b.add_variable(base + "_2", j < n ? dom2 : dom2_last, "a_x");
            if (j < n) {
                for (bool m : {false, true}) {
                    b.row(v2, v1, "(11)", {sym('a', m)}, "a_x", sym('a', m), m);
                    b.row(v2, v1, "(12)", {"a_x"}, sym('a', m), "a_x", m);
                    b.row(v2, v1, "(13)", {sym('a', m)}, "a_x", sym('b', m), m);
                }
                bool pos = literal_satisfies(f, i, n - j + 1, true);
                b.row(v2, v1, pos ? "(14)" : "(15)", {pos ? "a_x" : "b_x"}, "b_1", "a_x",
                      std::nullopt);
                bool neg = literal_satisfies(f, i, n - j + 1, false);
                b.row(v2, v1, neg ? "(16)" : "(17)", {neg ? "a_x" : "b_x"}, "b_0", "a_x",
                      std::nullopt);
            } else {
                for (bool m : {false, true})
                    b.row(v2, v1, "(18)", {sym('a', m)}, "a_x", sym('b', m), m);
                bool pos = literal_satisfies(f, i, 1, true);
                b.row(v2, v1, pos ? "(19)" : "(20)", {pos ? "a_x" : "b_x"}, "b_1", "a_x",
                      std::nullopt);
                bool neg = literal_satisfies(f, i, 1, false);
                b.row(v2, v1, neg ? "(21)" : "(22)", {neg ? "a_x" : "b_x"}, "b_0", "a_x",
                      std::nullopt);
            }
            prev = v2;
        }
    }
}

inline void build_middle_k7(Builder& b, const CnfFormula& f, VariableId vs) {
    // The goal-marker letter g lives in the middle variable of each triple;
    // the outer two only pass g_x through.
    static const std::vector<std::string> dom13{"a_x", "a_0", "a_1", "b_x",
                                                "b_0", "b_1", "g_x"};
    static const std::vector<std::string> dom2{"a_x", "a_0", "a_1", "b_x",
                                               "g_x", "g_0", "g_1"};
    const int n = f.num_vars;
    const int k = f.num_clauses();
    VariableId prev = vs;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::string base = "v" + std::to_string(i) + "_" + std::to_string(j);
            VariableId v1 = b.add_variable(base + "_1", dom13, "a_x");
            VariableId pred = prev;
            if (j == 1) {
                auto bit_syms = [&](bool m) -> std::vector<std::string> {
                    if (i == 1)
                        return {std::string(1, bit_char(m))};
                    return {sym('a', m), sym('b', m)};
                };
                std::vector<std::string> x_syms =
                    i == 1 ? std::vector<std::string>{"x"}
                           : std::vector<std::string>{"a_x", "b_x"};
                bool pos = literal_satisfies(f, i, 1, true);
                b.row(v1, pred, pos ? "(1)" : "(2)", bit_syms(true), "a_x",
                      pos ? "g_x" : "b_1", std::nullopt);
                bool neg = literal_satisfies(f, i, 1, false);
                b.row(v1, pred, neg ? "(3)" : "(4)", bit_syms(false), "a_x",
                      neg ? "g_x" : "b_0", std::nullopt);
                for (bool m : {false, true}) {
                    b.row(v1, pred, "(5)", bit_syms(m), "g_x", sym('b', m), m);
                    b.row(v1, pred, "(6)", bit_syms(m), "b_x", sym('b', m), m);
                    b.row(v1, pred, "(7)", x_syms, sym('b', m), "b_x", m);
                }
            } else {
                bool pos = literal_satisfies(f, i, j, true);
                b.row(v1, pred, pos ? "(8)" : "(9)", {"b_1"}, "a_x", pos ? "g_x" : "b_1",
                      std::nullopt);
                bool neg = literal_satisfies(f, i, j, false);
                b.row(v1, pred, neg ? "(10)" : "(11)", {"b_0"}, "a_x", neg ? "g_x" : "b_0",
                      std::nullopt);
                b.row(v1, pred, "(12)", {"g_x"}, "a_x", "g_x", std::nullopt);
                for (bool m : {false, true}) {
                    b.row(v1, pred, "(13)", {sym('a', m)}, "a_x", sym('a', m), m);
                    b.row(v1, pred, "(14)", {sym('b', m)}, "g_x", sym('b', m), m);
                    b.row(v1, pred, "(15)", {sym('b', m)}, "b_x", sym('b', m), m);
                    b.row(v1, pred, "(16)", {"a_x", "b_x"}, sym('a', m), "a_x", m);
                    b.row(v1, pred, "(17)", {"b_x"}, sym('b', m), "b_x", m);
                }
            }

            VariableId v2 = b.add_variable(base + "_2", dom2, "a_x");
            for (bool m : {false, true}) {
                b.row(v2, v1, "(18)", {sym('a', m), sym('b', m)}, "a_x", sym('a', m), m);
                b.row(v2, v1, "(20)", {sym('b', m)}, "g_x", sym('g', m), m);
                b.row(v2, v1, "(21)", {sym('b', m)}, "b_x", sym('a', m), m);
                b.row(v2, v1, "(22)", {"a_x"}, sym('a', m), "a_x", m);
                b.row(v2, v1, "(23)", {"b_x"}, sym('a', m), "b_x", m);
                b.row(v2, v1, "(24)", {"b_x"}, sym('g', m), "g_x", m);
            }
            b.row(v2, v1, "(19)", {"g_x"}, "a_x", "g_x", std::nullopt);
            if (j == n)
                b.add_goal(v2, "g_x");

            VariableId v3 = b.add_variable(base + "_3", dom13, "a_x");
            for (bool m : {false, true}) {
                b.row(v3, v2, "(25)", {sym('a', m)}, "a_x", sym('a', m), m);
                b.row(v3, v2, "(27)", {sym('g', m)}, "g_x", sym('b', m), m);
                b.row(v3, v2, "(28)", {sym('a', m), sym('g', m)}, "b_x", sym('b', m), m);
                b.row(v3, v2, "(29)", {"a_x"}, sym('a', m), "a_x", m);
                b.row(v3, v2, "(30)", {"b_x"}, sym('a', m), "b_x", m);
                b.row(v3, v2, "(31)", {"b_x", "g_x"}, sym('b', m), "b_x", m);
            }
            b.row(v3, v2, "(26)", {"g_x"}, "a_x", "g_x", std::nullopt);
            prev = v3;
        }
    }
}

} // namespace reduction_detail

inline PlanningProblem reduce(const CnfFormula& f, Variant variant) {
    if (f.num_vars < 1 || f.num_clauses() < 1)
        throw ModelError("reduction needs at least one variable and one clause");
    using namespace reduction_detail;
    Builder b;
    build_prefix(b, f.num_vars);
    VariableId vs = static_cast<VariableId>(b.variables.size() - 1);
    switch (variant) {
    case Variant::k11:
        build_middle_k11(b, f, vs);
        build_suffix(b, f.num_vars, static_cast<VariableId>(b.variables.size() - 1),
                     {"a_0", "a_1", "b_0", "b_1", "g_0", "g_1"}, {"a_x", "c_x", "g_x"});
        break;
    case Variant::k5:
        build_middle_k5(b, f, vs);
        build_suffix(b, f.num_vars, static_cast<VariableId>(b.variables.size() - 1),
                     {"b_0", "b_1"}, {"a_x"});
        break;
    case Variant::k7:
        build_middle_k7(b, f, vs);
        build_suffix(b, f.num_vars, static_cast<VariableId>(b.variables.size() - 1),
                     {"a_0", "a_1", "b_0", "b_1"}, {"a_x", "b_x"});
        break;
    }
    return PlanningProblem(std::move(b.variables), State(std::move(b.init_values)),
                           std::move(b.goal), std::move(b.operators));
}

// Number of concrete operators reduce() emits, after expanding bit
// parameters and set-valued predecessor preconditions.
inline std::size_t operator_count(const CnfFormula& f, Variant variant) {
    return reduce(f, variant).operators().size();
}

namespace reduction_detail {

// Parses names of the form v<i>_<j> or v<i>_<j>_<l>; returns false otherwise.
inline bool parse_middle_name(const std::string& name, int& i, int& j, int& l) {
    if (name.size() < 4 || name[0] != 'v' || !isdigit(static_cast<unsigned char>(name[1])))
        return false;
    int fields[3] = {0, 0, 0};
    int field = 0;
    for (std::size_t pos = 1; pos < name.size(); ++pos) {
        char c = name[pos];
        if (c == '_') {
            if (++field > 2)
                return false;
        } else if (isdigit(static_cast<unsigned char>(c))) {
            fields[field] = fields[field] * 10 + (c - '0');
        } else {
            return false;
        }
    }
    if (field < 1)
        return false;
    i = fields[0];
    j = fields[1];
    l = field == 2 ? fields[2] : 0;
    return i >= 1 && j >= 1 && (field == 1 || l >= 1);
}

} // namespace reduction_detail

// Recovers the layout of a generated problem from its variable names; throws
// ModelError when the problem does not have the generated shape.
inline ReductionLayout reduction_layout(const PlanningProblem& p) {
    using reduction_detail::parse_middle_name;
    ReductionLayout lay;
    std::size_t pos = 0;
    const auto& vars = p.variables();
    while (pos < vars.size() && vars[pos].name == "s" + std::to_string(pos + 1))
        ++pos;
    std::size_t s_count = pos;
    if (s_count == 0 || s_count % 2 == 0)
        throw ModelError("not a generated problem: expected an odd run of s variables");
    lay.n = static_cast<int>((s_count + 1) / 2);
    if (pos >= vars.size() || vars[pos].name != "vs")
        throw ModelError("not a generated problem: expected vs after the s chain");
    lay.vs = static_cast<VariableId>(pos);
    ++pos;
    std::size_t first_middle = pos;
    while (pos < vars.size() && vars[pos].name != "ve")
        ++pos;
    if (pos >= vars.size())
        throw ModelError("not a generated problem: missing ve");
    lay.ve = static_cast<VariableId>(pos);
    std::size_t middle_count = pos - first_middle;
    if (middle_count == 0)
        throw ModelError("not a generated problem: no clause-row variables");
    {
        int i = 0, j = 0, l = 0;
        if (!parse_middle_name(vars[first_middle].name, i, j, l))
            throw ModelError("not a generated problem: unrecognized variable " +
                             vars[first_middle].name);
        lay.width = l == 0 ? 1 : 0; // resolved below for multi-level rows
    }
    if (lay.width == 0) {
        // count levels of position (1,1)
        int levels = 0;
        for (std::size_t q = first_middle; q < first_middle + middle_count; ++q) {
            int i = 0, j = 0, l = 0;
            if (!parse_middle_name(vars[q].name, i, j, l) || i != 1 || j != 1)
                break;
            ++levels;
        }
        lay.width = levels;
    }
    if (lay.width < 1 || lay.width > 3 ||
        middle_count % (static_cast<std::size_t>(lay.n) * lay.width) != 0)
        throw ModelError("not a generated problem: clause-row variables do not tile");
    lay.k = static_cast<int>(middle_count / (static_cast<std::size_t>(lay.n) * lay.width));
    switch (lay.width) {
    case 1: lay.variant = Variant::k11; break;
    case 2: lay.variant = Variant::k5; break;
    case 3: lay.variant = Variant::k7; break;
    }
    // verify every name sits where the layout says it should
    for (int i = 1; i <= lay.k; ++i)
        for (int j = 1; j <= lay.n; ++j)
            for (int l = 1; l <= lay.width; ++l) {
                std::string expect = "v" + std::to_string(i) + "_" + std::to_string(j);
                if (lay.width > 1)
                    expect += "_" + std::to_string(l);
                if (vars[static_cast<std::size_t>(lay.middle(i, j, l))].name != expect)
                    throw ModelError("not a generated problem: expected variable " + expect);
            }
    for (int i = 1; i <= 2 * lay.n - 1; ++i) {
        std::size_t at = static_cast<std::size_t>(lay.e(i));
        if (at >= vars.size() || vars[at].name != "e" + std::to_string(i))
            throw ModelError("not a generated problem: expected variable e" +
                             std::to_string(i));
    }
    if (static_cast<std::size_t>(lay.ve) + s_count + 1 != vars.size())
        throw ModelError("not a generated problem: trailing variables after the e chain");
    return lay;
}

} // namespace chainplan
