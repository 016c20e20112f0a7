#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chainplan/errors.hpp"

namespace chainplan {

// CNF formulas over variables x_1..x_n with clauses kept in file order.
// Clause and variable indices are 1-based throughout this interface, matching
// the message bits m_1..m_n they line up with.

struct Literal {
    int var = 0;          // 1-based
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
    int num_vars = 0;            // n >= 1
    std::vector<Clause> clauses; // k >= 1; clauses may be empty

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// Assignment sigma: bit j (0-based j, variable x_{j+1}) is sigma(x_{j+1}).
using Assignment = std::vector<bool>;

// True iff clause i contains the literal over x_j that value m makes true:
// x_j itself for m=1, its negation for m=0. i and j are 1-based.
inline bool literal_satisfies(const CnfFormula& f, int clause_index, int var_index, bool m) {
    const Clause& clause = f.clauses[static_cast<std::size_t>(clause_index - 1)];
    for (const Literal& lit : clause)
        if (lit.var == var_index && lit.positive == m)
            return true;
    return false;
}

inline bool evaluate(const CnfFormula& f, const Assignment& sigma) {
    for (const Clause& clause : f.clauses) {
        bool satisfied = false;
        for (const Literal& lit : clause) {
            if (sigma[static_cast<std::size_t>(lit.var - 1)] == lit.positive) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            return false;
    }
    return true;
}

// DIMACS cnf reader. Accepts 'c' comment lines and a 'p cnf <n> <k>' header
// followed by whitespace-separated literals; 0 ends a clause. Requires
// n >= 1, k >= 1, exactly k clauses, and literal indices within [1..n].
// Duplicate literals within a clause are dropped.
inline CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    int declared_clauses = -1;
    bool saw_header = false;
    std::string raw;
    int line = 0;
    Clause current;
    bool in_clause = false;
    int clauses_done = 0;

    auto push_literal = [&](long lit_value, int at_line) {
        if (lit_value == 0) {
            f.clauses.push_back(current);
            current.clear();
            in_clause = false;
            ++clauses_done;
            return;
        }
        long v = lit_value < 0 ? -lit_value : lit_value;
        if (v > f.num_vars)
            throw ParseError(at_line, "literal " + std::to_string(lit_value) +
                                          " exceeds declared variable count");
        if (clauses_done >= declared_clauses)
            throw ParseError(at_line, "more clauses than the header declares");
        Literal lit{static_cast<int>(v), lit_value > 0};
        if (std::find(current.begin(), current.end(), lit) == current.end())
            current.push_back(lit);
        in_clause = true;
    };

    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        if (raw.empty() || raw[0] == 'c')
            continue;
        if (raw[0] == 'p') {
            if (saw_header)
                throw ParseError(line, "duplicate header");
            std::istringstream hs(raw);
            std::string p, fmt;
            long n = 0, k = 0;
            if (!(hs >> p >> fmt >> n >> k) || p != "p" || fmt != "cnf")
                throw ParseError(line, "malformed header, expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (hs >> extra)
                throw ParseError(line, "trailing tokens after header");
            if (n < 1 || k < 1)
                throw ParseError(line, "header must declare at least one variable and one clause");
            f.num_vars = static_cast<int>(n);
            declared_clauses = static_cast<int>(k);
            saw_header = true;
            continue;
        }
        if (!saw_header)
            throw ParseError(line, "clause data before header");
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            long value = 0;
            try {
                value = std::stol(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(line, "not a literal: '" + tok + "'");
            }
            if (pos != tok.size())
                throw ParseError(line, "not a literal: '" + tok + "'");
            push_literal(value, line);
        }
    }
    if (!saw_header)
        throw ParseError(line, "missing header");
    if (in_clause)
        throw ParseError(line, "last clause is missing its terminating 0");
    if (clauses_done != declared_clauses)
        throw ParseError(line, "header declares " + std::to_string(declared_clauses) +
                                   " clauses but the file has " + std::to_string(clauses_done));
    return f;
}

// Canonical printer: header plus one clause per line. parse(print(f)) == f.
inline void print_dimacs(const CnfFormula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const Clause& clause : f.clauses) {
        for (const Literal& lit : clause)
            out << (lit.positive ? lit.var : -lit.var) << " ";
        out << "0\n";
    }
}

inline std::string to_dimacs_text(const CnfFormula& f) {
    std::ostringstream out;
    print_dimacs(f, out);
    return out.str();
}

} // namespace chainplan
