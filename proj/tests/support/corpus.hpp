#pragma once

// Shared helpers for enumerating small formulas in tests.

#include <cstdint>
#include <random>
#include <vector>

#include <chainplan/cnf.hpp>

namespace testsupport {

// Every nonempty clause over x_1..x_n, without repeated literals. Bit
// 2(j-1) of the mask selects x_j, bit 2j-1 selects its negation; clauses
// come out in mask order, so the enumeration is stable.
inline std::vector<chainplan::Clause> clause_universe(int n) {
    std::vector<chainplan::Clause> out;
    for (unsigned mask = 1; mask < (1u << (2 * n)); ++mask) {
        chainplan::Clause c;
        for (int j = 1; j <= n; ++j) {
            if (mask & (1u << (2 * (j - 1))))
                c.push_back(chainplan::Literal{j, true});
            if (mask & (1u << (2 * j - 1)))
                c.push_back(chainplan::Literal{j, false});
        }
        out.push_back(c);
    }
    return out;
}

// All formulas with one clause and all ordered pairs of clauses.
inline std::vector<chainplan::CnfFormula> small_formulas(int n) {
    std::vector<chainplan::CnfFormula> out;
    auto universe = clause_universe(n);
    for (const chainplan::Clause& c : universe)
        out.push_back(chainplan::CnfFormula{n, {c}});
    for (const chainplan::Clause& a : universe)
        for (const chainplan::Clause& b : universe)
            out.push_back(chainplan::CnfFormula{n, {a, b}});
    return out;
}

inline chainplan::CnfFormula random_formula(std::mt19937& rng, int max_n, int max_k) {
    std::uniform_int_distribution<int> pick_n(1, max_n);
    int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_k(1, max_k);
    int k = pick_k(rng);
    std::uniform_int_distribution<unsigned> pick_mask(1, (1u << (2 * n)) - 1);
    chainplan::CnfFormula f;
    f.num_vars = n;
    for (int i = 0; i < k; ++i) {
        unsigned mask = pick_mask(rng);
        chainplan::Clause c;
        for (int j = 1; j <= n; ++j) {
            if (mask & (1u << (2 * (j - 1))))
                c.push_back(chainplan::Literal{j, true});
            if (mask & (1u << (2 * j - 1)))
                c.push_back(chainplan::Literal{j, false});
        }
        f.clauses.push_back(c);
    }
    return f;
}

inline chainplan::Assignment random_assignment(std::mt19937& rng, int n) {
    chainplan::Assignment sigma;
    for (int j = 0; j < n; ++j)
        sigma.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
    return sigma;
}

} // namespace testsupport
