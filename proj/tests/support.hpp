#pragma once

// Test-only helpers: plain enumeration of spans and seeded random instances.

#include <algorithm>
#include <iterator>
#include <random>
#include <stdexcept>
#include <set>
#include <vector>

#include "abelcode/engine.hpp"

namespace abelcode::test {

inline Vector add_mod(const Vector& a, const Vector& b, const Vector& moduli) {
    Vector out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = (a[j] + b[j]) % moduli[j];
    return out;
}

/// Breadth-first closure of the generators under addition.
inline std::set<Vector> enumerate_span(const Vector& moduli, const std::vector<Vector>& gens) {
    std::set<Vector> seen{Vector(moduli.size(), 0)};
    std::vector<Vector> frontier{Vector(moduli.size(), 0)};
    while (!frontier.empty()) {
        std::vector<Vector> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Vector y = add_mod(x, g, moduli);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return seen;
}

inline std::set<Vector> enumerate_group(const Vector& moduli) {
    std::vector<Vector> units;
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        Vector e(moduli.size(), 0);
        e[j] = moduli[j] > 1 ? 1 : 0;
        units.push_back(e);
    }
    return enumerate_span(moduli, units);
}

inline Int group_size(const Vector& moduli) {
    Int s = 1;
    for (Int m : moduli) s *= m;
    return s;
}

/// Random moduli list with product <= max_size.
inline Vector random_moduli(std::mt19937_64& rng, Int max_size, std::size_t max_rank = 4) {
    static const Int choices[] = {1, 2, 2, 3, 4, 4, 5, 6, 8, 9, 12};
    std::uniform_int_distribution<std::size_t> rank_dist(1, max_rank);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(choices) - 1);
    for (;;) {
        Vector m(rank_dist(rng));
        for (auto& x : m) x = choices[pick(rng)];
        if (group_size(m) <= max_size) return m;
    }
}

inline Vector random_element(std::mt19937_64& rng, const Vector& moduli) {
    Vector v(moduli.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::uniform_int_distribution<Int>(0, moduli[j] - 1)(rng);
    return v;
}

inline std::vector<Vector> random_rows(std::mt19937_64& rng, const Vector& moduli, std::size_t max_rows = 3) {
    std::vector<Vector> rows(std::uniform_int_distribution<std::size_t>(0, max_rows)(rng));
    for (auto& r : rows) r = random_element(rng, moduli);
    return rows;
}

}  // namespace abelcode::test
