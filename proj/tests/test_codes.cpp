#include "doctest.h"

#include "abelcode/codes.hpp"
#include "abelcode/oracle.hpp"
#include "support.hpp"

using namespace abelcode;
using namespace abelcode::test;

namespace {

SequenceSpace binary(std::size_t n) { return SequenceSpace::uniform(FiniteAbelianGroup({2}), n); }

SequenceSpace random_space(std::mt19937_64& rng, Int max_size) {
    for (;;) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        std::vector<FiniteAbelianGroup> symbols;
        Int size = 1;
        for (std::size_t i = 0; i < n; ++i) {
            symbols.emplace_back(random_moduli(rng, 12, 2));
            size *= symbols.back().cardinality();
        }
        if (size <= max_size) return SequenceSpace(symbols);
    }
}

}  // namespace

TEST_CASE("sequence space layout") {
    const SequenceSpace s({FiniteAbelianGroup({2}), FiniteAbelianGroup({2, 3}), FiniteAbelianGroup({4})});
    CHECK(s.horizon() == 3);
    CHECK(s.flat().moduli() == Vector{2, 2, 3, 4});
    CHECK(s.offset(1) == 1);
    CHECK(s.offset(2) == 3);
    CHECK(s.coordinates(1, 3) == std::vector<std::size_t>{1, 2, 3});
    CHECK(s.coordinates_outside(1, 2) == std::vector<std::size_t>{0, 3});
    CHECK(s.at(Vector{1, 1, 2, 3}, 1) == Vector{1, 2});
    CHECK(s.support(Vector{0, 1, 0, 0}) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(s.support(Vector{0, 0, 0, 0}) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(s.pad(Vector{3}, 2) == Vector{0, 0, 0, 3});
    CHECK(s.window(1, 3).flat().moduli() == Vector{2, 3, 4});
    CHECK_THROWS_AS(s.window(2, 1), std::out_of_range);
}

TEST_CASE("code_from_generators examples") {
    CHECK(code_from_generators(binary(2), {{1, 1}}).cardinality() == 2);
    const SequenceSpace z4_2 = SequenceSpace::uniform(FiniteAbelianGroup({4}), 2);
    CHECK(code_from_generators(z4_2, {{2, 1}}).cardinality() == 4);
    CHECK(code_from_generators(binary(3), {}).is_zero());
    CHECK_THROWS_AS(code_from_generators(binary(3), {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(code_from_generators(binary(2), {{2, 1}}), std::invalid_argument);
}

TEST_CASE("intersect and join examples") {
    const BlockCode a = code_from_generators(binary(2), {{1, 0}});
    const BlockCode b = code_from_generators(binary(2), {{1, 1}});
    CHECK(intersect(a, b).is_zero());
    CHECK(join(a, b) == ambient_code(binary(2)));
    const SequenceSpace z4_2 = SequenceSpace::uniform(FiniteAbelianGroup({4}), 2);
    const BlockCode c = code_from_generators(z4_2, {{2, 0}});
    const BlockCode d = code_from_generators(z4_2, {{1, 1}});
    // <(2,0)> = {00, 20} does not contain (2,2); the enumerated meet is trivial
    CHECK(intersect(c, d).is_zero());
    CHECK(intersect(code_from_generators(z4_2, {{2, 0}, {0, 2}}), d) == code_from_generators(z4_2, {{2, 2}}));
    CHECK_THROWS_AS(intersect(a, code_from_generators(binary(3), {})), std::invalid_argument);
}

TEST_CASE("window examples") {
    const BlockCode even = code_from_generators(binary(3), {{1, 1, 0}, {0, 1, 1}});
    const BlockCode rep = code_from_generators(binary(3), {{1, 1, 1}});
    CHECK(window_projection(rep, 0, 1) == ambient_code(binary(1)));
    CHECK(window_projection(even, 0, 3) == even);
    CHECK(window_projection(zero_code(binary(3)), 1, 3).is_zero());
    CHECK(window_internal(even, 0, 2) == code_from_generators(binary(3), {{1, 1, 0}}));
    CHECK(window_internal(even, 0, 3) == even);
    CHECK(window_internal(rep, 0, 2).is_zero());
    CHECK_THROWS_AS(window_internal(even, 2, 4), std::out_of_range);
    CHECK_THROWS_AS(window_projection(even, 2, 1), std::out_of_range);
}

TEST_CASE("invariant_factors_of_code examples") {
    CHECK(invariant_factors_of_code(code_from_generators(binary(3), {{1, 1, 0}, {0, 1, 1}})) == Vector{2, 2});
    const SequenceSpace z4_2 = SequenceSpace::uniform(FiniteAbelianGroup({4}), 2);
    CHECK(invariant_factors_of_code(code_from_generators(z4_2, {{2, 1}})) == Vector{4});
    CHECK(invariant_factors_of_code(zero_code(z4_2)).empty());
}

TEST_CASE("lattice operations agree with enumeration") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const SequenceSpace space = random_space(rng, 4096);
        const auto& m = space.flat().moduli();
        const BlockCode a = code_from_generators(space, random_rows(rng, m));
        const BlockCode b = code_from_generators(space, random_rows(rng, m));
        const auto ea = oracle::enumerate(a), eb = oracle::enumerate(b);
        CHECK(oracle::same_elements(a, ea));
        std::set<Vector> both;
        std::set_intersection(ea.elements.begin(), ea.elements.end(), eb.elements.begin(), eb.elements.end(),
                              std::inserter(both, both.begin()));
        const BlockCode meet = intersect(a, b);
        CHECK(meet.cardinality() == static_cast<Int>(both.size()));
        for (const auto& x : both) CHECK(meet.contains(x));
        CHECK(meet.cardinality() * join(a, b).cardinality() == a.cardinality() * b.cardinality());
        CHECK(invariant_factors_of_code(a) == oracle::invariant_factors(ea));

        // modular law: a <= c implies a + (b meet c) = (a + b) meet c
        const BlockCode c = join(a, code_from_generators(space, random_rows(rng, m)));
        CHECK(join(a, intersect(b, c)) == intersect(join(a, b), c));
    }
}

TEST_CASE("windows and pullbacks agree with enumeration") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const SequenceSpace space = random_space(rng, 4096);
        const BlockCode code = code_from_generators(space, random_rows(rng, space.flat().moduli()));
        const auto e = oracle::enumerate(code);
        const std::size_t n = space.horizon();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b <= n; ++b) {
                std::set<Vector> projected, internal;
                for (const auto& x : e.elements) {
                    Vector head;
                    for (std::size_t t = a; t < b; ++t) {
                        const Vector s = space.at(x, t);
                        head.insert(head.end(), s.begin(), s.end());
                    }
                    auto [lo, hi] = space.support(x);
                    if (hi == 0 || (a <= lo && hi <= b)) internal.insert(x);
                    projected.insert(std::move(head));
                }
                const BlockCode proj = window_projection(code, a, b);
                const BlockCode in = window_internal(code, a, b);
                CHECK(proj.cardinality() == static_cast<Int>(projected.size()));
                CHECK(in.cardinality() == static_cast<Int>(internal.size()));
                for (const auto& x : internal) CHECK(in.contains(x));
                // internal elements restrict into the projection, padded back they lie in the pullback
                const BlockCode back = pullback(space, proj, a);
                CHECK(in.is_subcode_of(back));
                CHECK(code.is_subcode_of(back));
                CHECK(window_projection(back, a, b) == proj);
            }
    }
}
