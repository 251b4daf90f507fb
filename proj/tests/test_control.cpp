#include "doctest.h"

#include "abelcode/control.hpp"
#include "abelcode/oracle.hpp"
#include "support.hpp"

using namespace abelcode;
using namespace abelcode::test;

namespace {

SequenceSpace binary(std::size_t n) { return SequenceSpace::uniform(FiniteAbelianGroup({2}), n); }
BlockCode even_weight() { return code_from_generators(binary(3), {{1, 1, 0}, {0, 1, 1}}); }
BlockCode repetition() { return code_from_generators(binary(3), {{1, 1, 1}}); }

BlockCode random_code(std::mt19937_64& rng, Int max_ambient) {
    for (;;) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        std::vector<FiniteAbelianGroup> symbols;
        Int size = 1;
        for (std::size_t i = 0; i < n; ++i) {
            symbols.emplace_back(random_moduli(rng, 8, 2));
            size *= symbols.back().cardinality();
        }
        if (size > max_ambient) continue;
        const SequenceSpace space(symbols);
        return code_from_generators(space, random_rows(rng, space.flat().moduli()));
    }
}

}  // namespace

TEST_CASE("control_profile examples") {
    auto p = control_profile(even_weight());
    CHECK(p.lengths == std::vector<std::size_t>{0, 1, 1});
    CHECK(p.index == 1);
    CHECK(p.is_l_controllable(1));
    CHECK_FALSE(p.is_l_controllable(0));
    p = control_profile(repetition());
    CHECK(p.lengths == std::vector<std::size_t>{0, 2, 1});
    CHECK(p.index == 2);
    p = control_profile(ambient_code(binary(3)));
    CHECK(p.lengths == std::vector<std::size_t>{0, 0, 0});
    CHECK(p.index == 0);
}

TEST_CASE("reachable_set examples") {
    CHECK(reachable_set(repetition(), 1, 1).is_zero());
    CHECK(reachable_set(repetition(), 1, 2) == repetition());
    CHECK(reachable_set(even_weight(), 1, 0) == code_from_generators(binary(3), {{0, 1, 1}}));
    CHECK_THROWS_AS(reachable_set(repetition(), 3, 0), std::out_of_range);
}

TEST_CASE("chunk_decompose examples") {
    const auto lengths = control_profile(even_weight()).lengths;
    CHECK(chunk_decompose(even_weight(), Vector{0, 0, 0}, lengths).empty());
    auto chunks = chunk_decompose(even_weight(), Vector{1, 1, 0}, lengths);
    REQUIRE(chunks.size() == 1);
    CHECK(chunks[0].element == Vector{1, 1, 0});
    chunks = chunk_decompose(even_weight(), Vector{1, 0, 1}, lengths);
    REQUIRE(chunks.size() == 2);
    CHECK(chunks[0].element == Vector{1, 1, 0});
    CHECK(chunks[1].element == Vector{0, 1, 1});
    CHECK(chunks[0].begin == 0);
    CHECK(chunks[0].end == 2);
    CHECK(chunks[1].begin == 1);
    CHECK(chunks[1].end == 3);

    CHECK_THROWS_AS(chunk_decompose(even_weight(), Vector{1, 0, 0}, lengths), std::invalid_argument);
    const std::vector<std::size_t> too_short{0, 0, 0};
    try {
        chunk_decompose(repetition(), Vector{1, 1, 1}, too_short);
        FAIL("expected ProfileInsufficient");
    } catch (const ProfileInsufficient& e) {
        CHECK(e.position() == 0);
    }
}

TEST_CASE("order_profile examples") {
    const BlockCode full = ambient_code(binary(2));
    CHECK(order_profile(full).bounds == std::vector<std::size_t>{0, 1, 2});
    const BlockCode diag = code_from_generators(binary(2), {{1, 1}});
    CHECK(order_profile(diag).bounds[1] == 2);
    CHECK(order_profile(zero_code(binary(3))).bounds == std::vector<std::size_t>{0, 1, 2, 3});
    // Z/4 symbols: (1,2) forces full window at l = 1 while (2,0) alone is a codeword
    const SequenceSpace z4 = SequenceSpace::uniform(FiniteAbelianGroup({4}), 2);
    const BlockCode c = code_from_generators(z4, {{1, 2}});
    CHECK(order_profile(c).bounds == std::vector<std::size_t>{0, 2, 2});
    CHECK_THROWS_AS(order_profile(ambient_code(binary(6)), 16), std::length_error);
}

TEST_CASE("control operations agree with the oracle and satisfy the invariants") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        const BlockCode code = random_code(rng, 512);
        const auto e = oracle::enumerate(code);
        const std::size_t n = code.horizon();
        const ControlProfile profile = control_profile(code);
        CHECK(profile.lengths == oracle::control_lengths(e));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; k + l <= n; ++l) {
                const BlockCode r = reachable_set(code, k, l);
                CHECK(oracle::same_elements(r, oracle::reachable_set(e, k, l)));
                CHECK(r.is_subcode_of(reachable_set(code, k, l + 1)));
            }

        const OrderProfile orders = order_profile(code);
        CHECK(orders.bounds == oracle::order_profile(e));
        const auto split = split_profile(code);
        for (std::size_t l = 0; l <= n; ++l) {
            CHECK(orders.bounds[l] >= split[l]);
            if (l < n) CHECK(split[l] == l + profile.lengths[l]);
        }

        for (int w_trial = 0; w_trial < 4; ++w_trial) {
            const Vector w = e.elements[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng)];
            const auto chunks = chunk_decompose(code, w, profile.lengths);
            Vector sum = code.space().flat().zero();
            for (const auto& c : chunks) {
                CHECK(code.contains(c.element));
                auto [lo, hi] = code.space().support(c.element);
                CHECK((hi == 0 || (c.begin <= lo && hi <= c.end)));
                sum = code.space().flat().add(sum, c.element);
            }
            CHECK(sum == w);
        }
    }
}
