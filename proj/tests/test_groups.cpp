#include "doctest.h"

#include "abelcode/groups.hpp"
#include "support.hpp"

using namespace abelcode;
using namespace abelcode::test;

TEST_CASE("element_order examples") {
    CHECK(element_order(FiniteAbelianGroup({4}), Vector{0}) == 1);
    CHECK(element_order(FiniteAbelianGroup({4}), Vector{2}) == 2);
    CHECK(element_order(FiniteAbelianGroup({2, 3}), Vector{1, 1}) == 6);
    CHECK_THROWS_AS(element_order(FiniteAbelianGroup({4}), Vector{4}), std::invalid_argument);
}

TEST_CASE("element_order matches repeated addition and divides the exponent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Vector m = random_moduli(rng, 4096);
        const FiniteAbelianGroup g(m);
        const Vector x = random_element(rng, m);
        Int steps = 1;
        for (Vector y = x; y != g.zero(); y = g.add(y, x)) ++steps;
        CHECK(element_order(g, x) == steps);
        CHECK(g.exponent() % steps == 0);
    }
}

TEST_CASE("group basics") {
    const FiniteAbelianGroup g({2, 4});
    CHECK(g.cardinality() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.to_string() == "Z/2+Z/4");
    CHECK(g.add(Vector{1, 3}, Vector{1, 2}) == Vector{0, 1});
    CHECK(g.negate(Vector{1, 1}) == Vector{1, 3});
    CHECK((g + FiniteAbelianGroup({3})).moduli() == Vector{2, 4, 3});
    CHECK_THROWS(FiniteAbelianGroup({0}));
}

TEST_CASE("primary_decomposition examples") {
    auto z6 = primary_decomposition(FiniteAbelianGroup({6}));
    REQUIRE(z6.size() == 2);
    CHECK(z6.at(2).component.moduli() == Vector{2});
    CHECK(z6.at(3).component.moduli() == Vector{3});
    CHECK(z6.at(2).project(FiniteAbelianGroup({6}), Vector{1}) == Vector{1});
    CHECK(z6.at(3).project(FiniteAbelianGroup({6}), Vector{1}) == Vector{1});

    auto mixed = primary_decomposition(FiniteAbelianGroup({12, 2}));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.at(2).component.moduli() == Vector{4, 2});
    CHECK(mixed.at(3).component.moduli() == Vector{3});
    CHECK(mixed.at(2).component.cardinality() * mixed.at(3).component.cardinality() == 24);

    auto z5 = primary_decomposition(FiniteAbelianGroup({5}));
    REQUIRE(z5.size() == 1);
    CHECK(z5.at(5).component.moduli() == Vector{5});
}

TEST_CASE("primary_decomposition round trip on enumerated groups") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        const Vector m = random_moduli(rng, 4096);
        const FiniteAbelianGroup g(m);
        const auto parts = primary_decomposition(g);
        Int product = 1;
        for (const auto& [p, c] : parts) product *= c.component.cardinality();
        CHECK(product == g.cardinality());
        for (const auto& x : enumerate_group(m)) {
            Vector sum = g.zero();
            for (const auto& [p, c] : parts) {
                const Vector y = c.project(g, x);
                CHECK(c.component.contains(y));
                sum = g.add(sum, c.embed(g, y));
            }
            CHECK(sum == x);
        }
    }
}

TEST_CASE("height examples") {
    CHECK(height(FiniteAbelianGroup({4}), Vector{0}, 2).is_infinite());
    CHECK(height(FiniteAbelianGroup({4}), Vector{2}, 2) == Height::finite(1));
    CHECK(height(FiniteAbelianGroup({2, 4}), Vector{0, 2}, 2) == Height::finite(1));
    CHECK(height(FiniteAbelianGroup({4}), Vector{1}, 2) == Height::finite(0));
    CHECK_THROWS_AS(height(FiniteAbelianGroup({4}), Vector{1}, 4), std::invalid_argument);
    // Elements without a p-part are divisible by every power of p.
    CHECK(height(FiniteAbelianGroup({6}), Vector{2}, 2).is_infinite());
    CHECK(height(FiniteAbelianGroup({6}), Vector{3}, 2) == Height::finite(0));
}

TEST_CASE("height agrees with enumeration and is monotone") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Vector m = random_moduli(rng, 512, 3);
        const FiniteAbelianGroup g(m);
        const auto elements = enumerate_group(m);
        for (Int p : {2, 3}) {
            // p^h G as sets, for h = 0..until stable
            std::vector<std::set<Vector>> levels{elements};
            for (;;) {
                std::set<Vector> next;
                for (const auto& x : levels.back()) next.insert(g.scale(p, x));
                if (next == levels.back()) break;
                levels.push_back(std::move(next));
            }
            for (const auto& x : elements) {
                const Height h = height(g, x, p);
                if (levels.back().count(x)) {
                    CHECK(h.is_infinite());
                } else {
                    Int expected = 0;
                    while (levels[expected + 1].count(x)) ++expected;
                    CHECK(h == Height::finite(expected));
                }
                const Vector px = g.scale(p, x);
                if (x != g.zero() && px != g.zero() && !h.is_infinite()) {
                    const Height hp = height(g, px, p);
                    CHECK((hp.is_infinite() || hp.value() >= h.value() + 1));
                }
            }
        }
    }
}

TEST_CASE("socle examples") {
    auto s = socle(FiniteAbelianGroup({2, 2}), 2);
    CHECK(s.dimension == 2);
    CHECK(s.subgroup == Subgroup::whole(FiniteAbelianGroup({2, 2})));
    s = socle(FiniteAbelianGroup({4}), 2);
    CHECK(s.dimension == 1);
    CHECK(s.subgroup == Subgroup(FiniteAbelianGroup({4}), {{2}}));
    s = socle(FiniteAbelianGroup({3}), 2);
    CHECK(s.dimension == 0);
    CHECK(s.subgroup.is_zero());
    CHECK_THROWS_AS(socle(FiniteAbelianGroup({4}), 6), std::invalid_argument);
}

TEST_CASE("socle dimension counts the invariant factors divisible by p") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Vector m = random_moduli(rng, 4096);
        const FiniteAbelianGroup g(m);
        const Vector inv = Subgroup::whole(g).invariant_factors();
        std::size_t largest = 0;
        for (const auto& [p, c] : primary_decomposition(g)) {
            const auto s = socle(g, p);
            std::size_t divisible = 0;
            for (Int d : inv) divisible += d % p == 0;
            CHECK(s.dimension == divisible);
            CHECK(socle(c.component, p).dimension == divisible);
            largest = std::max(largest, s.dimension);
        }
        CHECK(largest == inv.size());
    }
}

TEST_CASE("subgroup operations agree with enumeration") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 150; ++trial) {
        const Vector m = random_moduli(rng, 1024);
        const FiniteAbelianGroup g(m);
        const auto ga = random_rows(rng, m);
        const auto gb = random_rows(rng, m);
        const Subgroup a(g, ga), b(g, gb);
        const auto ea = enumerate_span(m, ga), eb = enumerate_span(m, gb);
        CHECK(a.cardinality() == static_cast<Int>(ea.size()));

        std::vector<Vector> both = ga;
        both.insert(both.end(), gb.begin(), gb.end());
        CHECK(a.join(b).cardinality() == static_cast<Int>(enumerate_span(m, both).size()));
        CHECK(a.is_subgroup_of(b) == std::includes(eb.begin(), eb.end(), ea.begin(), ea.end()));

        Int exponent = 1;
        for (const auto& x : ea) exponent = lcm(exponent, element_order(g, x));
        CHECK(a.exponent() == exponent);

        const Int k = std::uniform_int_distribution<Int>(1, 6)(rng);
        std::set<Vector> multiples, torsion;
        for (const auto& x : ea) {
            multiples.insert(g.scale(k, x));
            const Vector kx = g.scale(k, x);
            if (kx == g.zero()) torsion.insert(x);
        }
        CHECK(a.multiple(k).cardinality() == static_cast<Int>(multiples.size()));
        CHECK(a.torsion(k).cardinality() == static_cast<Int>(torsion.size()));
        for (const auto& x : torsion) CHECK(a.torsion(k).contains(x));

        std::set<Vector> listed;
        a.for_each_element([&](const Vector& x) { listed.insert(x); });
        CHECK(listed == ea);

        if (m.size() >= 2) {
            const std::vector<std::size_t> coords{0};
            std::set<Vector> vanishing, projected;
            for (const auto& x : ea) {
                if (x[0] == 0) vanishing.insert(x);
                projected.insert(Vector{x[0]});
            }
            CHECK(a.vanishing_on(coords).cardinality() == static_cast<Int>(vanishing.size()));
            CHECK(a.project(coords).cardinality() == static_cast<Int>(projected.size()));
        }
    }
}
