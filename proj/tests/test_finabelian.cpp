#include <doctest.h>

#include "helpers.hpp"
#include "toral/error.hpp"
#include "toral/finabelian.hpp"
#include "toral/torusgroup.hpp"

using namespace toral;
using namespace toral::testing;

namespace {

FinAbelian fa(std::vector<long> moduli) {
    std::vector<Int> v;
    for (long m : moduli) v.push_back(Int(m));
    return FinAbelian::of(v);
}

}  // namespace

TEST_SUITE_BEGIN("finabelian");

TEST_CASE("construction normalizes to the invariant-factor chain") {
    CHECK(fa({2, 3}).invariant_factors() == std::vector<Int>{Int(6)});
    CHECK(fa({4, 6}).invariant_factors() == std::vector<Int>{Int(2), Int(12)});
    CHECK(fa({1, 1}).is_trivial());
    CHECK(fa({}) == FinAbelian());
    CHECK(fa({2, 2}).invariant_factors() == std::vector<Int>{Int(2), Int(2)});
    CHECK(fa({6, 4}) == fa({4, 6}));  // order of moduli irrelevant
    CHECK_THROWS_AS(fa({0}), Error);
    CHECK_THROWS_AS(fa({-2}), Error);
}

TEST_CASE("quotient_group") {
    FgAbelian q = quotient_group(2, hnf(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(3)}}));
    CHECK(q.free_rank == 0);
    CHECK(q.torsion == fa({6}));

    FgAbelian mixed = quotient_group(2, hnf(IntMatrix{{Int(2), Int(0)}}));
    CHECK(mixed.free_rank == 1);
    CHECK(mixed.torsion == fa({2}));

    FgAbelian free = quotient_group(3, hnf(IntMatrix(0, 3)));
    CHECK(free.free_rank == 3);
    CHECK(free.torsion.is_trivial());

    CHECK_THROWS_AS(quotient_group(2, Lattice::full(3)), Error);
}

TEST_CASE("quotient of a diagonal round trips every chain") {
    for (const FinAbelian& g : abelian_chains(24)) {
        std::size_t m = g.invariant_factors().size();
        if (m == 0) continue;
        IntMatrix diag(m, m);
        for (std::size_t i = 0; i < m; ++i) diag.at(i, i) = g.invariant_factors()[i];
        FgAbelian q = quotient_group(m, hnf(diag));
        CHECK(q.free_rank == 0);
        CHECK(q.torsion == g);
    }
}

TEST_CASE("dual is the identity on finite abelian groups") {
    CHECK(dual(fa({2, 4})) == fa({2, 4}));
    CHECK(dual(FinAbelian()) == FinAbelian());
    for (const FinAbelian& g : abelian_chains(20)) CHECK(order(dual(g)) == order(g));
}

TEST_CASE("embeds examples") {
    CHECK(embeds(fa({2}), fa({4})));
    CHECK_FALSE(embeds(fa({2, 2}), fa({8})));
    CHECK(embeds(fa({4}), fa({2, 8})));
    CHECK_FALSE(embeds(fa({4}), fa({2, 2})));
    CHECK(embeds(FinAbelian(), fa({5})));
    CHECK_FALSE(embeds(fa({5}), FinAbelian()));
}

TEST_CASE("is_quotient examples") {
    CHECK(is_quotient(fa({3}), fa({6})));
    CHECK_FALSE(is_quotient(fa({4}), fa({2, 2})));
    CHECK(is_quotient(FinAbelian(), fa({12})));
}

TEST_CASE("embeds against the brute-force injective search, orders <= 32") {
    std::vector<FinAbelian> groups = abelian_chains(32);
    for (const FinAbelian& a : groups)
        for (const FinAbelian& b : groups) {
            CHECK(embeds(a, b) == oracle_embeds(a, b));
        }
}

TEST_CASE("is_quotient against the brute-force surjective search, orders <= 32") {
    std::vector<FinAbelian> groups = abelian_chains(32);
    for (const FinAbelian& a : groups)
        for (const FinAbelian& b : groups) CHECK(is_quotient(a, b) == oracle_surjects(b, a));
}

TEST_CASE("embeds is a partial order up to isomorphism") {
    std::vector<FinAbelian> groups = abelian_chains(16);
    for (const FinAbelian& a : groups) CHECK(embeds(a, a));
    Rng rng(512);
    for (int trial = 0; trial < 300; ++trial) {
        const FinAbelian& a = groups[rng.below(groups.size())];
        const FinAbelian& b = groups[rng.below(groups.size())];
        const FinAbelian& c = groups[rng.below(groups.size())];
        if (embeds(a, b) && embeds(b, c)) CHECK(embeds(a, c));
        if (embeds(a, b) && embeds(b, a)) CHECK(a == b);
    }
}

TEST_CASE("order and enumeration") {
    CHECK(order(fa({2, 4})) == 8);
    CHECK(order(FinAbelian()) == 1);
    std::vector<std::vector<Int>> elems = enumerate_elements(fa({2, 3}));
    REQUIRE(elems.size() == 6);
    CHECK(elems.front() == std::vector<Int>{Int(0)});  // normalized to chain (6)
    CHECK(enumerate_elements(FinAbelian()).size() == 1);
    CHECK_THROWS_AS(enumerate_elements(fa({1000, 2000}), 1000), Error);
}

TEST_CASE("primary decomposition") {
    std::map<Int, std::vector<unsigned>> p = primary_decomposition(fa({2, 12}));
    REQUIRE(p.size() == 2);
    CHECK(p[Int(2)] == std::vector<unsigned>{1, 2});
    CHECK(p[Int(3)] == std::vector<unsigned>{1});
    CHECK(primary_decomposition(FinAbelian()).empty());
}

TEST_CASE("realize_in_torus produces an isomorphic subgroup") {
    TorusSubgroup r = realize_in_torus(fa({2, 3}));
    CHECK(r.ambient() == 1);
    CHECK(order(r) == Int(6));

    TorusSubgroup klein = realize_in_torus(fa({2, 2}));
    CHECK(klein.ambient() == 2);
    CHECK(order(klein) == Int(4));
    CHECK(quotient_group(2, klein.annihilator()).torsion == fa({2, 2}));

    TorusSubgroup trivial = realize_in_torus(FinAbelian());
    CHECK(order(trivial) == Int(1));
}

TEST_SUITE_END();
