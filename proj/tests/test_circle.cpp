#include <doctest.h>

#include "helpers.hpp"
#include "toral/circle.hpp"
#include "toral/corpus.hpp"
#include "toral/error.hpp"

using namespace toral;
using namespace toral::testing;

TEST_SUITE_BEGIN("circle");

TEST_CASE("circle distance is the arc metric") {
    CHECK(circle_dist(CirclePoint(Rat(0)), CirclePoint(Rat(0))) == Rat(0));
    CHECK(circle_dist(CirclePoint(Rat(0)), CirclePoint(Rat(1, 2))) == Rat(1, 2));
    CHECK(circle_dist(CirclePoint(Rat(1, 8)), CirclePoint(Rat(7, 8))) == Rat(1, 4));
    CHECK(circle_dist(CirclePoint(Rat(1, 3)), CirclePoint(Rat(2, 3))) == Rat(1, 3));
}

TEST_CASE("torus distance with dyadic weights") {
    TorusPoint x = pt({rq(0)}), y = pt({rq(1, 2)});
    CHECK(torus_dist(x, x) == Rat(0));
    CHECK(torus_dist(x, y) == Rat(1, 4));
    CHECK(torus_dist(pt({rq(0), rq(0)}), pt({rq(0), rq(1, 2)})) == Rat(1, 8));
    CHECK_THROWS_AS(torus_dist(x, pt({rq(0), rq(0)})), Error);
}

TEST_CASE("torus distance with explicit weights") {
    Weights w({Rat(1), Rat(1)});
    CHECK(torus_dist(pt({rq(0), rq(0)}), pt({rq(1, 2), rq(1, 2)}), w) == Rat(1));
    CHECK_THROWS_AS(Weights({Rat(0)}), Error);
    CHECK_THROWS_AS(Weights({Rat(-1, 2)}), Error);
    CHECK(Weights().at(3) == Rat(1, 8));
    CHECK(Weights({Rat(5)}).at(1) == Rat(5));
    CHECK(Weights({Rat(5)}).at(2) == Rat(1, 4));  // past the list: dyadic tail
}

TEST_CASE("group operations act coordinatewise mod 1") {
    CHECK(pt({rq(1, 2)}) + pt({rq(1, 2)}) == pt({rq(0)}));
    CHECK(pt({rq(1, 3)}) + pt({rq(1, 3)}) == pt({rq(2, 3)}));
    CHECK(-pt({rq(1, 3), rq(0)}) == pt({rq(2, 3), rq(0)}));
    CHECK(pt({rq(2, 3)}) - pt({rq(1, 3)}) == pt({rq(1, 3)}));
    CHECK(TorusPoint::zero(3).is_zero());
    CHECK_THROWS_AS(pt({rq(0)}) + pt({rq(0), rq(0)}), Error);
}

TEST_CASE("metric axioms on random triples") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t ambient = 1 + rng.below(4);
        unsigned long den = 1 + rng.below(30);
        TorusPoint x = random_point(ambient, den, rng);
        TorusPoint y = random_point(ambient, den, rng);
        TorusPoint z = random_point(ambient, den, rng);
        Rat dxy = torus_dist(x, y);
        REQUIRE(dxy >= 0);
        CHECK(torus_dist(y, x) == dxy);
        CHECK((dxy == 0) == (x == y));
        CHECK(dxy <= torus_dist(x, z) + torus_dist(z, y));
        CHECK(torus_dist(x + z, y + z) == dxy);  // translation invariance
    }
}

TEST_CASE("points agreeing on a prefix are close") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t ambient = 2 + rng.below(4);
        std::size_t agree = 1 + rng.below(ambient - 1);
        TorusPoint x = random_point(ambient, 12, rng);
        std::vector<CirclePoint> ycoords = x.coords();
        for (std::size_t n = agree; n < ambient; ++n)
            ycoords[n] = CirclePoint(random_rational(12, rng));
        TorusPoint y{std::vector<CirclePoint>(ycoords)};
        CHECK(torus_dist(x, y) < pow2_inverse(static_cast<unsigned>(agree)));
    }
}

TEST_SUITE_END();
