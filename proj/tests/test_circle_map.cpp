#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "graphcomp/circle_map.hpp"

using namespace graphcomp;

TEST_CASE("K=0 rotation number equals omega") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> omega(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        CircleMapParams p;
        p.omega = omega(rng);
        p.K = 0.0;
        CHECK(rotation_number(p) == doctest::Approx(p.omega).epsilon(1e-9));
    }
}

TEST_CASE("K=0 is never mode locked") {
    LockReport r = detect_lock(0.5, 0.0);
    CHECK_FALSE(r.locked);
}

TEST_CASE("K=1 locks at the main plateaus") {
    SUBCASE("1/2 at omega=0.5") {
        LockReport r = detect_lock(0.5, 1.0);
        REQUIRE(r.locked);
        CHECK(*r.p == 1);
        CHECK(*r.q == 2);
    }
    SUBCASE("0/1 near omega=0.02") {
        LockReport r = detect_lock(0.02, 1.0);
        REQUIRE(r.locked);
        CHECK(*r.p == 0);
        CHECK(*r.q == 1);
    }
    SUBCASE("1/1 near omega=0.98") {
        LockReport r = detect_lock(0.98, 1.0);
        REQUIRE(r.locked);
        CHECK(*r.p == 1);
        CHECK(*r.q == 1);
    }
    SUBCASE("1/3 tongue (shifted right of omega=1/3 at K=1)") {
        LockReport r = detect_lock(0.35, 1.0);
        REQUIRE(r.locked);
        CHECK(*r.p == 1);
        CHECK(*r.q == 3);
    }
}

TEST_CASE("rotation number at a plateau is theta0-independent") {
    for (double theta0 : {0.0, 0.13, 0.42, 0.77}) {
        CircleMapParams p;
        p.omega = 0.5;
        p.K = 1.0;
        p.theta0 = theta0;
        CHECK(rotation_number(p) == doctest::Approx(0.5).epsilon(1e-4));
    }
}

TEST_CASE("K=1 staircase is monotone and plateaus appear") {
    auto pts = staircase_sweep(1.0, 0.0, 1.0, 101, 20000, 500);
    std::set<std::pair<int, int>> plateaus;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) CHECK(pts[i].rho >= pts[i - 1].rho - 1e-6);
        if (pts[i].locked && pts[i].p) plateaus.insert({*pts[i].p, *pts[i].q});
    }
    CHECK(plateaus.count({0, 1}));
    CHECK(plateaus.count({1, 2}));
    CHECK(plateaus.count({1, 1}));
}

TEST_CASE("staircase CSV has the pinned format") {
    auto pts = staircase_sweep(0.0, 0.0, 0.1, 2, 2000, 100);
    std::string csv = staircase_csv(pts);
    CHECK(csv.rfind("omega,K,rho,locked,p,q\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(staircase_sweep(1.0, 0.0, 1.0, 1));
    CHECK_THROWS(staircase_sweep(1.0, 1.0, 0.0, 10));
    CHECK_THROWS(detect_lock(0.5, 1.0, -1.0));
}
