#include <catch_amalgamated.hpp>

#include <algorithm>

#include "ivbounds/polyhedra.hpp"

using namespace ivbounds;
using namespace ivbounds::polyhedra;

namespace {

Vector vec(std::initializer_list<int> values) {
    Vector out;
    for (int v : values) out.emplace_back(v);
    return out;
}

std::vector<Vector> sorted(std::vector<Vector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("rank and null space", "[polyhedra]") {
    Matrix m{vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})};
    CHECK(rank(m) == 2);
    auto ns = null_space(m, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& r : m) {
        Rational dot = 0;
        for (std::size_t j = 0; j < 3; ++j) dot += r[j] * ns[0][j];
        CHECK(dot == 0);
    }
    CHECK(null_space({}, 4).size() == 4);
}

TEST_CASE("primitive scaling", "[polyhedra]") {
    CHECK(primitive({Rational(1, 2), Rational(3, 4)}) == vec({2, 3}));
    CHECK(primitive(vec({4, -6, 0})) == vec({2, -3, 0}));
    CHECK_THROWS(primitive(vec({0, 0})));
}

TEST_CASE("extreme rays of simple cones", "[polyhedra]") {
    // nonnegative orthant
    auto orthant = extreme_rays({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(sorted(orthant) == sorted({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));

    // cone over a square: x3 >= |x1|, x3 >= |x2|
    Matrix square{vec({1, 0, 1}), vec({-1, 0, 1}), vec({0, 1, 1}), vec({0, -1, 1})};
    auto rays = extreme_rays(square);
    CHECK(sorted(rays) == sorted({vec({1, 1, 1}), vec({1, -1, 1}), vec({-1, 1, 1}), vec({-1, -1, 1})}));

    // redundant constraints do not add rays
    square.push_back(vec({0, 0, 1}));
    square.push_back(vec({1, 1, 2}));
    CHECK(sorted(extreme_rays(square)) == sorted(rays));

    // not pointed
    CHECK_THROWS_AS(extreme_rays({vec({1, 0})}), std::invalid_argument);
}

TEST_CASE("convex hull of a square and a cube", "[polyhedra]") {
    auto square = convex_hull({vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1}), {Rational(1, 2), Rational(1, 2)}});
    CHECK(square.equalities.empty());
    CHECK(square.inequalities.size() == 4);
    CHECK(square.contains({Rational(1, 3), Rational(2, 3)}));
    CHECK(square.contains(vec({1, 1})));
    CHECK_FALSE(square.contains({Rational(3, 2), Rational(1, 2)}));

    Matrix cube;
    for (int m = 0; m < 8; ++m) cube.push_back(vec({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
    auto h = convex_hull(cube);
    CHECK(h.inequalities.size() == 6);
    for (const auto& p : cube) CHECK(h.contains(p));
    CHECK_FALSE(h.contains(vec({2, 0, 0})));

    // a triangle in the plane x + y + z = 1
    auto tri = convex_hull({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(tri.equalities.size() == 1);
    CHECK(tri.inequalities.size() == 3);
    CHECK(tri.contains({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK_FALSE(tri.contains({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK_FALSE(tri.contains(vec({2, 0, -1})));
}
