#include <doctest.h>

#include "lplab/poly.hpp"

using namespace lplab;

TEST_CASE("sturm root isolation") {
    // (t-1)(t-2)(t+3)(2t-1)
    UPoly f = UPoly({-1, 1}) * UPoly({-2, 1}) * UPoly({3, 1}) * UPoly({-1, 2});
    auto roots = isolate_roots(f, -10, 10);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].lo <= -3);
    CHECK(roots[0].hi >= -3);
    for (auto& r : roots) {
        refine_root(squarefree_part(f), r, Rational(1, 1000));
        CHECK(r.hi - r.lo <= Rational(1, 1000));
    }
    CHECK(isolate_roots(f, 1, 2).size() == 2);
}

TEST_CASE("isolation with irrational roots") {
    UPoly f({-2, 0, 1});
    auto roots = isolate_roots(f, -2, 2);
    REQUIRE(roots.size() == 2);
    auto r = roots[1];
    refine_root(f, r, Rational(1, 1 << 20));
    CHECK(r.lo * r.lo < 2);
    CHECK(r.hi * r.hi > 2);
}

TEST_CASE("resultant vanishes on a common root") {
    UPoly f = UPoly({-1, 1}) * UPoly({5, 0, 1});
    UPoly g = UPoly({-1, 1}) * UPoly({7, 1});
    CHECK(resultant(f, g) == 0);
    CHECK(resultant(UPoly({-2, 1}), UPoly({-3, 1})) != 0);
}

TEST_CASE("gcd and squarefree part") {
    UPoly a = UPoly({-1, 1}) * UPoly({-1, 1}) * UPoly({2, 1});
    CHECK(squarefree_part(a) == (UPoly({-1, 1}) * UPoly({2, 1})).monic());
    CHECK(gcd(a, UPoly({-1, 1}) * UPoly({4, 1})) == UPoly({-1, 1}));
}

TEST_CASE("interpolation recovers a polynomial") {
    UPoly f({3, -1, 0, 2});
    std::vector<Rational> xs{0, 1, 2, 5}, ys;
    for (auto& x : xs) ys.push_back(f(x));
    CHECK(interpolate(xs, ys) == f);
}
