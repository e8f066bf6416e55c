#include <cmath>

#include "doctest.h"
#include "fibdyn/errors.hpp"
#include "fibdyn/locus.hpp"
#include "fibdyn/parse.hpp"

using namespace fibdyn;

TEST_CASE("parameter classifier needs a doubly vanishing seed") {
    CHECK_THROWS_AS(LocusClassifier(parse_polynomial("0,1")), HypothesisViolated);
    CHECK_THROWS_AS(LocusClassifier(parse_polynomial("1,0,1")), HypothesisViolated);
    CHECK_THROWS_AS(LocusClassifier(parse_polynomial("0,0")), HypothesisViolated);
    CHECK_NOTHROW(LocusClassifier(parse_polynomial("0,0,1")));
    CHECK_NOTHROW(LocusClassifier(parse_polynomial("0,0,0,2")));
}

TEST_CASE("annulus bounds decide without iterating") {
    LocusClassifier cls(parse_polynomial("0,0,1"));
    CHECK(cls.classify(Complex(0.2, 0.0), 100).kind ==
          LocusVerdict::Kind::InsideByBound);
    CHECK(cls.classify(Complex(0.1, -0.2), 100).kind ==
          LocusVerdict::Kind::InsideByBound);
    CHECK(cls.classify(Complex(-2.5, 0.0), 100).kind ==
          LocusVerdict::Kind::OutsideByBound);
    CHECK(cls.classify(Complex(2.0, 2.0), 100).kind ==
          LocusVerdict::Kind::OutsideByBound);
}

TEST_CASE("annulus parameters split by the orbit of zero") {
    LocusClassifier cls(parse_polynomial("0,0,1"));

    // c = 1: 0, 0, 1, 1, 2, 3, 7, ... clearly unbounded
    LocusVerdict one = cls.classify(Complex(1.0, 0.0), 200);
    CHECK(one.kind == LocusVerdict::Kind::EscapedAt);
    CHECK_FALSE(one.bounded());
    CHECK(one.n < 20);

    // c = -1 falls onto the cycle 0, -1, -1 of the product recurrence
    LocusVerdict minus = cls.classify(Complex(-1.0, 0.0), 200);
    CHECK(minus.kind == LocusVerdict::Kind::BoundedAtBudget);
    CHECK(minus.bounded());

    // c = 0.3 drifts upward past the fixed-point gap and escapes late
    LocusVerdict drift = cls.classify(Complex(0.3, 0.0), 200);
    CHECK(drift.kind == LocusVerdict::Kind::EscapedAt);
    CHECK(drift.n > 5);

    CHECK_THROWS_AS(cls.classify(Complex(0.5, 0.0), 3), PreconditionViolated);
}

TEST_CASE("uniform thresholds cover the whole annulus") {
    LocusClassifier cls(parse_polynomial("0,0,1"));
    CHECK(cls.uniform_m() > 0.0);
    CHECK(cls.uniform_r() >= cls.uniform_m());
    // calibrated at the outer rim, so at least as large as the pointwise radii
    CHECK(cls.uniform_r() >= 3.0);
}

TEST_CASE("parameter-plane raster mirrors the classifier") {
    Region region{Complex(0.0, 0.0), 4.5, 4.5};
    const int n = 32;
    RasterGrid grid = locus_grid(region, n, n, parse_polynomial("0,0,1"), 300);
    LocusClassifier cls(parse_polynomial("0,0,1"));

    REQUIRE(grid.width == n);
    REQUIRE(grid.height == n);
    int escaped = 0, inside = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            Complex c = pixel_point(region, n, n, i, j);
            LocusVerdict v = cls.classify(c, 300);
            const Pixel& px = grid.at(i, j);
            if (v.bounded()) {
                CHECK(px.tag != PixelTag::Escaped);
            } else {
                CHECK(px.tag == PixelTag::Escaped);
                int expected = v.kind == LocusVerdict::Kind::OutsideByBound ? 0 : v.n;
                CHECK(px.iter == expected);
            }
            if (px.tag == PixelTag::Escaped) ++escaped;
            if (px.tag == PixelTag::Inside) ++inside;
        }
    }
    CHECK(escaped > 0);
    CHECK(inside > 0);
}
