#include <doctest.h>

#include "test_support.hpp"

using namespace tiledual;
using ts::iset;
using ts::rat;

TEST_CASE("rational parsing and formatting") {
    CHECK(rat("3/4").str() == "3/4");
    CHECK(rat("-3/4").str() == "-3/4");
    CHECK(rat("6/8") == rat("3/4"));
    CHECK(rat("7").str() == "7");
    CHECK(rat("-0").str() == "0");
    CHECK(rat("123456789123456789/987654321987654321").str() == "13717421/109739369");
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(rat("1/3") + rat("1/6") == rat("1/2"));
    CHECK(rat("1/3") * rat("3/7") == rat("1/7"));
    CHECK(rat("1/3") / rat("1/6") == rat("2"));
    CHECK((-rat("2/4")).str() == "-1/2");
    CHECK_THROWS_AS(rat("1") / Rational(0), std::domain_error);
    CHECK(rat("-7/2").floor_ll() == -4);
    CHECK(rat("7/2").floor_ll() == 3);
    CHECK(rat("-4/2").floor_ll() == -2);
}

TEST_CASE("normalization merges and sorts") {
    CHECK(iset({{"0", "1"}, {"1", "2"}}) == iset({{"0", "2"}}));
    CHECK(iset({{"0", "1"}}) == iset({{"0", "1"}}));
    CHECK(iset({{"1/2", "1"}, {"0", "3/4"}}) == iset({{"0", "1"}}));
    CHECK(iset({{"0", "1"}}).parts().size() == 1);
    CHECK_THROWS_AS(Interval(rat("1"), rat("1")), std::invalid_argument);
    CHECK_THROWS_AS(Interval(rat("2"), rat("1")), std::invalid_argument);
}

TEST_CASE("measure") {
    CHECK(iset({{"0", "1"}}).measure() == rat("1"));
    CHECK(IntervalSet().measure() == rat("0"));
    CHECK(iset({{"0", "1/2"}, {"3/2", "2"}}).measure() == rat("1"));
}

TEST_CASE("translate") {
    CHECK(iset({{"0", "1"}}).translated(rat("2")) == iset({{"2", "3"}}));
    CHECK(iset({{"0", "1"}}).translated(rat("0")) == iset({{"0", "1"}}));
    CHECK(iset({{"0", "1/2"}, {"3/2", "2"}}).translated(rat("-3/2")) == iset({{"-3/2", "-1"}, {"0", "1/2"}}));
}

TEST_CASE("boolean operations") {
    CHECK(intersect(iset({{"0", "1"}}), iset({{"1/2", "2"}})) == iset({{"1/2", "1"}}));
    CHECK(difference(iset({{"0", "1"}}), iset({{"0", "1"}})) == IntervalSet());
    CHECK(unite(iset({{"0", "1/4"}}), iset({{"1/4", "1/2"}})) == iset({{"0", "1/2"}}));
    CHECK(difference(iset({{"0", "2"}}), iset({{"1/2", "1"}})) == iset({{"0", "1/2"}, {"1", "2"}}));
    CHECK(intersect(iset({{"0", "1"}}), iset({{"2", "3"}})) == IntervalSet());
}

TEST_CASE("overlap measure") {
    CHECK(overlap_measure(iset({{"0", "1"}}), iset({{"1", "2"}})) == rat("0"));
    CHECK(overlap_measure(iset({{"0", "1"}}), iset({{"1/2", "3/2"}})) == rat("1/2"));

    // the two-piece set against its own translate by 1, cross-checked on the
    // 1/64 grid
    const IntervalSet s = iset({{"0", "3/4"}, {"1", "5/4"}});
    const IntervalSet shifted = s.translated(rat("1"));
    CHECK(overlap_measure(s, shifted) == rat("1/4"));

    const Rational w0 = rat("-2"), w1 = rat("4");
    const ts::Raster ra = ts::rasterize(s, 64, w0, w1);
    const ts::Raster rb = ts::rasterize(shifted, 64, w0, w1);
    CHECK(ts::raster_op(ra, rb, '&').measure() == rat("1/4"));
}

TEST_CASE("random sets: measure identities and translation round trip") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 200; ++iter) {
        auto random_set = [&] {
            std::vector<Interval> raw;
            const int pieces = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < pieces; ++i) {
                const long long den = 1 + static_cast<long long>(rng() % 12);
                const long long a = static_cast<long long>(rng() % 64) - 32;
                const long long len = 1 + static_cast<long long>(rng() % 16);
                raw.emplace_back(Rational(a, den), Rational(a + len, den));
            }
            return IntervalSet(std::move(raw));
        };
        const IntervalSet a = random_set();
        const IntervalSet b = random_set();

        CHECK(a.is_canonical());
        CHECK(unite(a, b).is_canonical());
        CHECK(intersect(a, b).is_canonical());
        CHECK(difference(a, b).is_canonical());

        // inclusion-exclusion, exact
        CHECK(unite(a, b).measure() + intersect(a, b).measure() == a.measure() + b.measure());
        // difference partitions the union
        CHECK(difference(a, b).measure() + difference(b, a).measure() + intersect(a, b).measure() ==
              unite(a, b).measure());

        const long long den = 1 + static_cast<long long>(rng() % 10);
        const Rational t(static_cast<long long>(rng() % 21) - 10, den);
        CHECK(a.translated(t).measure() == a.measure());
        CHECK(a.translated(t).translated(-t) == a);
    }
}

TEST_CASE("random sets: boolean ops agree with grid bitsets") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        auto random_grid_set = [&](long long n) {
            std::vector<Interval> raw;
            const int pieces = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < pieces; ++i) {
                const long long a = static_cast<long long>(rng() % (6 * n));
                const long long len = 1 + static_cast<long long>(rng() % (2 * n));
                raw.emplace_back(Rational(a, n), Rational(a + len, n));
            }
            return IntervalSet(std::move(raw));
        };
        const long long n = 1 + static_cast<long long>(rng() % 16);
        const IntervalSet a = random_grid_set(n);
        const IntervalSet b = random_grid_set(n);
        const Rational w0(0), w1(9);

        const ts::Raster ra = ts::rasterize(a, n, w0, w1);
        const ts::Raster rb = ts::rasterize(b, n, w0, w1);
        CHECK(ts::raster_equal(ts::raster_op(ra, rb, '&'), intersect(a, b), w0, w1));
        CHECK(ts::raster_equal(ts::raster_op(ra, rb, '|'), unite(a, b), w0, w1));
        CHECK(ts::raster_equal(ts::raster_op(ra, rb, '-'), difference(a, b), w0, w1));
        CHECK(ra.measure() == a.measure());
    }
}
