#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "berge/modmath.hpp"

using namespace berge;
using namespace berge::modmath;

TEST_CASE("ext_gcd basics") {
    Bezout bz = ext_gcd(3, 16);
    CHECK(bz.g == 1);
    CHECK(bz.u == -5);
    CHECK(bz.v == 1);

    bz = ext_gcd(0, 5);
    CHECK(bz.g == 5);
    CHECK(bz.u == 0);
    CHECK(bz.v == 1);

    // Any Bezout pair is fine; check the identity, not the coefficients.
    bz = ext_gcd(12, 18);
    CHECK(bz.g == 6);
    CHECK(bz.u * 12 + bz.v * 18 == 6);

    CHECK_THROWS_AS(ext_gcd(0, 0), InvalidParameterError);
}

TEST_CASE("ext_gcd identity on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> dist(-1000000, 1000000);
    for (int it = 0; it < 2000; ++it) {
        i64 x = dist(rng), y = dist(rng);
        if (x == 0 && y == 0) continue;
        Bezout bz = ext_gcd(x, y);
        CHECK(bz.g == gcd_i64(x, y));
        CHECK(bz.g > 0);
        CHECK(bz.u * x + bz.v * y == bz.g);
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 7).value() == 5);
    CHECK(mod_inverse(11, 16).value() == 3);
    CHECK_THROWS_AS(mod_inverse(2, 4), NotInvertibleError);
    CHECK_THROWS_AS(mod_inverse(0, 5), NotInvertibleError);

    for (i64 p = 2; p <= 60; ++p)
        for (i64 a = 1; a < p; ++a) {
            if (gcd_i64(a, p) != 1) continue;
            CHECK(mod_floor(mod_inverse(a, p).value() * a, p) == 1);
        }
}

TEST_CASE("sl_class values") {
    CHECK(sl_class(Residue(3, 7)).value() == 1);
    CHECK(sl_class(Residue(2, 7)).value() == 1);
    CHECK(sl_class(Residue(11, 16)).value() == 7);
    CHECK_THROWS_AS(sl_class(Residue(2, 4)), NotInvertibleError);
}

TEST_CASE("sl_class agrees for a and -a^-1") {
    for (i64 p = 2; p <= 200; ++p)
        for (i64 a = 1; a < p; ++a) {
            if (gcd_i64(a, p) != 1) continue;
            Residue ra(a, p);
            CHECK(sl_class(ra) == sl_class(-ra.inverse()));
        }
}

namespace {

// Independent brute-force oracle for the primitive representations.
std::vector<EisensteinRep> reps_brute(i64 p) {
    std::vector<EisensteinRep> out;
    for (i64 r = 1; r * r <= p; ++r)
        for (i64 s = 1; r * r + r * s + s * s <= p; ++s)
            if (r * r + r * s + s * s == p && gcd_i64(r, s) == 1) out.push_back({r, s});
    return out;
}

} // namespace

TEST_CASE("primitive_reps_eisenstein") {
    auto reps7 = primitive_reps_eisenstein(7);
    REQUIRE(reps7.size() == 2);
    CHECK(reps7[0] == EisensteinRep{1, 2});
    CHECK(reps7[1] == EisensteinRep{2, 1});

    auto reps3 = primitive_reps_eisenstein(3);
    REQUIRE(reps3.size() == 1);
    CHECK(reps3[0] == EisensteinRep{1, 1});

    CHECK(primitive_reps_eisenstein(5).empty());

    for (i64 p = 2; p <= 3000; ++p) {
        auto fast = primitive_reps_eisenstein(p);
        auto slow = reps_brute(p);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("roots_x2_x_1") {
    auto r7 = roots_x2_x_1(7);
    REQUIRE(r7.size() == 2);
    CHECK(r7[0].value() == 2);
    CHECK(r7[1].value() == 4);

    auto r3 = roots_x2_x_1(3);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].value() == 1);

    CHECK(roots_x2_x_1(5).empty());
}

TEST_CASE("reps and roots correspond") {
    // Root count equals representation count and (r, s) -> r^2 s^-2 maps
    // the representations onto the full root set.
    for (i64 p = 2; p <= 2000; ++p) {
        auto reps = primitive_reps_eisenstein(p);
        auto roots = roots_x2_x_1(p);
        CHECK(reps.size() == roots.size());
        std::vector<i64> image;
        for (const auto& rep : reps) {
            Residue a = Residue(rep.r * rep.r, p) * Residue(rep.s * rep.s, p).inverse();
            image.push_back(a.value());
        }
        std::sort(image.begin(), image.end());
        for (const Residue& root : roots) {
            bool hit = std::binary_search(image.begin(), image.end(), root.value());
            CHECK(hit);
        }
    }
}

TEST_CASE("fib_pair_normalize examples") {
    FibPairResult r = fib_pair_normalize(2, 5);
    CHECK(r.c == 3);
    CHECK(r.d == 2);

    r = fib_pair_normalize(3, 2); // n = -11 < 0 with a > b: unchanged
    CHECK(r.c == 3);
    CHECK(r.d == 2);
    CHECK(r.trace.pairs.empty());

    r = fib_pair_normalize(1, 3);
    CHECK(r.c == 2);
    CHECK(r.d == 1);

    CHECK_THROWS_AS(fib_pair_normalize(1, 1), DegenerateModulusError);
    CHECK_THROWS_AS(fib_pair_normalize(1, 2), DegenerateModulusError);
    CHECK_THROWS_AS(fib_pair_normalize(2, 4), InvalidParameterError);
}

TEST_CASE("fib_pair_normalize postconditions") {
    for (i64 a = 1; a <= 100; ++a)
        for (i64 b = a + 1; b <= 100; ++b) {
            if (gcd_i64(a, b) != 1) continue;
            i64 n = b * b - a * b - a * a;
            if (std::abs(n) <= 1) continue;
            FibPairResult r = fib_pair_normalize(a, b);
            i64 absn = std::abs(n);
            CHECK(r.c > r.d);
            CHECK(r.d > 0);
            CHECK(gcd_i64(r.c, r.d) == 1);
            CHECK(fib_form(r.c, r.d) == absn);
            // c d^-1 == a b^-1 mod |n|
            if (absn >= 2) {
                Residue lhs = Residue(r.c, absn) * Residue(r.d, absn).inverse();
                Residue rhs = Residue(a, absn) * Residue(b, absn).inverse();
                CHECK(lhs == rhs);
            }
            // Trace alternation and the Fibonacci length bound.
            const auto& pairs = r.trace.pairs;
            for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
                CHECK(fib_form(pairs[i + 1].first, pairs[i + 1].second) ==
                      -fib_form(pairs[i].first, pairs[i].second));
            double phi = (1.0 + std::sqrt(5.0)) / 2.0;
            auto bound = static_cast<std::size_t>(
                2.0 * std::ceil(std::log(static_cast<double>(a + b)) / std::log(phi)) + 2.0);
            CHECK(pairs.size() <= bound);
        }
}

TEST_CASE("residue arithmetic guards") {
    CHECK_THROWS_AS(Residue(1, 1), InvalidParameterError);
    CHECK_THROWS_AS(Residue(1, 7) + Residue(1, 5), ModulusMismatchError);
    CHECK(Residue(-1, 7).value() == 6);
    CHECK((Residue(3, 7) * Residue(5, 7)).value() == 1);
}

TEST_CASE("overflow aborts instead of wrapping") {
    i64 big = std::numeric_limits<i64>::max();
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked_neg(std::numeric_limits<i64>::min()), OverflowError);
}
