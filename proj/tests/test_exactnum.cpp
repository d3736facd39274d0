#include "apery/exactnum.hpp"

#include <doctest.h>

#include <random>

using namespace apery;

namespace {

Rat q(long p, long d = 1) {
    Rat r(p, d);
    r.canonicalize();
    return r;
}

Enclosure iv(const Rat& lo, const Rat& hi) { return Enclosure(lo, hi); }

struct Gen {
    std::mt19937_64 rng{20240611};

    Rat rat() {
        std::uniform_int_distribution<long> num(-60, 60);
        std::uniform_int_distribution<long> den(1, 17);
        return q(num(rng), den(rng));
    }

    // an interval around x, possibly degenerate
    Enclosure around(const Rat& x) {
        std::uniform_int_distribution<long> pad(0, 9);
        return iv(x - q(pad(rng), 7), x + q(pad(rng), 5));
    }
};

}  // namespace

TEST_CASE("Rat is canonical and serializes as p/q") {
    const Rat r = parse_rat("6/-4");
    CHECK(r.get_den() > 0);
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(parse_rat("10/5")) == "2");
    CHECK(parse_rat("+7") == 7);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK(q(2, 4) == q(1, 2));
}

TEST_CASE("enclosure serialization") {
    CHECK(to_string(iv(q(-1, 3), q(2))) == "[-1/3, 2]");
    CHECK_THROWS_AS(iv(q(1), q(0)), std::invalid_argument);
}

TEST_CASE("enc_add examples") {
    CHECK(enc_add(iv(q(0), q(0)), iv(q(1), q(2))) == iv(q(1), q(2)));
    CHECK(enc_add(Enclosure(q(1, 2)), Enclosure(q(1, 3))) == Enclosure(q(5, 6)));
    CHECK(enc_add(iv(q(-1), q(1)), iv(q(-1), q(1))) == iv(q(-2), q(2)));
}

TEST_CASE("enc_mul examples") {
    CHECK(enc_mul(iv(q(2), q(3)), Enclosure(q(0))) == Enclosure(q(0)));
    // endpoint products 3, -1, -6, 2
    CHECK(enc_mul(iv(q(-1), q(2)), iv(q(-3), q(1))) == iv(q(-6), q(3)));
    CHECK(enc_mul(Enclosure(q(1)), iv(q(-5, 7), q(4, 3))) == iv(q(-5, 7), q(4, 3)));
}

TEST_CASE("enc_pow examples") {
    CHECK(enc_pow(iv(q(2), q(3)), 0) == Enclosure(q(1)));
    CHECK(enc_pow(iv(q(-2), q(1)), 2) == iv(q(0), q(4)));
    CHECK(enc_pow(iv(q(1, 2), q(2, 3)), 3) == iv(q(1, 8), q(8, 27)));
    CHECK(enc_pow(iv(q(-3), q(-2)), 2) == iv(q(4), q(9)));
    CHECK(enc_pow(iv(q(-3), q(-2)), 3) == iv(q(-27), q(-8)));
}

TEST_CASE("enc_abs examples") {
    CHECK(enc_abs(iv(q(3), q(5))) == iv(q(3), q(5)));
    CHECK(enc_abs(iv(q(-5), q(-3))) == iv(q(3), q(5)));
    CHECK(enc_abs(iv(q(-2), q(1))) == iv(q(0), q(2)));
}

TEST_CASE("trichotomy examples") {
    CHECK(trichotomy(iv(q(1, 7), q(1, 3))) == Trichotomy::Positive);
    CHECK(trichotomy(iv(q(-1), q(1))) == Trichotomy::ContainsZero);
    CHECK(trichotomy(iv(q(-3), q(-2))) == Trichotomy::Negative);
    CHECK(trichotomy(iv(q(0), q(1))) == Trichotomy::ContainsZero);
}

TEST_CASE("strict comparison is three-valued") {
    CHECK(strictly_less(iv(q(0), q(1)), iv(q(2), q(3))) == Verdict::Holds);
    CHECK(strictly_less(iv(q(0), q(2)), iv(q(2), q(3))) == Verdict::Unknown);
    CHECK(strictly_less(iv(q(3), q(4)), iv(q(2), q(3))) == Verdict::Fails);
    CHECK(both(Verdict::Holds, Verdict::Unknown) == Verdict::Unknown);
    CHECK(both(Verdict::Fails, Verdict::Unknown) == Verdict::Fails);
}

TEST_CASE("division requires a zero-free divisor") {
    CHECK(enc_div(iv(q(1), q(2)), iv(q(2), q(4))) == iv(q(1, 4), q(1)));
    CHECK_THROWS_AS(enc_div(iv(q(1), q(2)), iv(q(-1), q(1))), std::domain_error);
}

TEST_CASE("intersection") {
    CHECK(intersect(iv(q(0), q(2)), iv(q(1), q(3))) == iv(q(1), q(2)));
    CHECK_FALSE(intersect(iv(q(0), q(1)), iv(q(2), q(3))).has_value());
    CHECK(intersect(iv(q(0), q(1)), iv(q(1), q(3))) == Enclosure(q(1)));
}

TEST_CASE("outward rounding keeps containment and exact dyadics") {
    const Enclosure e = iv(q(1, 3), q(2, 3));
    const Enclosure r = round_outward(e, 10);
    CHECK(r.contains(e));
    CHECK(r.width() <= e.width() + q(2, 1024));
    CHECK(round_outward(iv(q(1, 8), q(3, 4)), 10) == iv(q(1, 8), q(3, 4)));
    CHECK(round_outward(iv(q(-1, 3), q(-1, 5)), 4) == iv(q(-6, 16), q(-3, 16)));
}

TEST_CASE("sqrt2 enclosure") {
    const Enclosure one = sqrt2_enclosure(1);
    CHECK(one.width() <= q(1, 10));
    CHECK(one.lo() * one.lo() <= 2);
    CHECK(one.hi() * one.hi() >= 2);
    CHECK(one == iv(q(7, 5), q(3, 2)));

    const Enclosure five = sqrt2_enclosure(5);
    CHECK(five.width() <= ten_to_minus(5));
    CHECK(five.contains(q(141421, 100000)));

    for (unsigned long d = 1; d <= 60; ++d) {
        const Enclosure e = sqrt2_enclosure(d);
        CHECK(e.lo() * e.lo() <= 2);
        CHECK(e.hi() * e.hi() >= 2);
        CHECK(e.width() <= ten_to_minus(d));
        // consecutive precisions share a common point
        CHECK(intersect(e, sqrt2_enclosure(d + 1)).has_value());
    }
    CHECK_THROWS(sqrt2_enclosure(0));
}

TEST_CASE("property: containment of add, mul, pow, abs") {
    Gen g;
    for (int i = 0; i < 10000; ++i) {
        const Rat x = g.rat();
        const Rat y = g.rat();
        const Enclosure a = g.around(x);
        const Enclosure b = g.around(y);
        REQUIRE(enc_add(a, b).contains(x + y));
        REQUIRE(enc_mul(a, b).contains(x * y));
        REQUIRE(enc_abs(a).contains(abs(x)));
        const unsigned long k = static_cast<unsigned long>(i % 6);
        REQUIRE(enc_pow(a, k).contains(pow(x, k)));
    }
}

TEST_CASE("property: widening an input never shrinks the output") {
    Gen g;
    for (int i = 0; i < 2000; ++i) {
        const Enclosure a = g.around(g.rat());
        const Enclosure b = g.around(g.rat());
        const Enclosure wide = iv(a.lo() - q(1, 3), a.hi() + q(1, 2));
        CHECK(enc_add(wide, b).contains(enc_add(a, b)));
        CHECK(enc_mul(wide, b).contains(enc_mul(a, b)));
        CHECK(enc_abs(wide).contains(enc_abs(a)));
        CHECK(enc_pow(wide, 4).contains(enc_pow(a, 4)));
        CHECK(enc_pow(wide, 3).contains(enc_pow(a, 3)));
    }
}

TEST_CASE("property: Positive means every point is positive") {
    Gen g;
    for (int i = 0; i < 2000; ++i) {
        const Enclosure a = g.around(g.rat());
        const Trichotomy t = trichotomy(a);
        if (t == Trichotomy::Positive) CHECK((a.lo() > 0 && a.hi() > 0));
        if (t == Trichotomy::Negative) CHECK((a.lo() < 0 && a.hi() < 0));
        if (t == Trichotomy::ContainsZero) CHECK(a.contains(Rat(0)));
    }
}
