#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jaceig/rng.hpp"
#include "jaceig/series.hpp"

using namespace jaceig;
using ExpVec = TruncatedSeries::ExpVec;

namespace {

TruncatedSeries one_plus_x(long cap) {
    TruncatedSeries s = TruncatedSeries::constant(1, cap, Rat(1));
    s.set_coeff({1}, Rat(1));
    return s;
}

// 1 - x + 2x^2 - 5x^3: the branch series of the 2x2 problem
TruncatedSeries u_series_d2(long cap) {
    TruncatedSeries s(1, cap);
    const long c[] = {1, -1, 2, -5, 14, -42};
    for (long i = 0; i <= cap && i < 6; ++i) s.set_coeff({i}, Rat(c[i]));
    return s;
}

TruncatedSeries random_series(Rng& rng, int nvars, long cap) {
    TruncatedSeries s(nvars, cap);
    for (int t = 0; t < 6; ++t) {
        ExpVec e(nvars);
        long left = cap;
        for (int i = 0; i < nvars; ++i) {
            e[i] = rng.range(0, left);
            left -= e[i];
        }
        s.set_coeff(e, s.coeff(e) + rng.rat(9, 4));
    }
    return s;
}

} // namespace

TEST_CASE("addition") {
    TruncatedSeries a = one_plus_x(3);
    TruncatedSeries b = TruncatedSeries::constant(1, 3, Rat(1));
    b.set_coeff({1}, Rat(-1));
    TruncatedSeries sum = a + b;
    CHECK(sum == TruncatedSeries::constant(1, 3, Rat(2)));

    TruncatedSeries z = TruncatedSeries::zero(1, 3);
    CHECK(a + z == a);

    TruncatedSeries x2 = TruncatedSeries::monomial(1, 3, {2}, Rat(1));
    CHECK((x2 + (-x2)).is_zero());
}

TEST_CASE("multiplication") {
    TruncatedSeries a = one_plus_x(2);
    TruncatedSeries b = TruncatedSeries::constant(1, 2, Rat(1));
    b.set_coeff({1}, Rat(-1));
    TruncatedSeries prod = a * b;  // 1 - x^2
    CHECK(prod.coeff({0}) == 1);
    CHECK(prod.coeff({1}) == 0);
    CHECK(prod.coeff({2}) == -1);

    // truncation drops x^2 at cap 1
    TruncatedSeries sq = one_plus_x(1) * one_plus_x(1);
    CHECK(sq.coeff({0}) == 1);
    CHECK(sq.coeff({1}) == 2);
    CHECK(sq.terms().size() == 2);

    TruncatedSeries u = u_series_d2(3);
    TruncatedSeries usq = u * u;
    CHECK(usq.coeff({0}) == 1);
    CHECK(usq.coeff({1}) == -2);
    CHECK(usq.coeff({2}) == 5);
    CHECK(usq.coeff({3}) == -14);
}

TEST_CASE("evaluation") {
    TruncatedSeries s(1, 2);
    s.set_coeff({0}, Rat(1));
    s.set_coeff({1}, Rat(-1));
    s.set_coeff({2}, Rat(2));
    CHECK(s.eval(std::vector<Rat>{Rat(0)}) == 1);
    CHECK(s.eval(std::vector<Rat>{make_rat(1, 10)}) == make_rat(23, 25));
    CHECK(TruncatedSeries::constant(3, 5, Rat(7)).eval(
              std::vector<Rat>{Rat(1), Rat(-2), make_rat(1, 3)}) == 7);
}

TEST_CASE("reciprocal") {
    TruncatedSeries inv = one_plus_x(3).reciprocal();
    CHECK(inv.coeff({0}) == 1);
    CHECK(inv.coeff({1}) == -1);
    CHECK(inv.coeff({2}) == 1);
    CHECK(inv.coeff({3}) == -1);

    CHECK(TruncatedSeries::constant(2, 4, Rat(1)).reciprocal() ==
          TruncatedSeries::constant(2, 4, Rat(1)));

    TruncatedSeries r = u_series_d2(2).reciprocal();
    CHECK(r.coeff({0}) == 1);
    CHECK(r.coeff({1}) == 1);
    CHECK(r.coeff({2}) == -1);

    CHECK_THROWS_AS(TruncatedSeries::zero(1, 3).reciprocal(), ZeroConstantTerm);
}

TEST_CASE("ring axioms on random sparse series") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        int nvars = static_cast<int>(rng.range(1, 4));
        long cap = rng.range(2, 5);
        TruncatedSeries a = random_series(rng, nvars, cap);
        TruncatedSeries b = random_series(rng, nvars, cap);
        TruncatedSeries c = random_series(rng, nvars, cap);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("reciprocal inverts up to the cap") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int nvars = static_cast<int>(rng.range(1, 3));
        long cap = rng.range(2, 5);
        TruncatedSeries s = random_series(rng, nvars, cap);
        ExpVec e0(nvars, 0);
        s.set_coeff(e0, rng.nonzero_rat(5, 3));
        CHECK(s * s.reciprocal() ==
              TruncatedSeries::constant(nvars, cap, Rat(1)));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int nvars = static_cast<int>(rng.range(1, 3));
        // full cap so no product terms are truncated away
        TruncatedSeries a = random_series(rng, nvars, 3);
        TruncatedSeries b = random_series(rng, nvars, 3);
        TruncatedSeries prod = (a.truncated(6) * b.truncated(6));
        std::vector<Rat> pt(nvars);
        for (Rat& q : pt) q = rng.rat(3, 7);
        CHECK(prod.eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("laurent monomial shifts") {
    TruncatedSeries u = u_series_d2(3);
    TruncatedSeries shifted = u.shifted({-1});
    CHECK(shifted.lower_bound() == -1);
    CHECK(shifted.coeff({-1}) == 1);
    CHECK(shifted.coeff({2}) == -5);
    // shifting back recovers the original terms
    CHECK(shifted.shifted({1}) == u);
}

TEST_CASE("canonical text round trip") {
    TruncatedSeries u = u_series_d2(3);
    CHECK(u.to_text() == "1 + -1 * x0^1 + 2 * x0^2 + -5 * x0^3");
    CHECK(TruncatedSeries::parse(u.to_text(), 1, 3) == u);

    TruncatedSeries z = TruncatedSeries::zero(2, 4);
    CHECK(z.to_text() == "0");
    CHECK(TruncatedSeries::parse("0", 2, 4) == z);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries s = random_series(rng, 3, 4);
        CHECK(TruncatedSeries::parse(s.to_text(), 3, 4) == s);
    }
}

TEST_CASE("dimension mismatch is rejected") {
    TruncatedSeries a(2, 3), b(3, 3);
    CHECK_THROWS_AS(a + b, DimensionMismatch);
    CHECK_THROWS_AS(a * b, DimensionMismatch);
    CHECK_THROWS_AS(a.eval(std::vector<Rat>{Rat(1)}), DimensionMismatch);
}
