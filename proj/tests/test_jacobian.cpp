#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jaceig/hypergeometric.hpp"
#include "jaceig/jacobian.hpp"
#include "jaceig/rng.hpp"

using namespace jaceig;

TEST_CASE("inversion maps") {
    SUBCASE("all maps are 1 at the origin") {
        for (auto [r, rt] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {1, 1}, {3, 2}}) {
            VarLayout L(r, rt);
            auto maps = phi_maps(EtaPoint<Rat>::zeros(L), L);
            for (const Rat& v : maps.flatten()) CHECK(v == 1);
            CHECK(static_cast<int>(maps.flatten().size()) == L.nvars());
        }
    }
    SUBCASE("d=3 middle branch") {
        VarLayout L(1, 1);
        EtaPoint<Rat> eta = EtaPoint<Rat>::zeros(L);
        eta.s = {make_rat(1, 4)};
        eta.t = {make_rat(1, 8)};
        eta.st = {make_rat(1, 16)};
        eta.tt = {make_rat(1, 2)};
        auto maps = phi_maps(eta, L);
        Rat f = Rat(1) / (Rat(1) + eta.s[0] + eta.t[0]);
        Rat ft = Rat(1) / (Rat(1) + eta.st[0] + eta.tt[0]);
        CHECK(maps.f[0] == f);
        CHECK(maps.gt[0] == f);
        CHECK(maps.ft[0] == ft);
        CHECK(maps.g[0] == ft);
    }
    SUBCASE("d=3 corner branch") {
        VarLayout L(2, 0);
        EtaPoint<Rat> eta = EtaPoint<Rat>::zeros(L);
        eta.s = {make_rat(1, 4), make_rat(1, 8)};
        eta.w = {make_rat(1, 16)};
        auto maps = phi_maps(eta, L);
        Rat f = (Rat(1) + eta.w[0]) / (Rat(1) + eta.s[0]);
        CHECK(maps.f[0] == f);
        CHECK(maps.f[1] == f);
        CHECK(maps.h[0] == (Rat(1) + eta.w[0]) / ((Rat(1) + eta.s[0]) * (Rat(1) + eta.s[1])));
        CHECK(maps.g.empty());
        CHECK(maps.ft.empty());
    }
    SUBCASE("vanishing denominator is reported") {
        VarLayout L(1, 0);
        EtaPoint<Rat> eta = EtaPoint<Rat>::zeros(L);
        eta.s = {Rat(-1)};
        CHECK_THROWS_AS(phi_maps(eta, L), DenominatorZero);
    }
}

TEST_CASE("closed-form jacobian") {
    SUBCASE("J(0) = 1") {
        for (auto [r, rt] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {1, 1}, {3, 2}}) {
            VarLayout L(r, rt);
            CHECK(jacobian_closed(EtaPoint<Rat>::zeros(L), L) == 1);
        }
    }
    SUBCASE("d=2: J = 1 + s/(1+s)") {
        VarLayout L(1, 0);
        EtaPoint<Rat> eta = EtaPoint<Rat>::zeros(L);
        eta.s = {Rat(1)};
        CHECK(jacobian_closed(eta, L) == make_rat(3, 2));
        eta.s = {make_rat(1, 2)};
        CHECK(jacobian_closed(eta, L) == make_rat(4, 3));
    }
    SUBCASE("d=3 middle branch five-term form") {
        VarLayout L(1, 1);
        EtaPoint<Rat> eta = EtaPoint<Rat>::zeros(L);
        eta.s = {make_rat(1, 3)};
        eta.t = {make_rat(1, 5)};
        eta.st = {make_rat(-1, 7)};
        eta.tt = {make_rat(1, 11)};
        Rat den = Rat(1) + eta.s[0] + eta.t[0];
        Rat dent = Rat(1) + eta.st[0] + eta.tt[0];
        Rat expect = Rat(1) + eta.s[0] / den + eta.st[0] / dent +
                     eta.s[0] * eta.st[0] / (den * dent) - eta.t[0] * eta.tt[0] / (den * dent);
        CHECK(jacobian_closed(eta, L) == expect);
        CHECK(expansion_term_count(L) == 5);
    }
    SUBCASE("invariant under the arm swap") {
        Rng rng(3);
        for (auto [r, rt] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
            VarLayout L(r, rt), Ls(rt, r);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Rat> flat(L.nvars());
                for (Rat& v : flat) v = rng.rat(9, 100);
                auto eta = EtaPoint<Rat>::from_flat(L, flat);
                EtaPoint<Rat> swapped;
                swapped.s = eta.st;
                swapped.t = eta.tt;
                swapped.w = eta.wt;
                swapped.st = eta.s;
                swapped.tt = eta.t;
                swapped.wt = eta.w;
                CHECK(jacobian_closed(eta, L) == jacobian_closed(swapped, Ls));
            }
        }
    }
}

TEST_CASE("numeric jacobian") {
    SUBCASE("identity at the origin") {
        for (auto [r, rt] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {2, 2}}) {
            VarLayout L(r, rt);
            CHECK(std::abs(jacobian_numeric(EtaPoint<double>::zeros(L), L) - 1.0) < 1e-10);
        }
    }
    SUBCASE("d=2 closed value") {
        VarLayout L(1, 0);
        EtaPoint<double> eta = EtaPoint<double>::zeros(L);
        eta.s = {0.5};
        CHECK(std::abs(jacobian_numeric(eta, L) - (1.0 + 0.5 / 1.5)) < 1e-8);
    }
    SUBCASE("agrees with the closed form on random points") {
        Rng rng(41);
        for (int d = 2; d <= 5; ++d)
            for (int k = 1; k <= d; ++k) {
                VarLayout L(d - k, k - 1);
                for (int trial = 0; trial < 25; ++trial) {
                    std::vector<double> flat(L.nvars());
                    for (double& v : flat) v = rng.uniform(-0.1, 0.1);
                    auto eta = EtaPoint<double>::from_flat(L, flat);
                    CHECK(std::abs(jacobian_closed(eta, L) - jacobian_numeric(eta, L)) < 1e-8);
                }
            }
    }
}

TEST_CASE("lagrange system inverts to zero residuals") {
    SUBCASE("origin is the zeroth approximation") {
        for (auto [r, rt] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {2, 2}}) {
            VarLayout L(r, rt);
            LagrangeReport rep = verify_lagrange_system(L, EtaPoint<Rat>::zeros(L));
            CHECK(rep.residuals.size() == static_cast<std::size_t>(r + rt));
            CHECK(rep.all_zero());
        }
    }
    SUBCASE("d=4 k=2 at +-1/16") {
        VarLayout L(2, 1);
        Rng rng(8);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> flat(L.nvars());
            for (Rat& v : flat) v = rng.below(2) ? make_rat(1, 16) : make_rat(-1, 16);
            LagrangeReport rep = verify_lagrange_system(L, EtaPoint<Rat>::from_flat(L, flat));
            CHECK(rep.all_zero());
        }
    }
    SUBCASE("random exact points across all shapes") {
        Rng rng(13);
        for (int d = 2; d <= 5; ++d)
            for (int k = 1; k <= d; ++k) {
                VarLayout L(d - k, k - 1);
                for (int trial = 0; trial < 10; ++trial) {
                    std::vector<Rat> flat(L.nvars());
                    for (Rat& v : flat) v = rng.nonzero_rat(15, 256);
                    LagrangeReport rep =
                        verify_lagrange_system(L, EtaPoint<Rat>::from_flat(L, flat));
                    CHECK(rep.all_zero());
                }
            }
    }
    SUBCASE("required zero ratio is reported") {
        VarLayout L(1, 0);
        EtaPoint<Rat> eta = EtaPoint<Rat>::zeros(L);
        // s0 = 0 forces x0 = 0 while other variables are nonzero
        VarLayout L2(2, 0);
        EtaPoint<Rat> eta2 = EtaPoint<Rat>::zeros(L2);
        eta2.w = {make_rat(1, 4)};
        CHECK_THROWS_AS(verify_lagrange_system(L2, eta2), DivisionByZero);
    }
}
