#include <catch2/catch_amalgamated.hpp>

#include "fourpoints/cres.hpp"

using namespace fourpoints;

TEST_CASE("koszul dg structures")
{
    SECTION("stated lifts")
    {
        KoszulDG e0 = koszul_dg(0);
        // dQ_0 -> x dx - y dy
        REQUIRE(e0.theta[0][0][0][0] == Poly::x());
        REQUIRE(e0.theta[0][0][1][0] == -Poly::y());
        REQUIRE(e0.theta[0][0][2][0].is_zero());
        // dQ_inf -> y dy - z dz
        REQUIRE(e0.theta[1][0][0][0].is_zero());
        REQUIRE(e0.theta[1][0][1][0] == Poly::y());
        REQUIRE(e0.theta[1][0][2][0] == -Poly::z());

        // E^1 carries dl_1, dl_2: dQ_0 -> l3 dl_1 and dQ_inf -> l4 dl_2
        KoszulDG e1 = koszul_dg(1);
        REQUIRE(e1.theta[0][0][0][0] == line(3));
        REQUIRE(e1.theta[0][0][1][0].is_zero());
        REQUIRE(e1.theta[1][0][0][0].is_zero());
        REQUIRE(e1.theta[1][0][1][0] == line(4));
    }
    SECTION("dg-module identities for all five")
    {
        for (int which = 0; which <= 4; ++which) {
            KoszulDG dg = koszul_dg(which);
            REQUIRE(dg.actions_anticommute());
            REQUIRE(dg.chain_identity());
        }
        REQUIRE_THROWS_AS(koszul_dg(5), std::invalid_argument);
    }
    SECTION("wrong lift breaks the chain identity")
    {
        std::array<std::array<Poly, 3>, 2> bad = {{{Poly::x(), -Poly::y(), Poly::x()},
                                                   {Poly(), Poly::y(), -Poly::z()}}};
        KoszulDG dg = KoszulDG::make(0, bad);
        REQUIRE_FALSE(dg.chain_identity());
    }
}

TEST_CASE("window shapes")
{
    SECTION("target k: ranks 2,3,5,7 forward and 3,5,7 backward")
    {
        Window w = bpr_window(0, -3, 6);
        REQUIRE(w.term(0).count() == 2);   // degree-0 and degree -1 generators
        REQUIRE(w.term(1).count() == 3);
        REQUIRE(w.term(2).count() == 5);
        REQUIRE(w.term(3).count() == 7);
        REQUIRE(w.term(4).count() == 9);
        REQUIRE(w.term(-1).count() == 3);
        REQUIRE(w.term(-2).count() == 5);
        REQUIRE(w.term(-3).count() == 7);

        BettiTable t = w.betti();
        REQUIRE(t.get(0, 0) == 1);
        REQUIRE(t.get(0, -1) == 1);
        REQUIRE(t.get(1, 1) == 3);
        REQUIRE(t.get(3, 3) == 7);
        REQUIRE(t.get(-1, -2) == 3);
        REQUIRE(t.get(-3, -4) == 7);
    }
    SECTION("target L_1: ranks 1,2,3,4 forward and 1,2,3 backward")
    {
        Window w = bpr_window(1, -3, 6);
        for (int n = 0; n <= 6; ++n) REQUIRE(w.term(n).count() == static_cast<std::size_t>(n + 1));
        for (int n = 1; n <= 3; ++n) REQUIRE(w.term(-n).count() == static_cast<std::size_t>(n));
    }
    SECTION("consecutive composites vanish")
    {
        for (int target : {0, 2}) {
            Window w = bpr_window(target, -3, 6);
            for (int n = 6; n - 1 > -3; --n) REQUIRE(compose(w.map_at(n - 1), w.map_at(n)).is_zero());
        }
    }
}

TEST_CASE("cross validation")
{
    for (int target = 0; target <= 4; ++target) {
        CresReport rep = cross_validate(target);
        INFO("target " << target << ": " << rep.detail);
        REQUIRE(rep.chain_checks);
        REQUIRE(rep.d_squared);
        REQUIRE(rep.minimal);
        REQUIRE(rep.coker_matches);
        REQUIRE(rep.betti_matches);
    }
}

TEST_CASE("negative control: tampered lift fails")
{
    std::array<std::array<Poly, 3>, 2> bad = {{{Poly::x(), -Poly::y(), Poly::x()},
                                               {Poly(), Poly::y(), -Poly::z()}}};
    CresReport rep = cross_validate(0, KoszulDG::make(0, bad));
    REQUIRE_FALSE(rep.pass());
    REQUIRE((!rep.chain_checks || !rep.d_squared || !rep.minimal));
}

TEST_CASE("independence of the lift choice")
{
    // another valid lift of dQ_0: x dx + (z - y) dy - y dz, since
    // x*x + (z-y)*y + (-y)*z = x^2 - y^2
    std::array<std::array<Poly, 3>, 2> alt = {{{Poly::x(), Poly::z() - Poly::y(), -Poly::y()},
                                               {Poly(), Poly::y(), -Poly::z()}}};
    Poly combo = alt[0][0] * Poly::x() + alt[0][1] * Poly::y() + alt[0][2] * Poly::z();
    REQUIRE(combo == pencil(ProjPair::zero()));

    KoszulDG dg = KoszulDG::make(0, alt);
    REQUIRE(dg.chain_identity());
    CresReport rep = cross_validate(0, dg);
    INFO(rep.detail);
    REQUIRE(rep.pass());

    // the window maps differ from the default-lift window, the cokernels agree
    Window wa = bpr_window(0, 0, 2, dg);
    Window wb = bpr_window(0, 0, 2);
    bool same = true;
    for (std::size_t i = 0; i < wa.maps.size() && same; ++i)
        same = (wa.maps[i] - wb.maps[i]).is_zero();
    REQUIRE_FALSE(same);
    REQUIRE(iso_test(PresentedModule{wa.map_at(1)}, PresentedModule{wb.map_at(1)}).iso);
}
