#include <catch2/catch_amalgamated.hpp>

#include "fourpoints/mf.hpp"
#include "fourpoints/rng.hpp"

using namespace fourpoints;

namespace {

ProjPair random_parameter(Rng& rng, bool avoid_singular = true)
{
    for (;;) {
        Fp t0 = rng.field_element(), t1 = rng.field_element();
        if (t0.is_zero() && t1.is_zero()) continue;
        ProjPair t(t0, t1);
        if (avoid_singular && t.is_singular_parameter()) continue;
        return t;
    }
}

MFPair tampered(MFPair pair)
{
    // add z to the top-left entry
    auto e = pair.phi.entries();
    e[0][0] = e[0][0] + Poly::z();
    pair.phi = GradedMap(pair.phi.src(), pair.phi.tgt(), e);
    return pair;
}

} // namespace

TEST_CASE("phi pairs factor the pencil")
{
    SECTION("symbolic identity at t = (1,1)")
    {
        MFPair mf = phi_pair(ProjPair::one());
        // product over S is exactly Q_t * I, before any reduction
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Poly prod;
                for (std::size_t k = 0; k < 2; ++k) prod += mf.phi.entry(i, k) * mf.psi.entry(k, j);
                REQUIRE(prod == (i == j ? pencil(ProjPair::one()) : Poly()));
            }
        REQUIRE(mf_verify(mf));
    }
    SECTION("determinant of Phi^+ is Q_t up to sign")
    {
        MFPair mf = phi_pair(ProjPair::zero());
        Poly det = mf.phi.entry(0, 0) * mf.phi.entry(1, 1) - mf.phi.entry(0, 1) * mf.phi.entry(1, 0);
        REQUIRE((det == pencil(ProjPair::zero()) || det == -pencil(ProjPair::zero())));
    }
    SECTION("scaling the parameter scales the factored quadric")
    {
        Poly q = pencil_raw(Fp(6), Fp(10));
        REQUIRE(q == Fp(2) * pencil_raw(Fp(3), Fp(5)));
    }
    SECTION("both signs verify over seeded parameters")
    {
        Rng rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            ProjPair t = random_parameter(rng, false);
            REQUIRE(mf_verify(phi_pair(t, +1)));
            REQUIRE(mf_verify(phi_pair(t, -1)));
        }
    }
    SECTION("host must differ from the factored member")
    {
        REQUIRE_THROWS_AS(phi_pair(ProjPair::zero(), +1, ProjPair::zero()), std::invalid_argument);
    }
}

TEST_CASE("psi pairs")
{
    SECTION("defined only at singular parameters")
    {
        REQUIRE_THROWS_AS(psi_pair(ProjPair(2, 1)), std::invalid_argument);
    }
    SECTION("verification for all six")
    {
        for (const ProjPair& t : singular_members()) {
            REQUIRE(mf_verify(psi_pair(t, +1)));
            REQUIRE(mf_verify(psi_pair(t, -1)));
        }
    }
    SECTION("diagonal of Psi_inf^+ carries the two linear factors")
    {
        MFPair mf = psi_pair(ProjPair::infinity(), +1);
        REQUIRE(mf.phi.entry(0, 0) == Poly::y() - Poly::z());
        REQUIRE(mf.phi.entry(1, 1) == Poly::y() + Poly::z());
        REQUIRE(mf.phi.entry(1, 0).is_zero());
        REQUIRE(mf.phi.entry(0, 0) == line(2));
        REQUIRE(mf.phi.entry(1, 1) == line(4));
    }
    SECTION("coker(Psi_t^+) is the fundamental module")
    {
        for (const ProjPair& t : singular_members()) {
            REQUIRE(iso_test(mf_cokernel(psi_pair(t, +1)), fundamental_module(t, +1)).iso);
            REQUIRE(iso_test(mf_cokernel(psi_pair(t, -1)), fundamental_module(t, -1)).iso);
        }
    }
}

TEST_CASE("linear pairs")
{
    for (const ProjPair& t : singular_members()) {
        REQUIRE(mf_verify(linear_pair(t, +1)));
        REQUIRE(mf_verify(linear_pair(t, -1)));
    }
    // Q_0 = (x-y)(x+y) over S/(Q_inf)
    MFPair mf = linear_pair(ProjPair::zero(), +1);
    REQUIRE(mf.phi.entry(0, 0) == Poly::x() - Poly::y());
    REQUIRE(mf.psi.entry(0, 0) == Poly::x() + Poly::y());
    REQUIRE(mf.ring == RingId::Ss(ProjPair::infinity()));
}

TEST_CASE("tampered factorizations fail verification")
{
    Rng rng(5);
    REQUIRE_FALSE(mf_verify(tampered(phi_pair(random_parameter(rng)))));
    REQUIRE_FALSE(mf_verify(tampered(psi_pair(ProjPair::zero()))));
    REQUIRE_FALSE(mf_verify(tampered(linear_pair(ProjPair::one()))));
}

TEST_CASE("degenerate modules")
{
    REQUIRE(degenerate_module(ProjPair::zero(), +1).presentation.entry(0, 0) == Poly::x() - Poly::y());
    REQUIRE(degenerate_module(ProjPair::one(), +1).presentation.entry(0, 0) == Poly::x() + Poly::z());
    REQUIRE_THROWS_AS(degenerate_module(ProjPair(5, 1), +1), std::invalid_argument);
    for (const ProjPair& t : singular_members())
        for (int sign : {+1, -1}) REQUIRE(hom_graded(degenerate_module(t, sign), degenerate_module(t, sign)).dim() == 1);
}

TEST_CASE("fundamental and point modules")
{
    SECTION("End_gr(N_t) = k")
    {
        Rng rng(13);
        for (int trial = 0; trial < 5; ++trial) {
            ProjPair t = random_parameter(rng, false);
            REQUIRE(hom_graded(fundamental_module(t), fundamental_module(t)).dim() == 1);
        }
    }
    SECTION("point module presentations")
    {
        PresentedModule L1 = point_module(1);
        REQUIRE(L1.presentation.entry(0, 0) == Poly::x() - Poly::y());
        REQUIRE(L1.presentation.entry(0, 1) == Poly::y() - Poly::z());
        REQUIRE_THROWS_AS(point_module(5), std::invalid_argument);
    }
    SECTION("projective parameter normalization")
    {
        REQUIRE(iso_test(fundamental_module(ProjPair(2, 1)), fundamental_module(ProjPair(4, 2))).iso);
    }
}

TEST_CASE("MCM certificates for cokernels")
{
    // det(phi)*det(psi) reduces to f^2, and Ext^1(M, R) vanishes on a window
    Rng rng(17);
    std::vector<MFPair> pool = {phi_pair(random_parameter(rng)), psi_pair(ProjPair::one(), -1),
                                linear_pair(ProjPair::infinity(), +1)};
    for (const MFPair& mf : pool) {
        const std::size_t n = mf.size();
        Poly detphi, detpsi;
        if (n == 1) {
            detphi = mf.phi.entry(0, 0);
            detpsi = mf.psi.entry(0, 0);
        } else {
            detphi = mf.phi.entry(0, 0) * mf.phi.entry(1, 1) - mf.phi.entry(0, 1) * mf.phi.entry(1, 0);
            detpsi = mf.psi.entry(0, 0) * mf.psi.entry(1, 1) - mf.psi.entry(0, 1) * mf.psi.entry(1, 0);
        }
        const Poly want = mf.size() == 1 ? mf.f : mf.f * mf.f;
        REQUIRE(normal_form(mf.ring, detphi * detpsi) == normal_form(mf.ring, want));
        REQUIRE(ext1_dim(mf_cokernel(mf), PresentedModule::free_module(FreeGraded{RingId::R(), {0}})) == 0);
    }
}

TEST_CASE("swapping phi and psi gives the syzygy")
{
    Rng rng(29);
    ProjPair t = random_parameter(rng);
    MFPair plus = phi_pair(t, +1);
    MFPair swapped = phi_pair(t, -1);
    // coker(psi) = syz(coker(phi))(1)
    REQUIRE(iso_test(mf_cokernel(swapped), twist(syzygy(mf_cokernel(plus)), 1)).iso);
}

TEST_CASE("periodicity")
{
    Rng rng(37);
    SECTION("fundamental family has period one")
    {
        for (int trial = 0; trial < 3; ++trial)
            REQUIRE(periodicity_check(fundamental_module(random_parameter(rng)), 1));
    }
    SECTION("degenerate family has period two, not one")
    {
        REQUIRE_FALSE(periodicity_check(degenerate_module(ProjPair::zero(), +1), 1));
        REQUIRE(periodicity_check(degenerate_module(ProjPair::zero(), +1), 2));
        REQUIRE(periodicity_check(degenerate_module(ProjPair::infinity(), -1), 2));
    }
    SECTION("singular fundamental modules have period two, not one")
    {
        PresentedModule N0 = fundamental_module(ProjPair::zero(), +1);
        REQUIRE_FALSE(periodicity_check(N0, 1));
        REQUIRE(periodicity_check(N0, 2));
    }
}

TEST_CASE("tube modules")
{
    SECTION("fundamental tubes")
    {
        ProjPair t(3, 1);
        PresentedModule N2 = fundamental_tube(t, 2);
        HilbertData h = hilbert_data(N2);
        REQUIRE(h.nu == 4);
        REQUIRE(h.e == 8);
        REQUIRE(periodicity_check(N2, 1));
        PresentedModule N3 = fundamental_tube(t, 3);
        REQUIRE(hilbert_data(N3).nu == 6);
        REQUIRE(hilbert_data(N3).e == 12);
    }
    SECTION("degenerate tubes")
    {
        PresentedModule D3 = degenerate_tube(ProjPair::zero(), 3, +1);
        HilbertData h = hilbert_data(D3);
        REQUIRE(h.nu == 3);
        REQUIRE(h.e == 6);
        REQUIRE_FALSE(periodicity_check(D3, 1));
        REQUIRE(periodicity_check(D3, 2));
        REQUIRE(iso_test(degenerate_tube(ProjPair::zero(), 2, +1), fundamental_module(ProjPair::zero(), +1)).iso);
    }
}
