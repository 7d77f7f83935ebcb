#include <catch2/catch_amalgamated.hpp>

#include "fourpoints/bridge.hpp"

using namespace fourpoints;

namespace {

ProjPair random_nonsingular(Rng& rng)
{
    for (;;) {
        Fp t0 = rng.field_element(), t1 = rng.field_element();
        if (t0.is_zero() && t1.is_zero()) continue;
        ProjPair t(t0, t1);
        if (!t.is_singular_parameter()) return t;
    }
}

} // namespace

TEST_CASE("tilting data is well formed")
{
    const TiltingData& T = TiltingData::instance();
    for (int i = 0; i < 4; ++i) {
        // q_i is a nonzero degree-0 map killing nothing below degree 1
        REQUIRE_FALSE(T.q[static_cast<std::size_t>(i)].G.is_zero());
        REQUIRE(stable_hom(T.L[static_cast<std::size_t>(i)], T.kst).dim() == 1);
    }
    // distinct point modules see nothing of each other
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) REQUIRE(stable_hom(T.L[static_cast<std::size_t>(i)], T.L[static_cast<std::size_t>(j)]).dim() == 0);
}

TEST_CASE("images of the named families")
{
    Rng rng(101);
    SECTION("fundamental family lands on the fundamental family")
    {
        for (int trial = 0; trial < 5; ++trial) {
            ProjPair t = random_nonsingular(rng);
            REQUIRE(iso_rep(apply_E(fundamental_module(t)), fundamental_rep(t)).iso);
        }
    }
    SECTION("degenerate modules land on the exceptional simples")
    {
        for (const ProjPair& t : singular_members())
            for (int sign : {+1, -1})
                REQUIRE(iso_rep(apply_E(degenerate_module(t, sign)), exceptional_simple(t, sign)).iso);
    }
    SECTION("tilting summands land on the projectives")
    {
        for (int i = 1; i <= 4; ++i)
            REQUIRE(iso_rep(apply_E(point_module(i)), projective_rep(i)).iso);
        REQUIRE(iso_rep(apply_E(stabilize_k()), projective_rep(0)).iso);
    }
    SECTION("Hom dimension subclaims")
    {
        ProjPair t = random_nonsingular(rng);
        PresentedModule N = fundamental_module(t);
        for (int i = 1; i <= 4; ++i) REQUIRE(hom_graded(N, point_module(i)).dim() == 1);
        REQUIRE(hom_graded(N, k_module()).dim() == 2);
    }
    SECTION("distinct tube parameters stay distinct")
    {
        ProjPair t = random_nonsingular(rng), s = random_nonsingular(rng);
        REQUIRE(t != s);
        REQUIRE_FALSE(iso_rep(apply_E(fundamental_module(t)), apply_E(fundamental_module(s))).iso);
    }
}

TEST_CASE("tau exchange")
{
    Rng rng(103);
    REQUIRE(tau_exchange_check(fundamental_module(random_nonsingular(rng))));
    for (const ProjPair& t : singular_members())
        for (int sign : {+1, -1}) REQUIRE(tau_exchange_check(degenerate_module(t, sign)));
    for (int i = 1; i <= 4; ++i) REQUIRE(tau_exchange_check(point_module(i)));

    SECTION("stated value on the first point module")
    {
        Rep lhs = apply_E(tau_module(point_module(1)));
        REQUIRE(iso_rep(lhs, tau_inv_rep(projective_rep(1))).iso);
    }
}

TEST_CASE("defect dictionary")
{
    Rng rng(107);
    ProjPair t = random_nonsingular(rng);
    // complexity one (tau-periodic) <=> defect zero
    std::vector<PresentedModule> periodic = {fundamental_module(t),
                                             degenerate_module(ProjPair::one(), -1),
                                             fundamental_module(ProjPair::zero(), +1)};
    for (const PresentedModule& M : periodic) {
        REQUIRE(defect(apply_E(M)) == 0);
        REQUIRE((periodicity_check(M, 1) || periodicity_check(M, 2)));
    }
    std::vector<PresentedModule> aperiodic = {point_module(2), stabilize_k()};
    for (const PresentedModule& M : aperiodic) {
        REQUIRE(defect(apply_E(M)) != 0);
        REQUIRE_FALSE(periodicity_check(M, 1));
        REQUIRE_FALSE(periodicity_check(M, 2));
    }
    // dim-vector law
    PresentedModule N = fundamental_module(t);
    Rep e = apply_E(N);
    REQUIRE(e.dims[0] == hom_graded(N, k_module()).dim());
    for (int i = 1; i <= 4; ++i)
        REQUIRE(e.dims[static_cast<std::size_t>(i)] == hom_graded(N, point_module(i)).dim());
}

TEST_CASE("preprojective dimension tables")
{
    PreprojReport rep = preproj_dims(3);
    INFO(rep.first_mismatch);
    REQUIRE(rep.agree);
    REQUIRE(rep.module_total(0) == 9);
    for (int i = 0; i <= 3; ++i) {
        REQUIRE(rep.module_side[static_cast<std::size_t>(i)][0][0] == 2 * i + 1);
        REQUIRE(rep.module_total(i) == rep.quiver_total(i));
    }
    // diagonal corners e_1..e_4 agree entry by entry
    for (int i = 0; i <= 3; ++i)
        for (int a = 1; a < 5; ++a)
            REQUIRE(rep.module_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] ==
                    rep.quiver_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(a)]);
}

TEST_CASE("tilting orthogonality")
{
    REQUIRE(tilting_orthogonality_check(6));
    // nonzero Betti numbers do appear in the allowed bidegrees
    BettiTable t = minimal_resolution(point_module(1), 2).betti;
    REQUIRE(t.get(1, 1) == 2);
}
