#include <catch2/catch_amalgamated.hpp>

#include "fourpoints/ring.hpp"
#include "fourpoints/rng.hpp"

using namespace fourpoints;

namespace {

Poly random_homogeneous(Rng& rng, int d)
{
    Poly f;
    for (const Monomial& m : ring_basis(RingId::S(), d))
        if (rng.below(2)) f.add_term(m, rng.small_element());
    if (f.is_zero()) f.add_term({d, 0, 0}, Fp(1));
    return f;
}

Fp gram_det(const Poly& q)
{
    Mat g = gram_matrix(q);
    return g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1))
         - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
         + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
}

} // namespace

TEST_CASE("pencil members")
{
    Poly q0 = Poly::term(Fp(1), {2, 0, 0}) - Poly::term(Fp(1), {0, 2, 0});
    Poly qinf = Poly::term(Fp(1), {0, 2, 0}) - Poly::term(Fp(1), {0, 0, 2});
    Poly q1 = Poly::term(Fp(1), {2, 0, 0}) - Poly::term(Fp(1), {0, 0, 2});

    REQUIRE(pencil(ProjPair::zero()) == q0);
    REQUIRE(pencil(ProjPair::infinity()) == qinf);
    REQUIRE(pencil(ProjPair::one()) == q1);
    REQUIRE(pencil(ProjPair::one()) == q0 + qinf);
    REQUIRE(pencil(ProjPair(0, 1)).homogeneous_degree() == 2);

    // scaling t scales the raw output
    REQUIRE(pencil_raw(Fp(6), Fp(10)) == Fp(2) * pencil_raw(Fp(3), Fp(5)));

    REQUIRE_THROWS_AS(ProjPair(Fp(0), Fp(0)), std::invalid_argument);
}

TEST_CASE("singular members of the pencil")
{
    std::vector<ProjPair> sing = singular_members();
    REQUIRE(sing.size() == 3);
    REQUIRE(sing[0] == ProjPair::zero());
    REQUIRE(sing[1] == ProjPair::one());
    REQUIRE(sing[2] == ProjPair::infinity());

    // det of the Gram matrix is -t0*t1*(t0-t1), so it vanishes exactly there
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Fp t0 = rng.field_element(), t1 = rng.field_element();
        if (t0.is_zero() && t1.is_zero()) continue;
        Fp expected = -t0 * t1 * (t0 - t1);
        REQUIRE(gram_det(pencil_raw(t0, t1)) == expected);
    }
    REQUIRE(rank(gram_matrix(pencil(ProjPair(2, 1)))) == 3);
    for (const ProjPair& t : sing) REQUIRE(rank(gram_matrix(pencil(t))) < 3);
}

TEST_CASE("normal forms")
{
    RingId R = RingId::R();
    RingId Sinf = RingId::Ss(ProjPair::infinity());

    SECTION("defining relations collapse")
    {
        REQUIRE(normal_form(R, pencil(ProjPair::zero())).is_zero());
        REQUIRE(normal_form(R, pencil(ProjPair::infinity())).is_zero());
        REQUIRE(normal_form(R, pencil(ProjPair(17, 5))).is_zero());
        REQUIRE(normal_form(Sinf, pencil(ProjPair::infinity())).is_zero());
        REQUIRE(normal_form(RingId::Ss(ProjPair(3, 4)), pencil(ProjPair(3, 4))).is_zero());
    }
    SECTION("stated rewrites")
    {
        REQUIRE(normal_form(R, Poly::term(Fp(1), {0, 2, 0})) == Poly::term(Fp(1), {2, 0, 0}));
        REQUIRE(normal_form(R, Poly::term(Fp(1), {0, 3, 2})) == Poly::term(Fp(1), {4, 1, 0}));
        REQUIRE(normal_form(Sinf, Poly::term(Fp(1), {0, 2, 0})) == Poly::term(Fp(1), {0, 0, 2}));
    }
    SECTION("difference lies in the ideal (witness by evaluation at the four points)")
    {
        // members of the ideal (Q_0, Q_inf) vanish at every point of X
        Poly f = Poly::term(Fp(1), {0, 3, 2});
        Poly diff = f - normal_form(R, f);
        for (const auto& p : points()) REQUIRE(diff.evaluate(p).is_zero());
    }
    SECTION("idempotent and linear, all three ring kinds")
    {
        Rng rng(9);
        std::vector<RingId> rings = {RingId::S(), RingId::R(), Sinf,
                                     RingId::Ss(ProjPair::zero()), RingId::Ss(ProjPair(5, 3))};
        for (const RingId& ring : rings)
            for (int trial = 0; trial < 10; ++trial) {
                int d = 1 + static_cast<int>(rng.below(6));
                Poly f = random_homogeneous(rng, d), g = random_homogeneous(rng, d);
                Poly nf = normal_form(ring, f);
                REQUIRE(normal_form(ring, nf) == nf);
                REQUIRE(normal_form(ring, f + g) == normal_form(ring, f) + normal_form(ring, g));
            }
    }
}

TEST_CASE("graded bases")
{
    RingId R = RingId::R();
    SECTION("stated bases")
    {
        auto b1 = ring_basis(R, 1);
        REQUIRE(b1.size() == 3);
        REQUIRE(b1[0] == Monomial{1, 0, 0});
        REQUIRE(b1[1] == Monomial{0, 1, 0});
        REQUIRE(b1[2] == Monomial{0, 0, 1});

        auto b2 = ring_basis(R, 2);
        REQUIRE(b2.size() == 4);
        REQUIRE(b2[0] == Monomial{2, 0, 0});
        REQUIRE(b2[1] == Monomial{1, 1, 0});
        REQUIRE(b2[2] == Monomial{1, 0, 1});
        REQUIRE(b2[3] == Monomial{0, 1, 1});

        REQUIRE(ring_basis(R, 7).size() == 4);
        REQUIRE_THROWS_AS(ring_basis(R, -1), std::invalid_argument);
    }
    SECTION("Hilbert series of R is (1+2t+t^2)/(1-t)")
    {
        // oracle: expand the series; h(0)=1, h(1)=3, h(d)=4 for d>=2
        for (int d = 0; d <= 50; ++d) {
            std::size_t expect = d == 0 ? 1 : d == 1 ? 3 : 4;
            REQUIRE(ring_dim(R, d) == expect);
        }
    }
    SECTION("hypersurface dimensions 2d+1")
    {
        for (int d = 0; d <= 10; ++d) {
            REQUIRE(ring_dim(RingId::Ss(ProjPair::one()), d) == static_cast<std::size_t>(2 * d + 1));
            REQUIRE(ring_dim(RingId::Ss(ProjPair::infinity()), d) == static_cast<std::size_t>(2 * d + 1));
        }
    }
}

TEST_CASE("multiplication matrices")
{
    RingId R = RingId::R();
    SECTION("identity multiplier")
    {
        REQUIRE(mult_matrix(R, Poly(1), 3) == Mat::identity(4));
    }
    SECTION("y sends y to x^2")
    {
        Mat m = mult_matrix(R, Poly::y(), 1);
        REQUIRE(m.rows() == 4);
        REQUIRE(m.cols() == 3);
        // column of y: y*y = y^2 -> x^2, the first row of the degree-2 basis
        REQUIRE(m(0, 1) == Fp(1));
        REQUIRE(m(1, 1).is_zero());
        REQUIRE(m(2, 1).is_zero());
        REQUIRE(m(3, 1).is_zero());
    }
    SECTION("composition law mult(x)mult(y) = mult(xy) at d = 3")
    {
        Mat lhs = mult_matrix(R, Poly::x(), 4) * mult_matrix(R, Poly::y(), 3);
        REQUIRE(lhs == mult_matrix(R, Poly::x() * Poly::y(), 3));
    }
    SECTION("inhomogeneous multiplier rejected")
    {
        REQUIRE_THROWS_AS(mult_matrix(R, Poly::x() + Poly(1), 1), std::invalid_argument);
    }
    SECTION("associativity and commutativity on seeded triples")
    {
        Rng rng(41);
        std::vector<RingId> rings = {RingId::R(), RingId::Ss(ProjPair::infinity())};
        for (int trial = 0; trial < 100; ++trial) {
            const RingId& ring = rings[trial % 2];
            int df = 1 + static_cast<int>(rng.below(2));
            int dg = 1 + static_cast<int>(rng.below(2));
            int d = static_cast<int>(rng.below(3));
            Poly f = random_homogeneous(rng, df), g = random_homogeneous(rng, dg);
            Mat fg = mult_matrix(ring, f, d + dg) * mult_matrix(ring, g, d);
            Mat gf = mult_matrix(ring, g, d + df) * mult_matrix(ring, f, d);
            REQUIRE(fg == gf);
            REQUIRE(fg == mult_matrix(ring, normal_form(ring, f * g), d));
        }
    }
}

TEST_CASE("lines and points")
{
    auto ls = lines();
    auto ps = points();

    REQUIRE(ls[0] == Poly::x() - Poly::y());
    REQUIRE(ls[1] == Poly::y() - Poly::z());
    REQUIRE(ls[2] == Poly::x() + Poly::y());
    REQUIRE(ls[3] == Poly::y() + Poly::z());

    // Q_0 = l1*l3 and Q_inf = l2*l4, exactly
    REQUIRE(ls[0] * ls[2] == pencil(ProjPair::zero()));
    REQUIRE(ls[1] * ls[3] == pencil(ProjPair::infinity()));

    // p1 = [1:1:1]
    REQUIRE(ps[0][0] == Fp(1));
    REQUIRE(ps[0][1] == Fp(1));
    REQUIRE(ps[0][2] == Fp(1));

    for (int i = 1; i <= 4; ++i) {
        const auto& p = ps[static_cast<std::size_t>(i - 1)];
        REQUIRE(line(i).evaluate(p).is_zero());
        REQUIRE(line(i + 1).evaluate(p).is_zero());
        for (const Fp& c : p) REQUIRE((c == Fp(1) || c == Fp(-1)));
    }
    REQUIRE(!line(2).evaluate(ps[2]).is_zero());

    // the four points are pairwise distinct in P^2 and no three are collinear
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                Mat m(3, 3);
                int rows[3] = {i, j, k};
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) m(r, c) = ps[static_cast<std::size_t>(rows[r])][static_cast<std::size_t>(c)];
                REQUIRE(rank(m) == 3);
            }
}
