#include <doctest.h>

#include <cmath>
#include <vector>

#include "mpsp/bounds.hpp"
#include "mpsp/hdq.hpp"
#include "mpsp/rng.hpp"

using namespace mpsp;

namespace {

AnalyticFn monomial(int degree) {
    return AnalyticFn::blaschke(0.0, std::vector<Complex>(static_cast<std::size_t>(degree), 0.0));
}

// closed form of T_0(1) for repeated zero nodes, t = |a|, c_j = |gamma_j|
double t_chain_entry0(double c0, double t) { return (c0 + t) / (1.0 + c0 * t); }

// closed form of T_0(T_1(1))
double t_chain_entry1(double c0, double c1, double t) {
    return (c0 + (c1 + c0 * c1) * t + t * t) / (c0 * t * t + (c1 + c0 * c1) * t + 1.0);
}

// closed form of T_0(T_1(T_2(1)))
double t_chain_entry2(double c0, double c1, double c2, double t) {
    const double x = c1 + c0 * c2 + c0 * c1 * c2;
    const double y = c0 * c1 + c2 + c1 * c2;
    return (c0 + x * t + y * t * t + t * t * t) / (c0 * t * t * t + x * t * t + y * t + 1.0);
}

// closed form of R_0(T_1(1))
double r_chain_entry1(double c1, double t) {
    return (1.0 + 2.0 * t * c1 + t * t) / (1.0 - t * t);
}

// closed form of R_0(T_1(T_2(1))), expanded by hand from the composition
double r_chain_entry2(double c1, double c2, double t) {
    const double s = c1 + c2 + c1 * c2;
    const double num = 1.0 + s * t + s * t * t + t * t * t;
    const double den = 1.0 + (c2 - c1 + c1 * c2) * t + (c1 - c2 - c1 * c2) * t * t - t * t * t;
    return num / den;
}

} // namespace

TEST_CASE("value_region worked examples") {
    SUBCASE("Schwarz lemma disk") {
        const ValueRegion r = value_region(interior_nodes({0.0}), {Complex(0.0)},
                                           DiskPoint::interior(Complex(0.5)));
        CHECK(std::abs(r.disk.center) < 1e-15);
        CHECK(r.disk.radius == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.interior_refinement);
    }
    SUBCASE("worked disk (0.4, 0.4)") {
        const ValueRegion r = value_region(interior_nodes({0.0}), {Complex(0.5)},
                                           DiskPoint::interior(Complex(0.5)));
        CHECK(std::abs(r.disk.center - Complex(0.4)) < 1e-12);
        CHECK(r.disk.radius == doctest::Approx(0.4).epsilon(1e-12));
    }
    SUBCASE("query at a node degenerates to a point") {
        const ValueRegion r = value_region(interior_nodes({0.0, 0.5}),
                                           {Complex(0.0), Complex(0.5)},
                                           DiskPoint::interior(Complex(0.5)));
        CHECK(std::abs(r.disk.center - Complex(0.25)) < 1e-12);
        CHECK(r.disk.radius <= 1e-12);
    }
    SUBCASE("gamma validation") {
        CHECK_THROWS_AS(value_region(interior_nodes({0.0, 0.3}), {Complex(1.0), Complex(0.0)},
                                     DiskPoint::interior(Complex(0.5))),
                        GammaOutOfRange);
        const ValueRegion r = value_region(interior_nodes({0.0}), {Complex(1.0)},
                                           DiskPoint::interior(Complex(0.5)));
        CHECK_FALSE(r.interior_refinement);
        CHECK(r.disk.radius <= 1e-12);   // unimodular data pin the value
    }
}

TEST_CASE("region soundness and sharpness") {
    RngStream rng(61);
    for (int i = 0; i < 50; ++i) {
        const int depth = static_cast<int>(rng.index(3));
        const AnalyticFn f = random_schur_fn(rng.next_u64(), depth, 0.9);
        std::vector<DiskPoint> nodes;
        const int n = 1 + static_cast<int>(rng.index(3));
        for (int k = 0; k < n; ++k) nodes.push_back(DiskPoint::interior(rng.disk(0.7)));
        const DiskPoint a = DiskPoint::interior(rng.disk(0.7));

        const SchurSequence seq = gamma_sequence(f, nodes);
        REQUIRE(seq.status == SchurSequence::Status::AllInterior);
        const ValueRegion region = value_region(nodes, seq.gammas, a);
        CHECK(region.disk.contains(f.eval(a.value())));
    }

    // boundary sharpness: a unimodular terminal lands on the region circle
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + static_cast<int>(rng.index(3));
        std::vector<Complex> nodes, gammas;
        for (int k = 0; k < n; ++k) {
            nodes.push_back(rng.disk(0.7));
            gammas.push_back(rng.disk(0.8));
        }
        const Complex terminal = rng.circle(1.0);
        const AnalyticFn f = synthesize_from_gammas(nodes, gammas, terminal);
        const DiskPoint a = DiskPoint::interior(rng.disk(0.7));
        const ValueRegion region = value_region(interior_nodes(nodes), gammas, a);
        CHECK(region.disk.boundary_gap(f.eval(a.value())) <= 1e-8);
    }
}

TEST_CASE("single matrix composition agrees with iterative disk mapping") {
    // oracle: push the closed unit disk through the step maps one at a time,
    // representing the running disk {c + r x : |x| <= 1} as an affine map
    RngStream rng(60);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(4));
        std::vector<DiskPoint> nodes;
        std::vector<Complex> gammas;
        for (int k = 0; k < n; ++k) {
            nodes.push_back(DiskPoint::interior(rng.disk(0.7)));
            gammas.push_back(rng.disk(0.85));
        }
        const DiskPoint a = DiskPoint::interior(rng.disk(0.7));

        ClosedDisk running{Complex(0.0), 1.0};
        for (std::size_t j = nodes.size(); j-- > 0;) {
            const Complex tau = bracket(a.value(), nodes[j].value());
            const MobiusMap step = MobiusMap::interpolation_step(tau, gammas[j]);
            const MobiusMap affine{running.radius, running.center, 0.0, 1.0};
            running = disk_image(step.compose(affine));
        }

        const ValueRegion region = value_region(nodes, gammas, a);
        CHECK(std::abs(region.disk.center - running.center) < 1e-11);
        CHECK(std::abs(region.disk.radius - running.radius) < 1e-11);
    }
}

TEST_CASE("modulus bound chain worked values") {
    SUBCASE("two repeated zero nodes") {
        const BoundChain chain = modulus_bound_chain(interior_nodes({0.0, 0.0}),
                                                     {Complex(0.5), Complex(0.5)},
                                                     DiskPoint::interior(Complex(0.5)));
        REQUIRE(chain.values.size() == 2);
        CHECK(chain.values[0] == doctest::Approx(0.8).epsilon(1e-15));
        CHECK(chain.values[1] == doctest::Approx(0.75).epsilon(1e-15));
    }
    SUBCASE("vanishing data give Schwarz powers") {
        const double t = 0.37;
        const BoundChain chain = modulus_bound_chain(
            interior_nodes({0.0, 0.0, 0.0}), {Complex(0.0), Complex(0.0), Complex(0.0)},
            DiskPoint::interior(Complex(t)));
        CHECK(chain.values[0] == doctest::Approx(t).epsilon(1e-15));
        CHECK(chain.values[1] == doctest::Approx(t * t).epsilon(1e-14));
        CHECK(chain.values[2] == doctest::Approx(t * t * t).epsilon(1e-14));
    }
    SUBCASE("gamma out of range") {
        CHECK_THROWS_AS(modulus_bound_chain(interior_nodes({0.0}), {Complex(1.0)},
                                            DiskPoint::interior(Complex(0.5))),
                        GammaOutOfRange);
    }
}

TEST_CASE("modulus bound chain matches the closed rational forms") {
    RngStream rng(62);
    for (int i = 0; i < 100; ++i) {
        const Complex g0 = rng.disk(0.95), g1 = rng.disk(0.95), g2 = rng.disk(0.95);
        const double t = rng.uniform(0.0, 0.95);
        const BoundChain chain =
            modulus_bound_chain(interior_nodes({0.0, 0.0, 0.0}), {g0, g1, g2},
                                DiskPoint::interior(Complex(t)));
        const double c0 = std::abs(g0), c1 = std::abs(g1), c2 = std::abs(g2);
        CHECK(chain.values[0] == doctest::Approx(t_chain_entry0(c0, t)).epsilon(1e-12));
        CHECK(chain.values[1] == doctest::Approx(t_chain_entry1(c0, c1, t)).epsilon(1e-12));
        CHECK(chain.values[2] == doctest::Approx(t_chain_entry2(c0, c1, c2, t)).epsilon(1e-12));
        CHECK(chain.values[0] >= chain.values[1]);
        CHECK(chain.values[1] >= chain.values[2]);
    }
}

TEST_CASE("chain bounds the realized modulus and the region") {
    RngStream rng(63);
    for (int i = 0; i < 50; ++i) {
        const AnalyticFn f = random_schur_fn(rng.next_u64(), static_cast<int>(rng.index(3)), 0.9);
        std::vector<DiskPoint> nodes;
        const int n = 1 + static_cast<int>(rng.index(3));
        for (int k = 0; k < n; ++k) nodes.push_back(DiskPoint::interior(rng.disk(0.7)));
        const DiskPoint a = DiskPoint::interior(rng.disk(0.7));
        const SchurSequence seq = gamma_sequence(f, nodes);
        REQUIRE(seq.status == SchurSequence::Status::AllInterior);

        const BoundChain chain = modulus_bound_chain(nodes, seq.gammas, a);
        for (std::size_t k = 1; k < chain.values.size(); ++k)
            CHECK(chain.values[k] <= chain.values[k - 1] + 1e-12);
        CHECK(std::abs(f.eval(a.value())) <= chain.values.back() + 1e-9);

        // the chain is a relaxation of the exact region
        const ValueRegion region = value_region(nodes, seq.gammas, a);
        CHECK(chain.values.back() >= std::abs(region.disk.center) + region.disk.radius - 1e-9);
    }
}

TEST_CASE("distance bound chain worked values") {
    SUBCASE("single node reproduces the unrefined bound") {
        const DistanceChain chain =
            distance_bound_chain(interior_nodes({0.0}), {Complex(0.3)},
                                 DiskPoint::interior(Complex(0.5)), DiskPoint::interior(Complex(0.0)));
        CHECK(chain.values[0] == doctest::Approx(3.0).epsilon(1e-15));
    }
    SUBCASE("repeated node first refinement") {
        // t = 0.5, c1 = 0.5 -> (1 + 2 t c1 + t^2)/(1 - t^2) = 7/3
        const DistanceChain chain = distance_bound_chain(
            interior_nodes({0.0, 0.0}), {Complex(0.1), Complex(0.5)},
            DiskPoint::interior(Complex(0.5)), DiskPoint::interior(Complex(0.0)));
        REQUIRE(chain.values.size() == 2);
        CHECK(chain.values[0] == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(chain.values[1] == doctest::Approx(7.0 / 3.0).epsilon(1e-14));
    }
}

TEST_CASE("distance bound chain matches closed forms on random data") {
    RngStream rng(64);
    for (int i = 0; i < 100; ++i) {
        const Complex g1 = rng.disk(0.95), g2 = rng.disk(0.95);
        const double t = rng.uniform(0.0, 0.9);
        const DistanceChain chain = distance_bound_chain(
            interior_nodes({0.0, 0.0, 0.0}), {rng.disk(0.9), g1, g2},
            DiskPoint::interior(Complex(t)), DiskPoint::interior(Complex(0.0)));
        const double c1 = std::abs(g1), c2 = std::abs(g2);
        CHECK(chain.values[0] == doctest::Approx((1.0 + t) / (1.0 - t)).epsilon(1e-12));
        CHECK(chain.values[1] == doctest::Approx(r_chain_entry1(c1, t)).epsilon(1e-12));
        CHECK(chain.values[2] == doctest::Approx(r_chain_entry2(c1, c2, t)).epsilon(1e-12));
        CHECK(chain.values[2] <= chain.values[1] + 1e-12);
        CHECK(chain.values[1] <= chain.values[0] + 1e-12);
        CHECK(chain.values[2] >= 1.0);
    }
}

TEST_CASE("distance chain bounds the realized hyperbolic expansion") {
    RngStream rng(65);
    for (int i = 0; i < 50; ++i) {
        const AnalyticFn f = random_schur_fn(rng.next_u64(), static_cast<int>(rng.index(3)), 0.9);
        const DiskPoint z0 = DiskPoint::interior(rng.disk(0.7));
        const DiskPoint z = DiskPoint::interior(rng.disk(0.7));
        std::vector<DiskPoint> nodes{z0};
        const int extra = static_cast<int>(rng.index(3));
        for (int k = 0; k < extra; ++k)
            nodes.push_back(rng.uniform01() < 0.5 ? z0 : DiskPoint::interior(rng.disk(0.7)));
        const SchurSequence seq = gamma_sequence(f, nodes);
        REQUIRE(seq.status == SchurSequence::Status::AllInterior);
        const DistanceChain chain = distance_bound_chain(nodes, seq.gammas, z, z0);
        const double realized =
            exp_hyperbolic_distance(f.eval(z.value()), f.eval(z0.value()));
        CHECK(realized <= chain.values.back() + 1e-9);
    }
}

TEST_CASE("two-sided modulus bounds") {
    SUBCASE("worst case over the missing quotient") {
        const auto [lo, hi] = two_sided_modulus_bounds(Complex(0.5), Complex(0.5), std::nullopt);
        CHECK(lo == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(hi == doctest::Approx(0.8).epsilon(1e-15));
    }
    SUBCASE("vanishing value gives the Schwarz bound") {
        const auto [lo, hi] = two_sided_modulus_bounds(Complex(0.0), Complex(0.3, 0.2), std::nullopt);
        CHECK(lo == 0.0);
        CHECK(hi == doctest::Approx(std::abs(Complex(0.3, 0.2))).epsilon(1e-15));
    }
    SUBCASE("with the quotient value") {
        const auto [lo, hi] = two_sided_modulus_bounds(Complex(0.5), Complex(0.5), Complex(0.5));
        CHECK(lo == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
        CHECK(hi == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("encloses the realized modulus") {
        RngStream rng(66);
        for (int i = 0; i < 60; ++i) {
            const AnalyticFn f = random_schur_fn(rng.next_u64(), 2, 0.85);
            const Complex z0 = rng.disk(0.7), z = rng.disk(0.7);
            const Complex gamma0 = f.eval(z0);
            const Complex tau0 = bracket(z, z0);
            const Complex f1 = delta(f, DiskPoint::interior(z0)).eval(z);
            const auto [lo, hi] = two_sided_modulus_bounds(gamma0, tau0, f1);
            const double realized = std::abs(f.eval(z));
            CHECK(lo - 1e-10 <= realized);
            CHECK(realized <= hi + 1e-10);
            const auto [lo2, hi2] = two_sided_modulus_bounds(gamma0, tau0, std::nullopt);
            CHECK(lo2 - 1e-10 <= realized);
            CHECK(realized <= hi2 + 1e-10);
            // the refined window sits inside the crude one
            CHECK(hi <= hi2 + 1e-12);
            CHECK(lo2 <= lo + 1e-12);
        }
    }
}

TEST_CASE("dieudonne region worked values") {
    SUBCASE("classical case with equality for z^2") {
        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(Complex(0.0)), DiskPoint::interior(Complex(0.0)),
                             DiskPoint::interior(Complex(0.5)), Complex(0.25));
        CHECK(std::abs(region.center - Complex(0.5)) < 1e-14);
        CHECK(region.radius == doctest::Approx(0.5).epsilon(1e-14));
        // f = z^2 realizes w = 0.25 with f'(0.5) = 1, on the boundary
        CHECK(region.boundary_gap(Complex(1.0)) < 1e-14);
    }
    SUBCASE("equal values force a centered disk") {
        const Complex w0(0.2, 0.1);
        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(Complex(0.1)), DiskPoint::interior(w0),
                             DiskPoint::interior(Complex(0.4)), w0);
        CHECK(std::abs(region.center) < 1e-15);
        CHECK(region.radius > 0.0);
    }
    SUBCASE("identity data pin the derivative") {
        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(Complex(0.0)), DiskPoint::interior(Complex(0.0)),
                             DiskPoint::interior(Complex(0.3)), Complex(0.3));
        CHECK(std::abs(region.center - Complex(1.0)) < 1e-14);
        CHECK(region.radius <= 1e-14);
    }
    SUBCASE("inconsistent data rejected") {
        CHECK_THROWS_AS(
            dieudonne_region(DiskPoint::interior(Complex(0.0)), DiskPoint::interior(Complex(0.0)),
                             DiskPoint::interior(Complex(0.5)), Complex(0.8)),
            InconsistentData);
    }
}

TEST_CASE("dieudonne region soundness and Blaschke equality") {
    RngStream rng(67);
    for (int i = 0; i < 60; ++i) {
        const AnalyticFn f = random_schur_fn(rng.next_u64(), static_cast<int>(rng.index(3)), 0.85);
        const Complex z0 = rng.disk(0.7);
        Complex z = rng.disk(0.7);
        if (std::abs(z - z0) < 1e-3) z += Complex(0.1, 0.0);
        const Jet jet = f.eval_jet(z, 1);
        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(z0), DiskPoint::interior(f.eval(z0)),
                             DiskPoint::interior(z), jet.value());
        CHECK(region.contains(jet.derivative(1)));
    }
    // degree <= 2 Blaschke products sit on the boundary
    for (int i = 0; i < 40; ++i) {
        const int degree = 1 + static_cast<int>(rng.index(2));
        std::vector<Complex> zeros;
        for (int k = 0; k < degree; ++k) zeros.push_back(rng.disk(0.6));
        const AnalyticFn b = AnalyticFn::blaschke(rng.uniform(0.0, 6.28), zeros);
        const Complex z0 = rng.disk(0.6);
        Complex z = rng.disk(0.6);
        if (std::abs(z - z0) < 1e-3) z += Complex(0.15, 0.0);
        const Jet jet = b.eval_jet(z, 1);
        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(z0), DiskPoint::interior(b.eval(z0)),
                             DiskPoint::interior(z), jet.value());
        CHECK(region.boundary_gap(jet.derivative(1)) <= 1e-8);
    }
}

TEST_CASE("three-way equivalence of the second-order inequalities") {
    RngStream rng(68);
    int decided = 0;
    for (int i = 0; i < 200; ++i) {
        const AnalyticFn f = random_schur_fn(rng.next_u64(), 1, 0.8);
        const Complex z0 = rng.disk(0.6);
        Complex z = rng.disk(0.6);
        if (std::abs(z - z0) < 5e-2) continue;
        const Complex w0 = f.eval(z0);
        const Jet jet = f.eval_jet(z, 1);
        const Complex w = jet.value();
        // candidate derivative, sometimes genuine, sometimes perturbed
        const Complex wp = jet.derivative(1) + (i % 2 == 0 ? Complex(0.0) : rng.disk(1.5));

        const Complex p = bracket(w0, w) / bracket(z0, z);
        const Complex q = (1.0 - std::norm(z)) * wp / (1.0 - std::norm(w));
        const double v1 = std::abs(bracket(q, p) / bracket(z, z0));
        const double v2 = std::abs(bracket(p, q) / bracket(z0, z));
        CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));

        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(z0), DiskPoint::interior(w0),
                             DiskPoint::interior(z), w);
        const double margin = region.radius - std::abs(wp - region.center);
        if (std::abs(v1 - 1.0) < 1e-8 || std::abs(margin) < 1e-8) continue;   // boundary band
        CHECK((v1 <= 1.0) == (margin >= 0.0));
        ++decided;
    }
    CHECK(decided > 100);
}

TEST_CASE("second-order residual") {
    SUBCASE("equality for z^2 at 0.5") {
        CHECK(std::abs(dieudonne_second_order_residual(monomial(2),
                                                       DiskPoint::interior(Complex(0.5)))) <= 1e-10);
    }
    SUBCASE("strictly positive for a shrunk square") {
        const AnalyticFn f = AnalyticFn::product(AnalyticFn::constant(Complex(0.25)), monomial(2));
        CHECK(dieudonne_second_order_residual(f, DiskPoint::interior(Complex(0.5))) > 1e-3);
    }
    SUBCASE("equality class includes z times an automorphism factor") {
        const AnalyticFn f =
            AnalyticFn::product(AnalyticFn::identity(),
                                AnalyticFn::blaschke(0.0, std::vector<Complex>{Complex(-0.5)}));
        CHECK(std::abs(dieudonne_second_order_residual(f, DiskPoint::interior(Complex(0.4)))) <=
              1e-8);
    }
    SUBCASE("hypothesis checks") {
        CHECK_THROWS_AS(dieudonne_second_order_residual(AnalyticFn::constant(Complex(0.3)),
                                                        DiskPoint::interior(Complex(0.5))),
                        HypothesisViolated);
        CHECK_THROWS_AS(dieudonne_second_order_residual(AnalyticFn::identity(),
                                                        DiskPoint::interior(Complex(0.5))),
                        HypothesisViolated);
    }
    SUBCASE("nonnegative on random vanishing functions") {
        RngStream rng(69);
        for (int i = 0; i < 40; ++i) {
            std::vector<Complex> gammas{Complex(0.0), rng.disk(0.8), rng.disk(0.8)};
            const AnalyticFn f = synthesize_from_gammas(
                {Complex(0.0), Complex(0.0), Complex(0.0)}, gammas, rng.disk(0.8));
            const Complex z = rng.disk(0.8);
            if (std::abs(z) < 0.05) continue;
            CHECK(dieudonne_second_order_residual(f, DiskPoint::interior(z)) >= -1e-9);
        }
    }
}

TEST_CASE("fprime0-refined residual") {
    SUBCASE("0.5z at 0.5") {
        const AnalyticFn f = synthesize_from_gammas({Complex(0.0)}, {Complex(0.0)}, Complex(0.5));
        CHECK(dieudonne_fprime0_residual(f, DiskPoint::interior(Complex(0.5))) ==
              doctest::Approx(0.1875).epsilon(1e-12));
    }
    SUBCASE("equality for z^3 at 0.5") {
        CHECK(std::abs(dieudonne_fprime0_residual(monomial(3), DiskPoint::interior(Complex(0.5)))) <=
              1e-12);
    }
    SUBCASE("identically zero display for z^2") {
        CHECK(std::abs(dieudonne_fprime0_residual(monomial(2), DiskPoint::interior(Complex(0.5)))) <=
              1e-12);
    }
    SUBCASE("nonnegative on random vanishing functions") {
        RngStream rng(70);
        for (int i = 0; i < 40; ++i) {
            std::vector<Complex> gammas{Complex(0.0), rng.disk(0.8)};
            const AnalyticFn f = synthesize_from_gammas({Complex(0.0), Complex(0.0)}, gammas,
                                                        rng.disk(0.8));
            const Complex z = rng.disk(0.8);
            if (std::abs(z) < 0.05) continue;
            CHECK(dieudonne_fprime0_residual(f, DiskPoint::interior(z)) >= -1e-9);
        }
    }
    SUBCASE("hypothesis check") {
        CHECK_THROWS_AS(dieudonne_fprime0_residual(AnalyticFn::constant(Complex(0.3)),
                                                   DiskPoint::interior(Complex(0.5))),
                        HypothesisViolated);
    }
}
