#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mpsp/nevanlinna_pick.hpp"
#include "mpsp/rng.hpp"

using namespace mpsp;

namespace {

InterpolationData random_dataset(RngStream& rng, bool perturb) {
    const int n = 1 + static_cast<int>(rng.index(5));
    const AnalyticFn f = random_schur_fn(rng.next_u64(), static_cast<int>(rng.index(4)), 0.9);
    std::vector<std::pair<Complex, Complex>> pairs;
    std::vector<Complex> used;
    while (static_cast<int>(pairs.size()) <= n) {
        const Complex z = rng.disk(0.8);
        bool ok = true;
        for (Complex u : used)
            if (std::abs(u - z) < 0.05) ok = false;
        if (!ok) continue;
        used.push_back(z);
        Complex w = f.eval(z);
        if (perturb) {
            w += rng.disk(0.5);
            if (std::abs(w) > 0.999) w *= 0.999 / std::abs(w);
        }
        pairs.push_back({z, w});
    }
    return InterpolationData::make(pairs);
}

} // namespace

TEST_CASE("interpolation data validation") {
    CHECK_THROWS_AS(InterpolationData::make({}), std::invalid_argument);
    CHECK_THROWS_AS(InterpolationData::make({{Complex(0.0), Complex(0.0)},
                                             {Complex(0.0), Complex(0.5)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(InterpolationData::make({{Complex(1.0), Complex(0.0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(InterpolationData::make({{Complex(0.0), Complex(1.5)}}),
                    std::invalid_argument);
    CHECK_NOTHROW(InterpolationData::make({{Complex(0.0), Complex(1.0)}}));
}

TEST_CASE("pick matrix worked values") {
    const PickMatrix one = pick_matrix(InterpolationData::make({{Complex(0.0), Complex(0.0)}}));
    CHECK(one.size() == 1);
    CHECK(one[0][0] == Complex(1.0));

    const PickMatrix q = pick_matrix(
        InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.8)}}));
    CHECK(q[0][0] == Complex(1.0));
    CHECK(q[0][1] == Complex(1.0));
    CHECK(q[1][0] == Complex(1.0));
    CHECK(std::abs(q[1][1] - Complex(0.48)) < 1e-15);

    const PickMatrix q2 = pick_matrix(
        InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.25)}}));
    CHECK(std::abs(q2[1][1] - Complex(1.25)) < 1e-15);

    // Hermitian symmetry on a complex dataset
    const PickMatrix h = pick_matrix(InterpolationData::make(
        {{Complex(0.1, 0.2), Complex(0.3, -0.1)}, {Complex(-0.4, 0.1), Complex(0.0, 0.6)}}));
    CHECK(std::abs(h[0][1] - std::conj(h[1][0])) < 1e-15);
    CHECK(h[0][0].imag() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("feasibility worked datasets") {
    SUBCASE("infeasible") {
        const auto v = feasibility(
            InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.8)}}));
        CHECK(v.status == Feasibility::Infeasible);
        CHECK(v.min_eigen_or_pivot < 0.0);
        REQUIRE(v.gammas.gammas.size() == 2);
        CHECK(std::abs(v.gammas.gammas[1] - Complex(1.6)) < 1e-12);
        CHECK(v.gammas.status == SchurSequence::Status::Truncated);
    }
    SUBCASE("strictly feasible") {
        const auto v = feasibility(
            InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.25)}}));
        CHECK(v.status == Feasibility::StrictlyFeasible);
        CHECK(v.min_eigen_or_pivot > 0.0);
        CHECK(std::abs(v.gammas.gammas[0]) < 1e-15);
        CHECK(std::abs(v.gammas.gammas[1] - Complex(0.5)) < 1e-12);
        CHECK(v.gammas.status == SchurSequence::Status::AllInterior);
    }
    SUBCASE("boundary feasible") {
        const auto v = feasibility(
            InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.5)}}));
        CHECK(v.status == Feasibility::BoundaryFeasible);
        CHECK(std::abs(v.min_eigen_or_pivot) <= 1e-10);
        CHECK(std::abs(v.gammas.gammas[1] - Complex(1.0)) < 1e-12);
        CHECK(v.gammas.status == SchurSequence::Status::Unimodular);
        CHECK(v.gammas.terminal_index == 1);
    }
}

TEST_CASE("verdicts agree on random datasets") {
    RngStream rng(81);
    int feasible = 0, infeasible = 0;
    for (int i = 0; i < 200; ++i) {
        const InterpolationData data = random_dataset(rng, i % 2 == 1);
        const auto v = feasibility(data);   // throws VerdictDisagreement on mismatch
        if (v.status == Feasibility::Infeasible)
            ++infeasible;
        else
            ++feasible;
    }
    // the generator must actually exercise both outcomes
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
}

TEST_CASE("construct_interpolant worked examples") {
    SUBCASE("hand back-substitution gives 0.5 z") {
        SchurSequence seq;
        seq.gammas = {Complex(0.0), Complex(0.5)};
        seq.status = SchurSequence::Status::AllInterior;
        seq.terminal_index = 2;
        const AnalyticFn f =
            construct_interpolant({Complex(0.0), Complex(0.5)}, seq, Complex(0.0));
        CHECK(std::abs(f.eval(Complex(0.0))) < 1e-14);
        CHECK(std::abs(f.eval(Complex(0.5)) - Complex(0.25)) < 1e-14);
        RngStream rng(82);
        for (int i = 0; i < 20; ++i) {
            const Complex z = rng.disk(0.9);
            CHECK(std::abs(f.eval(z) - 0.5 * z) < 1e-13);
        }
    }
    SUBCASE("all-zero parameters give the zero function") {
        SchurSequence seq;
        seq.gammas = {Complex(0.0), Complex(0.0)};
        seq.status = SchurSequence::Status::AllInterior;
        seq.terminal_index = 2;
        const AnalyticFn f =
            construct_interpolant({Complex(0.0), Complex(0.4)}, seq, Complex(0.0));
        CHECK(std::abs(f.eval(Complex(0.3, 0.2))) < 1e-15);
    }
    SUBCASE("unimodular terminal produces a Blaschke product") {
        SchurSequence seq;
        seq.gammas = {Complex(0.2), Complex(-0.4)};
        seq.status = SchurSequence::Status::AllInterior;
        seq.terminal_index = 2;
        const std::vector<Complex> nodes{Complex(0.0), Complex(0.4)};
        const AnalyticFn f = construct_interpolant(nodes, seq, std::polar(1.0, 0.7));
        // two synthesis steps plus a unimodular terminal: degree n+1 = 2
        const SchurSequence probe =
            gamma_sequence(f, interior_nodes({0.0, 0.4, 0.0, 0.0, 0.0}));
        CHECK(blaschke_degree_detect(probe) == 2);
    }
    SUBCASE("boundary data reproduce the unique Blaschke solution") {
        const InterpolationData data =
            InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.5)}});
        const AnalyticFn f = construct_interpolant(data, Complex(0.0));
        RngStream rng(83);
        for (int i = 0; i < 20; ++i) {
            const Complex z = rng.disk(0.9);
            CHECK(std::abs(f.eval(z) - z) < 1e-12);   // unique solution is f(z) = z
        }
    }
    SUBCASE("infeasible data rejected") {
        const InterpolationData data =
            InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.8)}});
        CHECK_THROWS_AS(construct_interpolant(data, Complex(0.0)), InfeasibleData);
    }
}

TEST_CASE("round trip: interpolants satisfy constraints and land in the region") {
    RngStream rng(84);
    for (int i = 0; i < 40; ++i) {
        const InterpolationData data = random_dataset(rng, false);
        const auto verdict = feasibility(data);
        REQUIRE(verdict.status == Feasibility::StrictlyFeasible);
        const AnalyticFn g = construct_interpolant(data, rng.disk(0.9));
        for (const auto& pt : data.points)
            CHECK(std::abs(g.eval(pt.z.value()) - pt.w.value()) <= 1e-10);

        const Complex z = rng.disk(0.8);
        bool at_node = false;
        for (const auto& pt : data.points)
            if (std::abs(z - pt.z.value()) < 1e-12) at_node = true;
        if (at_node) continue;
        const ClosedDisk region = variability_region(data, DiskPoint::interior(z));
        CHECK(region.contains(g.eval(z)));

        // the synthesized interpolant reproduces its parameters
        const SchurSequence probe = gamma_sequence(g, interior_nodes(data.node_values()));
        for (std::size_t j = 0; j < probe.gammas.size(); ++j)
            CHECK(std::abs(probe.gammas[j] - verdict.gammas.gammas[j]) <= 1e-9);
    }
}

TEST_CASE("variability region worked examples") {
    SUBCASE("single vanishing constraint is the Schwarz disk") {
        const ClosedDisk r = variability_region(
            InterpolationData::make({{Complex(0.0), Complex(0.0)}}),
            DiskPoint::interior(Complex(0.5)));
        CHECK(std::abs(r.center) < 1e-15);
        CHECK(r.radius == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("worked disk (0.4, 0.4)") {
        const ClosedDisk r = variability_region(
            InterpolationData::make({{Complex(0.0), Complex(0.5)}}),
            DiskPoint::interior(Complex(0.5)));
        CHECK(std::abs(r.center - Complex(0.4)) < 1e-12);
        CHECK(r.radius == doctest::Approx(0.4).epsilon(1e-12));
    }
    SUBCASE("query at a node is a point with exactly zero radius") {
        const ClosedDisk r = variability_region(
            InterpolationData::make({{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.25)}}),
            DiskPoint::interior(Complex(0.5)));
        CHECK(std::abs(r.center - Complex(0.25)) < 1e-12);
        CHECK(r.radius == 0.0);
    }
    SUBCASE("infeasible data rejected") {
        CHECK_THROWS_AS(
            variability_region(InterpolationData::make(
                                   {{Complex(0.0), Complex(0.0)}, {Complex(0.5), Complex(0.8)}}),
                               DiskPoint::interior(Complex(0.25))),
            InfeasibleData);
    }
}

TEST_CASE("variability region is order invariant") {
    RngStream rng(85);
    for (int i = 0; i < 30; ++i) {
        const InterpolationData data = random_dataset(rng, false);
        const DiskPoint z = DiskPoint::interior(rng.disk(0.8));
        const ClosedDisk base = variability_region(data, z);

        std::vector<std::pair<Complex, Complex>> pairs;
        for (const auto& pt : data.points) pairs.push_back({pt.z.value(), pt.w.value()});
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (std::size_t k = pairs.size(); k > 1; --k)
                std::swap(pairs[k - 1], pairs[rng.index(k)]);
            const ClosedDisk permuted = variability_region(InterpolationData::make(pairs), z);
            CHECK(std::abs(permuted.center - base.center) <= 1e-8);
            CHECK(std::abs(permuted.radius - base.radius) <= 1e-8);
        }
    }
}

TEST_CASE("region boundary points extend to boundary-feasible data") {
    RngStream rng(86);
    for (int i = 0; i < 25; ++i) {
        const InterpolationData data = random_dataset(rng, false);
        Complex z = rng.disk(0.8);
        bool clash = true;
        while (clash) {
            clash = false;
            for (const auto& pt : data.points)
                if (std::abs(z - pt.z.value()) < 0.05) clash = true;
            if (clash) z = rng.disk(0.8);
        }
        const ClosedDisk region = variability_region(data, DiskPoint::interior(z));
        REQUIRE(region.radius > 1e-6);
        const Complex b = region.center + region.radius * rng.circle(1.0);

        std::vector<std::pair<Complex, Complex>> pairs;
        for (const auto& pt : data.points) pairs.push_back({pt.z.value(), pt.w.value()});
        pairs.push_back({z, b});
        const auto verdict = feasibility(InterpolationData::make(pairs));
        CHECK(verdict.status == Feasibility::BoundaryFeasible);
    }
}
