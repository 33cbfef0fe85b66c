#include "mpsp/verify.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "mpsp/bounds.hpp"
#include "mpsp/hdq.hpp"
#include "mpsp/nevanlinna_pick.hpp"
#include "mpsp/peschl.hpp"
#include "mpsp/rng.hpp"

namespace mpsp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

AnalyticFn random_fn(RngStream& rng, int max_depth = 3, double cap = 0.9) {
    return random_schur_fn(rng.next_u64(), static_cast<int>(rng.index(max_depth + 1)), cap);
}

std::vector<DiskPoint> random_nodes(RngStream& rng, int count, bool with_repeats) {
    std::vector<DiskPoint> nodes;
    for (int i = 0; i < count; ++i) {
        if (with_repeats && !nodes.empty() && rng.uniform01() < 0.3)
            nodes.push_back(nodes.back());
        else
            nodes.push_back(DiskPoint::interior(rng.disk(0.8)));
    }
    return nodes;
}

MobiusMap random_automorphism(RngStream& rng) {
    return MobiusMap::automorphism(rng.disk(0.8), rng.uniform(0.0, kTwoPi));
}

InterpolationData random_dataset(RngStream& rng, bool perturb) {
    const int n = 1 + static_cast<int>(rng.index(5));
    const AnalyticFn f = random_fn(rng);
    std::vector<std::pair<Complex, Complex>> pairs;
    std::vector<Complex> used;
    while (static_cast<int>(pairs.size()) <= n) {
        const Complex z = rng.disk(0.8);
        bool clash = false;
        for (Complex u : used)
            if (std::abs(u - z) < 0.05) clash = true;
        if (clash) continue;
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

// ---- disk geometry -------------------------------------------------------

double prop_mobius_invariance(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const MobiusMap t = random_automorphism(rng);
        const Complex z = rng.disk(0.95), w = rng.disk(0.95);
        worst = std::max(worst, std::abs(std::abs(bracket(t.apply(z), t.apply(w))) -
                                         std::abs(bracket(z, w))));
    }
    return worst;
}

double prop_bracket_round_trip(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const Complex z = rng.disk(0.95), z0 = rng.disk(0.95);
        worst = std::max(worst, std::abs(bracket_inverse(bracket(z, z0), z0) - z));
    }
    return worst;
}

double prop_disk_image_containment(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const MobiusMap m{rng.disk(1.0), rng.disk(1.0), rng.disk(0.5), 1.0};
        const ClosedDisk img = disk_image(m);
        for (int k = 0; k < 1000; ++k) {
            const Complex w = m.apply(k % 2 == 0 ? rng.disk(1.0) : rng.circle(1.0));
            worst = std::max(worst, std::abs(w - img.center) - img.radius);
        }
    }
    return worst;
}

double prop_disk_image_boundary_reach(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const MobiusMap m{rng.disk(1.0), rng.disk(1.0), rng.disk(0.5), 1.0};
        const ClosedDisk img = disk_image(m);
        double gap = 1e9;
        for (int k = 0; k < 512; ++k)
            gap = std::min(gap, img.boundary_gap(m.apply(rng.circle(1.0))));
        worst = std::max(worst, gap);
    }
    return worst;
}

double prop_triangle_inequality(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const Complex a = rng.disk(0.9), b = rng.disk(0.9), c = rng.disk(0.9);
        worst = std::max(worst, hyperbolic_distance(a, c) - hyperbolic_distance(a, b) -
                                    hyperbolic_distance(b, c));
    }
    return worst;
}

// ---- jets ----------------------------------------------------------------

Jet random_jet(RngStream& rng, Complex base, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = rng.disk(1.0);
    return Jet(base, std::move(c));
}

double jet_gap(const Jet& a, const Jet& b) {
    double m = 0.0;
    for (int i = 0; i <= a.order(); ++i) m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
    return m;
}

double prop_jet_vs_finite_difference(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_schur_fn(rng.next_u64(), 1 + static_cast<int>(rng.index(2)), 0.6);
        const Complex z = rng.disk(0.5);
        const Jet jet = f.eval_jet(z, 3);
        for (int m = 1; m <= 3; ++m) {
            const double h = (m == 1) ? 1e-4 : (m == 2) ? 1e-3 : 3e-3;
            auto stencil = [&](double step) -> Complex {
                switch (m) {
                case 1: return (f.eval(z + step) - f.eval(z - step)) / (2.0 * step);
                case 2:
                    return (f.eval(z + step) - 2.0 * f.eval(z) + f.eval(z - step)) / (step * step);
                default:
                    return (f.eval(z + 2.0 * step) - 2.0 * f.eval(z + step) +
                            2.0 * f.eval(z - step) - f.eval(z - 2.0 * step)) /
                           (2.0 * step * step * step);
                }
            };
            const Complex deriv = (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
            const double factorial = (m == 3) ? 6.0 : (m == 2) ? 2.0 : 1.0;
            const Complex fd = deriv / factorial;
            const Complex exact = jet.coeff(m);
            worst = std::max(worst, std::abs(exact - fd) / (1.0 + std::abs(exact)));
        }
    }
    return worst;
}

double prop_jet_ring_axioms(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    const int max_order = std::max(1, std::min(o.jet_order, 16));
    for (int i = 0; i < o.samples; ++i) {
        const int order = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_order)));
        const Complex base = rng.disk(0.5);
        const Jet x = random_jet(rng, base, order);
        const Jet y = random_jet(rng, base, order);
        const Jet w = random_jet(rng, base, order);
        worst = std::max(worst, jet_gap((x + y) + w, x + (y + w)));
        worst = std::max(worst, jet_gap((x * y) * w, x * (y * w)));
        worst = std::max(worst, jet_gap(x * (y + w), x * y + x * w));
    }
    return worst;
}

double prop_jet_division_round_trip(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    const int max_order = std::max(1, std::min(o.jet_order, 16));
    for (int i = 0; i < o.samples; ++i) {
        const int order = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_order)));
        const Complex base = rng.disk(0.5);
        const Jet x = random_jet(rng, base, order);
        const Jet y = random_jet(rng, base, order) + Complex(1.0 + rng.uniform01());
        worst = std::max(worst, jet_gap(Jet::divide(x * y, y), x));
    }
    return worst;
}

// ---- functions -----------------------------------------------------------

double prop_interior_maximum_principle(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng);
        for (int k = 0; k < 25; ++k)
            worst = std::max(worst, std::abs(f.eval(rng.disk(0.99))) - 1.0);
    }
    return worst;
}

double prop_blaschke_boundary_modulus(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        std::vector<Complex> zeros;
        const int degree = 1 + static_cast<int>(rng.index(4));
        for (int k = 0; k < degree; ++k) zeros.push_back(rng.disk(0.8));
        const AnalyticFn b = AnalyticFn::blaschke(rng.uniform(0.0, kTwoPi), zeros);
        for (int k = 0; k < 25; ++k)
            worst = std::max(worst, std::abs(std::abs(b.eval(rng.circle(1.0))) - 1.0));
    }
    return worst;
}

// ---- hdq -----------------------------------------------------------------

double prop_multi_point_schwarz_pick(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng);
        const auto nodes = random_nodes(rng, 1 + static_cast<int>(rng.index(4)), true);
        const AnalyticFn fj = iterated(f, nodes);
        worst = std::max(worst, std::abs(fj.eval(rng.disk(0.9))) - 1.0);
    }
    return worst;
}

double prop_blaschke_equality_case(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const int degree = 1 + static_cast<int>(rng.index(4));
        std::vector<Complex> zeros;
        for (int k = 0; k < degree; ++k) zeros.push_back(rng.disk(0.75));
        const AnalyticFn b = AnalyticFn::blaschke(rng.uniform(0.0, kTwoPi), zeros);
        const auto nodes = random_nodes(rng, degree, true);
        const AnalyticFn fj = iterated(b, nodes);
        worst = std::max(worst, std::abs(std::abs(fj.eval(rng.disk(0.8))) - 1.0));
    }
    return worst;
}

double prop_conjugation_invariance(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 2, 0.85);
        const MobiusMap S = random_automorphism(rng);
        const MobiusMap T = random_automorphism(rng);
        const AnalyticFn conjugated =
            AnalyticFn::post_mobius(S, AnalyticFn::pre_automorphism(T, f));
        const int j = 1 + static_cast<int>(rng.index(3));
        const auto nodes = random_nodes(rng, j, false);
        std::vector<DiskPoint> mapped;
        for (const DiskPoint& n : nodes) mapped.push_back(DiskPoint::interior(T.apply(n.value())));
        const Complex z = rng.disk(0.85);
        const Complex lhs = iterated(conjugated, nodes).eval(z);
        const Complex rhs = iterated(f, mapped).eval(T.apply(z));
        worst = std::max(worst, std::abs(std::abs(lhs) - std::abs(rhs)));
    }
    return worst;
}

double prop_chain_rule(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 2, 0.85);
        const MobiusMap T = random_automorphism(rng);
        const AnalyticFn g = AnalyticFn::post_mobius(T, AnalyticFn::identity());
        const DiskPoint z0 = DiskPoint::interior(rng.disk(0.8));
        const AnalyticFn lhs = delta(AnalyticFn::pre_automorphism(T, f), z0);
        const DiskPoint gz0 = DiskPoint::interior(T.apply(z0.value()));
        const AnalyticFn rhs = AnalyticFn::product(
            AnalyticFn::pre_automorphism(T, delta(f, gz0)), delta(g, z0));
        for (int k = 0; k < 3; ++k) {
            const Complex z = rng.disk(0.85);
            worst = std::max(worst, std::abs(lhs.eval(z) - rhs.eval(z)));
        }
    }
    return worst;
}

double prop_distance_contraction(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 2, 0.9);
        const auto nodes = random_nodes(rng, 1 + static_cast<int>(rng.index(3)), true);
        const DiskPoint zj = DiskPoint::interior(rng.disk(0.8));
        const Complex z = rng.disk(0.8);
        const AnalyticFn fj = iterated(f, nodes);
        const Complex a = fj.eval(z), b = fj.eval(zj.value());
        if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0) continue;
        worst = std::max(worst,
                         hyperbolic_distance(a, b) - hyperbolic_distance(z, zj.value()));
    }
    return worst;
}

double prop_node_coincidence_continuity(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    const int trials = std::max(1, o.samples / 10);
    for (int i = 0; i < trials; ++i) {
        const AnalyticFn f = random_fn(rng, 2, 0.85);
        const Complex z0 = rng.disk(0.6);
        const Complex z1 = z0 + Complex(1e-6, 0.0);
        const Complex z = rng.disk(0.8);
        const double separated = std::abs(iterated(f, interior_nodes({z0, z1})).eval(z));
        const double coincident = std::abs(iterated(f, interior_nodes({z0, z0})).eval(z));
        worst = std::max(worst, std::abs(separated - coincident));
    }
    return worst;
}

// ---- peschl ----------------------------------------------------------------

double prop_peschl_dual_path(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 3, 0.8);
        const DiskPoint z = DiskPoint::interior(rng.disk(0.7));
        const PeschlValues v = peschl(f, z);
        const Complex d[3] = {v.d1, v.d2, v.d3};
        for (int n = 1; n <= 3; ++n) {
            const Complex oracle = peschl_recentered(f, z, n);
            worst = std::max(worst, std::abs(d[n - 1] - oracle) / (1.0 + std::abs(oracle)));
        }
    }
    return worst;
}

double prop_yamashita_nonnegative(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 3, 0.85);
        const DiskPoint z = DiskPoint::interior(rng.disk(0.8));
        worst = std::max(worst, -yamashita_residual(f, z));
        worst = std::max(worst, std::abs(peschl(f, z).d1) - 1.0);
    }
    return worst;
}

double prop_third_order_nonnegative(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 3, 0.85);
        worst = std::max(worst, -third_order_residual(f, DiskPoint::interior(rng.disk(0.8))));
    }
    return worst;
}

double prop_gamma_taylor_vs_schur(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        std::vector<Complex> gammas{Complex(0.0)};
        const int depth = 3 + static_cast<int>(rng.index(2));
        for (int j = 0; j < depth; ++j) gammas.push_back(rng.disk(0.8));
        const std::vector<Complex> nodes(gammas.size(), Complex(0.0));
        const AnalyticFn g = synthesize_from_gammas(nodes, gammas, rng.disk(0.8));
        const Jet jet = g.eval_jet(Complex(0.0), 4);
        const auto closed =
            gamma_from_taylor({jet.coeff(1), jet.coeff(2), jet.coeff(3), jet.coeff(4)});
        const SchurSequence seq = schur_classic(g, 4);
        for (int n = 1; n <= 4; ++n) {
            const Complex reference = seq.gammas[static_cast<std::size_t>(n)];
            worst = std::max(worst, std::abs(closed[static_cast<std::size_t>(n - 1)] - reference) /
                                        (1.0 + std::abs(reference)));
        }
    }
    return worst;
}

// ---- bounds ----------------------------------------------------------------

double prop_value_region_membership(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng);
        const auto nodes = random_nodes(rng, 1 + static_cast<int>(rng.index(3)), true);
        const DiskPoint a = DiskPoint::interior(rng.disk(0.7));
        const SchurSequence seq = gamma_sequence(f, nodes);
        if (seq.status != SchurSequence::Status::AllInterior) continue;
        const ValueRegion region = value_region(nodes, seq.gammas, a);
        worst = std::max(worst,
                         std::abs(f.eval(a.value()) - region.disk.center) - region.disk.radius);
    }
    return worst;
}

double prop_value_region_sharpness(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const int n = 1 + static_cast<int>(rng.index(3));
        std::vector<Complex> nodes, gammas;
        for (int k = 0; k < n; ++k) {
            nodes.push_back(rng.disk(0.7));
            gammas.push_back(rng.disk(0.8));
        }
        const AnalyticFn f = synthesize_from_gammas(nodes, gammas, rng.circle(1.0));
        const DiskPoint a = DiskPoint::interior(rng.disk(0.7));
        const ValueRegion region = value_region(interior_nodes(nodes), gammas, a);
        worst = std::max(worst, region.disk.boundary_gap(f.eval(a.value())));
    }
    return worst;
}

double prop_modulus_chain_consistency(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng);
        const auto nodes = random_nodes(rng, 1 + static_cast<int>(rng.index(3)), true);
        const DiskPoint a = DiskPoint::interior(rng.disk(0.7));
        const SchurSequence seq = gamma_sequence(f, nodes);
        if (seq.status != SchurSequence::Status::AllInterior) continue;
        const BoundChain chain = modulus_bound_chain(nodes, seq.gammas, a);
        for (std::size_t k = 1; k < chain.values.size(); ++k)
            worst = std::max(worst, chain.values[k] - chain.values[k - 1]);
        worst = std::max(worst, std::abs(f.eval(a.value())) - chain.values.back());
        const ValueRegion region = value_region(nodes, seq.gammas, a);
        worst = std::max(worst, std::abs(region.disk.center) + region.disk.radius -
                                    chain.values.back());
    }
    return worst;
}

double prop_distance_chain_consistency(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 2, 0.9);
        const DiskPoint z0 = DiskPoint::interior(rng.disk(0.7));
        const DiskPoint z = DiskPoint::interior(rng.disk(0.7));
        std::vector<DiskPoint> nodes{z0};
        const int extra = static_cast<int>(rng.index(3));
        for (int k = 0; k < extra; ++k)
            nodes.push_back(rng.uniform01() < 0.5 ? z0 : DiskPoint::interior(rng.disk(0.7)));
        const SchurSequence seq = gamma_sequence(f, nodes);
        if (seq.status != SchurSequence::Status::AllInterior) continue;
        const DistanceChain chain = distance_bound_chain(nodes, seq.gammas, z, z0);
        for (std::size_t k = 1; k < chain.values.size(); ++k)
            worst = std::max(worst, chain.values[k] - chain.values[k - 1]);
        worst = std::max(worst, exp_hyperbolic_distance(f.eval(z.value()), f.eval(z0.value())) -
                                    chain.values.back());
    }
    return worst;
}

double prop_dieudonne_membership(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 2, 0.85);
        const Complex z0 = rng.disk(0.7);
        Complex z = rng.disk(0.7);
        if (std::abs(z - z0) < 1e-3) z += Complex(0.1, 0.0);
        const Jet jet = f.eval_jet(z, 1);
        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(z0), DiskPoint::interior(f.eval(z0)),
                             DiskPoint::interior(z), jet.value());
        worst = std::max(worst, std::abs(jet.derivative(1) - region.center) - region.radius);
    }
    return worst;
}

double prop_dieudonne_blaschke_sharpness(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const int degree = 1 + static_cast<int>(rng.index(2));
        std::vector<Complex> zeros;
        for (int k = 0; k < degree; ++k) zeros.push_back(rng.disk(0.6));
        const AnalyticFn b = AnalyticFn::blaschke(rng.uniform(0.0, kTwoPi), zeros);
        const Complex z0 = rng.disk(0.6);
        Complex z = rng.disk(0.6);
        if (std::abs(z - z0) < 1e-3) z += Complex(0.15, 0.0);
        const Jet jet = b.eval_jet(z, 1);
        const ClosedDisk region =
            dieudonne_region(DiskPoint::interior(z0), DiskPoint::interior(b.eval(z0)),
                             DiskPoint::interior(z), jet.value());
        worst = std::max(worst, region.boundary_gap(jet.derivative(1)));
    }
    return worst;
}

double prop_dieudonne_equivalence(RngStream& rng, const VerifyOptions& o) {
    double disagreements = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const AnalyticFn f = random_fn(rng, 1, 0.8);
        const Complex z0 = rng.disk(0.6);
        const Complex z = rng.disk(0.6);
        if (std::abs(z - z0) < 5e-2) continue;
        const Complex w0 = f.eval(z0);
        const Jet jet = f.eval_jet(z, 1);
        const Complex w = jet.value();
        const Complex wp = jet.derivative(1) + (i % 2 == 0 ? Complex(0.0) : rng.disk(1.5));

        const Complex p = bracket(w0, w) / bracket(z0, z);
        const Complex q = (1.0 - std::norm(z)) * wp / (1.0 - std::norm(w));
        const double v1 = std::abs(bracket(q, p) / bracket(z, z0));
        const double v2 = std::abs(bracket(p, q) / bracket(z0, z));
        if (std::abs(v1 - v2) > 1e-12) disagreements += 1.0;

        const ClosedDisk region = dieudonne_region(
            DiskPoint::interior(z0), DiskPoint::interior(w0), DiskPoint::interior(z), w);
        const double margin = region.radius - std::abs(wp - region.center);
        if (std::abs(v1 - 1.0) < 1e-8 || std::abs(margin) < 1e-8) continue;
        if ((v1 <= 1.0) != (margin >= 0.0)) disagreements += 1.0;
    }
    return disagreements;
}

double prop_second_order_residual(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        std::vector<Complex> gammas{Complex(0.0), rng.disk(0.8), rng.disk(0.8)};
        const AnalyticFn f = synthesize_from_gammas(
            {Complex(0.0), Complex(0.0), Complex(0.0)}, gammas, rng.disk(0.8));
        const Complex z = rng.disk(0.8);
        if (std::abs(z) < 0.05) continue;
        worst = std::max(worst, -dieudonne_second_order_residual(f, DiskPoint::interior(z)));
    }
    return worst;
}

double prop_fprime0_residual(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        std::vector<Complex> gammas{Complex(0.0), rng.disk(0.8)};
        const AnalyticFn f =
            synthesize_from_gammas({Complex(0.0), Complex(0.0)}, gammas, rng.disk(0.8));
        const Complex z = rng.disk(0.8);
        if (std::abs(z) < 0.05) continue;
        worst = std::max(worst, -dieudonne_fprime0_residual(f, DiskPoint::interior(z)));
    }
    return worst;
}

// ---- nevanlinna_pick -------------------------------------------------------

double prop_np_verdict_agreement(RngStream& rng, const VerifyOptions& o) {
    double disagreements = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        try {
            feasibility(random_dataset(rng, i % 2 == 1));
        } catch (const VerdictDisagreement&) {
            disagreements += 1.0;
        }
    }
    return disagreements;
}

double prop_np_interpolant_constraints(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const InterpolationData data = random_dataset(rng, false);
        const AnalyticFn g = construct_interpolant(data, rng.disk(0.9));
        for (const auto& pt : data.points)
            worst = std::max(worst, std::abs(g.eval(pt.z.value()) - pt.w.value()));
    }
    return worst;
}

double prop_np_region_membership(RngStream& rng, const VerifyOptions& o) {
    double worst = -1.0;
    for (int i = 0; i < o.samples; ++i) {
        const InterpolationData data = random_dataset(rng, false);
        const AnalyticFn g = construct_interpolant(data, rng.disk(0.9));
        const Complex z = rng.disk(0.8);
        bool at_node = false;
        for (const auto& pt : data.points)
            if (std::abs(z - pt.z.value()) < 1e-9) at_node = true;
        if (at_node) continue;
        const ClosedDisk region = variability_region(data, DiskPoint::interior(z));
        worst = std::max(worst, std::abs(g.eval(z) - region.center) - region.radius);
    }
    return worst;
}

double prop_np_permutation_invariance(RngStream& rng, const VerifyOptions& o) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const InterpolationData data = random_dataset(rng, false);
        const DiskPoint z = DiskPoint::interior(rng.disk(0.8));
        const ClosedDisk base = variability_region(data, z);
        std::vector<std::pair<Complex, Complex>> pairs;
        for (const auto& pt : data.points) pairs.push_back({pt.z.value(), pt.w.value()});
        for (std::size_t k = pairs.size(); k > 1; --k) std::swap(pairs[k - 1], pairs[rng.index(k)]);
        const ClosedDisk permuted = variability_region(InterpolationData::make(pairs), z);
        worst = std::max(worst, std::abs(permuted.center - base.center));
        worst = std::max(worst, std::abs(permuted.radius - base.radius));
    }
    return worst;
}

double prop_np_region_exhaustiveness(RngStream& rng, const VerifyOptions& o) {
    double failures = 0.0;
    const int trials = std::max(1, o.samples / 4);
    for (int i = 0; i < trials; ++i) {
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
        if (region.radius < 1e-6) continue;
        const Complex b = region.center + region.radius * rng.circle(1.0);
        std::vector<std::pair<Complex, Complex>> pairs;
        for (const auto& pt : data.points) pairs.push_back({pt.z.value(), pt.w.value()});
        pairs.push_back({z, b});
        if (feasibility(InterpolationData::make(pairs)).status != Feasibility::BoundaryFeasible)
            failures += 1.0;
    }
    return failures;
}

struct PropertyDef {
    const char* name;
    double tolerance;
    double (*run)(RngStream&, const VerifyOptions&);
};

const PropertyDef kProperties[] = {
    {"mobius_invariance", 1e-12, prop_mobius_invariance},
    {"bracket_round_trip", 1e-12, prop_bracket_round_trip},
    {"disk_image_containment", 1e-10, prop_disk_image_containment},
    {"disk_image_boundary_reach", 1e-6, prop_disk_image_boundary_reach},
    {"hyperbolic_triangle_inequality", 1e-12, prop_triangle_inequality},
    {"jet_vs_finite_difference", 1e-5, prop_jet_vs_finite_difference},
    {"jet_ring_axioms", 1e-12, prop_jet_ring_axioms},
    {"jet_division_round_trip", 1e-11, prop_jet_division_round_trip},
    {"interior_maximum_principle", 0.0, prop_interior_maximum_principle},
    {"blaschke_boundary_modulus", 1e-9, prop_blaschke_boundary_modulus},
    {"multi_point_schwarz_pick", 1e-9, prop_multi_point_schwarz_pick},
    {"blaschke_equality_case", 1e-8, prop_blaschke_equality_case},
    {"conjugation_invariance", 1e-8, prop_conjugation_invariance},
    {"chain_rule", 1e-9, prop_chain_rule},
    {"distance_contraction", 1e-9, prop_distance_contraction},
    {"node_coincidence_continuity", 1e-4, prop_node_coincidence_continuity},
    {"peschl_dual_path", 1e-8, prop_peschl_dual_path},
    {"yamashita_nonnegative", 1e-9, prop_yamashita_nonnegative},
    {"third_order_nonnegative", 1e-9, prop_third_order_nonnegative},
    {"gamma_taylor_vs_schur", 1e-8, prop_gamma_taylor_vs_schur},
    {"value_region_membership", 1e-9, prop_value_region_membership},
    {"value_region_sharpness", 1e-8, prop_value_region_sharpness},
    {"modulus_chain_consistency", 1e-9, prop_modulus_chain_consistency},
    {"distance_chain_consistency", 1e-9, prop_distance_chain_consistency},
    {"dieudonne_membership", 1e-9, prop_dieudonne_membership},
    {"dieudonne_blaschke_sharpness", 1e-8, prop_dieudonne_blaschke_sharpness},
    {"dieudonne_equivalence", 0.5, prop_dieudonne_equivalence},
    {"second_order_residual_nonnegative", 1e-9, prop_second_order_residual},
    {"fprime0_residual_nonnegative", 1e-9, prop_fprime0_residual},
    {"np_verdict_agreement", 0.5, prop_np_verdict_agreement},
    {"np_interpolant_constraints", 1e-10, prop_np_interpolant_constraints},
    {"np_region_membership", 1e-9, prop_np_region_membership},
    {"np_permutation_invariance", 1e-8, prop_np_permutation_invariance},
    {"np_region_exhaustiveness", 0.5, prop_np_region_exhaustiveness},
};

} // namespace

std::vector<std::pair<std::string, double>> verification_catalog() {
    std::vector<std::pair<std::string, double>> catalog;
    for (const PropertyDef& def : kProperties) catalog.push_back({def.name, def.tolerance});
    return catalog;
}

std::vector<PropertyResult> run_verification(const VerifyOptions& options) {
    if (options.samples < 1) throw std::invalid_argument("verify: samples >= 1 required");
    if (options.jet_order < 3 || options.jet_order > 16)
        throw std::invalid_argument("verify: jet_order in [3, 16] required");
    for (const auto& [name, value] : options.tolerance_overrides) {
        (void)value;
        bool known = false;
        for (const PropertyDef& def : kProperties)
            if (name == def.name) known = true;
        if (!known) throw std::invalid_argument("verify: unknown tolerance name \"" + name + "\"");
    }

    std::vector<PropertyResult> results;
    results.reserve(std::size(kProperties));
    for (std::size_t i = 0; i < std::size(kProperties); ++i) {
        const PropertyDef& def = kProperties[i];
        RngStream rng = RngStream::derived(options.seed, i);
        PropertyResult r;
        r.name = def.name;
        r.samples = options.samples;
        r.tolerance = def.tolerance;
        const auto it = options.tolerance_overrides.find(def.name);
        if (it != options.tolerance_overrides.end()) r.tolerance = it->second;
        r.max_violation = def.run(rng, options);
        r.pass = r.max_violation <= r.tolerance;
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace mpsp
