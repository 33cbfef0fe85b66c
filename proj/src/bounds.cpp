#include "mpsp/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "mpsp/peschl.hpp"

namespace mpsp {

namespace {

void check_gammas(const std::vector<Complex>& gammas, bool last_may_touch_boundary) {
    for (std::size_t j = 0; j < gammas.size(); ++j) {
        if (!finite(gammas[j])) throw std::invalid_argument("non-finite gamma");
        const double m = std::abs(gammas[j]);
        const bool last = j + 1 == gammas.size();
        if (last && last_may_touch_boundary) {
            if (m > 1.0 + kClosedSlack)
                throw GammaOutOfRange("gamma beyond the closed disk");
        } else if (!(m < 1.0)) {
            throw GammaOutOfRange("interior gamma required");
        }
    }
}

double t_step(double tau_abs, double gamma_abs, double x) {
    return (tau_abs * x + gamma_abs) / (1.0 + tau_abs * gamma_abs * x);
}

} // namespace

ValueRegion value_region(const std::vector<DiskPoint>& nodes,
                         const std::vector<Complex>& gammas, const DiskPoint& a) {
    if (nodes.size() != gammas.size() || nodes.empty())
        throw std::invalid_argument("value_region: one gamma per node required");
    if (!a.is_interior()) throw std::invalid_argument("value_region: interior query point required");
    check_gammas(gammas, /*last_may_touch_boundary=*/true);

    MobiusMap composite = MobiusMap::identity();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Complex tau = bracket(a.value(), nodes[j].value());
        composite = composite.compose(MobiusMap::interpolation_step(tau, gammas[j]));
        // tau = 0 (query at a node) makes A_j constant: the rest of the
        // composition cannot move the image, so stop here.
        if (tau == 0.0) break;
    }

    ValueRegion region;
    region.disk = disk_image(composite);
    region.interior_refinement = std::abs(gammas.back()) < 1.0 - kUnimodularTol;
    return region;
}

BoundChain modulus_bound_chain(const std::vector<DiskPoint>& nodes,
                               const std::vector<Complex>& gammas, const DiskPoint& a) {
    if (nodes.size() != gammas.size() || nodes.empty())
        throw std::invalid_argument("modulus_bound_chain: one gamma per node required");
    if (!a.is_interior()) throw std::invalid_argument("modulus_bound_chain: interior point required");
    check_gammas(gammas, /*last_may_touch_boundary=*/false);

    std::vector<double> taus(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j)
        taus[j] = std::abs(bracket(a.value(), nodes[j].value()));

    BoundChain chain;
    chain.nodes_used.reserve(nodes.size());
    for (const DiskPoint& p : nodes) chain.nodes_used.push_back(p.value());
    chain.gammas_used = gammas;
    chain.values.reserve(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        double x = 1.0;
        for (std::size_t j = k + 1; j-- > 0;)
            x = t_step(taus[j], std::abs(gammas[j]), x);
        chain.values.push_back(x);
    }
    return chain;
}

DistanceChain distance_bound_chain(const std::vector<DiskPoint>& nodes,
                                   const std::vector<Complex>& gammas, const DiskPoint& z,
                                   const DiskPoint& z0) {
    if (nodes.size() != gammas.size() || nodes.empty())
        throw std::invalid_argument("distance_bound_chain: one gamma per node required");
    if (!(nodes.front() == z0))
        throw std::invalid_argument("distance_bound_chain: nodes[0] must equal z0");
    if (!z.is_interior()) throw std::invalid_argument("distance_bound_chain: interior point required");
    check_gammas(gammas, /*last_may_touch_boundary=*/false);

    std::vector<double> taus(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j)
        taus[j] = std::abs(bracket(z.value(), nodes[j].value()));

    DistanceChain chain;
    chain.values.reserve(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        double x = 1.0;
        for (std::size_t j = k + 1; j-- > 1;)
            x = t_step(taus[j], std::abs(gammas[j]), x);
        chain.values.push_back((1.0 + taus[0] * x) / (1.0 - taus[0] * x));
    }
    return chain;
}

std::pair<double, double> two_sided_modulus_bounds(Complex gamma0, Complex tau0,
                                                   std::optional<Complex> f1_at_z) {
    if (!finite(gamma0) || !finite(tau0))
        throw std::invalid_argument("two_sided_modulus_bounds: non-finite input");
    if (!(std::abs(gamma0) < 1.0) || !(std::abs(tau0) < 1.0))
        throw std::invalid_argument("two_sided_modulus_bounds: |gamma0| < 1 and |tau0| < 1 required");
    const double g = std::abs(gamma0);
    if (f1_at_z) {
        if (std::abs(*f1_at_z) > 1.0 + kClosedSlack)
            throw std::invalid_argument("two_sided_modulus_bounds: |f1_at_z| <= 1 required");
        const double u = std::abs(tau0 * *f1_at_z);
        return {std::abs(g - u) / (1.0 - u * g), (g + u) / (1.0 + u * g)};
    }
    const double t = std::abs(tau0);
    return {std::max(0.0, (g - t) / (1.0 - t * g)), (g + t) / (1.0 + t * g)};
}

ClosedDisk dieudonne_region(const DiskPoint& z0, const DiskPoint& w0, const DiskPoint& z,
                            Complex w) {
    const Complex zc0 = z0.value(), wc0 = w0.value(), zc = z.value();
    if (zc == zc0) throw std::invalid_argument("dieudonne_region: z != z0 required");
    if (!z.is_interior() || !z0.is_interior())
        throw std::invalid_argument("dieudonne_region: interior points required");
    if (!(std::abs(wc0) < 1.0) || !(std::abs(w) < 1.0))
        throw std::invalid_argument("dieudonne_region: |w0| < 1 and |w| < 1 required");

    const double tau = std::abs(bracket(zc, zc0));
    const double sigma = std::abs(bracket(w, wc0));
    if (sigma > tau + 1e-9)
        throw InconsistentData("dieudonne_region: |[w, w0]| <= |[z, z0]| violated");

    const double pw0 = 1.0 - std::norm(wc0);
    const Complex one_minus = 1.0 - std::conj(wc0) * w;
    const Complex center = ((w - wc0) / (zc - zc0)) * (one_minus / pw0) *
                           ((1.0 - std::norm(zc0)) / (1.0 - std::conj(zc0) * zc));
    double radius = (std::norm(one_minus) / pw0 * tau - std::norm(w - wc0) / (pw0 * tau)) /
                    (1.0 - std::norm(zc));
    if (radius < 0.0) radius = 0.0;   // consistency already checked; absorb rounding
    return {center, radius};
}

double dieudonne_second_order_residual(const AnalyticFn& f, const DiskPoint& z) {
    const Complex zc = z.value();
    if (!(std::abs(zc) > 0.0) || !z.is_interior())
        throw std::invalid_argument("dieudonne_second_order_residual: 0 < |z| < 1 required");
    const Complex f0 = f.eval(Complex(0.0));
    if (std::abs(f0) > 1e-12)
        throw HypothesisViolated("dieudonne_second_order_residual: f(0) = 0 required");

    // g = f/z realized as the difference quotient at 0
    const AnalyticFn g = AnalyticFn::delta_quotient(f, DiskPoint::interior(Complex(0.0)));
    const Complex gz = g.eval(zc);
    if (std::abs(gz) >= 1.0 - 1e-12)
        throw HypothesisViolated("dieudonne_second_order_residual: f is an automorphism");

    const PeschlValues v = peschl(g, z);
    const double slack = 1.0 - 0.5 * std::abs(v.d2) - std::norm(v.d1);
    const double az = std::abs(zc);
    const double scale = az * (az * az - std::norm(f.eval(zc))) /
                         ((1.0 - az * az) * (1.0 - az * az));
    return scale * slack;
}

double dieudonne_fprime0_residual(const AnalyticFn& f, const DiskPoint& z) {
    const Complex zc = z.value();
    if (!(std::abs(zc) > 0.0) || !z.is_interior())
        throw std::invalid_argument("dieudonne_fprime0_residual: 0 < |z| < 1 required");
    const Jet at0 = f.eval_jet(Complex(0.0), 1);
    if (std::abs(at0.value()) > 1e-12)
        throw HypothesisViolated("dieudonne_fprime0_residual: f(0) = 0 required");

    const Complex fp0 = at0.derivative(1);
    const Jet atz = f.eval_jet(zc, 1);
    const Complex fz = atz.value();
    const Complex fpz = atz.derivative(1);
    const Complex q = fz / zc;

    const double lhs = std::abs(fpz * (1.0 - std::norm(fp0)) - 2.0 * q +
                                std::conj(fp0) * q * q + fp0);
    const double rhs = (std::norm(zc - std::conj(fp0) * fz) - std::norm(q - fp0)) /
                       (1.0 - std::norm(zc));
    return rhs - lhs;
}

} // namespace mpsp
