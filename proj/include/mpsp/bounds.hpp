#ifndef MPSP_BOUNDS_HPP
#define MPSP_BOUNDS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mpsp/functions.hpp"

namespace mpsp {

// Closed disk of admissible values f(a), from composing the step maps
//   A_j(x) = (tau_j x + gamma_j)/(1 + conj(gamma_j) tau_j x),  tau_j = [a, z_j]
// and taking the image of the closed unit disk once. interior_refinement is
// false when |gamma_last| = 1: only the closed-disk statement applies then.
struct ValueRegion {
    ClosedDisk disk;
    bool interior_refinement = true;
};

ValueRegion value_region(const std::vector<DiskPoint>& nodes,
                         const std::vector<Complex>& gammas, const DiskPoint& a);

// Chain T_0(1) >= T_0(T_1(1)) >= ... with T_j(x) = (|tau_j|x + |gamma_j|)/(1 + |tau_j gamma_j|x);
// the final entry bounds |f(a)| for any f consistent with the data.
struct BoundChain {
    std::vector<double> values;
    std::vector<Complex> nodes_used;
    std::vector<Complex> gammas_used;
};

BoundChain modulus_bound_chain(const std::vector<DiskPoint>& nodes,
                               const std::vector<Complex>& gammas, const DiskPoint& a);

// Chain R_0(1) >= R_1(1) >= ... >= R_n(1) with R_0(x) = (1+|tau_0|x)/(1-|tau_0|x)
// and R_k = R_0 o T_1 o ... o T_k; the final entry bounds exp d(f(z), f(z0)).
// gammas[0] is carried for alignment but only gammas[1..] enter the chain.
struct DistanceChain {
    std::vector<double> values;
};

DistanceChain distance_bound_chain(const std::vector<DiskPoint>& nodes,
                                   const std::vector<Complex>& gammas, const DiskPoint& z,
                                   const DiskPoint& z0);

// Two-sided bound on |f(z)| from gamma0 = f(z0), tau0 = [z, z0] and
// optionally w = Delta_{z0}f(z). Without w the worst case |w| = 1 is used
// and the lower bound is clamped at 0.
std::pair<double, double> two_sided_modulus_bounds(Complex gamma0, Complex tau0,
                                                   std::optional<Complex> f1_at_z);

// Disk of admissible derivatives f'(z) given f(z0) = w0 and f(z) = w
// (generalized Dieudonne bound). Requires Schwarz-Pick consistency
// |[w, w0]| <= |[z, z0]| (InconsistentData otherwise). For z0 = w0 = 0 this
// is the classical |z f'(z) - f(z)| <= (|z|^2 - |f(z)|^2)/(1 - |z|^2).
ClosedDisk dieudonne_region(const DiskPoint& z0, const DiskPoint& w0, const DiskPoint& z,
                            Complex w);

// Slack (RHS - LHS) of the second-order bound for f with f(0) = 0,
//   |z^2 f''/2 - (zf'-f)/(1-|z|^2) + conj(f)(zf'-f)^2/(|z|^2-|f|^2)|
//     + |z||zf'-f|^2/(|z|^2-|f|^2)  <=  |z|(|z|^2-|f|^2)/(1-|z|^2)^2,
// computed through the equivalent |D2 g|/2 + |D1 g|^2 <= 1 for g = f/z and
// rescaled to the displayed units.
double dieudonne_second_order_residual(const AnalyticFn& f, const DiskPoint& z);

// Slack (RHS - LHS) of the f'(0)-refined bound for f with f(0) = 0:
//   |f'(z)(1-|f'(0)|^2) - 2f(z)/z + conj(f'(0))(f(z)/z)^2 + f'(0)|
//     <= (|z - conj(f'(0)) f(z)|^2 - |f(z)/z - f'(0)|^2) / (1-|z|^2).
double dieudonne_fprime0_residual(const AnalyticFn& f, const DiskPoint& z);

} // namespace mpsp

#endif
