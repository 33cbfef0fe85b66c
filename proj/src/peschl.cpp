#include "mpsp/peschl.hpp"

#include <cmath>
#include <stdexcept>

namespace mpsp {

PeschlValues peschl(const AnalyticFn& f, const DiskPoint& z) {
    if (!z.is_interior()) throw std::invalid_argument("peschl: interior point required");
    const Jet jet = f.eval_jet(z.value(), 3);
    const Complex w = jet.value();
    if (std::abs(w) >= 1.0 - 1e-12)
        throw UnimodularValue("peschl: |f(z)| = 1, invariant derivatives undefined");

    const Complex zc = z.value();
    const Complex f1 = jet.derivative(1);
    const Complex f2 = jet.derivative(2);
    const Complex f3 = jet.derivative(3);
    const double pz = 1.0 - std::norm(zc);    // 1 - |z|^2
    const double pw = 1.0 - std::norm(w);     // 1 - |f(z)|^2
    const Complex zb = std::conj(zc);
    const Complex wb = std::conj(w);

    PeschlValues v;
    v.d1 = pz * f1 / pw;
    v.d2 = (pz * pz / pw) * (f2 - 2.0 * zb * f1 / pz + 2.0 * wb * f1 * f1 / pw);
    v.d3 = (pz * pz * pz / pw) *
           (f3 - 6.0 * zb * f2 / pz + 6.0 * wb * f1 * f2 / pw + 6.0 * zb * zb * f1 / (pz * pz) -
            12.0 * zb * wb * f1 * f1 / (pz * pw) + 6.0 * wb * wb * f1 * f1 * f1 / (pw * pw));
    return v;
}

Complex peschl_recentered(const AnalyticFn& f, const DiskPoint& z0, int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("peschl_recentered: n in 1..3");
    if (!z0.is_interior()) throw std::invalid_argument("peschl_recentered: interior point required");

    const Complex zc = z0.value();
    const Complex w0 = f.eval(zc);
    if (std::abs(w0) >= 1.0 - 1e-12)
        throw UnimodularValue("peschl_recentered: |f(z0)| = 1");

    // g = S o f o T with T(w) = [w, -z0] and S(x) = [x, f(z0)]
    const MobiusMap T{1.0, zc, std::conj(zc), 1.0};
    const MobiusMap S = MobiusMap::bracket_with(w0);
    const AnalyticFn g = AnalyticFn::post_mobius(S, AnalyticFn::pre_automorphism(T, f));
    return g.eval_jet(Complex(0.0), n).derivative(n);
}

std::array<Complex, 4> gamma_from_taylor(const std::array<Complex, 4>& a) {
    const Complex a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3];
    for (Complex c : a)
        if (!finite(c)) throw std::invalid_argument("gamma_from_taylor: non-finite coefficient");

    const double q1 = 1.0 - std::norm(a1);            // 1 - |a1|^2
    const Complex a1b = std::conj(a1);
    const Complex a2b = std::conj(a2);
    const Complex a3b = std::conj(a3);

    const Complex den3 = q1 * q1 - std::norm(a2);
    const Complex den4 = q1 * q1 * q1 - q1 * (std::norm(a3) + 2.0 * std::norm(a2)) +
                         std::norm(a2) * std::norm(a2) - a1 * a2b * a2b * a3 -
                         a1b * a2 * a2 * a3b;

    if (std::abs(q1) <= 1e-12 || std::abs(den3) <= 1e-12 || std::abs(den4) <= 1e-12)
        throw DegenerateDenominator("gamma_from_taylor: degenerate denominator "
                                    "(low-degree Blaschke product)");

    std::array<Complex, 4> g;
    g[0] = a1;
    g[1] = a2 / q1;
    g[2] = (a3 * q1 + a1b * a2 * a2) / den3;
    g[3] = (a4 * (q1 * q1 - std::norm(a2)) + 2.0 * a1b * a2 * a3 * q1 + a1b * a1b * a2 * a2 * a2 +
            a2b * a3 * a3) /
           den4;
    return g;
}

double yamashita_residual(const AnalyticFn& f, const DiskPoint& z) {
    const PeschlValues v = peschl(f, z);
    return 2.0 * (1.0 - std::norm(v.d1)) - std::abs(v.d2);
}

double third_order_residual(const AnalyticFn& f, const DiskPoint& z) {
    const PeschlValues v = peschl(f, z);
    const double q = 1.0 - std::norm(v.d1);
    const Complex half_d2 = 0.5 * v.d2;
    return q * q - std::abs(v.d3 / 6.0 * q + std::conj(v.d1) * half_d2 * half_d2) -
           std::norm(half_d2);
}

} // namespace mpsp
