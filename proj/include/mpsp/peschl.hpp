#ifndef MPSP_PESCHL_HPP
#define MPSP_PESCHL_HPP

#include <array>

#include "mpsp/functions.hpp"

namespace mpsp {

// Values of the first three invariant derivatives of f at a point.
// |d1| <= 1 always (d1 is the hyperbolic derivative).
struct PeschlValues {
    Complex d1, d2, d3;
};

// D_1..D_3 f(z) from the closed-form expressions in f', f'', f''' (obtained
// from a jet of order 3). Throws UnimodularValue when |f(z)| = 1 within
// 1e-12 (f is then a unimodular constant and the forms are undefined).
PeschlValues peschl(const AnalyticFn& f, const DiskPoint& z);

// Independent route: build g(w) = [f([w, -z0]), f(z0)] as an expression
// tree and read off n! times its n-th Taylor coefficient at 0, which equals
// D_n f(z0). Kept separate from peschl() so the two paths cross-check each
// other. n in 1..3.
Complex peschl_recentered(const AnalyticFn& f, const DiskPoint& z0, int n);

// Closed forms of the first four Schur parameters of g(z) = sum a_n z^n
// (g(0) = 0) in terms of a_1..a_4. Throws DegenerateDenominator when a
// displayed denominator vanishes within 1e-12 (g is then a low-degree
// Blaschke product; use gamma_sequence instead).
std::array<Complex, 4> gamma_from_taylor(const std::array<Complex, 4>& a);

// Slack of |D_2 f| <= 2 (1 - |D_1 f|^2): returns 2(1-|d1|^2) - |d2|,
// nonnegative up to rounding; vanishes exactly when f is a Blaschke product
// of degree at most 2.
double yamashita_residual(const AnalyticFn& f, const DiskPoint& z);

// Slack of the third-order inequality
//   |D3/6 (1-|D1|^2) + conj(D1) (D2/2)^2| + |D2/2|^2 <= (1-|D1|^2)^2,
// vanishing exactly for Blaschke products of degree at most 3.
double third_order_residual(const AnalyticFn& f, const DiskPoint& z);

} // namespace mpsp

#endif
