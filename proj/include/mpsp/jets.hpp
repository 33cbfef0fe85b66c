#ifndef MPSP_JETS_HPP
#define MPSP_JETS_HPP

#include <vector>

#include "mpsp/disk_geometry.hpp"
#include "mpsp/errors.hpp"

namespace mpsp {

// Truncated complex Taylor expansion about a base point:
//   f(z) ~ sum_{m=0..K} coeff(m) (z - base)^m.
// Arithmetic combines only jets with equal base and order. Coefficients are
// stored densely; every workload here keeps K <= 16.
class Jet {
public:
    Jet(Complex base, int order);
    Jet(Complex base, std::vector<Complex> coeffs);

    static Jet constant(Complex value, Complex base, int order);
    // the coordinate function z, expanded about `base`
    static Jet variable(Complex base, int order);

    Complex base() const { return base_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
    // f^(m)(base) = m! coeff(m)
    Complex derivative(int m) const;
    Complex value() const { return coeffs_[0]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Jet operator-() const;
    friend Jet operator+(const Jet& x, const Jet& y);
    friend Jet operator-(const Jet& x, const Jet& y);
    friend Jet operator*(const Jet& x, const Jet& y);   // Cauchy product truncated to K

    friend Jet operator+(const Jet& x, Complex s);
    friend Jet operator+(Complex s, const Jet& x) { return x + s; }
    friend Jet operator-(const Jet& x, Complex s) { return x + (-s); }
    friend Jet operator-(Complex s, const Jet& x) { return -x + s; }
    friend Jet operator*(const Jet& x, Complex s);
    friend Jet operator*(Complex s, const Jet& x) { return x * s; }

    // Formal series division. If den has v leading (near-)zero coefficients,
    // num must have at least v as well (removable singularity); the common
    // factor (z - base)^v is cancelled and the result has order K - v.
    // Throws DivisionByZeroSeries when den vanishes to order K, and
    // NonRemovableSingularity when num vanishes to lower order than den.
    static Jet divide(const Jet& num, const Jet& den);

    // Same polynomial re-expanded about new_base. Exact for the polynomial
    // content up to order K; for general analytic content the caller accepts
    // an O(|new_base - base|^{K+1-m}) error in coefficient m.
    Jet recenter(Complex new_base) const;

    // outer expanded about outer.base() == inner.value(), inner about z;
    // returns the jet of outer(inner(.)) about z. Both orders must match.
    static Jet compose(const Jet& outer, const Jet& inner);

    // index of the first coefficient above the structural-zero threshold
    // 1e-12 (1 + max |coeff|); returns order+1 if none.
    int leading_zeros() const;

private:
    Complex base_;
    std::vector<Complex> coeffs_;

    static void check_compatible(const Jet& x, const Jet& y);
};

// Jet of (a j + b)/(c j + d) at j's base. The denominator must not vanish
// to full order at the base point.
Jet mobius_apply_jet(const MobiusMap& m, const Jet& j);

// Jet of [x, w] = (x - w)/(1 - conj(w) x).
Jet bracket_jet(const Jet& x, Complex w);

} // namespace mpsp

#endif
