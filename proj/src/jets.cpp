#include "mpsp/jets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpsp {

namespace {

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& c : v) m = std::max(m, std::abs(c));
    return m;
}

} // namespace

Jet::Jet(Complex base, int order) : base_(base) {
    if (order < 0) throw std::invalid_argument("Jet: order >= 0 required");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex(0.0));
}

Jet::Jet(Complex base, std::vector<Complex> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Jet: at least one coefficient required");
    for (const Complex& c : coeffs_)
        if (!finite(c)) throw std::invalid_argument("Jet: non-finite coefficient");
}

Jet Jet::constant(Complex value, Complex base, int order) {
    Jet j(base, order);
    j.coeffs_[0] = value;
    return j;
}

Jet Jet::variable(Complex base, int order) {
    Jet j(base, order);
    j.coeffs_[0] = base;
    if (order >= 1) j.coeffs_[1] = 1.0;
    return j;
}

Complex Jet::derivative(int m) const {
    double fact = 1.0;
    for (int k = 2; k <= m; ++k) fact *= k;
    return fact * coeff(m);
}

void Jet::check_compatible(const Jet& x, const Jet& y) {
    if (x.base_ != y.base_) throw BaseMismatch("Jet: mismatched expansion points");
    if (x.coeffs_.size() != y.coeffs_.size()) throw OrderMismatch("Jet: mismatched orders");
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (Complex& c : r.coeffs_) c = -c;
    return r;
}

Jet operator+(const Jet& x, const Jet& y) {
    Jet::check_compatible(x, y);
    Jet r = x;
    for (std::size_t m = 0; m < r.coeffs_.size(); ++m) r.coeffs_[m] += y.coeffs_[m];
    return r;
}

Jet operator-(const Jet& x, const Jet& y) {
    Jet::check_compatible(x, y);
    Jet r = x;
    for (std::size_t m = 0; m < r.coeffs_.size(); ++m) r.coeffs_[m] -= y.coeffs_[m];
    return r;
}

Jet operator*(const Jet& x, const Jet& y) {
    Jet::check_compatible(x, y);
    Jet r(x.base_, x.order());
    const std::size_t n = r.coeffs_.size();
    for (std::size_t m = 0; m < n; ++m) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i <= m; ++i) acc += x.coeffs_[i] * y.coeffs_[m - i];
        r.coeffs_[m] = acc;
    }
    return r;
}

Jet operator+(const Jet& x, Complex s) {
    Jet r = x;
    r.coeffs_[0] += s;
    return r;
}

Jet operator*(const Jet& x, Complex s) {
    Jet r = x;
    for (Complex& c : r.coeffs_) c *= s;
    return r;
}

int Jet::leading_zeros() const {
    const double thresh = 1e-12 * (1.0 + max_abs(coeffs_));
    for (std::size_t m = 0; m < coeffs_.size(); ++m)
        if (std::abs(coeffs_[m]) > thresh) return static_cast<int>(m);
    return order() + 1;
}

Jet Jet::divide(const Jet& num, const Jet& den) {
    check_compatible(num, den);
    const int v = den.leading_zeros();
    if (v > den.order())
        throw DivisionByZeroSeries("Jet::divide: denominator vanishes to full order");
    if (num.leading_zeros() < v)
        throw NonRemovableSingularity("Jet::divide: numerator vanishes to lower order than denominator");

    // cancel the common (z - base)^v factor; both operands lose v orders
    const int k = num.order() - v;
    std::vector<Complex> n(static_cast<std::size_t>(k) + 1), d(static_cast<std::size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) {
        n[static_cast<std::size_t>(m)] = num.coeff(m + v);
        d[static_cast<std::size_t>(m)] = den.coeff(m + v);
    }

    std::vector<Complex> q(static_cast<std::size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) {
        Complex acc = n[static_cast<std::size_t>(m)];
        for (int i = 0; i < m; ++i) acc -= q[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(m - i)];
        q[static_cast<std::size_t>(m)] = acc / d[0];
    }
    return Jet(num.base_, std::move(q));
}

Jet Jet::recenter(Complex new_base) const {
    // repeated synthetic division: shift the polynomial by delta
    const Complex delta = new_base - base_;
    std::vector<Complex> c = coeffs_;
    const int k = order();
    for (int j = 0; j < k; ++j)
        for (int m = k - 1; m >= j; --m)
            c[static_cast<std::size_t>(m)] += delta * c[static_cast<std::size_t>(m) + 1];
    return Jet(new_base, std::move(c));
}

Jet Jet::compose(const Jet& outer, const Jet& inner) {
    if (outer.order() != inner.order()) throw OrderMismatch("Jet::compose: mismatched orders");
    if (outer.base() != inner.value())
        throw BaseMismatch("Jet::compose: outer must be expanded about inner's value");
    Jet shifted = inner + (-inner.value());   // zero constant term
    Jet r = Jet::constant(outer.coeff(outer.order()), inner.base(), inner.order());
    for (int m = outer.order() - 1; m >= 0; --m)
        r = r * shifted + outer.coeff(m);
    return r;
}

Jet mobius_apply_jet(const MobiusMap& m, const Jet& j) {
    const Jet num = j * m.a + m.b;
    const Jet den = j * m.c + m.d;
    return Jet::divide(num, den);
}

Jet bracket_jet(const Jet& x, Complex w) {
    return Jet::divide(x - w, -std::conj(w) * x + 1.0);
}

} // namespace mpsp
