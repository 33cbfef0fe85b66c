#include "mpsp/disk_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace mpsp {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

DiskPoint DiskPoint::interior(Complex z) {
    if (!finite(z)) throw std::invalid_argument("DiskPoint: non-finite components");
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("DiskPoint: |z| < 1 required");
    return DiskPoint(z);
}

DiskPoint DiskPoint::closed(Complex z) {
    if (!finite(z)) throw std::invalid_argument("DiskPoint: non-finite components");
    if (std::abs(z) > 1.0 + kClosedSlack)
        throw std::invalid_argument("DiskPoint: |z| <= 1 required");
    return DiskPoint(z);
}

Complex bracket(Complex z, Complex w) {
    if (z == w) return 0.0;   // covers the boundary-diagonal extension [z, z] = 0
    const Complex den = 1.0 - std::conj(w) * z;
    if (den == 0.0)
        throw DegenerateBracket("bracket: 1 - conj(w)z = 0 for distinct boundary points");
    return (z - w) / den;
}

Complex bracket(const DiskPoint& z, const DiskPoint& w) {
    return bracket(z.value(), w.value());
}

Complex bracket_inverse(Complex w, Complex z0) {
    return bracket(w, -z0);
}

double hyperbolic_distance(Complex z, Complex w) {
    const double m = std::abs(bracket(z, w));
    if (m >= 1.0) throw std::invalid_argument("hyperbolic_distance: interior points required");
    return std::log1p(m) - std::log1p(-m);
}

double hyperbolic_distance(const DiskPoint& z, const DiskPoint& w) {
    if (!z.is_interior() || !w.is_interior())
        throw std::invalid_argument("hyperbolic_distance: interior points required");
    return hyperbolic_distance(z.value(), w.value());
}

double exp_hyperbolic_distance(Complex z, Complex w) {
    const double m = std::abs(bracket(z, w));
    if (m >= 1.0) throw std::invalid_argument("exp_hyperbolic_distance: interior points required");
    return (1.0 + m) / (1.0 - m);
}

bool MobiusMap::degenerate() const {
    const double det = std::abs(determinant());
    const double scale = std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c);
    return det == 0.0 || det <= 1e-15 * scale;
}

Complex MobiusMap::apply(Complex z) const {
    const Complex den = c * z + d;
    if (den == 0.0) throw PoleHit("MobiusMap::apply: cz + d = 0");
    return (a * z + b) / den;
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

MobiusMap MobiusMap::inverse() const {
    if (degenerate()) throw DegenerateMap("MobiusMap::inverse: ad - bc = 0");
    return {d, -b, -c, a};
}

MobiusMap MobiusMap::automorphism(Complex p, double theta) {
    const Complex rot = std::polar(1.0, theta);
    return {rot, -rot * p, -std::conj(p), 1.0};
}

ClosedDisk disk_image(const MobiusMap& m) {
    const double ac = std::abs(m.c), ad = std::abs(m.d);
    if (ac >= ad) throw UnboundedImage("disk_image: |c| < |d| required");
    if (m.degenerate()) return {m.b / m.d, 0.0};
    const double denom = ac * ac - ad * ad;   // negative
    const Complex center = (m.a * std::conj(m.c) - m.b * std::conj(m.d)) / denom;
    const double radius = std::abs(m.determinant()) / (-denom);
    return {center, radius};
}

} // namespace mpsp
