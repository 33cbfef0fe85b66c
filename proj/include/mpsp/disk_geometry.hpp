#ifndef MPSP_DISK_GEOMETRY_HPP
#define MPSP_DISK_GEOMETRY_HPP

#include <complex>
#include <optional>

#include "mpsp/errors.hpp"

namespace mpsp {

using Complex = std::complex<double>;

// Absolute tolerance for closed-disk membership tests. All quantities in
// this library carry O(1) magnitudes, so an absolute tolerance is adequate.
inline constexpr double kMembershipTol = 1e-9;

// Slack admitted by the closed-disk constructor: boundary points built with
// std::polar land within a few ulp of modulus 1.
inline constexpr double kClosedSlack = 1e-12;

bool finite(Complex z);

// A point of the unit disk. interior() enforces |z| < 1, closed() admits
// |z| <= 1 (within kClosedSlack). Components must be finite.
class DiskPoint {
public:
    static DiskPoint interior(Complex z);
    static DiskPoint closed(Complex z);

    Complex value() const { return z_; }
    bool is_interior() const { return std::abs(z_) < 1.0; }

    friend bool operator==(const DiskPoint& a, const DiskPoint& b) {
        return a.z_ == b.z_;
    }

private:
    explicit DiskPoint(Complex z) : z_(z) {}
    Complex z_;
};

// [z, w] = (z - w)/(1 - conj(w) z), extended by [z, z] = 0 on the boundary.
// Callers guarantee both arguments lie in the closed disk; the DiskPoint
// overload validates. The z = w test is exact bit equality by design:
// callers pass identical values when they mean the diagonal.
Complex bracket(Complex z, Complex w);
Complex bracket(const DiskPoint& z, const DiskPoint& w);

// Inverse of w = [z, z0] in its first argument: z = [w, -z0].
Complex bracket_inverse(Complex w, Complex z0);

// d(z, w) = log((1 + |[z,w]|)/(1 - |[z,w]|)); both points interior.
double hyperbolic_distance(Complex z, Complex w);
double hyperbolic_distance(const DiskPoint& z, const DiskPoint& w);

// exp d(z, w) = (1 + |[z,w]|)/(1 - |[z,w]|) without the log/exp round trip.
double exp_hyperbolic_distance(Complex z, Complex w);

struct ClosedDisk {
    Complex center;
    double radius = 0.0;   // radius 0 encodes a single point

    bool contains(Complex w, double tol = kMembershipTol) const {
        return std::abs(w - center) <= radius + tol;
    }
    // signed distance of w to the boundary circle (0 on the boundary)
    double boundary_gap(Complex w) const {
        return std::abs(std::abs(w - center) - radius);
    }
};

// z -> (az + b)/(cz + d). Degenerate maps (ad - bc = 0) are representable:
// they send everything to b/d.
struct MobiusMap {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Complex determinant() const { return a * d - b * c; }
    bool degenerate() const;

    Complex apply(Complex z) const;              // throws PoleHit on cz + d = 0
    MobiusMap compose(const MobiusMap& other) const;  // this after other
    MobiusMap inverse() const;                   // throws DegenerateMap

    static MobiusMap identity() { return {}; }
    // z -> [z, w]
    static MobiusMap bracket_with(Complex w) { return {1.0, -w, -std::conj(w), 1.0}; }
    // z -> e^{i theta} [z, p], the general disk automorphism
    static MobiusMap automorphism(Complex p, double theta);
    // x -> (tau x + gamma)/(1 + conj(gamma) tau x), the value-region step map
    static MobiusMap interpolation_step(Complex tau, Complex gamma) {
        return {tau, gamma, std::conj(gamma) * tau, 1.0};
    }
};

// Image of the closed unit disk under M, as a closed disk. Requires
// |c| < |d| (otherwise the image is unbounded: UnboundedImage). Degenerate
// maps yield radius 0 around b/d.
ClosedDisk disk_image(const MobiusMap& m);

} // namespace mpsp

#endif
