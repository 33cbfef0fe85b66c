#include "mpsp/functions.hpp"

#include <cmath>
#include <stdexcept>

#include "mpsp/rng.hpp"

namespace mpsp {
namespace fn {

namespace {

void check_eval_point(Complex z) {
    if (!finite(z)) throw std::invalid_argument("eval_jet: non-finite point");
    if (std::abs(z) > 1.0 + kClosedSlack)
        throw std::invalid_argument("eval_jet: point outside the closed disk");
}

} // namespace

Jet Constant::eval(Complex z, int order) const {
    return Jet::constant(value, z, order);
}

bool Constant::equals(const Expr& o) const {
    auto* p = dynamic_cast<const Constant*>(&o);
    return p && p->value == value;
}

Jet Polynomial::eval(Complex z, int order) const {
    const Jet var = Jet::variable(z, order);
    Jet r = Jet::constant(coeffs.empty() ? Complex(0.0) : coeffs.back(), z, order);
    for (int m = static_cast<int>(coeffs.size()) - 2; m >= 0; --m)
        r = r * var + coeffs[static_cast<std::size_t>(m)];
    return r;
}

bool Polynomial::equals(const Expr& o) const {
    auto* p = dynamic_cast<const Polynomial*>(&o);
    return p && p->coeffs == coeffs;
}

Jet Blaschke::eval(Complex z, int order) const {
    const Jet var = Jet::variable(z, order);
    Jet r = Jet::constant(std::polar(1.0, rotation), z, order);
    for (Complex a : zeros) r = r * bracket_jet(var, a);
    return r;
}

bool Blaschke::equals(const Expr& o) const {
    auto* p = dynamic_cast<const Blaschke*>(&o);
    return p && p->rotation == rotation && p->zeros == zeros;
}

Jet PostMobius::eval(Complex z, int order) const {
    return mobius_apply_jet(map, inner->eval(z, order));
}

bool PostMobius::equals(const Expr& o) const {
    auto* p = dynamic_cast<const PostMobius*>(&o);
    return p && p->map.a == map.a && p->map.b == map.b && p->map.c == map.c &&
           p->map.d == map.d && p->inner->equals(*inner);
}

Jet PreAutomorphism::eval(Complex z, int order) const {
    const Jet t = mobius_apply_jet(map, Jet::variable(z, order));
    const Jet outer = inner->eval(t.value(), order);
    return Jet::compose(outer, t);
}

bool PreAutomorphism::equals(const Expr& o) const {
    auto* p = dynamic_cast<const PreAutomorphism*>(&o);
    return p && p->map.a == map.a && p->map.b == map.b && p->map.c == map.c &&
           p->map.d == map.d && p->inner->equals(*inner);
}

Jet Product::eval(Complex z, int order) const {
    return left->eval(z, order) * right->eval(z, order);
}

bool Product::equals(const Expr& o) const {
    auto* p = dynamic_cast<const Product*>(&o);
    return p && p->left->equals(*left) && p->right->equals(*right);
}

Jet Delta::eval(Complex z, int order) const {
    check_eval_point(z);
    if (unimodular_inner) return Jet(z, order);   // [w, w] = 0 on the boundary

    if (std::abs(z - node) >= kCoincidenceTol) {
        // direct two-jet quotient [inner(z), gamma] / [z, node]
        const Jet num = bracket_jet(inner->eval(z, order), gamma);
        const Jet den = bracket_jet(Jet::variable(z, order), node);
        return Jet::divide(num, den);
    }

    // Removable-singularity path: expand both jets at the node, cancel the
    // common zero (one order is consumed), then shift the expansion to z.
    // gamma is bit-identical to inner's value at the node, so the leading
    // coefficient of the numerator vanishes exactly.
    const Jet num = bracket_jet(inner->eval(node, order + 1), gamma);
    const Jet den = bracket_jet(Jet::variable(node, order + 1), node);
    const Jet at_node = Jet::divide(num, den);
    return at_node.recenter(z);
}

bool Delta::equals(const Expr& o) const {
    auto* p = dynamic_cast<const Delta*>(&o);
    return p && p->node == node && p->inner->equals(*inner);
}

Jet SchurSynth::eval(Complex z, int order) const {
    check_eval_point(z);
    const Jet u = bracket_jet(Jet::variable(z, order), node) * inner->eval(z, order);
    return Jet::divide(u + gamma, u * std::conj(gamma) + 1.0);
}

bool SchurSynth::equals(const Expr& o) const {
    auto* p = dynamic_cast<const SchurSynth*>(&o);
    return p && p->node == node && p->gamma == gamma && p->inner->equals(*inner);
}

} // namespace fn

AnalyticFn AnalyticFn::constant(Complex c) {
    if (!finite(c)) throw std::invalid_argument("constant: non-finite value");
    if (std::abs(c) > 1.0 + kClosedSlack)
        throw std::invalid_argument("constant: |c| <= 1 required");
    return wrap(std::make_shared<fn::Constant>(c));
}

AnalyticFn AnalyticFn::identity() {
    return wrap(std::make_shared<fn::Blaschke>(0.0, std::vector<Complex>{Complex(0.0)}));
}

AnalyticFn AnalyticFn::polynomial(std::vector<Complex> coeffs) {
    for (Complex c : coeffs)
        if (!finite(c)) throw std::invalid_argument("polynomial: non-finite coefficient");
    return wrap(std::make_shared<fn::Polynomial>(std::move(coeffs)));
}

AnalyticFn AnalyticFn::blaschke(double rotation, std::vector<DiskPoint> zeros) {
    std::vector<Complex> zs;
    zs.reserve(zeros.size());
    for (const DiskPoint& p : zeros) {
        if (!p.is_interior()) throw ZeroOutsideDisk("blaschke: zeros must be interior");
        zs.push_back(p.value());
    }
    return wrap(std::make_shared<fn::Blaschke>(rotation, std::move(zs)));
}

AnalyticFn AnalyticFn::blaschke(double rotation, const std::vector<Complex>& zeros) {
    std::vector<DiskPoint> pts;
    pts.reserve(zeros.size());
    for (Complex a : zeros) {
        if (!(std::abs(a) < 1.0)) throw ZeroOutsideDisk("blaschke: zeros must be interior");
        pts.push_back(DiskPoint::interior(a));
    }
    return blaschke(rotation, std::move(pts));
}

AnalyticFn AnalyticFn::post_mobius(const MobiusMap& m, AnalyticFn inner) {
    const ClosedDisk image = disk_image(m);   // UnboundedImage if |c| >= |d|
    if (std::abs(image.center) + image.radius > 1.0 + kMembershipTol)
        throw std::invalid_argument("post_mobius: map is not a self-map of the closed disk");
    return wrap(std::make_shared<fn::PostMobius>(m, inner.share()));
}

AnalyticFn AnalyticFn::pre_automorphism(const MobiusMap& t, AnalyticFn inner) {
    const ClosedDisk image = disk_image(t);
    if (std::abs(image.center) > 1e-9 || std::abs(image.radius - 1.0) > 1e-9)
        throw std::invalid_argument("pre_automorphism: map is not a disk automorphism");
    return wrap(std::make_shared<fn::PreAutomorphism>(t, inner.share()));
}

AnalyticFn AnalyticFn::product(AnalyticFn l, AnalyticFn r) {
    return wrap(std::make_shared<fn::Product>(l.share(), r.share()));
}

AnalyticFn AnalyticFn::delta_quotient(AnalyticFn inner, const DiskPoint& node) {
    if (!inner.bounded())
        throw NotBounded("delta_quotient: inner function not known to be bounded; "
                         "run validate_bounded first");
    if (!node.is_interior())
        throw std::invalid_argument("delta_quotient: node must be interior");
    const Complex gamma = inner.eval(node.value());
    return wrap(std::make_shared<fn::Delta>(inner.share(), node.value(), gamma));
}

AnalyticFn AnalyticFn::schur_synth(const DiskPoint& node, Complex gamma, AnalyticFn inner) {
    if (!node.is_interior())
        throw std::invalid_argument("schur_synth: node must be interior");
    if (!finite(gamma) || !(std::abs(gamma) < 1.0))
        throw std::invalid_argument("schur_synth: |gamma| < 1 required");
    return wrap(std::make_shared<fn::SchurSynth>(node.value(), gamma, inner.share()));
}

AnalyticFn AnalyticFn::automorphism(Complex p, double theta) {
    return post_mobius(MobiusMap::automorphism(p, theta), identity());
}

Jet AnalyticFn::eval_jet(Complex z, int order) const {
    if (order < 0) throw std::invalid_argument("eval_jet: order >= 0 required");
    if (!finite(z)) throw std::invalid_argument("eval_jet: non-finite point");
    if (std::abs(z) > 1.0 + kClosedSlack)
        throw std::invalid_argument("eval_jet: point outside the closed disk");
    return root_->eval(z, order);
}

namespace {

void collect_polynomials(const fn::Expr& e, std::vector<const fn::Polynomial*>& out) {
    using namespace fn;
    switch (e.kind()) {
    case Kind::Polynomial:
        out.push_back(static_cast<const Polynomial*>(&e));
        return;
    case Kind::PostMobius:
        collect_polynomials(*static_cast<const PostMobius&>(e).inner, out);
        return;
    case Kind::PreAutomorphism:
        collect_polynomials(*static_cast<const PreAutomorphism&>(e).inner, out);
        return;
    case Kind::Product: {
        const auto& p = static_cast<const Product&>(e);
        collect_polynomials(*p.left, out);
        collect_polynomials(*p.right, out);
        return;
    }
    case Kind::Delta:
        collect_polynomials(*static_cast<const Delta&>(e).inner, out);
        return;
    case Kind::SchurSynth:
        collect_polynomials(*static_cast<const SchurSynth&>(e).inner, out);
        return;
    default:
        return;
    }
}

double circle_max(const fn::Expr& e, int n_samples, double radius) {
    double max_mod = 0.0;
    for (int k = 0; k < n_samples; ++k) {
        const double theta = 2.0 * M_PI * static_cast<double>(k) / n_samples;
        const Complex z = std::polar(radius, theta);
        max_mod = std::max(max_mod, std::abs(e.eval(z, 0).value()));
    }
    return max_mod;
}

} // namespace

BoundednessReport validate_bounded(const AnalyticFn& f, int n_samples, double radius) {
    if (n_samples < 1) throw std::invalid_argument("validate_bounded: n_samples >= 1");
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("validate_bounded: 0 < radius < 1 required");

    std::vector<const fn::Polynomial*> polys;
    collect_polynomials(f.root(), polys);
    for (const fn::Polynomial* p : polys)
        if (circle_max(*p, n_samples, radius) <= 1.0 + 1e-9)
            p->validated.store(true, std::memory_order_relaxed);

    BoundednessReport report;
    report.grid_points = n_samples;
    report.radius_used = radius;
    report.max_modulus_estimate = circle_max(f.root(), n_samples, radius);
    report.validated = report.max_modulus_estimate <= 1.0 + 1e-9 && f.bounded();
    return report;
}

AnalyticFn random_schur_fn(std::uint64_t seed, int depth, double gamma_cap,
                           const std::vector<Complex>* nodes) {
    if (depth < 0) throw std::invalid_argument("random_schur_fn: depth >= 0 required");
    if (!(gamma_cap > 0.0 && gamma_cap < 1.0))
        throw std::invalid_argument("random_schur_fn: 0 < gamma_cap < 1 required");
    if (nodes && static_cast<int>(nodes->size()) != depth + 1)
        throw std::invalid_argument("random_schur_fn: depth+1 nodes required");

    RngStream rng(seed);
    std::vector<Complex> gammas(static_cast<std::size_t>(depth) + 1);
    for (Complex& g : gammas) g = rng.disk(gamma_cap);
    const Complex terminal = rng.disk(gamma_cap);

    std::vector<Complex> node_values(static_cast<std::size_t>(depth) + 1, Complex(0.0));
    if (nodes) node_values = *nodes;
    return synthesize_from_gammas(node_values, gammas, terminal);
}

AnalyticFn synthesize_from_gammas(const std::vector<Complex>& nodes,
                                  const std::vector<Complex>& gammas,
                                  Complex terminal) {
    if (nodes.size() != gammas.size())
        throw std::invalid_argument("synthesize_from_gammas: nodes/gammas size mismatch");
    if (nodes.empty())
        throw std::invalid_argument("synthesize_from_gammas: at least one step required");
    AnalyticFn f = AnalyticFn::constant(terminal);
    for (std::size_t j = nodes.size(); j-- > 0;)
        f = AnalyticFn::schur_synth(DiskPoint::interior(nodes[j]), gammas[j], f);
    return f;
}

} // namespace mpsp
