#ifndef MPSP_FUNCTIONS_HPP
#define MPSP_FUNCTIONS_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "mpsp/disk_geometry.hpp"
#include "mpsp/jets.hpp"

namespace mpsp {

// |gamma| >= 1 - kUnimodularTol is treated as a unimodular (boundary) value.
// Structural Blaschke inputs hit 1 to machine precision; non-Blaschke test
// functions with capped parameters stay well below.
inline constexpr double kUnimodularTol = 1e-10;

// Below this distance from a difference-quotient node, evaluation switches
// from the direct two-jet quotient to the series expansion at the node
// (removable-singularity path). The direct quotient loses ~|z - node|^-1
// precision as z approaches the node.
inline constexpr double kCoincidenceTol = 1e-8;

struct BoundednessReport {
    double max_modulus_estimate = 0.0;
    int grid_points = 0;
    double radius_used = 0.0;
    bool validated = false;
};

namespace fn {

enum class Kind {
    Constant,
    Polynomial,
    Blaschke,
    PostMobius,
    PreAutomorphism,
    Product,
    Delta,
    SchurSynth,
};

struct Expr {
    virtual ~Expr() = default;
    virtual Kind kind() const = 0;
    // Jet of the function about z. The constant term of the result is a
    // deterministic function of z alone (independent of the requested
    // order); the difference-quotient cancellation relies on this.
    virtual Jet eval(Complex z, int order) const = 0;
    virtual bool bounded() const = 0;
    virtual bool equals(const Expr& other) const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

struct Constant final : Expr {
    Complex value;
    explicit Constant(Complex v) : value(v) {}
    Kind kind() const override { return Kind::Constant; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return true; }
    bool equals(const Expr& o) const override;
};

// coeffs[m] multiplies z^m. Unbounded until validate_bounded succeeds;
// the flag is a monotonic latch, safe to set from any thread.
struct Polynomial final : Expr {
    std::vector<Complex> coeffs;
    mutable std::atomic<bool> validated{false};
    explicit Polynomial(std::vector<Complex> c) : coeffs(std::move(c)) {}
    Kind kind() const override { return Kind::Polynomial; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return validated.load(std::memory_order_relaxed); }
    bool equals(const Expr& o) const override;
};

// e^{i rotation} prod_j [z, zeros[j]]
struct Blaschke final : Expr {
    double rotation;
    std::vector<Complex> zeros;
    Blaschke(double rot, std::vector<Complex> zs) : rotation(rot), zeros(std::move(zs)) {}
    Kind kind() const override { return Kind::Blaschke; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return true; }
    bool equals(const Expr& o) const override;
};

// map(inner(z)); map is a self-map of the closed disk (checked on build)
struct PostMobius final : Expr {
    MobiusMap map;
    ExprPtr inner;
    PostMobius(MobiusMap m, ExprPtr in) : map(m), inner(std::move(in)) {}
    Kind kind() const override { return Kind::PostMobius; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return inner->bounded(); }
    bool equals(const Expr& o) const override;
};

// inner(map(z)); map is a disk automorphism (checked on build)
struct PreAutomorphism final : Expr {
    MobiusMap map;
    ExprPtr inner;
    PreAutomorphism(MobiusMap m, ExprPtr in) : map(m), inner(std::move(in)) {}
    Kind kind() const override { return Kind::PreAutomorphism; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return inner->bounded(); }
    bool equals(const Expr& o) const override;
};

struct Product final : Expr {
    ExprPtr left, right;
    Product(ExprPtr l, ExprPtr r) : left(std::move(l)), right(std::move(r)) {}
    Kind kind() const override { return Kind::Product; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return left->bounded() && right->bounded(); }
    bool equals(const Expr& o) const override;
};

// The hyperbolic difference quotient [inner(z), gamma]/[z, node] with its
// removable singularity at the node; gamma = inner(node) is cached at
// construction. When inner is a unimodular constant the quotient is the
// zero function ([w, w] = 0 on the boundary) and unimodular_inner is set.
struct Delta final : Expr {
    ExprPtr inner;
    Complex node;
    Complex gamma;
    bool unimodular_inner;
    Delta(ExprPtr in, Complex nd, Complex g)
        : inner(std::move(in)), node(nd), gamma(g),
          unimodular_inner(std::abs(g) >= 1.0 - kUnimodularTol) {}
    Kind kind() const override { return Kind::Delta; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return inner->bounded(); }
    bool equals(const Expr& o) const override;
};

// One synthesis step ( [z,node] inner(z) + gamma ) / ( 1 + conj(gamma) [z,node] inner(z) );
// |gamma| < 1, so the step maps H(D) into H(D).
struct SchurSynth final : Expr {
    Complex node;
    Complex gamma;
    ExprPtr inner;
    SchurSynth(Complex nd, Complex g, ExprPtr in) : node(nd), gamma(g), inner(std::move(in)) {}
    Kind kind() const override { return Kind::SchurSynth; }
    Jet eval(Complex z, int order) const override;
    bool bounded() const override { return inner->bounded(); }
    bool equals(const Expr& o) const override;
};

} // namespace fn

// Immutable expression tree representing an element of H(D), evaluable to a
// Jet at any interior point. Subtrees are shared by reference; equality is
// structural.
class AnalyticFn {
public:
    static AnalyticFn constant(Complex c);                     // |c| <= 1
    static AnalyticFn identity();                              // f(z) = z
    static AnalyticFn polynomial(std::vector<Complex> coeffs); // unvalidated
    static AnalyticFn blaschke(double rotation, std::vector<DiskPoint> zeros);
    static AnalyticFn blaschke(double rotation, const std::vector<Complex>& zeros);
    static AnalyticFn post_mobius(const MobiusMap& m, AnalyticFn inner);
    static AnalyticFn pre_automorphism(const MobiusMap& t, AnalyticFn inner);
    static AnalyticFn product(AnalyticFn l, AnalyticFn r);
    // requires a bounded inner (throws NotBounded otherwise)
    static AnalyticFn delta_quotient(AnalyticFn inner, const DiskPoint& node);
    static AnalyticFn schur_synth(const DiskPoint& node, Complex gamma, AnalyticFn inner);
    // a disk automorphism as a function tree
    static AnalyticFn automorphism(Complex p, double theta);

    Jet eval_jet(Complex z, int order) const;
    Jet eval_jet(const DiskPoint& z, int order) const { return eval_jet(z.value(), order); }
    Complex eval(Complex z) const { return eval_jet(z, 0).value(); }

    bool bounded() const { return root_->bounded(); }
    fn::Kind kind() const { return root_->kind(); }
    bool equals(const AnalyticFn& other) const { return root_->equals(*other.root_); }

    const fn::Expr& root() const { return *root_; }
    fn::ExprPtr share() const { return root_; }
    static AnalyticFn wrap(fn::ExprPtr e) { return AnalyticFn(std::move(e)); }

private:
    explicit AnalyticFn(fn::ExprPtr e) : root_(std::move(e)) {}
    fn::ExprPtr root_;
};

// Maximum-principle heuristic: samples |f| on n_samples equispaced points of
// the circle |z| = radius and reports the maximum. Every Polynomial node of
// the tree is sampled the same way and its validated flag is latched when
// its own maximum stays <= 1 + 1e-9; the report's `validated` field refers
// to the whole tree. A heuristic, not a proof.
BoundednessReport validate_bounded(const AnalyticFn& f, int n_samples, double radius);

// Random Schur-synthesis chain: gamma_0..gamma_depth and the terminal
// constant drawn uniformly from |c| <= gamma_cap, nodes as given (all 0 by
// default). Deterministic per seed.
AnalyticFn random_schur_fn(std::uint64_t seed, int depth, double gamma_cap,
                           const std::vector<Complex>* nodes = nullptr);

// Back-substitution chain f_j = schur_synth(nodes[j], gammas[j], f_{j+1})
// with f_{n+1} = terminal. All |gammas[j]| < 1; |terminal| <= 1.
AnalyticFn synthesize_from_gammas(const std::vector<Complex>& nodes,
                                  const std::vector<Complex>& gammas,
                                  Complex terminal);

} // namespace mpsp

#endif
