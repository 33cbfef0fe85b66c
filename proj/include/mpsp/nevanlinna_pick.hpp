#ifndef MPSP_NEVANLINNA_PICK_HPP
#define MPSP_NEVANLINNA_PICK_HPP

#include <optional>
#include <vector>

#include "mpsp/bounds.hpp"
#include "mpsp/hdq.hpp"

namespace mpsp {

// Interpolation constraints f(z_j) = w_j with pairwise distinct interior
// nodes and |w_j| <= 1.
struct InterpolationData {
    struct Point {
        DiskPoint z;
        DiskPoint w;
    };
    std::vector<Point> points;

    static InterpolationData make(const std::vector<std::pair<Complex, Complex>>& pairs);
    std::size_t size() const { return points.size(); }
    std::vector<Complex> node_values() const;
    std::vector<Complex> target_values() const;
};

using PickMatrix = std::vector<std::vector<Complex>>;

// Hermitian matrix with entries (1 - w_h conj(w_k)) / (1 - z_h conj(z_k)).
PickMatrix pick_matrix(const InterpolationData& data);

enum class Feasibility { StrictlyFeasible, BoundaryFeasible, Infeasible };

const char* to_string(Feasibility f);

struct FeasibilityVerdict {
    Feasibility status = Feasibility::Infeasible;
    // smallest accepted pivot of the pivoted factorization, or the most
    // negative remaining diagonal when the matrix is indefinite
    double min_eigen_or_pivot = 0.0;
    // parameters gamma_j extracted by the interpolation recursion; for
    // infeasible data the sequence is truncated at the escaping entry
    SchurSequence gammas;
};

// Solvability test, run two independent ways: positive semi-definiteness of
// the Pick matrix via pivoted Hermitian factorization, and the parameter
// recursion gamma_0 = w_0, v_k <- [v_k, gamma_j]/[z_k, z_j]. The verdicts
// must agree; a mismatch throws VerdictDisagreement rather than being
// silently resolved.
FeasibilityVerdict feasibility(const InterpolationData& data);

// One interpolant per terminal constant (|terminal| <= 1), built by
// back-substitution through the synthesis steps. Boundary-feasible data
// ignore the terminal: the solution is the unique Blaschke product. Throws
// InfeasibleData when no interpolant exists.
AnalyticFn construct_interpolant(const InterpolationData& data, Complex terminal);
AnalyticFn construct_interpolant(const std::vector<Complex>& nodes, const SchurSequence& gammas,
                                 Complex terminal);

// Closed disk of values f(z) over all solutions; radius below 1e-12 is
// clamped to exactly 0. Throws InfeasibleData for infeasible data.
ClosedDisk variability_region(const InterpolationData& data, const DiskPoint& z);

} // namespace mpsp

#endif
