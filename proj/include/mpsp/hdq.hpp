#ifndef MPSP_HDQ_HPP
#define MPSP_HDQ_HPP

#include <optional>
#include <vector>

#include "mpsp/functions.hpp"

namespace mpsp {

// gamma_0, gamma_1, ... with the termination status of the underlying
// dichotomy: either every iterate stays interior, or some |gamma_n| = 1 and
// the function is a Blaschke product of degree n (entries beyond n are 0).
// Truncated marks sequences cut short for another reason (the data-driven
// interpolation recursion stops when a value escapes the closed disk).
struct SchurSequence {
    enum class Status { AllInterior, Unimodular, Truncated };

    std::vector<Complex> gammas;
    Status status = Status::AllInterior;
    // Unimodular: index n with |gamma_n| = 1. Truncated: count of entries
    // actually computed.
    std::size_t terminal_index = 0;
    // raw modulus of the last computed gamma; the unimodular verdict is a
    // thresholded judgment, so the raw value is surfaced next to it
    double raw_last_abs = 0.0;
};

std::vector<DiskPoint> interior_nodes(const std::vector<Complex>& zs);

// The hyperbolic difference quotient Delta_{z0} f. The result is again in
// H(D); its value at z0 is (1-|z0|^2) f'(z0) / (1-|f(z0)|^2). When f is a
// unimodular constant the quotient is the zero function (flagged on the
// node, not an error).
AnalyticFn delta(const AnalyticFn& f, const DiskPoint& z0);

// Left fold of delta over the nodes: f_j(.; z_{j-1}, ..., z_0). Nodes may
// repeat; the evaluation requests one extra series order per coincidence.
AnalyticFn iterated(AnalyticFn f, const std::vector<DiskPoint>& nodes);

// gamma_j = f_j(z_j), stopping early with Unimodular when
// |gamma_n| >= 1 - kUnimodularTol; subsequent entries are reported as 0.
SchurSequence gamma_sequence(const AnalyticFn& f, const std::vector<DiskPoint>& nodes);

// Classical Schur algorithm: gamma_sequence with n+1 zero nodes.
SchurSequence schur_classic(const AnalyticFn& f, int n);

// Degree n when the sequence terminated unimodularly at index n, absent
// otherwise.
std::optional<int> blaschke_degree_detect(const SchurSequence& s);

} // namespace mpsp

#endif
