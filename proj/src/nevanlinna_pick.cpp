#include "mpsp/nevanlinna_pick.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mpsp {

namespace {

// recursion thresholds: |gamma| within kBoundaryBand of 1 is unimodular;
// remaining constraints must then match the constant within kConsistencyTol
constexpr double kBoundaryBand = 1e-9;
constexpr double kConsistencyTol = 1e-8;

struct PsdResult {
    Feasibility status;
    double min_pivot;
};

// Greedy diagonally-pivoted Hermitian factorization. Positive definite
// matrices consume every pivot; semidefinite ones leave a (numerically)
// zero block; indefinite ones surface a negative diagonal.
PsdResult psd_verdict(PickMatrix a) {
    const std::size_t n = a.size();
    double scale = 0.0;
    for (const auto& row : a)
        for (Complex e : row) scale = std::max(scale, std::abs(e));
    const double eps = 1e-10 * std::max(scale, 1.0);

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    double min_pivot = std::numeric_limits<double>::infinity();
    while (!active.empty()) {
        std::size_t pos = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (a[active[i]][active[i]].real() > a[active[pos]][active[pos]].real()) pos = i;
        const std::size_t p = active[pos];
        const double pivot = a[p][p].real();

        if (pivot <= eps) {
            // no usable pivot left: the remaining block decides
            double dmin = pivot;
            double offmax = 0.0;
            for (std::size_t i : active)
                for (std::size_t j : active) {
                    if (i == j)
                        dmin = std::min(dmin, a[i][i].real());
                    else
                        offmax = std::max(offmax, std::abs(a[i][j]));
                }
            if (dmin < -eps || offmax > 100.0 * eps) return {Feasibility::Infeasible, dmin};
            return {Feasibility::BoundaryFeasible, pivot};
        }

        min_pivot = std::min(min_pivot, pivot);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
        for (std::size_t i : active)
            for (std::size_t j : active) a[i][j] -= a[i][p] * a[p][j] / pivot;
    }
    return {Feasibility::StrictlyFeasible, min_pivot};
}

struct RecursionResult {
    Feasibility status;
    SchurSequence gammas;
};

// gamma_0 = w_0; then v_k <- [v_k, gamma_j] / [z_k, z_j] for k > j. A value
// escaping the closed disk certifies infeasibility; a unimodular gamma_j
// pins f_j to a constant, so the remaining values must already equal it.
RecursionResult gamma_recursion(const std::vector<Complex>& z, std::vector<Complex> v) {
    const std::size_t n = z.size();
    RecursionResult r;
    r.status = Feasibility::StrictlyFeasible;
    r.gammas.gammas.reserve(n);

    for (std::size_t j = 0; j < n; ++j) {
        const Complex gamma = v[j];
        r.gammas.gammas.push_back(gamma);
        const double m = std::abs(gamma);
        r.gammas.raw_last_abs = m;

        if (!std::isfinite(m) || m > 1.0 + kBoundaryBand) {
            r.status = Feasibility::Infeasible;
            r.gammas.status = SchurSequence::Status::Truncated;
            r.gammas.terminal_index = j + 1;
            return r;
        }
        if (m >= 1.0 - kBoundaryBand) {
            bool consistent = true;
            for (std::size_t k = j + 1; k < n; ++k)
                if (std::abs(v[k] - gamma) > kConsistencyTol) consistent = false;
            r.gammas.status = SchurSequence::Status::Unimodular;
            r.gammas.terminal_index = j;
            r.gammas.gammas.resize(n, Complex(0.0));
            r.status = consistent ? Feasibility::BoundaryFeasible : Feasibility::Infeasible;
            return r;
        }
        for (std::size_t k = j + 1; k < n; ++k) {
            try {
                v[k] = bracket(v[k], gamma) / bracket(z[k], z[j]);
            } catch (const DegenerateBracket&) {
                // 1 - conj(gamma) v_k = 0 requires |v_k| > 1 already
                r.status = Feasibility::Infeasible;
                r.gammas.status = SchurSequence::Status::Truncated;
                r.gammas.terminal_index = j + 1;
                return r;
            }
        }
    }
    r.gammas.status = SchurSequence::Status::AllInterior;
    r.gammas.terminal_index = n;
    return r;
}

} // namespace

InterpolationData InterpolationData::make(const std::vector<std::pair<Complex, Complex>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("InterpolationData: at least one point");
    InterpolationData data;
    data.points.reserve(pairs.size());
    for (const auto& [z, w] : pairs)
        data.points.push_back({DiskPoint::interior(z), DiskPoint::closed(w)});
    for (std::size_t h = 0; h < pairs.size(); ++h)
        for (std::size_t k = h + 1; k < pairs.size(); ++k)
            if (pairs[h].first == pairs[k].first)
                throw std::invalid_argument("InterpolationData: nodes must be pairwise distinct");
    return data;
}

std::vector<Complex> InterpolationData::node_values() const {
    std::vector<Complex> zs;
    zs.reserve(points.size());
    for (const Point& p : points) zs.push_back(p.z.value());
    return zs;
}

std::vector<Complex> InterpolationData::target_values() const {
    std::vector<Complex> ws;
    ws.reserve(points.size());
    for (const Point& p : points) ws.push_back(p.w.value());
    return ws;
}

PickMatrix pick_matrix(const InterpolationData& data) {
    const std::size_t n = data.size();
    const std::vector<Complex> z = data.node_values();
    const std::vector<Complex> w = data.target_values();
    PickMatrix q(n, std::vector<Complex>(n));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
            q[h][k] = (1.0 - w[h] * std::conj(w[k])) / (1.0 - z[h] * std::conj(z[k]));
    return q;
}

const char* to_string(Feasibility f) {
    switch (f) {
    case Feasibility::StrictlyFeasible: return "strictly_feasible";
    case Feasibility::BoundaryFeasible: return "boundary_feasible";
    case Feasibility::Infeasible: return "infeasible";
    }
    return "unknown";
}

FeasibilityVerdict feasibility(const InterpolationData& data) {
    const PsdResult psd = psd_verdict(pick_matrix(data));
    RecursionResult rec = gamma_recursion(data.node_values(), data.target_values());
    if (psd.status != rec.status)
        throw VerdictDisagreement(std::string("feasibility: PSD verdict '") +
                                  to_string(psd.status) + "' vs recursion verdict '" +
                                  to_string(rec.status) + "'");
    FeasibilityVerdict verdict;
    verdict.status = psd.status;
    verdict.min_eigen_or_pivot = psd.min_pivot;
    verdict.gammas = std::move(rec.gammas);
    return verdict;
}

AnalyticFn construct_interpolant(const std::vector<Complex>& nodes, const SchurSequence& gammas,
                                 Complex terminal) {
    if (nodes.size() != gammas.gammas.size() || nodes.empty())
        throw std::invalid_argument("construct_interpolant: one gamma per node required");
    if (std::abs(terminal) > 1.0 + kClosedSlack)
        throw std::invalid_argument("construct_interpolant: |terminal| <= 1 required");

    switch (gammas.status) {
    case SchurSequence::Status::Truncated:
        throw InfeasibleData("construct_interpolant: truncated parameter sequence");
    case SchurSequence::Status::Unimodular: {
        // unique solution: Blaschke product ending in the unimodular constant;
        // renormalize the terminal parameter onto the circle (the boundary
        // verdict already asserts it belongs there)
        const std::size_t m = gammas.terminal_index;
        const Complex unimodular = gammas.gammas[m] / std::abs(gammas.gammas[m]);
        AnalyticFn f = AnalyticFn::constant(unimodular);
        for (std::size_t j = m; j-- > 0;)
            f = AnalyticFn::schur_synth(DiskPoint::interior(nodes[j]), gammas.gammas[j], f);
        return f;
    }
    case SchurSequence::Status::AllInterior:
        return synthesize_from_gammas(nodes, gammas.gammas, terminal);
    }
    throw std::logic_error("construct_interpolant: unreachable");
}

AnalyticFn construct_interpolant(const InterpolationData& data, Complex terminal) {
    const FeasibilityVerdict verdict = feasibility(data);
    if (verdict.status == Feasibility::Infeasible)
        throw InfeasibleData("construct_interpolant: data admits no interpolant");
    return construct_interpolant(data.node_values(), verdict.gammas, terminal);
}

ClosedDisk variability_region(const InterpolationData& data, const DiskPoint& z) {
    const FeasibilityVerdict verdict = feasibility(data);
    if (verdict.status == Feasibility::Infeasible)
        throw InfeasibleData("variability_region: data admits no interpolant");

    std::vector<Complex> nodes = data.node_values();
    std::vector<Complex> gammas = verdict.gammas.gammas;
    if (verdict.gammas.status == SchurSequence::Status::Unimodular) {
        const std::size_t m = verdict.gammas.terminal_index;
        nodes.resize(m + 1);
        gammas.resize(m + 1);
        gammas[m] /= std::abs(gammas[m]);
    }

    ValueRegion region = value_region(interior_nodes(nodes), gammas,
                                      DiskPoint::interior(z.value()));
    if (region.disk.radius < 1e-12) region.disk.radius = 0.0;
    return region.disk;
}

} // namespace mpsp
