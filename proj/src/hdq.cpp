#include "mpsp/hdq.hpp"

#include <cmath>
#include <stdexcept>

namespace mpsp {

std::vector<DiskPoint> interior_nodes(const std::vector<Complex>& zs) {
    std::vector<DiskPoint> nodes;
    nodes.reserve(zs.size());
    for (Complex z : zs) nodes.push_back(DiskPoint::interior(z));
    return nodes;
}

AnalyticFn delta(const AnalyticFn& f, const DiskPoint& z0) {
    return AnalyticFn::delta_quotient(f, z0);
}

AnalyticFn iterated(AnalyticFn f, const std::vector<DiskPoint>& nodes) {
    for (const DiskPoint& node : nodes) f = delta(f, node);
    return f;
}

SchurSequence gamma_sequence(const AnalyticFn& f, const std::vector<DiskPoint>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("gamma_sequence: nodes nonempty required");
    if (!f.bounded())
        throw NotBounded("gamma_sequence: function not known to be bounded");

    SchurSequence seq;
    seq.gammas.reserve(nodes.size());
    AnalyticFn g = f;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Complex gamma = g.eval(nodes[j].value());
        seq.gammas.push_back(gamma);
        seq.raw_last_abs = std::abs(gamma);
        if (seq.raw_last_abs >= 1.0 - kUnimodularTol) {
            seq.status = SchurSequence::Status::Unimodular;
            seq.terminal_index = j;
            seq.gammas.resize(nodes.size(), Complex(0.0));
            return seq;
        }
        if (j + 1 < nodes.size()) g = delta(g, nodes[j]);
    }
    seq.status = SchurSequence::Status::AllInterior;
    seq.terminal_index = nodes.size();
    return seq;
}

SchurSequence schur_classic(const AnalyticFn& f, int n) {
    if (n < 0) throw std::invalid_argument("schur_classic: n >= 0 required");
    const std::vector<DiskPoint> zeros(static_cast<std::size_t>(n) + 1,
                                       DiskPoint::interior(Complex(0.0)));
    return gamma_sequence(f, zeros);
}

std::optional<int> blaschke_degree_detect(const SchurSequence& s) {
    if (s.status == SchurSequence::Status::Unimodular)
        return static_cast<int>(s.terminal_index);
    return std::nullopt;
}

} // namespace mpsp
