#ifndef MPSP_VERIFY_HPP
#define MPSP_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mpsp {

struct VerifyOptions {
    std::uint64_t seed = 20259281ULL;
    int samples = 200;
    int jet_order = 8;   // cap for the random jet orders in the ring checks
    std::map<std::string, double> tolerance_overrides;
};

struct PropertyResult {
    std::string name;
    int samples = 0;
    double tolerance = 0.0;
    double max_violation = 0.0;
    bool pass = false;
};

// Names and default tolerances of every property, in execution order.
std::vector<std::pair<std::string, double>> verification_catalog();

// Runs the whole property suite. Each property draws from an independent
// stream derived from (seed, property index), so results do not depend on
// execution order. A property passes when max_violation <= tolerance.
std::vector<PropertyResult> run_verification(const VerifyOptions& options);

} // namespace mpsp

#endif
