#ifndef MPSP_SERIALIZATION_HPP
#define MPSP_SERIALIZATION_HPP

#include <json.hpp>

#include "mpsp/functions.hpp"
#include "mpsp/nevanlinna_pick.hpp"

namespace mpsp {

using Json = nlohmann::json;

// Complex numbers always serialize as {"re": float, "im": float} objects.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const ClosedDisk& disk);

// Function trees: {"kind": <tag>, ...} with tags "const", "poly",
// "blaschke", "post_mobius", "pre_auto", "product", "delta", "schur".
// Parsing validates every polynomial node against the boundedness check
// (validate_samples points on |z| = validate_radius) so the returned tree is
// usable in H(D) operations; a polynomial that fails throws NotBounded.
Json to_json(const AnalyticFn& f);
AnalyticFn function_from_json(const Json& j, int validate_samples = 2048,
                              double validate_radius = 0.999);

// Datasets: {"points": [{"z": {..}, "w": {..}}, ...]}.
Json to_json(const InterpolationData& data);
InterpolationData dataset_from_json(const Json& j);

Json to_json(const SchurSequence& seq);
Json to_json(const FeasibilityVerdict& verdict);

} // namespace mpsp

#endif
