#ifndef MPSP_ERRORS_HPP
#define MPSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpsp {

// Base class for all domain errors thrown by this library. Plain argument
// validation (NaN inputs, size mismatches, points outside the disk) uses
// std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// disk_geometry
struct DegenerateBracket : Error { using Error::Error; };   // 1 - conj(w)z = 0 with z != w
struct PoleHit : Error { using Error::Error; };             // cz + d = 0
struct DegenerateMap : Error { using Error::Error; };       // inverse of ad - bc = 0
struct UnboundedImage : Error { using Error::Error; };      // |c| >= |d| in disk_image

// jets
struct BaseMismatch : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct DivisionByZeroSeries : Error { using Error::Error; };
struct NonRemovableSingularity : Error { using Error::Error; };

// functions
struct ZeroOutsideDisk : Error { using Error::Error; };
struct NotBounded : Error { using Error::Error; };          // unvalidated polynomial in an H(D) context

// peschl
struct UnimodularValue : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };

// bounds
struct GammaOutOfRange : Error { using Error::Error; };
struct InconsistentData : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

// nevanlinna_pick
struct InfeasibleData : Error { using Error::Error; };
struct VerdictDisagreement : Error { using Error::Error; };

} // namespace mpsp

#endif
