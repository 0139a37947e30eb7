#pragma once

#include <stdexcept>
#include <string>

namespace objslam {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct NotAnEllipsoid : Error { using Error::Error; };
struct NotAnEllipse : Error { using Error::Error; };
struct DegenerateProjection : Error { using Error::Error; };

// reconstruction
struct NotSPD : Error { using Error::Error; };
struct InsufficientObservations : Error { using Error::Error; };
struct DegenerateGeometry : Error { using Error::Error; };
struct BehindCamera : Error { using Error::Error; };

// relocalization
struct DegenerateConfiguration : Error { using Error::Error; };
struct InsufficientObjects : Error { using Error::Error; };
struct NotEnoughMatches : Error { using Error::Error; };
struct RelocFailed : Error { using Error::Error; };

// simulation / io
struct PlacementFailure : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace objslam
