#pragma once

#include <stdexcept>
#include <string>

namespace polyext {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polygon construction / metric errors.
struct NonFiniteCoordinate : Error { using Error::Error; };
struct TooFewVertices : Error { using Error::Error; };
struct ZeroPerimeter : Error { using Error::Error; };
struct BadIndexSet : Error { using Error::Error; };

// Parameter validation errors shared by bounds, constructions and optimize.
struct BadN : Error { using Error::Error; };
struct BadSplit : Error { using Error::Error; };
struct BadEpsilon : Error { using Error::Error; };
struct BadRadius : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InfeasibleStart : Error { using Error::Error; };

// I/O errors.
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace polyext
