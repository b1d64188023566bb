#pragma once

#include <stdexcept>
#include <string>

namespace extspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct QuadratureError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

struct BracketError : Error { using Error::Error; };
struct RadiusError : Error { using Error::Error; };

struct DegenerateSetError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };

struct RepresentationError : Error { using Error::Error; };
struct UnlistedPoleError : Error { using Error::Error; };

}  // namespace extspec
