#pragma once

#include <stdexcept>
#include <string>

namespace wph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error { using Error::Error; };
struct ParseError : InvalidInput { using InvalidInput::InvalidInput; };
struct DegreeMismatch : InvalidInput { using InvalidInput::InvalidInput; };
struct NotQuasiSmooth : Error { using Error::Error; };
struct NotReducible : Error { using Error::Error; };
struct RootRequired : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

}  // namespace wph
