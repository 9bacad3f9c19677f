#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vnq {

/// Error thrown by all validation and dimension checks. Carries a short
/// machine-greppable code (e.g. "E_DIM", "E_UNITARY") next to the prose.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace err {
inline constexpr const char* kDim = "E_DIM";
inline constexpr const char* kRange = "E_RANGE";
inline constexpr const char* kLayout = "E_LAYOUT";
inline constexpr const char* kNorm = "E_NORM";
inline constexpr const char* kUnitary = "E_UNITARY";
inline constexpr const char* kBijective = "E_BIJECTIVE";
inline constexpr const char* kAxis = "E_AXIS";
inline constexpr const char* kField = "E_FIELD";
inline constexpr const char* kType = "E_TYPE";
inline constexpr const char* kParse = "E_PARSE";
inline constexpr const char* kMode = "E_MODE";
inline constexpr const char* kFormat = "E_FORMAT";
inline constexpr const char* kIo = "E_IO";
}  // namespace err

}  // namespace vnq
