#ifndef OPUCLAB_ERRORS_HPP
#define OPUCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opuclab {

// Error categories map one-to-one onto process exit codes and C API status
// codes: validation = 1, numeric/certification = 2, io = 3.
enum class errc {
  validation = 1,
  numeric = 2,
  io = 3,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

struct ValidationError : Error {
  explicit ValidationError(std::string msg) : Error(errc::validation, std::move(msg)) {}
};

struct IoError : Error {
  explicit IoError(std::string msg) : Error(errc::io, std::move(msg)) {}
};

// Numeric certification failed (sparse build cap exceeded, tolerance not met).
struct CertificationError : Error {
  explicit CertificationError(std::string msg) : Error(errc::numeric, std::move(msg)) {}
};

// The zero finder could not bracket a phase window; carries the offending
// interval so callers can report exactly where monotonicity broke down.
struct BracketingError : Error {
  BracketingError(std::string msg, double lo, double hi)
      : Error(errc::numeric, std::move(msg)), interval_lo(lo), interval_hi(hi) {}
  double interval_lo;
  double interval_hi;
};

// A computed result failed its internal cross-check.
struct VerificationError : Error {
  explicit VerificationError(std::string msg) : Error(errc::numeric, std::move(msg)) {}
};

}  // namespace opuclab

#endif
