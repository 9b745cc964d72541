#ifndef DIRAC_ERROR_HPP
#define DIRAC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed .acc or .wedge text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  enum class Cause {
    BadHeader,
    BadToken,
    IdOutOfRange,
    SmallVertex,
    DuplicateIdInVertex,
    BadEvent,
    DuplicateBeam,
    UnexpectedEnd,
  };

  ParseError(Cause cause, std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + cause_name(cause) +
              (detail.empty() ? "" : ": " + detail)),
        cause_(cause),
        line_(line) {}

  Cause cause() const noexcept { return cause_; }
  std::size_t line() const noexcept { return line_; }

  static const char* cause_name(Cause c) noexcept {
    switch (c) {
      case Cause::BadHeader: return "BadHeader";
      case Cause::BadToken: return "BadToken";
      case Cause::IdOutOfRange: return "IdOutOfRange";
      case Cause::SmallVertex: return "SmallVertex";
      case Cause::DuplicateIdInVertex: return "DuplicateIdInVertex";
      case Cause::BadEvent: return "BadEvent";
      case Cause::DuplicateBeam: return "DuplicateBeam";
      case Cause::UnexpectedEnd: return "UnexpectedEnd";
    }
    return "Unknown";
  }

 private:
  Cause cause_;
  std::size_t line_;
};

/// An exhaustive search would exceed its evaluation budget.
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(unsigned long long needed, unsigned long long budget)
      : Error("subset search needs " + std::to_string(needed) +
              " evaluations, budget is " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}

  unsigned long long needed() const noexcept { return needed_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long needed_;
  unsigned long long budget_;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(long long p) : Error(std::to_string(p) + " is not prime") {}
};

}  // namespace dirac

#endif  // DIRAC_ERROR_HPP
