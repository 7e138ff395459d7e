#pragma once

#include <stdexcept>
#include <string>

namespace szeta {

// Exit-code classes used by the CLI: precondition/config errors map to 2,
// numeric certification failures map to 3.
enum class ErrorClass { precondition = 2, certification = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }

 private:
  ErrorClass cls_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorClass::precondition, what) {}
};

// A requested enumeration or sieve is larger than the configured limit.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorClass::precondition, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorClass::precondition, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A parameter lies outside an admissible range; `bound` names the violated bound.
class RangeError : public Error {
 public:
  RangeError(std::string bound, const std::string& what)
      : Error(ErrorClass::precondition, what), bound_(std::move(bound)) {}
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

class CertificationError : public Error {
 public:
  explicit CertificationError(const std::string& what) : Error(ErrorClass::certification, what) {}
};

// Zero finder could not account for every zero the argument principle predicts.
class MissedZerosError : public CertificationError {
 public:
  MissedZerosError(double t_lo, double t_hi, long expected, long found)
      : CertificationError("missed zeros in [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) +
                           "]: expected " + std::to_string(expected) + ", found " + std::to_string(found)),
        discrepancy_(expected - found) {}
  long discrepancy() const noexcept { return discrepancy_; }

 private:
  long discrepancy_;
};

// The two S(t) methods disagree beyond tolerance.
class InconsistencyError : public CertificationError {
 public:
  InconsistencyError(double t, double s_arg, double s_count)
      : CertificationError("S(t) methods disagree at t=" + std::to_string(t) + ": argument " +
                           std::to_string(s_arg) + " vs counting " + std::to_string(s_count)),
        s_arg_(s_arg),
        s_count_(s_count) {}
  double s_arg() const noexcept { return s_arg_; }
  double s_count() const noexcept { return s_count_; }

 private:
  double s_arg_;
  double s_count_;
};

}  // namespace szeta
