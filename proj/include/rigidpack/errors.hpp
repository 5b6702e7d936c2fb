#pragma once

#include <stdexcept>
#include <string>

namespace rigidpack {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user request (order too high, bad sampling, ...).
class RequestError : public Error {
 public:
  using Error::Error;
};

/// Invalid packet or rigidity specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

class WordTooLong : public RequestError {
 public:
  explicit WordTooLong(std::size_t length)
      : RequestError("operator word of length " + std::to_string(length) +
                     " exceeds the limit of 16") {}
};

class OrderTooHigh : public RequestError {
 public:
  OrderTooHigh(int order, int limit)
      : RequestError("moment order " + std::to_string(order) +
                     " exceeds the limit of " + std::to_string(limit)) {}
};

class ParityPathInvalid : public RequestError {
 public:
  ParityPathInvalid()
      : RequestError("parity evaluation path requires a definite-parity phi") {}
};

class MissingLowerOrder : public RequestError {
 public:
  MissingLowerOrder(int order, int supplied)
      : RequestError("order " + std::to_string(order) +
                     " equations need the order " + std::to_string(order - 2) +
                     " subset, got order " + std::to_string(supplied)) {}
};

class StepTooLarge : public RequestError {
 public:
  explicit StepTooLarge(double phase_step)
      : RequestError("phase step omega*dt = " + std::to_string(phase_step) +
                     " is too large") {}
};

class NonUniformSampling : public RequestError {
 public:
  using RequestError::RequestError;
};

class MomentumOrderTooHigh : public RequestError {
 public:
  explicit MomentumOrderTooHigh(int l)
      : RequestError("momentum power " + std::to_string(l) +
                     " exceeds the spectral-differentiation limit of 4") {}
};

class TruncationError : public Error {
 public:
  TruncationError(double tail, int cap)
      : Error("displaced state leaks norm " + std::to_string(tail) +
              " beyond basis index " + std::to_string(cap)),
        tail_(tail) {}

  double tail_norm() const noexcept { return tail_; }

 private:
  double tail_;
};

class SpacingViolation : public SpecError {
 public:
  SpacingViolation(int first, int second, int degree)
      : SpecError("indices " + std::to_string(first) + " and " +
                  std::to_string(second) + " are closer than degree+1 = " +
                  std::to_string(degree + 1)),
        first_(first),
        second_(second) {}

  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

class BasisOverflow : public SpecError {
 public:
  BasisOverflow(int index, int cap)
      : SpecError("number state " + std::to_string(index) +
                  " exceeds the basis cap " + std::to_string(cap)) {}
};

class GridTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace rigidpack
