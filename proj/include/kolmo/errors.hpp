#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kolmo {

// Base of every error raised by the library. The CLI maps these to exit code 2
// unless a subclass carries a mathematical verdict (NotInvariant, NotHomogeneous).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

#define KOLMO_DEFINE_ERROR(Name)        \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

KOLMO_DEFINE_ERROR(IndexOutOfRange)
KOLMO_DEFINE_ERROR(ZeroDenominator)
KOLMO_DEFINE_ERROR(DimMismatch)
KOLMO_DEFINE_ERROR(ZeroDivisor)
KOLMO_DEFINE_ERROR(NotSquare)
KOLMO_DEFINE_ERROR(NotSkew)
KOLMO_DEFINE_ERROR(PreconditionViolated)
KOLMO_DEFINE_ERROR(NotHomogeneous)
KOLMO_DEFINE_ERROR(NotInvariant)
KOLMO_DEFINE_ERROR(BadRadius)
KOLMO_DEFINE_ERROR(UnstructuredCofactor)
KOLMO_DEFINE_ERROR(NotASyzygy)
KOLMO_DEFINE_ERROR(AllZeroCoefficients)
KOLMO_DEFINE_ERROR(ZeroSeed)
KOLMO_DEFINE_ERROR(DegreeMismatch)
KOLMO_DEFINE_ERROR(OddDimension)
KOLMO_DEFINE_ERROR(DomainViolation)
KOLMO_DEFINE_ERROR(InternalError)

#undef KOLMO_DEFINE_ERROR

class HypothesisFailed : public Error {
 public:
  HypothesisFailed(std::size_t index, std::size_t achieved_rank, const std::string& what)
      : Error(what), index_(index), achieved_rank_(achieved_rank) {}

  // 0-based coordinate index i whose sample family failed.
  std::size_t index() const { return index_; }
  std::size_t achieved_rank() const { return achieved_rank_; }

 private:
  std::size_t index_;
  std::size_t achieved_rank_;
};

class NonFinite : public Error {
 public:
  NonFinite(std::size_t step, const std::string& what) : Error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace kolmo
