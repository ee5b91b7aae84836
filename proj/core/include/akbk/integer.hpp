#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace akbk {

// All exact arithmetic runs on arbitrary-precision integers. Enumeration
// boxes at desk scale stay far below 2^256, but correctness must not hinge
// on that, so nothing in the public surface is fixed-width.
using Int = boost::multiprecision::cpp_int;

// Factorization and primality refuse inputs at or above the magnitude
// ceiling instead of returning unproven answers. Default 2^128, overridable
// via the AKBK_CEILING_BITS environment variable (read once at startup).
unsigned ceiling_bits();
void set_ceiling_bits(unsigned bits);
Int magnitude_ceiling();

// Raised when a value is too large to factor or certify at desk scale.
class CeilingExceeded : public std::runtime_error {
 public:
  CeilingExceeded(const std::string& what, Int value);
  const Int& value() const { return value_; }

 private:
  Int value_;
};

// Raised when exhaustive data contradicts one of the classification or
// reduction statements the tool checks. This would mean either an
// implementation bug or a misprint in the reference statement; it carries
// the full evidence and must never be swallowed.
class LemmaFalsification : public std::runtime_error {
 public:
  LemmaFalsification(std::string subject, std::string evidence);
  const std::string& subject() const { return subject_; }
  const std::string& evidence() const { return evidence_; }

 private:
  std::string subject_;
  std::string evidence_;
};

}  // namespace akbk
