#include "akbk/integer.hpp"

#include <atomic>
#include <cstdlib>
#include <utility>

namespace akbk {

namespace {

unsigned read_env_bits() {
  if (const char* s = std::getenv("AKBK_CEILING_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 16 && v <= 4096) return static_cast<unsigned>(v);
  }
  return 128;
}

std::atomic<unsigned>& ceiling_slot() {
  static std::atomic<unsigned> bits{0};  // 0 = not yet initialized
  return bits;
}

}  // namespace

unsigned ceiling_bits() {
  unsigned b = ceiling_slot().load(std::memory_order_relaxed);
  if (b == 0) {
    b = read_env_bits();
    ceiling_slot().store(b, std::memory_order_relaxed);
  }
  return b;
}

void set_ceiling_bits(unsigned bits) {
  ceiling_slot().store(bits == 0 ? read_env_bits() : bits, std::memory_order_relaxed);
}

Int magnitude_ceiling() { return Int(1) << ceiling_bits(); }

CeilingExceeded::CeilingExceeded(const std::string& what, Int value)
    : std::runtime_error(what + " (value " + value.str() + ")"), value_(std::move(value)) {}

LemmaFalsification::LemmaFalsification(std::string subject, std::string evidence)
    : std::runtime_error("falsification of " + subject + ": " + evidence),
      subject_(std::move(subject)),
      evidence_(std::move(evidence)) {}

}  // namespace akbk
