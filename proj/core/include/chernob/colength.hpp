#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace chernob {

// The dimension of a local quotient ring: a non-negative integer, or
// INFINITE when the staircase complement of the leading-term ideal is
// infinite.
class Colength {
 public:
  static Colength finite(std::uint64_t value) { return Colength(value); }
  static Colength infinite() { return Colength(kInfinite); }

  bool is_finite() const { return raw_ != kInfinite; }
  std::uint64_t value() const {
    if (!is_finite()) throw std::logic_error("value() of an infinite colength");
    return raw_;
  }

  bool operator==(const Colength&) const = default;
  // INFINITE compares greater than every finite value.
  bool operator<(const Colength& other) const { return raw_ < other.raw_; }

  std::string str() const { return is_finite() ? std::to_string(raw_) : "infinite"; }

 private:
  static constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();
  explicit Colength(std::uint64_t raw) : raw_(raw) {}
  std::uint64_t raw_;
};

}  // namespace chernob
