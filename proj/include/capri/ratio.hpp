#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace capri {

/// Exact non-negative rational kept in lowest terms.  Comparisons
/// cross-multiply in 64-bit integers; nothing here touches floating point.
class Ratio {
public:
  Ratio() = default;

  Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (num_ < 0 || den_ < 1)
      throw std::invalid_argument("Ratio requires num >= 0 and den >= 1");
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Ratio&, const Ratio&) = default;

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Ratio half() { return Ratio(1, 2); }

}  // namespace capri
