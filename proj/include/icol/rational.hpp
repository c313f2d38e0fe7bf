#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace icol {

// Exact rational arithmetic for window factors (alpha) and sparsity
// coefficients (k). Values stay tiny, so long long never overflows here.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long num, long long den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  // Accepts "3", "3/2" and plain decimals like "1.5".
  static Rational parse(const std::string& text);

  constexpr long long num() const { return num_; }
  constexpr long long den() const { return den_; }

  // floor(v * num / den), v >= 0.
  constexpr long long floor_scaled(long long v) const {
    long long p = v * num_;
    if (p >= 0) return p / den_;
    return -((-p + den_ - 1) / den_);
  }

  constexpr double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const;

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend constexpr bool operator<=(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend constexpr bool operator>(const Rational& a, const Rational& b) {
    return b < a;
  }
  friend constexpr bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

 private:
  long long num_;
  long long den_;
};

}  // namespace icol
