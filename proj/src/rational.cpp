#include "icol/rational.hpp"

#include <cctype>

namespace icol {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long p = std::stoll(text.substr(0, slash));
    long long q = std::stoll(text.substr(slash + 1));
    return Rational(p, q);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("Rational: bad decimal " + text);
      den *= 10;
    }
    return Rational(std::stoll(digits), den);
  }
  return Rational(std::stoll(text));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace icol
