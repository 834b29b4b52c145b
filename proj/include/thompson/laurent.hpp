#pragma once

// Exact Laurent polynomials in one variable A with 64-bit integer coefficients.
// Text form: descending exponents, e.g. "A^8 - A^4 + 1 - A^-4 + A^-8", "-2*A^3", "0".

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>

#include "thompson/error.hpp"

namespace thompson {

class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  /// The constant c.
  LaurentPoly(Coeff c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, Coeff c = 1) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }

  /// Exponent -> non-zero coefficient.
  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int exponent, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Non-negative powers; negative ones only for monomials (the invertible elements).
  LaurentPoly pow(int n) const {
    if (n < 0) {
      if (terms_.size() != 1 || std::llabs(terms_.begin()->second) != 1) {
        throw RangeError("only monomials with unit coefficient have negative powers");
      }
      const auto [e, c] = *terms_.begin();
      return monomial(-e * -n, (-n) % 2 == 0 ? 1 : c);
    }
    LaurentPoly out(1);
    for (int i = 0; i < n; ++i) out *= *this;
    return out;
  }

  /// A -> A^-1.
  LaurentPoly mirrored() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(-e, c);
    return out;
  }

 private:
  std::map<int, Coeff> terms_;
};

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [e, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const auto magnitude = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude) + "*";
    out += "A^" + std::to_string(e);
  }
  return out;
}

/// Inverse of to_string; also accepts "A" for A^1 and missing spaces.
inline LaurentPoly parse_laurent(std::string_view text) {
  LaurentPoly out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> long long {
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string digits(text.substr(start, pos - start));
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("expected a number in polynomial");
    return std::stoll(digits);
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected + or - between polynomial terms");
    }
    first = false;
    long long coeff = 1;
    bool has_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = number();
      has_coeff = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      } else {
        out.add_term(0, sign * coeff);
        continue;
      }
    }
    if (pos >= text.size() || text[pos] != 'A') {
      throw ParseError(has_coeff ? "expected A after '*'" : "expected a polynomial term");
    }
    ++pos;
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = static_cast<int>(number());
    }
    out.add_term(exponent, sign * coeff);
  }
  if (first) throw ParseError("empty polynomial");
  return out;
}

}  // namespace thompson
