#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace packcol {

// Exact fraction kept in lowest terms with a positive denominator.
// All verdicts in this project are computed with these; no floating
// point is involved anywhere a result is compared or reported.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Always renders the denominator: 3 prints as "3/1".
  std::string str() const;

  // Accepts "p" or "p/q" with an optional leading minus on p.
  static Rational parse(std::string_view text);

 private:
  static Rational reduced(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace packcol
