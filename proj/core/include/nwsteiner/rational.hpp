#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nwsteiner {

/// Exact rational number. Every cost, prize, penalty, distance and radius in
/// the library is one of these.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts "p/q", integers, and finite decimals such as "0.125" or "-3.5e2".
Rational parseRational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string toString(const Rational& value);

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
Rational harmonic(std::size_t n);

/// Nonnegative extended rational: either a finite value or +infinity.
/// Used for node-weighted shortest-path distances.
class Distance {
 public:
  Distance() = default;
  Distance(Rational value) : finite_(true), value_(std::move(value)) {}  // NOLINT

  static Distance infinity() { return Distance{}; }

  bool isFinite() const { return finite_; }
  const Rational& value() const {
    if (!finite_) throw std::logic_error("value() of an infinite distance");
    return value_;
  }

  friend bool operator==(const Distance& a, const Distance& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    if (!a.finite_ || !b.finite_) {
      return static_cast<int>(!a.finite_) <=> static_cast<int>(!b.finite_);
    }
    int c = cmp(a.value_, b.value_);
    return c <=> 0;
  }
  friend Distance operator+(const Distance& d, const Rational& x) {
    if (!d.finite_) return d;
    return Distance{d.value_ + x};
  }

 private:
  bool finite_ = false;
  Rational value_;
};

std::string toString(const Distance& d);

}  // namespace nwsteiner
