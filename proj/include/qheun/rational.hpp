#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qheun/error.hpp"

namespace qheun {

// Exact rational number. Thin wrapper over GMP's mpq_class that pins the
// invariants gcd(|num|, den) = 1, den > 0, zero = 0/1 (GMP canonical form)
// and the "p/q" textual serialization.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(long n, long d) : q_(n, d) {
    if (d == 0) fail(Errc::BadInput, "rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rat(const mpz_class& z) : q_(z) {}

  // Parses "p/q", "p", optional sign, arbitrary precision.
  static Rat parse(const std::string& text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(Errc::BadInput, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat pow(unsigned k) const;
  Rat inv() const {
    if (is_zero()) fail(Errc::BadInput, "inverse of zero");
    return Rat(mpq_class(1) / q_);
  }

  mpz_class floor() const;  // largest integer <= value
  mpz_class ceil() const;   // smallest integer >= value

  // True iff the value is a square of a rational; if so *root is the
  // nonnegative square root.
  bool exact_sqrt(Rat* root) const;

  double to_double() const { return q_.get_d(); }

  // Canonical serialization, always "num/den" ("3/1", "-2/5").
  std::string str() const;
  // Display form, "/1" omitted.
  std::string pretty() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

}  // namespace qheun
