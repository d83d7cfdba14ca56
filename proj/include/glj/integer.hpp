#pragma once

// Exact integer with an inline int64 fast path that promotes to GMP on
// overflow and demotes back whenever the value fits again.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace glj {

class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v) { assign(v); }
  static Integer from_string(const std::string& s);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  bool is_small() const { return !big_; }
  std::int64_t small() const { return small_; }
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
  int sign() const;
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_unit() const { return !big_ && (small_ == 1 || small_ == -1); }
  std::string to_string() const;

  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  Integer operator-() const;

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

 private:
  void assign(const mpz_class& v);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& a);
// Floor division and the matching nonnegative-for-positive-divisor remainder.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
// Exact division; b must divide a.
Integer exact_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);
Integer gcd(const Integer& a, const Integer& b);

// g = s*a + t*b with g = gcd(a,b) >= 0.
struct ExtendedGcd {
  Integer g, s, t;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& a);

}  // namespace glj
