#include "glj/integer.hpp"

#include "glj/errors.hpp"

#include <limits>

namespace glj {

namespace {

bool fits_int64(const mpz_class& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

}  // namespace

Integer Integer::from_string(const std::string& s) {
  mpz_class v;
  require_input(v.set_str(s, 10) == 0, "integer: cannot parse '" + s + "'");
  return Integer(v);
}

void Integer::assign(const mpz_class& v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (fits_int64(v)) {
    small_ = v.get_si();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() * o.to_mpz());
  return *this;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  require_internal(!b.is_zero(), "division by zero");
  if (a.is_small() && b.is_small() &&
      !(a.small() == std::numeric_limits<std::int64_t>::min() && b.small() == -1)) {
    std::int64_t q = a.small() / b.small();
    if ((a.small() % b.small() != 0) && ((a.small() < 0) != (b.small() < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer exact_div(const Integer& a, const Integer& b) {
  require_internal(!b.is_zero(), "division by zero");
  if (a.is_small() && b.is_small() &&
      !(a.small() == std::numeric_limits<std::int64_t>::min() && b.small() == -1))
    return Integer(a.small() / b.small());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

bool divides(const Integer& d, const Integer& a) {
  if (d.is_zero()) return a.is_zero();
  if (a.is_small() && d.is_small() && d.small() != -1) return a.small() % d.small() == 0;
  return mpz_divisible_p(a.to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small() > INT32_MIN && a.small() < INT32_MAX &&
      b.small() > INT32_MIN && b.small() < INT32_MAX) {
    std::int64_t old_r = a.small(), r = b.small();
    std::int64_t old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      std::int64_t tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
      tmp = old_t - q * t;
      old_t = t;
      t = tmp;
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    return {Integer(old_r), Integer(old_s), Integer(old_t)};
  }
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.to_mpz().get_mpz_t(),
             b.to_mpz().get_mpz_t());
  return {Integer(g), Integer(s), Integer(t)};
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

}  // namespace glj
