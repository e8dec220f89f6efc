#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homjmp {

/// Raised when an operation's inputs have incompatible shapes.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a construction's mathematical precondition does not hold.
class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed textual input (rationals, algebra files, map files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral T>
  Scalar(T v) : q_(static_cast<long>(v)) {}  // NOLINT: implicit by intent

  Scalar(long num, long den);

  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading sign, decimal digits only).
  static Scalar parse(std::string_view text);

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Adds a*b into this without a temporary Scalar.
  void add_product(const Scalar& a, const Scalar& b);

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace homjmp
