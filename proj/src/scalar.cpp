#include "homjmp/scalar.hpp"

#include <cctype>
#include <ostream>

namespace homjmp {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("denominator must be positive");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("denominator must be positive in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Scalar(mpq_class(1 / q_));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  // Integer fast path: avoids the gcd canonicalisation of mpq multiplication.
  if (a.is_integer() && b.is_integer() && is_integer()) {
    mpz_addmul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
    return;
  }
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  q_ += t;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace homjmp
