#include "nilcoh/field.hpp"

namespace nilcoh {

namespace {
bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

Field Field::prime(long p) {
  require(is_prime(p), error::code::parse, "field characteristic must be prime: " + std::to_string(p));
  return Field(Kind::Prime, p);
}

std::string Field::describe() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    s.r_ = v % f.p();
    if (s.r_ < 0) s.r_ += f.p();
  }
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = v;
    s.q_.canonicalize();
  } else {
    // Reduce numerator/denominator mod p; denominator must be invertible.
    mpz_class p(f.p());
    mpz_class num = v.get_num() % p;
    mpz_class den = v.get_den() % p;
    require(den != 0, error::code::parse, "denominator divisible by p");
    Scalar d = from_int(f, den.get_si());
    Scalar n = from_int(f, num.get_si());
    s = n * d.inv();
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

void Scalar::check_field(const Scalar& o) const {
  require(field_ == o.field_, error::code::internal, "scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_field(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_field(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ - o.q_;
  else
    s.r_ = ((r_ - o.r_) % field_.p() + field_.p()) % field_.p();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_field(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = static_cast<long>((static_cast<__int128>(r_) * o.r_) % field_.p());
  return s;
}

Scalar Scalar::inv() const {
  require(!is_zero(), error::code::internal, "division by zero");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    // Extended Euclid.
    long a = r_, m = field_.p(), x0 = 0, x1 = 1;
    long b = m;
    while (a > 1) {
      long q = a / b;
      long t = b;
      b = a - q * b;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    s.r_ = ((x1 % m) + m) % m;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p() - r_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_field(o);
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  try {
    if (f.is_rational()) {
      mpq_class q(s);
      require(q.get_den() != 0, error::code::parse, "zero denominator: " + s);
      q.canonicalize();
      return from_mpq(f, q);
    }
    size_t pos = 0;
    long v = std::stol(s, &pos);
    require(pos == s.size(), error::code::parse, "bad residue: " + s);
    return from_int(f, v);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    throw error(error::code::parse, "bad scalar literal: " + s);
  }
}

}  // namespace nilcoh
