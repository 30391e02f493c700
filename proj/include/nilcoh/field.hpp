#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nilcoh {

/// Error taxonomy shared by the library and the CLI exit-code contract.
struct error : std::runtime_error {
  enum class code { parse = 2, validate = 3, resource = 4, property = 5, internal = 10 };
  code kind;
  error(code k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline void require(bool ok, error::code k, const std::string& msg) {
  if (!ok) throw error(k, msg);
}

/// Coefficient field: the rationals or a prime field F_p.
class Field {
public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(long p);

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string describe() const;

private:
  Field(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

/// Exact field element. Rationals are reduced mpq with positive denominator;
/// prime-field values are residues in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()), q_(0), r_(0) {}
  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar from_mpq(const Field& f, const mpq_class& v);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(field_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// For rationals only.
  const mpq_class& rat() const { return q_; }
  /// For prime fields only.
  long residue() const { return r_; }

  /// "a/b" or "a" over Q, decimal residue over F_p.
  std::string str() const;
  static Scalar parse(const Field& f, const std::string& s);

private:
  explicit Scalar(const Field& f) : field_(f), q_(0), r_(0) {}
  void check_field(const Scalar& o) const;
  Field field_;
  mpq_class q_;
  long r_;
};

}  // namespace nilcoh
