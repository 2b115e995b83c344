#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symqcs {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ground field: the rationals (p == 0) or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const;

  // Arithmetic on raw values. Residues are kept reduced in [0, p).
  Rat add(const Rat& a, const Rat& b) const;
  Rat sub(const Rat& a, const Rat& b) const;
  Rat mul(const Rat& a, const Rat& b) const;
  Rat neg(const Rat& a) const;
  Rat inv(const Rat& a) const;
  Rat reduce(const Rat& a) const;  // canonical form of an arbitrary rational in this field

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// A single field element tagged with its field; the JSON-facing value type.
class Scalar {
 public:
  Scalar() : f_(Field::rationals()), v_(0) {}
  Scalar(Field f, Rat v) : f_(f), v_(f.reduce(std::move(v))) {}

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  static Scalar of_int(Field f, long long n) { return Scalar(f, Rat(n)); }

  const Field& field() const { return f_; }
  const Rat& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Scalar operator+(const Scalar& o) const { return bin(o, &Field::add); }
  Scalar operator-(const Scalar& o) const { return bin(o, &Field::sub); }
  Scalar operator*(const Scalar& o) const { return bin(o, &Field::mul); }
  Scalar operator-() const { return Scalar(f_, f_.neg(v_)); }
  Scalar inverse() const { return Scalar(f_, f_.inv(v_)); }
  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }

  /// "p/q" with q > 0 reduced, or "r mod p".
  std::string str() const;
  static Scalar parse(const std::string& s);

 private:
  template <class Op>
  Scalar bin(const Scalar& o, Op op) const {
    if (f_ != o.f_) throw ConfigError("scalar field mismatch: " + f_.str() + " vs " + o.f_.str());
    return Scalar(f_, (f_.*op)(v_, o.v_));
  }
  Field f_;
  Rat v_;
};

/// Fletcher-style check used by Maschke averaging: does p divide n! ?
bool characteristic_divides_factorial(const Field& f, int n);

}  // namespace symqcs
