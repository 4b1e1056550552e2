#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace sheaflab {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficient field: a prime field F_p (p < 2^31) or the rationals.
class FieldSpec {
 public:
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(0); }
  // Accepts "Q" or a decimal prime.
  static FieldSpec parse(std::string_view text);

  bool is_prime() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  // 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

// A field element. Residues carry their modulus so arithmetic needs no context.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);
  static Scalar residue(std::uint32_t value, std::uint32_t p) { return Scalar(Residue{value % p, p}); }

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;
  // Residue in [0,p); only for prime fields.
  std::uint32_t residue_value() const;
  const mpq_class& rational_value() const;

  // Symmetric representative in (-p/2, p/2] for prime fields, "a/b" for rationals.
  std::string to_string() const;
  // Sign-aware helpers used by the polynomial printer.
  bool is_negative_repr() const;

  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  std::variant<Residue, mpq_class> v_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace sheaflab
