#include "sheaflab/field.hpp"

#include <charconv>

namespace sheaflab {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw FieldError("scalars from different fields: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw FieldError("prime too large: " + std::to_string(p));
  if (!is_prime_number(p)) throw FieldError("not a prime: " + std::to_string(p));
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FieldError("bad field specification '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string FieldSpec::to_string() const { return is_rational() ? "Q" : std::to_string(p_); }

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw FieldError("division by zero");
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  long long p = f.characteristic();
  long long r = v % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.characteristic()});
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  mpz_class p = f.characteristic();
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw FieldError("denominator vanishes mod " + f.to_string());
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  std::uint64_t v = static_cast<std::uint64_t>(n) * mod_inverse(d, f.characteristic()) % f.characteristic();
  return Scalar(Residue{static_cast<std::uint32_t>(v), f.characteristic()});
}

FieldSpec Scalar::field() const {
  if (auto r = std::get_if<Residue>(&v_)) return FieldSpec(r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

std::uint32_t Scalar::residue_value() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value;
  throw FieldError("residue requested from a rational scalar");
}

const mpq_class& Scalar::rational_value() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return *q;
  throw FieldError("rational requested from a residue");
}

bool Scalar::is_negative_repr() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value > r->p / 2;
  return sgn(std::get<mpq_class>(v_)) < 0;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&v_)) {
    long long v = r->value;
    if (r->value > r->p / 2) v -= r->p;
    return std::to_string(v);
  }
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&v_)) return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (auto r = std::get_if<Residue>(&v_)) return Scalar(Residue{mod_inverse(r->value, r->p), r->p});
  const auto& q = std::get<mpq_class>(v_);
  if (sgn(q) == 0) throw FieldError("division by zero");
  return Scalar(mpq_class(1 / q));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (auto ra = std::get_if<Scalar::Residue>(&a.v_)) {
    auto rb = std::get_if<Scalar::Residue>(&b.v_);
    if (!rb || ra->p != rb->p) same_field(a.field(), b.field());
    std::uint32_t s = ra->value + rb->value;
    if (s >= ra->p) s -= ra->p;
    return Scalar(Scalar::Residue{s, ra->p});
  }
  same_field(a.field(), b.field());
  return Scalar(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (auto ra = std::get_if<Scalar::Residue>(&a.v_)) {
    auto rb = std::get_if<Scalar::Residue>(&b.v_);
    if (!rb || ra->p != rb->p) same_field(a.field(), b.field());
    auto v = static_cast<std::uint64_t>(ra->value) * rb->value % ra->p;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(v), ra->p});
  }
  same_field(a.field(), b.field());
  return Scalar(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (auto ra = std::get_if<Scalar::Residue>(&a.v_)) {
    auto rb = std::get<Scalar::Residue>(b.v_);
    return ra->p == rb.p && ra->value == rb.value;
  }
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

}  // namespace sheaflab
