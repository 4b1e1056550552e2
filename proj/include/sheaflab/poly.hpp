#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sheaflab/matrix.hpp"
#include "sheaflab/random.hpp"

namespace sheaflab {

class PolyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exponent vector; entries past nvars are zero.
using Exponent = std::array<std::uint16_t, 4>;

int total_degree(const Exponent& e);

// Projective dimension n for n+1 variables.
inline int proj_dim(int nvars) { return nvars - 1; }

// dim S_d for S = k[x_0..x_n]; zero for d < 0.
long long piece_dim(int n, int d);

// Monomials of degree d in nvars variables, in descending graded-lex order
// (x0 > x1 > ...). Memoized; the reference stays valid for the process.
const std::vector<Exponent>& monomial_basis(int nvars, int d);
// Position of a monomial of degree total_degree(e) inside monomial_basis.
std::size_t monomial_index(int nvars, const Exponent& e);

class ProjPoint {
 public:
  // Normalizes so the first nonzero coordinate is one.
  explicit ProjPoint(ScalarVector coords);
  const ScalarVector& coords() const { return coords_; }
  int nvars() const { return static_cast<int>(coords_.size()); }
  std::string to_string() const;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  ScalarVector coords_;
};

class Poly {
 public:
  using Term = std::pair<Exponent, Scalar>;

  Poly(FieldSpec f, int nvars);
  // Combines like terms, drops zeros, sorts; throws PolyError if inhomogeneous.
  static Poly from_terms(FieldSpec f, int nvars, std::vector<Term> terms);
  static Poly variable(const FieldSpec& f, int nvars, int i);
  static Poly constant(const FieldSpec& f, int nvars, const Scalar& c);
  static Poly parse(std::string_view text, const FieldSpec& f, int nvars);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Throws PolyError on the zero polynomial.
  int degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  // A nonzero constant.
  bool is_unit() const;
  std::string to_string() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  FieldSpec field_;
  int nvars_;
  std::vector<Term> terms_;
};

// Form of degree d with independent random coefficients for every monomial.
Poly random_form(const FieldSpec& f, int nvars, int d, Rng& rng);
// Form with coefficient vector v in monomial_basis(nvars, d).
Poly form_from_vector(const FieldSpec& f, int nvars, int d, const ScalarVector& v, std::size_t offset = 0);
ScalarVector form_to_vector(const Poly& p, int d);

// Matrix of multiplication by f from S_d to S_{d+e}. e is the degree of f;
// the single-argument form reads it from f (zero counts as degree 0).
ScalarMatrix mult_matrix(const Poly& f, int d);
ScalarMatrix mult_matrix(const Poly& f, int e, int d);

Scalar evaluate(const Poly& f, const ProjPoint& x);
// Values at x of every monomial in monomial_basis(nvars, d).
ScalarVector evaluate_monomials(int nvars, int d, const ProjPoint& x);

// Eliminates the variable with the last nonzero plane coefficient.
Poly restrict_to_plane(const Poly& f, const ScalarVector& plane);

}  // namespace sheaflab
