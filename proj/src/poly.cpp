#include "sheaflab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace sheaflab {

namespace {

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > 4) throw PolyError("unsupported number of variables: " + std::to_string(nvars));
}

void fill_basis(int nvars, int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (var == nvars - 1) {
    cur[var] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[var] = static_cast<std::uint16_t>(a);
    fill_basis(nvars, var + 1, remaining - a, cur, out);
  }
  cur[var] = 0;
}

std::shared_mutex basis_mutex;
std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Exponent>>> basis_cache;

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int i = 0; i < 4; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

std::string monomial_string(const Exponent& e, int nvars) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

// Parses one product of factors like "3*x0^2*x1" (sign already stripped).
Poly::Term parse_term(std::string_view t, const FieldSpec& f, int nvars) {
  if (t.empty()) throw PolyError("empty term");
  Exponent e{};
  mpq_class coef = 1;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t star = t.find('*', pos);
    std::string_view factor = t.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (factor.empty()) throw PolyError("empty factor in term '" + std::string(t) + "'");
    if (factor[0] == 'x') {
      std::size_t caret = factor.find('^');
      std::string idx(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
      if (idx.empty() || !std::all_of(idx.begin(), idx.end(), ::isdigit)) {
        throw PolyError("bad variable '" + std::string(factor) + "'");
      }
      int v = std::stoi(idx);
      if (v >= nvars) throw PolyError("variable x" + idx + " out of range");
      int power = 1;
      if (caret != std::string_view::npos) {
        std::string pw(factor.substr(caret + 1));
        if (pw.empty() || !std::all_of(pw.begin(), pw.end(), ::isdigit)) {
          throw PolyError("bad exponent in '" + std::string(factor) + "'");
        }
        power = std::stoi(pw);
      }
      e[v] = static_cast<std::uint16_t>(e[v] + power);
    } else {
      std::string num(factor);
      bool ok = !num.empty() && std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(c) || c == '/'; });
      if (!ok) throw PolyError("bad coefficient '" + num + "'");
      mpq_class q;
      try {
        q = mpq_class(num);
      } catch (const std::invalid_argument&) {
        throw PolyError("bad coefficient '" + num + "'");
      }
      if (q.get_den() == 0) throw PolyError("zero denominator in '" + num + "'");
      q.canonicalize();
      coef *= q;
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return {e, Scalar::from_mpq(f, coef)};
}

}  // namespace

int total_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

long long piece_dim(int n, int d) {
  if (d < 0) return 0;
  long long r = 1;
  for (int i = 1; i <= n; ++i) r = r * (d + i) / i;
  return r;
}

const std::vector<Exponent>& monomial_basis(int nvars, int d) {
  check_nvars(nvars);
  auto key = std::make_pair(nvars, d);
  {
    std::shared_lock lock(basis_mutex);
    auto it = basis_cache.find(key);
    if (it != basis_cache.end()) return *it->second;
  }
  auto basis = std::make_unique<std::vector<Exponent>>();
  if (d >= 0) {
    Exponent cur{};
    fill_basis(nvars, 0, d, cur, *basis);
  }
  std::unique_lock lock(basis_mutex);
  auto [it, inserted] = basis_cache.emplace(key, std::move(basis));
  return *it->second;
}

std::size_t monomial_index(int nvars, const Exponent& e) {
  int rem = total_degree(e);
  std::size_t idx = 0;
  for (int i = 0; i + 1 < nvars; ++i) {
    for (int a = rem; a > e[i]; --a) idx += static_cast<std::size_t>(piece_dim(nvars - i - 2, rem - a));
    rem -= e[i];
  }
  return idx;
}

ProjPoint::ProjPoint(ScalarVector coords) : coords_(std::move(coords)) {
  auto it = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == coords_.end()) throw PolyError("projective point with all coordinates zero");
  Scalar inv = it->inverse();
  for (auto& c : coords_) c *= inv;
}

std::string ProjPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += coords_[i].to_string();
  }
  return s + ")";
}

Poly::Poly(FieldSpec f, int nvars) : field_(f), nvars_(nvars) { check_nvars(nvars); }

Poly Poly::from_terms(FieldSpec f, int nvars, std::vector<Term> terms) {
  Poly p(f, nvars);
  std::map<Exponent, Scalar, std::greater<>> acc;
  for (auto& [e, c] : terms) {
    for (int i = nvars; i < 4; ++i) {
      if (e[i] != 0) throw PolyError("exponent uses a variable beyond nvars");
    }
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, c);
    } else {
      it->second += c;
    }
  }
  int deg = -1;
  for (auto& [e, c] : acc) {
    if (c.is_zero()) continue;
    if (deg < 0) deg = total_degree(e);
    if (total_degree(e) != deg) throw PolyError("inhomogeneous polynomial");
    p.terms_.emplace_back(e, c);
  }
  return p;
}

Poly Poly::variable(const FieldSpec& f, int nvars, int i) {
  if (i < 0 || i >= nvars) throw PolyError("variable index out of range");
  Exponent e{};
  e[i] = 1;
  return from_terms(f, nvars, {{e, Scalar::one(f)}});
}

Poly Poly::constant(const FieldSpec& f, int nvars, const Scalar& c) { return from_terms(f, nvars, {{Exponent{}, c}}); }

Poly Poly::parse(std::string_view text, const FieldSpec& f, int nvars) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw PolyError("empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') neg = !neg;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    auto term = parse_term(std::string_view(s).substr(pos, end - pos), f, nvars);
    if (neg) term.second = -term.second;
    terms.push_back(std::move(term));
    pos = end;
  }
  return from_terms(f, nvars, std::move(terms));
}

int Poly::degree() const {
  if (terms_.empty()) throw PolyError("degree of the zero polynomial");
  return total_degree(terms_.front().first);
}

bool Poly::is_unit() const { return terms_.size() == 1 && total_degree(terms_.front().first) == 0; }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c.is_negative_repr();
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(e, nvars_);
    if (mono.empty()) {
      s += mag.to_string();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.to_string() + '*' + mono;
    }
  }
  return s;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_) throw PolyError("adding polynomials from different rings");
  std::vector<Poly::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Poly::from_terms(a.field_, a.nvars_, std::move(terms));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_) throw PolyError("multiplying polynomials from different rings");
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) terms.emplace_back(add_exponents(ea, eb), ca * cb);
  }
  return Poly::from_terms(a.field_, a.nvars_, std::move(terms));
}

Poly operator*(const Scalar& c, const Poly& a) {
  std::vector<Poly::Term> terms = a.terms_;
  for (auto& t : terms) t.second *= c;
  return Poly::from_terms(a.field_, a.nvars_, std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Poly random_form(const FieldSpec& f, int nvars, int d, Rng& rng) {
  std::vector<Poly::Term> terms;
  for (const auto& e : monomial_basis(nvars, d)) terms.emplace_back(e, rng.scalar(f));
  return Poly::from_terms(f, nvars, std::move(terms));
}

Poly form_from_vector(const FieldSpec& f, int nvars, int d, const ScalarVector& v, std::size_t offset) {
  const auto& basis = monomial_basis(nvars, d);
  if (offset + basis.size() > v.size()) throw PolyError("coefficient vector too short");
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) terms.emplace_back(basis[i], v[offset + i]);
  return Poly::from_terms(f, nvars, std::move(terms));
}

ScalarVector form_to_vector(const Poly& p, int d) {
  ScalarVector v(monomial_basis(p.nvars(), d).size(), Scalar::zero(p.field()));
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != d) throw PolyError("form has degree " + std::to_string(total_degree(e)) + ", expected " + std::to_string(d));
    v[monomial_index(p.nvars(), e)] = c;
  }
  return v;
}

ScalarMatrix mult_matrix(const Poly& f, int d) { return mult_matrix(f, f.is_zero() ? 0 : f.degree(), d); }

ScalarMatrix mult_matrix(const Poly& f, int e, int d) {
  if (!f.is_zero() && f.degree() != e) throw PolyError("form degree does not match the requested shift");
  const auto& src = monomial_basis(f.nvars(), d);
  const auto& dst = monomial_basis(f.nvars(), d + e);
  MatrixBuilder b(f.field(), dst.size(), src.size());
  if (!f.is_zero() && d >= 0) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (const auto& [te, c] : f.terms()) b.set(monomial_index(f.nvars(), add_exponents(src[j], te)), j, c);
    }
  }
  return std::move(b).build();
}

Scalar evaluate(const Poly& f, const ProjPoint& x) {
  if (x.nvars() != f.nvars()) throw PolyError("point and polynomial live in different spaces");
  Scalar acc = Scalar::zero(f.field());
  for (const auto& [e, c] : f.terms()) {
    Scalar m = c;
    for (int i = 0; i < f.nvars(); ++i) {
      for (int k = 0; k < e[i]; ++k) m *= x.coords()[i];
    }
    acc += m;
  }
  return acc;
}

ScalarVector evaluate_monomials(int nvars, int d, const ProjPoint& x) {
  if (x.nvars() != nvars) throw PolyError("point has the wrong number of coordinates");
  const auto& basis = monomial_basis(nvars, d);
  if (basis.empty()) return {};
  FieldSpec f = x.coords().front().field();
  std::vector<ScalarVector> powers(nvars);
  for (int i = 0; i < nvars; ++i) {
    powers[i].push_back(Scalar::one(f));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * x.coords()[i]);
  }
  ScalarVector out;
  out.reserve(basis.size());
  for (const auto& e : basis) {
    Scalar m = Scalar::one(f);
    for (int i = 0; i < nvars; ++i) m *= powers[i][e[i]];
    out.push_back(m);
  }
  return out;
}

Poly restrict_to_plane(const Poly& f, const ScalarVector& plane) {
  int n = f.nvars();
  if (static_cast<int>(plane.size()) != n) throw PolyError("plane needs one coefficient per variable");
  int k = -1;
  for (int i = 0; i < n; ++i) {
    if (!plane[i].is_zero()) k = i;
  }
  if (k < 0) throw PolyError("zero plane");
  const FieldSpec& fs = f.field();
  std::vector<Poly> images;
  Scalar inv = plane[k].inverse();
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      Poly sub(fs, n - 1);
      for (int j = 0; j < n; ++j) {
        if (j == k || plane[j].is_zero()) continue;
        sub = sub + (-(plane[j] * inv)) * Poly::variable(fs, n - 1, j < k ? j : j - 1);
      }
      images.push_back(sub);
    } else {
      images.push_back(Poly::variable(fs, n - 1, i < k ? i : i - 1));
    }
  }
  std::vector<std::vector<Poly>> powers(n);
  Poly out(fs, n - 1);
  for (const auto& [e, c] : f.terms()) {
    Poly m = Poly::constant(fs, n - 1, c);
    for (int i = 0; i < n; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(fs, n - 1, Scalar::one(fs)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      m = m * pw[e[i]];
    }
    out = out + m;
  }
  return out;
}

}  // namespace sheaflab
