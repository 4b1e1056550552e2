#include "sheaflab/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sheaflab/parallel.hpp"

namespace sheaflab {

namespace {

std::vector<std::size_t> piece_offsets(const FreeTerm& term, int nvars, int t, std::size_t& total) {
  std::vector<std::size_t> off;
  total = 0;
  for (int b : term.twists()) {
    off.push_back(total);
    total += static_cast<std::size_t>(piece_dim(proj_dim(nvars), b + t));
  }
  return off;
}

std::string trim_copy(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int to_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("expected an integer in " + context + ", got '" + s + "'");
  }
}

}  // namespace

FreeTerm FreeTerm::twisted(int t) const {
  std::vector<int> v = twists_;
  for (int& b : v) b += t;
  return FreeTerm(std::move(v));
}

FreeTerm FreeTerm::negated() const {
  std::vector<int> v = twists_;
  for (int& b : v) b = -b;
  return FreeTerm(std::move(v));
}

FreeTerm FreeTerm::without(std::size_t i) const {
  std::vector<int> v = twists_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return FreeTerm(std::move(v));
}

FreeTerm operator+(const FreeTerm& a, const FreeTerm& b) {
  std::vector<int> v = a.twists_;
  v.insert(v.end(), b.twists_.begin(), b.twists_.end());
  return FreeTerm(std::move(v));
}

std::string FreeTerm::shape() const {
  if (twists_.empty()) return "0";
  std::map<int, int> mult;
  for (int b : twists_) ++mult[b];
  std::string s;
  for (const auto& [b, m] : mult) {
    if (!s.empty()) s += " + ";
    if (m > 1) s += std::to_string(m);
    s += b == 0 ? "O" : "O(" + std::to_string(b) + ")";
  }
  return s;
}

bool FreeTerm::same_shape(const FreeTerm& o) const {
  auto a = twists_;
  auto b = o.twists_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

GradedMap::GradedMap(FieldSpec f, int nvars, FreeTerm source, FreeTerm target)
    : field_(f), nvars_(nvars), source_(std::move(source)), target_(std::move(target)) {
  entries_.assign(rows() * cols(), Poly(f, nvars));
}

GradedMap::GradedMap(FreeTerm source, FreeTerm target, std::vector<Poly> entries, FieldSpec f, int nvars)
    : field_(f), nvars_(nvars), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.size() != rows() * cols()) {
    throw ComplexError("map has " + std::to_string(entries_.size()) + " entries, expected " +
                       std::to_string(rows() * cols()));
  }
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const Poly& e = entry(i, j);
      if (!(e.field() == field_) || e.nvars() != nvars_) throw ComplexError("map entry from a different ring");
      if (e.is_zero()) continue;
      if (e.degree() != required_degree(i, j)) {
        throw ComplexError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                           std::to_string(e.degree()) + ", expected " + std::to_string(required_degree(i, j)));
      }
    }
  }
}

bool GradedMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

ScalarMatrix GradedMap::graded_piece(int t) const {
  std::size_t nsrc = 0, ndst = 0;
  auto src_off = piece_offsets(source_, nvars_, t, nsrc);
  auto dst_off = piece_offsets(target_, nvars_, t, ndst);
  MatrixBuilder b(field_, ndst, nsrc);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const Poly& f = entry(i, j);
      if (f.is_zero()) continue;
      const auto& basis = monomial_basis(nvars_, source_[j] + t);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        for (const auto& [e, c] : f.terms()) {
          Exponent m{};
          for (int v = 0; v < 4; ++v) m[v] = static_cast<std::uint16_t>(basis[k][v] + e[v]);
          b.set(dst_off[i] + monomial_index(nvars_, m), src_off[j] + k, c);
        }
      }
    }
  }
  return std::move(b).build();
}

ScalarMatrix GradedMap::evaluate(const ProjPoint& x) const {
  MatrixBuilder b(field_, rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!entry(i, j).is_zero()) b.set(i, j, sheaflab::evaluate(entry(i, j), x));
    }
  }
  return std::move(b).build();
}

GradedMap GradedMap::transpose() const {
  std::vector<Poly> t;
  t.reserve(entries_.size());
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t i = 0; i < rows(); ++i) t.push_back(entry(i, j));
  }
  return GradedMap(target_.negated(), source_.negated(), std::move(t), field_, nvars_);
}

GradedMap GradedMap::twisted(int t) const {
  return GradedMap(source_.twisted(t), target_.twisted(t), entries_, field_, nvars_);
}

GradedMap GradedMap::restricted(const ScalarVector& plane) const {
  std::vector<Poly> r;
  r.reserve(entries_.size());
  for (const auto& e : entries_) r.push_back(restrict_to_plane(e, plane));
  return GradedMap(source_, target_, std::move(r), field_, nvars_ - 1);
}

GradedMap operator*(const GradedMap& after, const GradedMap& before) {
  if (!(after.source_ == before.target_)) throw ComplexError("composing maps with mismatched terms");
  GradedMap out(after.field_, after.nvars_, before.source_, after.target_);
  for (std::size_t i = 0; i < after.rows(); ++i) {
    for (std::size_t k = 0; k < before.cols(); ++k) {
      Poly acc(after.field_, after.nvars_);
      for (std::size_t j = 0; j < after.cols(); ++j) {
        const Poly& a = after.entry(i, j);
        const Poly& b = before.entry(j, k);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc + a * b;
      }
      out.entries_[i * out.cols() + k] = std::move(acc);
    }
  }
  return out;
}

GradedMap stack_rows(const GradedMap& top, const GradedMap& bottom) {
  if (!(top.source() == bottom.source())) throw ComplexError("stack_rows: sources differ");
  std::vector<Poly> e = top.entries();
  e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
  return GradedMap(top.source(), top.target() + bottom.target(), std::move(e), top.field(), top.nvars());
}

GradedMap stack_cols(const GradedMap& left, const GradedMap& right) {
  if (!(left.target() == right.target())) throw ComplexError("stack_cols: targets differ");
  std::vector<Poly> e;
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) e.push_back(left.entry(i, j));
    for (std::size_t j = 0; j < right.cols(); ++j) e.push_back(right.entry(i, j));
  }
  return GradedMap(left.source() + right.source(), left.target(), std::move(e), left.field(), left.nvars());
}

GradedMap zero_map(const FieldSpec& f, int nvars, const FreeTerm& source, const FreeTerm& target) {
  return GradedMap(f, nvars, source, target);
}

FreeComplex::FreeComplex(FieldSpec f, int nvars, int pmin, std::vector<FreeTerm> terms, std::vector<GradedMap> maps,
                         int coh_pos)
    : field_(f), nvars_(nvars), pmin_(pmin), terms_(std::move(terms)), maps_(std::move(maps)), coh_pos_(coh_pos) {
  if (nvars_ != 3 && nvars_ != 4) throw ComplexError("complexes live on P^2 or P^3 (nvars 3 or 4)");
  if (terms_.empty()) throw ComplexError("complex without terms");
  if (maps_.size() + 1 != terms_.size()) throw ComplexError("need one map between each pair of adjacent terms");
  if (coh_pos_ < pmin_ || coh_pos_ > pmax()) throw ComplexError("cohomology position outside the complex");
  int span = pmax() - pmin_;
  if (span > proj_dim(nvars_)) {
    throw SpanTooLarge("complex spans " + std::to_string(span) + " steps; at most " + std::to_string(proj_dim(nvars_)) +
                       " allowed on P^" + std::to_string(proj_dim(nvars_)));
  }
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& m = maps_[k];
    if (!(m.field() == field_) || m.nvars() != nvars_) throw ComplexError("map from a different ring");
    if (!(m.source() == terms_[k]) || !(m.target() == terms_[k + 1])) {
      throw ComplexError("map at position " + std::to_string(pmin_ + static_cast<int>(k)) + " does not match its terms");
    }
  }
}

FreeComplex FreeComplex::single(const FieldSpec& f, int nvars, FreeTerm term) {
  return FreeComplex(f, nvars, 0, {std::move(term)}, {}, 0);
}

const FreeTerm& FreeComplex::term(int pos) const {
  if (pos < pmin_ || pos > pmax()) throw ComplexError("no term at position " + std::to_string(pos));
  return terms_[static_cast<std::size_t>(pos - pmin_)];
}

const GradedMap& FreeComplex::map(int pos) const {
  if (pos < pmin_ || pos >= pmax()) throw ComplexError("no map at position " + std::to_string(pos));
  return maps_[static_cast<std::size_t>(pos - pmin_)];
}

long long FreeComplex::rank() const {
  long long r = 0;
  for (int p = pmin_; p <= pmax(); ++p) {
    long long m = static_cast<long long>(term(p).rank());
    r += ((p - coh_pos_) % 2 == 0) ? m : -m;
  }
  return r;
}

std::string FreeComplex::shape() const {
  std::string s;
  for (int p = pmin_; p <= pmax(); ++p) {
    if (p > pmin_) s += " -> ";
    std::string t = term(p).shape();
    s += p == coh_pos_ ? "[" + t + "]" : t;
  }
  return s;
}

bool ValidityReport::ok() const {
  return is_complex && std::none_of(positions.begin(), positions.end(),
                                    [](const PositionCheck& c) { return c.status == Exactness::certified_no; });
}

std::string ValidityReport::to_string() const {
  std::ostringstream out;
  out << "complex " << (is_complex ? "yes" : "no") << "\n";
  out << "mode " << (exhaustive ? "exhaustive over F_" + std::to_string(p) : "sampled") << " points " << points
      << " seed " << seed << "\n";
  for (const auto& c : positions) {
    out << "position " << c.position << " ";
    switch (c.status) {
      case Exactness::certified_yes:
        out << "exact (certified over F_" << p << ")";
        break;
      case Exactness::probable_yes:
        out << "exact at all " << points << " sampled points";
        break;
      case Exactness::certified_no:
        out << "NOT exact at " << c.witness->to_string() << " (fiber homology " << c.defect << ")";
        break;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<ProjPoint> all_points(const FieldSpec& f, int nvars) {
  if (!f.is_prime()) throw ComplexError("exhaustive enumeration needs a prime field");
  std::uint32_t p = f.characteristic();
  std::vector<ProjPoint> pts;
  for (int lead = 0; lead < nvars; ++lead) {
    int free = nvars - lead - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      ScalarVector v(static_cast<std::size_t>(nvars), Scalar::zero(f));
      v[lead] = Scalar::one(f);
      std::uint64_t c = code;
      for (int i = nvars - 1; i > lead; --i) {
        v[i] = Scalar::residue(static_cast<std::uint32_t>(c % p), p);
        c /= p;
      }
      pts.emplace_back(std::move(v));
    }
  }
  return pts;
}

std::vector<ProjPoint> sample_points(const FieldSpec& f, int nvars, const SamplingConfig& cfg, std::uint64_t stream) {
  if (cfg.exhaustive) {
    if (!f.is_prime() || f.characteristic() > 7) throw ComplexError("exhaustive mode is limited to p in {2,3,5,7}");
    return all_points(f, nvars);
  }
  if (f.is_prime()) {
    long double total = 1;
    for (int i = 0; i < nvars; ++i) total *= f.characteristic();
    total = (total - 1) / (f.characteristic() - 1);
    if (static_cast<long double>(cfg.samples) >= total) return all_points(f, nvars);
  }
  Rng rng(cfg.seed, stream);
  std::vector<ProjPoint> pts;
  std::set<std::string> seen;
  for (int i = 0; i < nvars && pts.size() < cfg.samples; ++i) {
    ScalarVector v(static_cast<std::size_t>(nvars), Scalar::zero(f));
    v[static_cast<std::size_t>(i)] = Scalar::one(f);
    ProjPoint x(std::move(v));
    seen.insert(x.to_string());
    pts.push_back(std::move(x));
  }
  while (pts.size() < cfg.samples) {
    ScalarVector v;
    bool nonzero = false;
    for (int i = 0; i < nvars; ++i) {
      v.push_back(rng.scalar(f));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (!nonzero) continue;
    ProjPoint x(std::move(v));
    if (seen.insert(x.to_string()).second) pts.push_back(std::move(x));
  }
  return pts;
}

ValidityReport validate(const FreeComplex& c, const SamplingConfig& cfg) {
  ValidityReport rep;
  rep.exhaustive = cfg.exhaustive;
  rep.seed = cfg.seed;
  rep.p = c.field().characteristic();
  rep.is_complex = true;
  for (int p = c.pmin(); p + 1 < c.pmax(); ++p) {
    if (!(c.map(p + 1) * c.map(p)).is_zero()) rep.is_complex = false;
  }
  auto pts = sample_points(c.field(), c.nvars(), cfg);
  rep.points = pts.size();
  const int npos = c.pmax() - c.pmin() + 1;
  // defects[k][pos] = fiber homology dimension at point k.
  std::vector<std::vector<std::size_t>> defects(pts.size(), std::vector<std::size_t>(static_cast<std::size_t>(npos), 0));
  parallel_for(pts.size(), [&](std::size_t k) {
    std::vector<std::size_t> ranks;
    for (int p = c.pmin(); p < c.pmax(); ++p) ranks.push_back(rank(c.map(p).evaluate(pts[k])));
    for (int p = c.pmin(); p <= c.pmax(); ++p) {
      auto i = static_cast<std::size_t>(p - c.pmin());
      std::size_t out = p < c.pmax() ? ranks[i] : 0;
      std::size_t in = p > c.pmin() ? ranks[i - 1] : 0;
      defects[k][i] = c.term(p).rank() - out - in;
    }
  });
  for (int p = c.pmin(); p <= c.pmax(); ++p) {
    if (p == c.coh_pos()) continue;
    PositionCheck chk;
    chk.position = p;
    chk.status = cfg.exhaustive ? Exactness::certified_yes : Exactness::probable_yes;
    auto i = static_cast<std::size_t>(p - c.pmin());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (defects[k][i] != 0) {
        chk.status = Exactness::certified_no;
        chk.witness = pts[k];
        chk.defect = defects[k][i];
        break;
      }
    }
    rep.positions.push_back(std::move(chk));
  }
  return rep;
}

FreeComplex dualize(const FreeComplex& c) {
  std::vector<FreeTerm> terms;
  std::vector<GradedMap> maps;
  for (int q = -c.pmax(); q <= -c.pmin(); ++q) terms.push_back(c.term(-q).negated());
  for (int q = -c.pmax(); q < -c.pmin(); ++q) maps.push_back(c.map(-q - 1).transpose());
  return FreeComplex(c.field(), c.nvars(), -c.pmax(), std::move(terms), std::move(maps), -c.coh_pos());
}

FreeComplex twist_complex(const FreeComplex& c, int t) {
  std::vector<FreeTerm> terms;
  std::vector<GradedMap> maps;
  for (const auto& term : c.terms()) terms.push_back(term.twisted(t));
  for (const auto& m : c.maps()) maps.push_back(m.twisted(t));
  return FreeComplex(c.field(), c.nvars(), c.pmin(), std::move(terms), std::move(maps), c.coh_pos());
}

FreeComplex restrict_plane(const FreeComplex& c, const ScalarVector& plane) {
  if (c.nvars() != 4) throw ComplexError("plane restriction needs a complex on P^3");
  std::vector<GradedMap> maps;
  for (const auto& m : c.maps()) maps.push_back(m.restricted(plane));
  return FreeComplex(c.field(), 3, c.pmin(), c.terms(), std::move(maps), c.coh_pos());
}

FreeComplex cancel_unit(const FreeComplex& c, int pos, std::size_t row, std::size_t col) {
  const GradedMap& d = c.map(pos);
  if (row >= d.rows() || col >= d.cols() || !d.entry(row, col).is_unit()) {
    throw ComplexError("cancel_unit: entry is not a nonzero constant");
  }
  const FieldSpec& f = c.field();
  Scalar uinv = d.entry(row, col).terms().front().second.inverse();
  std::vector<Poly> entries;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (j == col) continue;
      Poly v = d.entry(i, j);
      if (!d.entry(i, col).is_zero() && !d.entry(row, j).is_zero()) v = v - uinv * (d.entry(i, col) * d.entry(row, j));
      entries.push_back(std::move(v));
    }
  }
  std::vector<FreeTerm> terms = c.terms();
  auto src_idx = static_cast<std::size_t>(pos - c.pmin());
  terms[src_idx] = d.source().without(col);
  terms[src_idx + 1] = d.target().without(row);
  std::vector<GradedMap> maps = c.maps();
  maps[src_idx] = GradedMap(terms[src_idx], terms[src_idx + 1], std::move(entries), f, c.nvars());
  if (pos > c.pmin()) {
    const GradedMap& prev = c.map(pos - 1);
    std::vector<Poly> e;
    for (std::size_t i = 0; i < prev.rows(); ++i) {
      if (i == col) continue;
      for (std::size_t j = 0; j < prev.cols(); ++j) e.push_back(prev.entry(i, j));
    }
    maps[src_idx - 1] = GradedMap(prev.source(), terms[src_idx], std::move(e), f, c.nvars());
  }
  if (pos + 1 < c.pmax()) {
    const GradedMap& next = c.map(pos + 1);
    std::vector<Poly> e;
    for (std::size_t i = 0; i < next.rows(); ++i) {
      for (std::size_t j = 0; j < next.cols(); ++j) {
        if (j != row) e.push_back(next.entry(i, j));
      }
    }
    maps[src_idx + 1] = GradedMap(terms[src_idx + 1], next.target(), std::move(e), f, c.nvars());
  }
  return FreeComplex(f, c.nvars(), c.pmin(), std::move(terms), std::move(maps), c.coh_pos());
}

FreeComplex trim(const FreeComplex& c) {
  int lo = c.pmin();
  int hi = c.pmax();
  while (lo < c.coh_pos() && c.term(lo).empty()) ++lo;
  while (hi > c.coh_pos() && c.term(hi).empty()) --hi;
  std::vector<FreeTerm> terms;
  std::vector<GradedMap> maps;
  for (int p = lo; p <= hi; ++p) terms.push_back(c.term(p));
  for (int p = lo; p < hi; ++p) maps.push_back(c.map(p));
  return FreeComplex(c.field(), c.nvars(), lo, std::move(terms), std::move(maps), c.coh_pos());
}

ChernData3 chern_of(const FreeComplex& c) {
  if (c.nvars() != 4) throw ComplexError("chern_of expects a complex on P^3");
  TotalChern tot{1, 0, 0, 0};
  for (int p = c.pmin(); p <= c.pmax(); ++p) {
    TotalChern t = total(split_bundle(c.term(p).twists()));
    tot = tot * (((p - c.coh_pos()) % 2 == 0) ? t : inverse(t));
  }
  long long r = c.rank();
  if (r < 0) throw ComplexError("negative computed rank " + std::to_string(r));
  return {r, tot[1], tot[2], tot[3]};
}

ChernData2 chern_of_p2(const FreeComplex& c) {
  if (c.nvars() != 3) throw ComplexError("chern_of_p2 expects a complex on P^2");
  TotalChern tot{1, 0, 0, 0};
  for (int p = c.pmin(); p <= c.pmax(); ++p) {
    TotalChern t = total(split_bundle(c.term(p).twists()));
    tot = tot * (((p - c.coh_pos()) % 2 == 0) ? t : inverse(t));
  }
  long long r = c.rank();
  if (r < 0) throw ComplexError("negative computed rank " + std::to_string(r));
  return {r, tot[1], tot[2]};
}

long long euler_characteristic(const FreeComplex& c, int t) {
  int n = proj_dim(c.nvars());
  long long chi = 0;
  for (int p = c.pmin(); p <= c.pmax(); ++p) {
    long long s = 0;
    for (int b : c.term(p).twists()) s += binom(b + t + n, n);
    chi += ((p - c.coh_pos()) % 2 == 0) ? s : -s;
  }
  return chi;
}

std::string format_complex(const FreeComplex& c) {
  std::ostringstream out;
  out << "field " << c.field().to_string() << "\n";
  out << "nvars " << c.nvars() << "\n";
  out << "positions " << c.pmin() << " " << c.pmax() << "\n";
  out << "cohpos " << c.coh_pos() << "\n";
  for (int p = c.pmin(); p <= c.pmax(); ++p) {
    out << "term " << p << " twists";
    for (int b : c.term(p).twists()) out << " " << b;
    out << "\n";
  }
  for (int p = c.pmin(); p < c.pmax(); ++p) {
    const GradedMap& m = c.map(p);
    out << "map " << p << "\n";
    if (m.cols() == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out << "; ";
        out << m.entry(i, j).to_string();
      }
      out << "\n";
    }
  }
  return out.str();
}

FreeComplex parse_complex(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim_copy(line);
      if (!line.empty()) lines.push_back(line);
    }
  }
  std::optional<FieldSpec> field;
  int nvars = 0;
  std::optional<std::pair<int, int>> positions;
  std::optional<int> coh;
  std::map<int, FreeTerm> terms;
  std::map<int, std::vector<Poly>> map_entries;
  std::size_t k = 0;
  auto need_header = [&] {
    if (!field || nvars == 0 || !positions || !coh) throw FormatError("header incomplete before terms and maps");
  };
  while (k < lines.size()) {
    auto words = split_ws(lines[k]);
    const std::string& key = words[0];
    if (key == "field") {
      if (words.size() != 2) throw FormatError("usage: field <p>|Q");
      try {
        field = FieldSpec::parse(words[1]);
      } catch (const FieldError& e) {
        throw FormatError(e.what());
      }
      ++k;
    } else if (key == "nvars") {
      if (words.size() != 2) throw FormatError("usage: nvars <3|4>");
      nvars = to_int(words[1], "nvars");
      if (nvars != 3 && nvars != 4) throw FormatError("nvars must be 3 or 4");
      ++k;
    } else if (key == "positions") {
      if (words.size() != 3) throw FormatError("usage: positions <pmin> <pmax>");
      positions = {to_int(words[1], "positions"), to_int(words[2], "positions")};
      if (positions->first > positions->second) throw FormatError("positions out of order");
      ++k;
    } else if (key == "cohpos") {
      if (words.size() != 2) throw FormatError("usage: cohpos <k>");
      coh = to_int(words[1], "cohpos");
      ++k;
    } else if (key == "term") {
      need_header();
      if (words.size() < 3 || words[2] != "twists") throw FormatError("usage: term <pos> twists b1 b2 ...");
      int pos = to_int(words[1], "term");
      std::vector<int> tw;
      for (std::size_t i = 3; i < words.size(); ++i) tw.push_back(to_int(words[i], "term twists"));
      if (!terms.emplace(pos, FreeTerm(std::move(tw))).second) throw FormatError("duplicate term " + words[1]);
      ++k;
    } else if (key == "map") {
      need_header();
      if (words.size() != 2) throw FormatError("usage: map <pos>");
      int pos = to_int(words[1], "map");
      auto src = terms.find(pos);
      auto dst = terms.find(pos + 1);
      if (src == terms.end() || dst == terms.end()) throw FormatError("map " + words[1] + " before its terms");
      std::size_t rows = dst->second.rank(), cols = src->second.rank();
      std::vector<Poly> entries;
      ++k;
      if (cols > 0) {
        for (std::size_t i = 0; i < rows; ++i, ++k) {
          if (k >= lines.size()) throw FormatError("map " + words[1] + " is missing rows");
          std::vector<std::string> cells;
          std::string cell;
          std::istringstream row(lines[k]);
          while (std::getline(row, cell, ';')) cells.push_back(cell);
          if (cells.size() != cols) {
            throw FormatError("map " + words[1] + " row " + std::to_string(i) + " has " + std::to_string(cells.size()) +
                              " entries, expected " + std::to_string(cols));
          }
          for (const auto& s : cells) {
            try {
              entries.push_back(Poly::parse(s, *field, nvars));
            } catch (const PolyError& e) {
              throw FormatError("map " + words[1] + ": " + e.what());
            }
          }
        }
      }
      if (!map_entries.emplace(pos, std::move(entries)).second) throw FormatError("duplicate map " + words[1]);
    } else {
      throw FormatError("unknown directive '" + key + "'");
    }
  }
  need_header();
  std::vector<FreeTerm> term_list;
  std::vector<GradedMap> maps;
  for (int p = positions->first; p <= positions->second; ++p) {
    auto it = terms.find(p);
    if (it == terms.end()) throw FormatError("missing term at position " + std::to_string(p));
    term_list.push_back(it->second);
  }
  if (terms.size() != term_list.size()) throw FormatError("term outside the declared positions");
  for (int p = positions->first; p < positions->second; ++p) {
    const FreeTerm& s = terms.at(p);
    const FreeTerm& t = terms.at(p + 1);
    auto it = map_entries.find(p);
    std::vector<Poly> entries;
    if (it != map_entries.end()) {
      entries = it->second;
    } else if (s.rank() > 0 && t.rank() > 0) {
      throw FormatError("missing map at position " + std::to_string(p));
    }
    if (entries.empty()) entries.assign(s.rank() * t.rank(), Poly(*field, nvars));
    try {
      maps.emplace_back(s, t, std::move(entries), *field, nvars);
    } catch (const ComplexError& e) {
      throw FormatError(e.what());
    }
  }
  try {
    return FreeComplex(*field, nvars, positions->first, std::move(term_list), std::move(maps), *coh);
  } catch (const ComplexError& e) {
    throw FormatError(e.what());
  }
}

FreeComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

void write_complex_file(const std::string& path, const FreeComplex& c) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << format_complex(c);
}

}  // namespace sheaflab
