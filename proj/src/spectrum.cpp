#include "sheaflab/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sheaflab/cohom.hpp"

namespace sheaflab {

namespace {

using Kind = SpectrumError::Kind;

long long lookup(const std::map<int, long long>& m, int l) {
  auto it = m.find(l);
  return it == m.end() ? 0 : it->second;
}

void check_window(const std::map<int, long long>& m, int anchor, bool low_side, const char* name) {
  if (m.empty() || (low_side ? m.rbegin()->first != anchor : m.begin()->first != anchor)) {
    throw SpectrumError(Kind::WindowTooNarrow, std::string(name) + " window must include l = " + std::to_string(anchor));
  }
  int expected = m.begin()->first;
  for (const auto& [l, v] : m) {
    if (l != expected++) throw SpectrumError(Kind::WindowTooNarrow, std::string(name) + " window has gaps");
    if (v < 0) throw SpectrumError(Kind::NegativeMultiplicity, std::string(name) + " has a negative entry");
  }
  if (m.size() < 2) throw SpectrumError(Kind::WindowTooNarrow, std::string(name) + " window too short");
  auto far1 = low_side ? m.begin() : std::prev(m.end());
  auto far2 = low_side ? std::next(m.begin()) : std::prev(m.end(), 2);
  if (far1->second != 0 || far2->second != 0) {
    throw SpectrumError(Kind::WindowTooNarrow, std::string(name) + " does not vanish at the far end of its window");
  }
}

}  // namespace

Spectrum::Spectrum(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("a spectrum needs at least one value");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

long long Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0LL); }

int Spectrum::multiplicity(int v) const { return static_cast<int>(std::count(values_.begin(), values_.end(), v)); }

std::string Spectrum::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values_[i]);
  }
  return s + ")";
}

SpectrumTables forward(const Spectrum& s) {
  SpectrumTables t;
  t.c = s.c();
  int top = std::max(0, s.values().front());
  int bottom = std::max(0, -s.values().back());
  for (int l = -top - 4; l <= -1; ++l) {
    long long h = 0;
    for (int k : s.values()) h += std::max(0, k + l + 2);
    t.h1_low[l] = h;
  }
  for (int l = -2; l <= bottom + 2; ++l) {
    long long h = 0;
    for (int k : s.values()) h += std::max(0, -k - l - 2);
    t.h2_high[l] = h;
  }
  return t;
}

Spectrum recover(const SpectrumTables& t) {
  if (t.c < 1) throw SpectrumError(Kind::TotalMismatch, "spectrum length must be positive");
  check_window(t.h1_low, -1, true, "h1");
  check_window(t.h2_high, -2, false, "h2");
  for (auto it = std::next(t.h1_low.begin()); it != t.h1_low.end(); ++it) {
    if (it->second < std::prev(it)->second) {
      throw SpectrumError(Kind::NonMonotoneTails, "h1(F(l)) decreases at l = " + std::to_string(it->first));
    }
  }
  for (auto it = std::next(t.h2_high.begin()); it != t.h2_high.end(); ++it) {
    if (it->second > std::prev(it)->second) {
      throw SpectrumError(Kind::NonMonotoneTails, "h2(F(l)) increases at l = " + std::to_string(it->first));
    }
  }
  auto d1 = [&](int m) { return lookup(t.h1_low, -m) - lookup(t.h1_low, -m - 1); };
  auto q2 = [&](int l) { return lookup(t.h2_high, l - 1) - lookup(t.h2_high, l); };
  std::vector<int> values;
  long long total = 0;
  auto take = [&](int v, long long mult) {
    if (mult < 0) {
      throw SpectrumError(Kind::NegativeMultiplicity,
                          "negative multiplicity " + std::to_string(mult) + " for value " + std::to_string(v));
    }
    total += mult;
    if (total > t.c) return;
    for (long long i = 0; i < mult; ++i) values.push_back(v);
  };
  int vmax = -t.h1_low.begin()->first;
  for (int v = 0; v <= vmax; ++v) take(v, d1(v + 1) - d1(v + 2));
  int vmin = -(t.h2_high.rbegin()->first + 2);
  for (int v = -1; v >= vmin; --v) take(v, q2(-v - 2) - q2(-v - 1));
  if (total != t.c) {
    throw SpectrumError(Kind::TotalMismatch,
                        "multiplicities add up to " + std::to_string(total) + ", expected " + std::to_string(t.c));
  }
  return Spectrum(std::move(values));
}

std::vector<SpectrumViolation> validate_spectrum(const Spectrum& s, std::optional<long long> c3) {
  std::vector<SpectrumViolation> out;
  if (c3 && -2 * s.sum() != *c3 + s.c()) {
    out.push_back({"iii", "-2*sum(k) = " + std::to_string(-2 * s.sum()) + " but c3 + c = " + std::to_string(*c3 + s.c())});
  }
  int kmax = s.values().front();
  for (int v = 0; v <= kmax; ++v) {
    if (s.multiplicity(v) == 0) {
      out.push_back({"iv", std::to_string(kmax) + " occurs but " + std::to_string(v) + " does not"});
      break;
    }
  }
  int kmin = s.values().back();
  for (int v = -1; v >= kmin; --v) {
    if (s.multiplicity(v) == 0) {
      out.push_back({"v", std::to_string(kmin) + " occurs but " + std::to_string(v) + " does not"});
      break;
    }
  }
  if (s.multiplicity(0) == 0 && s.multiplicity(-1) < 2) out.push_back({"vi", "0 is absent and -1 occurs fewer than twice"});
  return out;
}

std::string SpectrumReport::label() const {
  std::string s = "spectrum " + spectrum.to_string() + " under stability assumption";
  s += h0_vanishes ? "; h0(F)=0" : "; h0(F)!=0";
  s += h3_vanishes ? ", h3(F(-3))=0" : ", h3(F(-3))!=0";
  return s;
}

namespace {

SpectrumTables tables_from(const CohTable& tab, int count) {
  SpectrumTables t;
  t.c = count;
  for (int l = -count - 3; l <= -1; ++l) t.h1_low[l] = tab.h(1, l);
  for (int l = -2; l <= count + 1; ++l) t.h2_high[l] = tab.h(2, l);
  return t;
}

}  // namespace

SpectrumTables tables_of(const FreeComplex& c, int count) {
  return tables_from(h_table(c, -count - 3, count + 1), count);
}

SpectrumReport spectrum_of(const FreeComplex& c) {
  ChernData3 ch = chern_of(c);
  if (ch.rank != 3 || ch.c1 != -1) {
    throw std::invalid_argument("spectrum_of needs rank 3 and c1 = -1, got " + ch.to_string());
  }
  if (ch.c2 < 1) throw std::invalid_argument("spectrum_of needs c2 >= 1");
  int count = static_cast<int>(ch.c2);
  CohTable tab = h_table(c, -count - 3, count + 1);
  return SpectrumReport{recover(tables_from(tab, count)), tab.h(0, 0) == 0, tab.h(3, -3) == 0};
}

std::vector<Spectrum> enumerate_spectra(int max_c, int lo, int hi) {
  std::vector<Spectrum> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int upper) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = upper; v >= lo; --v) {
      cur.push_back(v);
      rec(remaining - 1, v);
      cur.pop_back();
    }
  };
  for (int c = 1; c <= max_c; ++c) rec(c, hi);
  return out;
}

}  // namespace sheaflab
