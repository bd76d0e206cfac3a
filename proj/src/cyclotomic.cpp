#include "weylphi/cyclotomic.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace weylphi {

IntPoly charpoly(const IntMatrix& a) {
  // Faddeev-LeVerrier; the divisions by k are exact over the integers.
  int n = a.rows();
  std::vector<long long> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    for (int i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    IntMatrix t = a * m;
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr += t(i, i);
    if (tr % k != 0) throw std::logic_error("charpoly: inexact division");
    c[n - k] = -tr / k;
  }
  return c;
}

long long eval(const IntPoly& f, long long x) {
  long long r = 0;
  for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

static std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& g) {
  // g monic
  if (f.size() < g.size()) return std::nullopt;
  IntPoly rem = f;
  IntPoly q(f.size() - g.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    long long coef = rem[i + g.size() - 1];
    q[i] = coef;
    if (coef == 0) continue;
    for (size_t j = 0; j < g.size(); ++j) rem[i + j] -= coef * g[j];
  }
  for (size_t i = 0; i + 1 < g.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return q;
}

IntPoly poly_divide(const IntPoly& f, const IntPoly& g) {
  auto q = try_divide(f, g);
  if (!q) throw std::invalid_argument("poly_divide: not divisible");
  return *q;
}

static constexpr int kCycloCache = 512;

static const std::vector<IntPoly>& cyclo_table() {
  static const std::vector<IntPoly> table = [] {
    std::vector<IntPoly> t(kCycloCache + 1);
    for (int d = 1; d <= kCycloCache; ++d) {
      IntPoly f(d + 1, 0);
      f[0] = -1;
      f[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) f = poly_divide(f, t[e]);
      t[d] = f;
    }
    return t;
  }();
  return table;
}

IntPoly cyclotomic_poly(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be positive");
  if (d <= kCycloCache) return cyclo_table()[d];
  IntPoly f(d + 1, 0);
  f[0] = -1;
  f[d] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) f = poly_divide(f, cyclotomic_poly(e));
  return f;
}

int CycloSignature::degree() const {
  int deg = 0;
  for (auto [d, m] : mult) {
    int phi = 0;
    for (int k = 1; k <= d; ++k) {
      int a = k, b = d;
      while (b) {
        int t = a % b;
        a = b;
        b = t;
      }
      if (a == 1) ++phi;
    }
    deg += phi * m;
  }
  return deg;
}

std::string CycloSignature::to_string() const {
  std::string s;
  for (auto [d, m] : mult) {
    s += "Phi" + std::to_string(d);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

std::string CycloSignature::key() const {
  std::string s;
  for (auto [d, m] : mult)
    for (int i = 0; i < m; ++i) {
      if (!s.empty()) s += ".";
      s += std::to_string(d);
    }
  return s;
}

CycloSignature CycloSignature::parse_key(const std::string& key) {
  CycloSignature sig;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.empty()) continue;
    size_t used = 0;
    int d = std::stoi(tok, &used);
    if (used != tok.size() || d <= 0) throw std::invalid_argument("bad signature key: " + key);
    ++sig.mult[d];
  }
  return sig;
}

CycloSignature factor_cyclotomic(IntPoly f) {
  CycloSignature sig;
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; deg > 0 && d <= 2 * deg * deg + 2; ++d) {
    const IntPoly phi = cyclotomic_poly(d);
    if (static_cast<int>(phi.size()) - 1 > deg) continue;
    while (true) {
      auto q = try_divide(f, phi);
      if (!q) break;
      f = *q;
      ++sig.mult[d];
      deg = static_cast<int>(f.size()) - 1;
    }
  }
  if (f.size() != 1 || (f[0] != 1 && f[0] != -1))
    throw NonCyclotomicFactor("characteristic polynomial has a non-cyclotomic factor");
  return sig;
}

}  // namespace weylphi
