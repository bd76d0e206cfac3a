#include "weylphi/elliptic.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylphi {

std::vector<int> psi(const Partition& p) {
  const int s = static_cast<int>(p.size());
  std::vector<int> out(s, 0);
  for (int t = 1; t <= s; ++t) {
    const int pt = p[t - 1];
    if (t % 2 == 1) {
      bool ok = true;
      for (int x = 1; x < t; ++x) ok = ok && pt < p[x - 1];
      if (ok) out[t - 1] = 1;
    } else {
      bool ok = true;
      for (int x = t + 1; x <= s; ++x) ok = ok && p[x - 1] < pt;
      if (ok) out[t - 1] = -1;
    }
  }
  return out;
}

WeylElement w_from_partition(const Partition& p, int kappa) {
  if (!is_partition(p) || p.empty()) throw std::invalid_argument("w_from_partition: need a nonempty partition");
  if (kappa != 0 && kappa != 1) throw std::invalid_argument("kappa must be 0 or 1");
  const int n = partition_size(p), nu = 2 * n + kappa;
  WeylElement e;
  e.perm.assign(nu, 0);
  if (kappa) e.perm[n] = n + 1;
  int start = 1;
  for (int part : p) {
    const int last = start + part - 1;
    for (int i = start; i < last; ++i) e.perm[i - 1] = i + 1;
    e.perm[last - 1] = nu + 1 - start;
    start = last + 1;
  }
  for (int i = 1; i <= n; ++i) e.perm[nu - i] = nu + 1 - e.perm[i - 1];
  return e;
}

int d_C_classical(const Partition& p, Family type) {
  if (!is_partition(p)) throw std::invalid_argument("d_C_classical: not a partition");
  int n = partition_size(p), sum = 0;
  for (size_t v = 1; v < p.size(); ++v) sum += static_cast<int>(v) * p[v];
  int len = 2 * sum + n;
  if (type == Family::D) {
    if (p.size() % 2) throw std::invalid_argument("type D needs an even number of parts");
    len -= static_cast<int>(p.size());
  } else if (type != Family::B && type != Family::C) {
    throw std::invalid_argument("d_C_classical: type must be B, C or D");
  }
  return len;
}

int ExcellentDecomposition::letters() const {
  int c = 0;
  for (const auto& b : blocks) c += static_cast<int>(b.size());
  return c;
}

std::vector<int> ExcellentDecomposition::word() const {
  std::vector<int> w;
  for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string ExcellentDecomposition::to_string() const {
  std::string s;
  for (const auto& b : blocks) {
    s += "(";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? " s" : "s") + std::to_string(b[i]);
    s += ")";
  }
  return s;
}

namespace {

// Ascending a..b (empty if a > b) and descending b..a (empty if b < a).
void up(std::vector<int>& v, int a, int b) {
  for (int i = a; i <= b; ++i) v.push_back(i);
}
void down(std::vector<int>& v, int b, int a) {
  for (int i = b; i >= a; --i) v.push_back(i);
}

}  // namespace

ExcellentDecomposition excellent_decomposition(const Partition& p, Family type, char variant) {
  if (!is_partition(p) || p.empty()) throw std::invalid_argument("excellent_decomposition: bad partition");
  if (type != Family::B && type != Family::C && type != Family::D)
    throw std::invalid_argument("excellent_decomposition: type must be B, C or D");
  if (variant != 'a' && variant != 'b') throw std::invalid_argument("variant must be 'a' or 'b'");
  const int n = partition_size(p), s = static_cast<int>(p.size());
  if (type == Family::D) variant = 'b';
  if (variant == 'b' && s % 2) throw std::invalid_argument("variant b and type D need an even number of parts");
  // m[h] = p_{h+1} + ... + p_sigma, h = 0..sigma
  std::vector<int> m(s + 1, 0);
  for (int h = s - 1; h >= 0; --h) m[h] = m[h + 1] + p[h];
  ExcellentDecomposition dec;
  if (variant == 'a') {
    for (int h = s; h >= 1; --h) {
      const int mh = m[h];
      std::vector<int> pal;
      up(pal, n - mh, n);
      down(pal, n - 1, n - mh);
      dec.blocks.push_back(pal);
      for (int j = n - mh - 1; j >= n - mh - p[h - 1] + 1; --j) dec.blocks.push_back({j});
    }
    return dec;
  }
  for (int h = s; h >= 2; h -= 2) {
    const int lo = m[h], mid = m[h - 1], hi = m[h - 2];
    std::vector<int> pal;
    if (type == Family::D) {
      // s_n X s_n with every s_{n-1} in X replaced by s~_{n-1} (index n)
      up(pal, n - lo, n - 1);
      std::vector<int> x;
      down(x, n - 1, n - mid);
      up(x, n - mid + 1, n - 1);
      for (int& letter : x)
        if (letter == n - 1) letter = n;
      pal.insert(pal.end(), x.begin(), x.end());
      down(pal, n - 1, n - lo);
    } else {
      up(pal, n - lo, n);
      down(pal, n - 1, n - mid);
      up(pal, n - mid + 1, n);
      down(pal, n - 1, n - lo);
    }
    dec.blocks.push_back(pal);
    for (int j = n - lo - 1; j >= n - hi + 1; --j) dec.blocks.push_back({j});
  }
  return dec;
}

ValidationReport validate_excellent(const ExcellentDecomposition& dec, const WeylElement& w,
                                    const WeylGroup& g) {
  ValidationReport r;
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.failures.push_back(msg);
  };
  r.letters = dec.letters();
  for (const auto& b : dec.blocks) {
    for (int x : b)
      if (x < 1 || x > g.rank()) {
        fail("generator index out of range");
        return r;
      }
    if (b.size() % 2 == 0) fail("block of even length");
    if (!std::equal(b.begin(), b.end(), b.rbegin())) fail("block is not a palindrome");
  }
  if (static_cast<int>(dec.blocks.size()) != g.rank())
    fail("block count " + std::to_string(dec.blocks.size()) + " differs from rank " + std::to_string(g.rank()));
  WeylElement prod = g.from_word(dec.word());
  if (!(prod == w)) fail("product differs from w");
  r.length = g.length(w);
  if (r.letters != r.length)
    fail("letter count " + std::to_string(r.letters) + " differs from length " + std::to_string(r.length));
  ClassLabel c = g.class_of(w);
  int dc = d_C(c, g);
  if (r.length != dc) fail("w is not of minimal length in its class (d_C = " + std::to_string(dc) + ")");
  return r;
}

}  // namespace weylphi
