#include "weylphi/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"

namespace weylphi {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  static const std::map<std::string, Family> names = {
      {"A", Family::A},   {"B", Family::B},   {"C", Family::C},   {"D", Family::D},
      {"G2", Family::G2}, {"F4", Family::F4}, {"E6", Family::E6}, {"E7", Family::E7},
      {"E8", Family::E8}};
  auto it = names.find(u);
  if (it == names.end()) throw std::invalid_argument("unknown group family: " + s);
  return it->second;
}

bool is_classical(Family f) { return f == Family::B || f == Family::C || f == Family::D; }
bool is_exceptional(Family f) { return !is_classical(f) && f != Family::A; }

static int fixed_rank(Family f) {
  switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return 0;
  }
}

GroupDescriptor GroupDescriptor::make(Family f, int rank, int kappa) {
  GroupDescriptor g;
  g.family = f;
  if (is_exceptional(f)) {
    if (rank > 0 && rank != fixed_rank(f))
      throw std::invalid_argument(family_name(f) + " has rank " + std::to_string(fixed_rank(f)));
    g.rank = fixed_rank(f);
    if (kappa != 0) throw std::invalid_argument("kappa applies to classical types only");
    return g;
  }
  if (f == Family::A ? rank < 1 : rank < 2)
    throw std::invalid_argument("illegal rank " + std::to_string(rank) + " for type " + family_name(f));
  if (kappa != 0 && !(f == Family::B && kappa == 1))
    throw std::invalid_argument("kappa = 1 is only meaningful for type B");
  g.rank = rank;
  g.kappa = kappa;
  return g;
}

Realization GroupDescriptor::realization() const {
  if (family == Family::E7 || family == Family::E8) return Realization::TableOnly;
  if (is_exceptional(family)) return Realization::RootMatrix;
  return Realization::SignedPerm;
}

std::string GroupDescriptor::name() const {
  if (is_exceptional(family)) return family_name(family);
  return family_name(family) + std::to_string(rank);
}

std::string WeylElement::key() const {
  std::string k;
  if (!perm.empty()) {
    for (int v : perm) k += static_cast<char>(v);
  } else {
    for (long long x : mat.data()) k += static_cast<char>(static_cast<signed char>(x));
  }
  return k;
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  if (!perm.empty()) {
    for (size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i]);
    return s + "]";
  }
  for (int i = 0; i < mat.rows(); ++i) {
    s += i ? ";" : "";
    for (int j = 0; j < mat.cols(); ++j) s += (j ? "," : "") + std::to_string(mat(i, j));
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Class labels

static std::string bracket(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string ClassLabel::to_string() const {
  if (family == Family::A) return bracket(alpha);
  if (is_classical(family)) {
    std::string s = bracket(alpha) + ";" + bracket(beta);
    if (split) s += "#" + std::to_string(split);
    return s;
  }
  return family_name(family) + ":" + sig.key() + disc;
}

std::string ClassLabel::pretty() const {
  if (!is_exceptional(family)) return to_string();
  std::string s = sig.to_string();
  if (!disc.empty()) s = "(" + s + ")" + disc;
  return s;
}

ClassLabel parse_class_label(const std::string& text, const GroupDescriptor& g) {
  ClassLabel c;
  c.family = g.family;
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (is_exceptional(g.family)) {
    auto colon = t.find(':');
    if (colon != std::string::npos) {
      if (parse_family(t.substr(0, colon)) != g.family)
        throw std::invalid_argument("class label family does not match group: " + text);
      t = t.substr(colon + 1);
    }
    size_t end = t.find_first_of("'#");
    if (end != std::string::npos) {
      c.disc = t.substr(end);
    } else {
      end = t.size();
    }
    c.sig = CycloSignature::parse_key(t.substr(0, end));
    if (c.sig.degree() != g.rank)
      throw std::invalid_argument("signature degree does not match rank: " + text);
    return c;
  }
  if (g.family == Family::A) {
    c.alpha = parse_partition(t);
    if (partition_size(c.alpha) != g.rank + 1)
      throw std::invalid_argument("cycle type must be a partition of n+1: " + text);
    return c;
  }
  auto hash = t.find('#');
  if (hash != std::string::npos) {
    c.split = std::stoi(t.substr(hash + 1));
    t = t.substr(0, hash);
  }
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  auto semi = t.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("classical class label needs ';': " + text);
  c.alpha = parse_partition(t.substr(0, semi));
  c.beta = parse_partition(t.substr(semi + 1));
  if (partition_size(c.alpha) + partition_size(c.beta) != g.rank)
    throw std::invalid_argument("|alpha|+|beta| must equal the rank: " + text);
  if (g.family == Family::D && c.beta.size() % 2)
    throw std::invalid_argument("type D needs an even number of negative cycles: " + text);
  return c;
}

// ---------------------------------------------------------------------------
// Exceptional root data

static IntMatrix exceptional_gram(Family f) {
  auto simply_laced = [](int r, const std::vector<std::pair<int, int>>& edges) {
    IntMatrix b(r, r);
    for (int i = 0; i < r; ++i) b(i, i) = 2;
    for (auto [x, y] : edges) b(x - 1, y - 1) = b(y - 1, x - 1) = -1;
    return b;
  };
  switch (f) {
    case Family::G2: {
      IntMatrix b(2, 2);
      b(0, 0) = 2;
      b(1, 1) = 6;
      b(0, 1) = b(1, 0) = -3;
      return b;
    }
    case Family::F4: {
      IntMatrix b(4, 4);
      b(0, 0) = b(1, 1) = 4;
      b(2, 2) = b(3, 3) = 2;
      b(0, 1) = b(1, 0) = -2;
      b(1, 2) = b(2, 1) = -2;
      b(2, 3) = b(3, 2) = -1;
      return b;
    }
    case Family::E6: return simply_laced(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});
    case Family::E7: return simply_laced(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}});
    case Family::E8: return simply_laced(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}});
    default: throw std::logic_error("not exceptional");
  }
}

struct WeylGroup::Cache {
  std::once_flag once;
  Enumeration data;
};

WeylGroup::WeylGroup(GroupDescriptor g) : g_(g), cache_(std::make_shared<Cache>()) {
  g_ = GroupDescriptor::make(g.family, g.rank, g.kappa);
  if (!is_exceptional(g_.family)) return;
  gram_ = exceptional_gram(g_.family);
  int r = g_.rank;
  cartan_ = IntMatrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_(i, j) = 2 * gram_(i, j) / gram_(i, i);
  for (int i = 0; i < r; ++i) {
    IntMatrix m = IntMatrix::identity(r);
    for (int j = 0; j < r; ++j) m(i, j) -= cartan_(i, j);
    gens_.push_back(m);
  }
  // all roots as the orbit of the simple roots
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> todo;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    roots.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop_front();
    for (const auto& m : gens_) {
      std::vector<int> w(r, 0);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) w[a] += static_cast<int>(m(a, b)) * v[b];
      if (roots.insert(w).second) todo.push_back(w);
    }
  }
  for (const auto& v : roots)
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) pos_roots_.push_back(v);
}

int WeylGroup::nu() const {
  if (g_.family == Family::A) return g_.rank + 1;
  if (is_classical(g_.family)) return g_.nu();
  return 0;
}

int WeylGroup::num_positive_roots() const {
  int n = g_.rank;
  switch (g_.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    default: return static_cast<int>(pos_roots_.size());
  }
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  if (is_exceptional(g_.family)) {
    e.mat = IntMatrix::identity(g_.rank);
  } else {
    e.perm.resize(nu());
    for (int i = 0; i < nu(); ++i) e.perm[i] = i + 1;
  }
  return e;
}

WeylElement WeylGroup::perm_generator(int i) const {
  WeylElement e = identity();
  auto swap = [&](int a, int b) { std::swap(e.perm[a - 1], e.perm[b - 1]); };
  int n = g_.rank, v = nu();
  if (g_.family == Family::A) {
    swap(i, i + 1);
    return e;
  }
  if (i < n) {
    swap(i, i + 1);
    swap(v + 1 - i, v - i);
  } else {
    swap(n, v - n + 1);
  }
  return e;
}

WeylElement WeylGroup::generator(int i) const {
  if (i < 1 || i > g_.rank) throw std::out_of_range("generator index out of range");
  if (is_exceptional(g_.family)) {
    WeylElement e;
    e.mat = gens_[i - 1];
    return e;
  }
  if (g_.family == Family::D && i == g_.rank) {
    // s~_{n-1} = s_n s_{n-1} s_n in W(B_n)
    GroupDescriptor b = GroupDescriptor::make(Family::B, g_.rank, 0);
    WeylGroup wb(b);
    WeylElement sn = wb.perm_generator(g_.rank), s = wb.perm_generator(g_.rank - 1);
    return wb.multiply(wb.multiply(sn, s), sn);
  }
  return perm_generator(i);
}

void WeylGroup::validate(const WeylElement& a) const {
  if (is_exceptional(g_.family)) {
    if (!a.perm.empty() || a.mat.rows() != g_.rank || a.mat.cols() != g_.rank)
      throw std::invalid_argument("element does not belong to " + g_.name());
    return;
  }
  int v = nu();
  if (!a.mat.data().empty() || static_cast<int>(a.perm.size()) != v)
    throw std::invalid_argument("element does not belong to " + g_.name() + " (size mismatch)");
  std::vector<bool> seen(v + 1, false);
  for (int x : a.perm) {
    if (x < 1 || x > v || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
  if (g_.family == Family::A) return;
  for (int i = 1; i <= v; ++i)
    if (a.perm[v - i] != v + 1 - a.perm[i - 1])
      throw std::invalid_argument("permutation does not commute with i -> nu+1-i");
  if (g_.kappa == 1 && a.perm[g_.rank] != g_.rank + 1)
    throw std::invalid_argument("kappa = 1 element must fix n+1");
  if (g_.family == Family::D) {
    auto u = signed_view(a);
    int neg = 0;
    for (int x : u) neg += x < 0;
    if (neg % 2) throw std::invalid_argument("element is not in W(D_n) (odd permutation)");
  }
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  WeylElement c;
  if (is_exceptional(g_.family)) {
    if (a.mat.rows() != g_.rank || b.mat.rows() != g_.rank)
      throw std::invalid_argument("descriptor mismatch in multiply");
    c.mat = a.mat * b.mat;
    return c;
  }
  if (a.perm.size() != static_cast<size_t>(nu()) || b.perm.size() != a.perm.size())
    throw std::invalid_argument("descriptor mismatch in multiply");
  c.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = a.perm[b.perm[i] - 1];
  return c;
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
  WeylElement c;
  if (is_exceptional(g_.family)) {
    // integer inverse via the transpose trick is not available; use words
    auto w = reduced_word(a);
    std::reverse(w.begin(), w.end());
    return from_word(w);
  }
  if (a.perm.size() != static_cast<size_t>(nu())) throw std::invalid_argument("descriptor mismatch");
  c.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) c.perm[a.perm[i] - 1] = static_cast<int>(i) + 1;
  return c;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement e = identity();
  for (int i : word) e = multiply(e, generator(i));
  return e;
}

std::vector<int> WeylGroup::signed_view(const WeylElement& a) const {
  if (!is_classical(g_.family)) throw std::invalid_argument("signed view needs a classical type");
  int n = g_.rank, v = nu();
  auto pos = [&](int k) { return k > 0 ? v - n + k : n + 1 + k; };
  auto val = [&](int p) {
    if (p <= n) return -(n + 1 - p);
    if (p >= v - n + 1) return p - (v - n);
    return 0;
  };
  std::vector<int> u(n);
  for (int k = 1; k <= n; ++k) u[k - 1] = val(a.perm[pos(k) - 1]);
  return u;
}

WeylElement WeylGroup::from_signed(const std::vector<int>& u) const {
  if (!is_classical(g_.family)) throw std::invalid_argument("signed view needs a classical type");
  int n = g_.rank, v = nu();
  if (static_cast<int>(u.size()) != n) throw std::invalid_argument("signed permutation has wrong size");
  auto pos = [&](int k) { return k > 0 ? v - n + k : n + 1 + k; };
  WeylElement e = identity();
  for (int k = 1; k <= n; ++k) {
    e.perm[pos(k) - 1] = pos(u[k - 1]);
    e.perm[pos(-k) - 1] = pos(-u[k - 1]);
  }
  validate(e);
  return e;
}

int WeylGroup::length(const WeylElement& a) const {
  validate(a);
  if (is_exceptional(g_.family)) {
    int len = 0, r = g_.rank;
    for (const auto& beta : pos_roots_) {
      long long first_nonzero = 0;
      for (int i = 0; i < r && first_nonzero == 0; ++i) {
        long long s = 0;
        for (int j = 0; j < r; ++j) s += a.mat(i, j) * beta[j];
        first_nonzero = s;
      }
      if (first_nonzero < 0) ++len;
    }
    return len;
  }
  if (g_.family == Family::A) {
    int inv = 0;
    for (size_t i = 0; i < a.perm.size(); ++i)
      for (size_t j = i + 1; j < a.perm.size(); ++j) inv += a.perm[i] > a.perm[j];
    return inv;
  }
  auto u = signed_view(a);
  int n = g_.rank, len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      len += u[i] > u[j];
      len += u[i] + u[j] < 0;
    }
  if (g_.family != Family::D)
    for (int x : u) len += x < 0;
  return len;
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& a) const {
  validate(a);
  std::vector<int> word;
  WeylElement w = a;
  const WeylElement id = identity();
  int len = length(w);
  while (!(w == id)) {
    bool found = false;
    for (int i = 1; i <= g_.rank && !found; ++i) {
      bool descent;
      WeylElement ws = multiply(w, generator(i));
      int l2 = 0;
      if (is_exceptional(g_.family)) {
        descent = false;
        for (int r = 0; r < g_.rank; ++r)
          if (w.mat(r, i - 1) < 0) descent = true;
        if (descent) l2 = len - 1;
      } else {
        l2 = length(ws);
        descent = l2 < len;
      }
      if (descent) {
        word.push_back(i);
        w = ws;
        len = l2;
        found = true;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

uint32_t WeylGroup::support(const WeylElement& a) const {
  uint32_t m = 0;
  for (int i : reduced_word(a)) m |= 1u << (i - 1);
  return m;
}

WeylElement WeylGroup::longest_element() const {
  if (is_exceptional(g_.family)) {
    if (g_.family == Family::E6) {
      const auto& en = enumeration();
      int best = 0;
      for (int i = 0; i < en.size(); ++i)
        if (en.length[i] > en.length[best]) best = i;
      return element(best);
    }
    WeylElement e;
    e.mat = IntMatrix::identity(g_.rank).scaled(-1);
    return e;
  }
  if (g_.family == Family::A) {
    WeylElement e = identity();
    std::reverse(e.perm.begin(), e.perm.end());
    return e;
  }
  std::vector<int> u(g_.rank);
  for (int k = 1; k <= g_.rank; ++k) u[k - 1] = -k;
  if (g_.family == Family::D && g_.rank % 2) u[0] = 1;
  return from_signed(u);
}

IntMatrix WeylGroup::reflection_matrix(const WeylElement& a) const {
  validate(a);
  if (is_exceptional(g_.family)) return a.mat;
  if (g_.family == Family::A) {
    int v = nu();
    IntMatrix m(v, v);
    for (int j = 0; j < v; ++j) m(a.perm[j] - 1, j) = 1;
    return m;
  }
  auto u = signed_view(a);
  int n = g_.rank;
  IntMatrix m(n, n);
  for (int k = 0; k < n; ++k) m(std::abs(u[k]) - 1, k) = u[k] > 0 ? 1 : -1;
  return m;
}

static IntPoly reflection_charpoly(const WeylGroup& w, const WeylElement& a) {
  IntPoly f = charpoly(w.reflection_matrix(a));
  if (w.family() == Family::A) f = poly_divide(f, IntPoly{-1, 1});
  return f;
}

CycloSignature WeylGroup::char_poly(const WeylElement& a) const {
  return factor_cyclotomic(reflection_charpoly(*this, a));
}

long long WeylGroup::det_one_minus(const WeylElement& a) const {
  return eval(reflection_charpoly(*this, a), 1);
}

// ---------------------------------------------------------------------------
// Classes

static ClassLabel classical_label(const WeylGroup& w, const WeylElement& a) {
  ClassLabel c;
  c.family = w.family();
  if (w.family() == Family::A) {
    std::vector<bool> seen(a.perm.size(), false);
    std::vector<int> cyc;
    for (size_t i = 0; i < a.perm.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (size_t j = i; !seen[j]; j = a.perm[j] - 1) {
        seen[j] = true;
        ++len;
      }
      cyc.push_back(len);
    }
    c.alpha = sorted_desc(cyc);
    return c;
  }
  auto u = w.signed_view(a);
  int n = static_cast<int>(u.size());
  std::vector<bool> seen(n, false);
  std::vector<int> pos, neg;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1;
    for (int j = i; !seen[j]; j = std::abs(u[j]) - 1) {
      seen[j] = true;
      ++len;
      if (u[j] < 0) sign = -sign;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  c.alpha = sorted_desc(pos);
  c.beta = sorted_desc(neg);
  return c;
}

static bool d_splits(const ClassLabel& c) {
  if (c.family != Family::D || !c.beta.empty()) return false;
  return std::all_of(c.alpha.begin(), c.alpha.end(), [](int x) { return x % 2 == 0; });
}

bool WeylGroup::enumerable() const {
  switch (g_.family) {
    case Family::A: return g_.rank <= 7;
    case Family::B:
    case Family::C:
    case Family::D: return g_.rank <= 7;
    case Family::G2:
    case Family::F4:
    case Family::E6: return true;
    default: return false;
  }
}

WeylElement WeylGroup::from_key(const std::string& key) const {
  WeylElement e;
  if (is_exceptional(g_.family)) {
    int r = g_.rank;
    e.mat = IntMatrix(r, r);
    for (int i = 0; i < r * r; ++i) e.mat(i / r, i % r) = static_cast<signed char>(key[i]);
  } else {
    for (char ch : key) e.perm.push_back(static_cast<unsigned char>(ch));
  }
  return e;
}

WeylElement WeylGroup::element(int index) const { return from_key(enumeration().keys.at(index)); }

const Enumeration& WeylGroup::enumeration() const {
  if (!enumerable()) throw UnsupportedCase("no element enumeration for " + g_.name());
  std::call_once(cache_->once, [this] {
    Enumeration& en = cache_->data;
    const int r = g_.rank;
    std::vector<WeylElement> gens;
    for (int i = 1; i <= r; ++i) gens.push_back(generator(i));
    WeylElement id = identity();
    en.keys.push_back(id.key());
    en.index.emplace(en.keys[0], 0);
    en.length.push_back(0);
    en.support.push_back(0);
    for (size_t head = 0; head < en.keys.size(); ++head) {
      WeylElement x = from_key(en.keys[head]);
      std::vector<int> row(r);
      for (int s = 0; s < r; ++s) {
        std::string k = multiply(x, gens[s]).key();
        auto [it, fresh] = en.index.emplace(k, static_cast<int>(en.keys.size()));
        if (fresh) {
          en.keys.push_back(k);
          en.length.push_back(en.length[head] + 1);
          en.support.push_back(en.support[head] | (1u << s));
        }
        row[s] = it->second;
      }
      en.right.push_back(std::move(row));
    }
    const int N = en.size();
    en.left.assign(N, std::vector<int>(r));
    for (int i = 0; i < N; ++i) {
      WeylElement x = from_key(en.keys[i]);
      for (int s = 0; s < r; ++s) en.left[i][s] = en.index.at(multiply(gens[s], x).key());
    }
    // conjugation orbits
    en.class_index.assign(N, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < N; ++i) {
      if (en.class_index[i] >= 0) continue;
      int ci = static_cast<int>(orbits.size());
      orbits.emplace_back();
      std::deque<int> todo{i};
      en.class_index[i] = ci;
      while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        orbits[ci].push_back(x);
        for (int s = 0; s < r; ++s) {
          int y = en.left[en.right[x][s]][s];
          if (en.class_index[y] < 0) {
            en.class_index[y] = ci;
            todo.push_back(y);
          }
        }
      }
    }
    const uint32_t full = r >= 32 ? ~0u : ((1u << r) - 1);
    for (auto& orb : orbits) {
      std::sort(orb.begin(), orb.end());
      ConjugacyClass cc;
      cc.members = orb;
      cc.d_C = en.length[orb.front()];
      for (int x : orb) cc.d_C = std::min(cc.d_C, en.length[x]);
      for (int x : orb)
        if (en.length[x] == cc.d_C) cc.min_members.push_back(x);
      cc.elliptic = std::all_of(orb.begin(), orb.end(), [&](int x) { return en.support[x] == full; });
      WeylElement rep = from_key(en.keys[orb.front()]);
      if (is_exceptional(g_.family)) {
        cc.label.family = g_.family;
        cc.label.sig = char_poly(rep);
      } else {
        cc.label = classical_label(*this, rep);
      }
      en.classes.push_back(std::move(cc));
    }
    // discriminators for repeated labels
    std::map<std::string, std::vector<int>> by_label;
    for (size_t c = 0; c < en.classes.size(); ++c) by_label[en.classes[c].label.to_string()].push_back(static_cast<int>(c));
    std::vector<bool> in_long;
    if (g_.family == Family::F4) {
      // subgroup generated by the reflections in long roots
      in_long.assign(N, false);
      std::vector<int> refl;
      for (int x : en.classes[en.class_index[en.right[0][0]]].members) refl.push_back(x);
      std::deque<int> todo{0};
      in_long[0] = true;
      while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        WeylElement xe = from_key(en.keys[x]);
        for (int t : refl) {
          int y = en.index.at(multiply(xe, from_key(en.keys[t])).key());
          if (!in_long[y]) {
            in_long[y] = true;
            todo.push_back(y);
          }
        }
      }
    }
    for (auto& [name, idx] : by_label) {
      if (idx.size() < 2) continue;
      if (is_exceptional(g_.family)) {
        if (g_.family == Family::F4 && idx.size() == 2 && en.classes[idx[0]].label.sig.key() == "2.2.6") {
          for (int c : idx) {
            bool meets = std::any_of(en.classes[c].members.begin(), en.classes[c].members.end(),
                                     [&](int x) { return in_long[x]; });
            en.classes[c].label.disc = meets ? "'" : "''";
          }
          continue;
        }
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
          const auto &ca = en.classes[a], &cb = en.classes[b];
          if (ca.d_C != cb.d_C) return ca.d_C < cb.d_C;
          if (ca.members.size() != cb.members.size()) return ca.members.size() < cb.members.size();
          return ca.members.front() < cb.members.front();
        });
        for (size_t k = 0; k < idx.size(); ++k) en.classes[idx[k]].label.disc = "#" + std::to_string(k + 1);
      } else {
        if (!d_splits(en.classes[idx[0]].label) || idx.size() != 2)
          throw std::logic_error("unexpected class label collision in " + g_.name());
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return en.classes[a].members.front() < en.classes[b].members.front(); });
        for (size_t k = 0; k < idx.size(); ++k) en.classes[idx[k]].label.split = static_cast<int>(k + 1);
      }
    }
  });
  return cache_->data;
}

ClassLabel WeylGroup::class_of(const WeylElement& a) const {
  validate(a);
  if (!is_exceptional(g_.family)) {
    ClassLabel c = classical_label(*this, a);
    if (d_splits(c) && enumerable()) {
      const auto& en = enumeration();
      return en.classes[en.class_index[en.find(a.key())]].label;
    }
    return c;
  }
  if (enumerable()) {
    const auto& en = enumeration();
    int i = en.find(a.key());
    if (i < 0) throw std::invalid_argument("element not found in " + g_.name());
    return en.classes[en.class_index[i]].label;
  }
  CycloSignature sig = char_poly(a);
  if (sig.multiplicity(1) > 0)
    throw UnsupportedCase("class_of in " + g_.name() + " is limited to elliptic elements");
  const ExceptionalRow& row = exceptional_lookup(g_.family, sig);
  ClassLabel c;
  c.family = g_.family;
  c.sig = sig;
  c.disc = row.disc;
  return c;
}

const ConjugacyClass& WeylGroup::conjugacy_class(const ClassLabel& c) const {
  const auto& en = enumeration();
  for (const auto& cc : en.classes)
    if (cc.label == c) return cc;
  if (d_splits(c) && c.split == 0)
    throw std::invalid_argument("class " + c.to_string() + " splits in W(D_n); give #1 or #2");
  throw std::invalid_argument("no class " + c.to_string() + " in " + g_.name());
}

bool is_elliptic(const ClassLabel& c, const WeylGroup& w) {
  switch (c.family) {
    case Family::A: return c.alpha.size() == 1;
    case Family::B:
    case Family::C: return c.alpha.empty();
    case Family::D: return c.alpha.empty() && c.beta.size() % 2 == 0;
    default: break;
  }
  if (w.enumerable()) return w.conjugacy_class(c).elliptic;
  for (const auto& r : exceptional_table(c.family))
    if (r.sig_key == c.sig.key() && r.disc == c.disc) return true;
  return false;
}

MinLengthResult min_length_elements(const ClassLabel& c, const WeylGroup& w) {
  MinLengthResult r;
  if (w.enumerable()) {
    const auto& cc = w.conjugacy_class(c);
    r.d_C = cc.d_C;
    for (int x : cc.min_members) r.elements.push_back(w.element(x));
    r.complete = true;
    return r;
  }
  if (is_classical(c.family)) {
    if (!c.alpha.empty()) throw UnsupportedCase("C_min beyond enumeration needs an elliptic class");
    r.d_C = d_C_classical(c.beta, c.family);
    r.elements.push_back(w.inverse(w_from_partition(c.beta, w.descriptor().kappa)));
    r.note = "representative only";
    return r;
  }
  if (c.family == Family::A) {
    if (c.alpha.size() != 1) throw UnsupportedCase("C_min beyond enumeration needs an elliptic class");
    std::vector<int> word;
    for (int i = 1; i <= w.rank(); ++i) word.push_back(i);
    r.d_C = w.rank();
    r.elements.push_back(w.from_word(word));
    r.note = "representative only";
    return r;
  }
  const auto& row = exceptional_lookup(c.family, c.sig, c.disc);
  r.d_C = row.d;
  r.note = "d_C from table; no C_min representative";
  return r;
}

int d_C(const ClassLabel& c, const WeylGroup& w) { return min_length_elements(c, w).d_C; }

std::vector<int> bits_of(uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) out.push_back(i + 1);
  return out;
}

ParabolicIntersection parabolic_class_intersection(const ClassLabel& c, uint32_t J, const WeylGroup& w) {
  const auto& en = w.enumeration();
  const auto& cc = w.conjugacy_class(c);
  ParabolicIntersection p;
  p.J = J;
  for (int x : cc.members)
    if ((en.support[x] & ~J) == 0) p.members.push_back(x);
  if (p.members.empty()) return p;
  std::map<int, int> comp;
  for (int x : p.members) comp[x] = -1;
  auto js = bits_of(J);
  for (int x : p.members) {
    if (comp[x] >= 0) continue;
    int id = p.num_wj_classes++;
    std::deque<int> todo{x};
    comp[x] = id;
    while (!todo.empty()) {
      int y = todo.front();
      todo.pop_front();
      for (int s : js) {
        int z = en.left[en.right[y][s - 1]][s - 1];
        if (comp.at(z) < 0) {
          comp[z] = id;
          todo.push_back(z);
        }
      }
    }
  }
  p.elliptic_in_wj = std::all_of(p.members.begin(), p.members.end(), [&](int x) { return en.support[x] == J; });
  return p;
}

std::vector<ParabolicIntersection> all_minimal_parabolics(const ClassLabel& c, const WeylGroup& w) {
  const int r = w.rank();
  std::vector<ParabolicIntersection> out;
  for (int size = 0; size <= r && out.empty(); ++size)
    for (uint32_t J = 0; J < (1u << r); ++J) {
      if (std::popcount(J) != size) continue;
      auto p = parabolic_class_intersection(c, J, w);
      if (p.ok()) out.push_back(std::move(p));
    }
  return out;
}

ParabolicIntersection minimal_parabolic(const ClassLabel& c, const WeylGroup& w) {
  auto all = all_minimal_parabolics(c, w);
  if (all.empty()) throw std::runtime_error("no parabolic subgroup carries " + c.to_string() + " as an elliptic class");
  return all.front();
}

}  // namespace weylphi
