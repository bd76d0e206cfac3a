#include "weylphi/unipotent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"

namespace weylphi {

std::string UnipotentLabel::to_string() const {
  if (is_exceptional(family)) return name;
  std::string s = "(";
  for (size_t i = 0; i < jordan.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(jordan[i]);
    if (i < flags.size()) {
      if (flags[i] == FlagState::Holds) s += "*";
      if (flags[i] == FlagState::NotAsserted) s += "?";
    }
  }
  return s + ")";
}

UnipotentLabel parse_unipotent_label(const std::string& text, Family f) {
  UnipotentLabel u;
  u.family = f;
  if (is_exceptional(f)) {
    u.name = text;
    return u;
  }
  std::string plain;
  std::vector<FlagState> flags(1, FlagState::None);
  bool any_flag = false;
  for (char ch : text) {
    if (ch == '*' || ch == '?') {
      flags.back() = ch == '*' ? FlagState::Holds : FlagState::NotAsserted;
      any_flag = true;
      continue;
    }
    if (ch == ',' || ch == '.') flags.push_back(FlagState::None);
    plain += ch;
  }
  u.jordan = parse_partition(plain);
  if (any_flag) {
    if (flags.size() != u.jordan.size()) throw std::invalid_argument("bad flag markers: " + text);
    u.flags = flags;
  }
  return u;
}

int natural_dim(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::A: return g.rank + 1;
    case Family::B: return 2 * g.rank + 1;
    case Family::C:
    case Family::D: return 2 * g.rank;
    default: throw std::invalid_argument("natural_dim: " + g.name() + " is not classical");
  }
}

namespace {

void sort_with_flags(UnipotentLabel& u) {
  std::vector<std::pair<int, FlagState>> v;
  for (size_t i = 0; i < u.jordan.size(); ++i)
    v.emplace_back(u.jordan[i], u.flags.empty() ? FlagState::None : u.flags[i]);
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return static_cast<int>(a.second) < static_cast<int>(b.second);
  });
  for (size_t i = 0; i < v.size(); ++i) {
    u.jordan[i] = v[i].first;
    if (!u.flags.empty()) u.flags[i] = v[i].second;
  }
}

}  // namespace

UnipotentLabel gamma_from_partition(const Partition& p, const GroupDescriptor& g, int charp) {
  if (!is_partition(p)) throw std::invalid_argument("gamma_from_partition: not a partition");
  if (partition_size(p) != g.rank) throw std::invalid_argument("gamma_from_partition: size differs from rank");
  const int sigma = static_cast<int>(p.size());
  UnipotentLabel u;
  u.family = g.family;
  const bool two = charp == 2;
  auto psi_v = psi(p);
  switch (g.family) {
    case Family::C:
      for (int x : p) u.jordan.push_back(2 * x);
      break;
    case Family::B:
      for (int i = 0; i < sigma; ++i) u.jordan.push_back(2 * p[i] + (two ? 0 : psi_v[i]));
      if (two || sigma % 2 == 0) u.jordan.push_back(1);
      break;
    case Family::D:
      if (sigma % 2) throw std::invalid_argument("type D needs an even number of parts");
      for (int i = 0; i < sigma; ++i) u.jordan.push_back(2 * p[i] + (two ? 0 : psi_v[i]));
      break;
    default:
      throw std::invalid_argument("gamma_from_partition: type must be B, C or D");
  }
  if (two) {
    u.flags.assign(u.jordan.size(), FlagState::None);
    for (int i = 0; i < sigma; ++i) u.flags[i] = FlagState::Holds;
  }
  sort_with_flags(u);
  return u;
}

bool is_very_even(const Partition& lambda) {
  if (lambda.empty()) return false;
  for (int x : lambda)
    if (x % 2 || multiplicity(lambda, x) % 2) return false;
  return true;
}

bool is_classical_jordan_type(const Partition& lambda, const GroupDescriptor& g) {
  if (!is_partition(lambda) || partition_size(lambda) != natural_dim(g)) return false;
  if (g.family == Family::A) return true;
  const int bad_parity = g.family == Family::C ? 1 : 0;
  for (int x : lambda)
    if (x % 2 == bad_parity && multiplicity(lambda, x) % 2) return false;
  return true;
}

int centralizer_dim_typeC_p2(const Partition& lambda) {
  int n2 = 0;
  for (int x : lambda) {
    if (x <= 0 || x % 2) throw std::invalid_argument("centralizer_dim_typeC_p2: parts must be even");
    n2 += x;
  }
  int top = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
  int d = n2 / 2;
  for (int j = 2; j <= top; j += 2) {
    int f = static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [j](int x) { return x >= j; }));
    d += f * f - f;
  }
  return d;
}

int centralizer_dim(const Partition& lambda, const GroupDescriptor& g) {
  if (!is_classical_jordan_type(lambda, g))
    throw std::invalid_argument("centralizer_dim: " + to_string(lambda) + " is not a class of " + g.name());
  int sq = 0;
  for (int c : transpose(lambda)) sq += c * c;
  int odd = static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [](int x) { return x % 2; }));
  switch (g.family) {
    case Family::A: return sq - 1;
    case Family::C: return (sq + odd) / 2;
    default: return (sq - odd) / 2;
  }
}

XYCheck check_X_equals_2Y(const Partition& p) {
  XYCheck r;
  Partition doubled;
  for (int x : p) doubled.push_back(2 * x);
  r.X = centralizer_dim_typeC_p2(doubled) - partition_size(p);
  for (size_t v = 1; v < p.size(); ++v) r.Y += static_cast<long long>(v) * p[v];
  return r;
}

Partition phi_small_injection(const Partition& p) {
  auto v = psi(p);
  Partition out;
  for (size_t i = 0; i < p.size(); ++i) out.push_back(2 * p[i] + v[i]);
  if (p.size() % 2 == 0) out.push_back(1);
  return out;
}

bool is_distinguished(const UnipotentLabel& u, const GroupDescriptor& g, int charp) {
  if (is_exceptional(g.family)) {
    for (const auto& row : exceptional_table(g.family))
      if (row.name == u.name) return row.dist == "always" || row.dist == "p=" + std::to_string(charp);
    return false;
  }
  const Partition& l = u.jordan;
  if (g.family == Family::A) return l.size() == 1;
  if (charp == 2) {
    // blocks 2p_i, each size at most twice (the trailing 1 of type B aside)
    for (int x : l) {
      if (x % 2 && !(g.family == Family::B && x == 1 && multiplicity(l, 1) == 1)) return false;
      if (x % 2 == 0 && multiplicity(l, x) > 2) return false;
    }
    return true;
  }
  const int want = g.family == Family::C ? 0 : 1;
  for (int x : l)
    if (x % 2 != want || multiplicity(l, x) != 1) return false;
  return true;
}

namespace {

const std::vector<std::string> kG2 = {"1", "A1", "~A1", "G2(a1)", "G2"};
const std::vector<std::string> kF4 = {"1",  "A1",     "~A1",    "A1+~A1", "A2",     "~A2",
                                      "A2+~A1", "B2",  "~A2+A1", "C3(a1)", "F4(a3)", "B3",
                                      "C3",  "F4(a2)", "F4(a1)", "F4"};
// E6(a3) carries the table's name A5+A1.
const std::vector<std::string> kE6 = {"1",     "A1",    "2A1",  "3A1",    "A2",     "A2+A1",  "2A2",
                                      "A2+2A1", "A3",   "2A2+A1", "A3+A1", "D4(a1)", "A4",    "D4",
                                      "A4+A1", "A5",    "D5(a1)", "A5+A1", "D5",     "E6(a1)", "E6"};

bool good_characteristic(Family f, int charp) {
  if (charp == 0) return true;
  switch (f) {
    case Family::A: return true;
    case Family::B:
    case Family::C:
    case Family::D: return charp != 2;
    case Family::G2:
    case Family::F4:
    case Family::E6:
    case Family::E7: return charp != 2 && charp != 3;
    case Family::E8: return charp != 2 && charp != 3 && charp != 5;
  }
  return false;
}

}  // namespace

std::vector<UnipotentLabel> unipotent_classes(const GroupDescriptor& g, int charp) {
  if (!good_characteristic(g.family, charp))
    throw UnsupportedCase("unipotent class list of " + g.name() + " in characteristic " + std::to_string(charp));
  std::vector<UnipotentLabel> out;
  if (is_exceptional(g.family)) {
    const std::vector<std::string>* names = nullptr;
    if (g.family == Family::G2) names = &kG2;
    if (g.family == Family::F4) names = &kF4;
    if (g.family == Family::E6) names = &kE6;
    if (!names) throw UnsupportedCase("unipotent class list of " + g.name());
    for (const auto& s : *names) out.push_back(UnipotentLabel{g.family, {}, {}, s});
    return out;
  }
  for (const auto& l : partitions_of(natural_dim(g)))
    if (is_classical_jordan_type(l, g)) out.push_back(UnipotentLabel{g.family, l, {}, ""});
  return out;
}

std::vector<BCPiece> bala_carter_pieces(const Partition& lambda, char type, bool tilde_short) {
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D')
    throw std::invalid_argument("bala_carter_pieces: type must be A, B, C or D");
  std::vector<BCPiece> out;
  if (type == 'A') {
    for (int x : lambda)
      if (x > 1) out.push_back({'A', x - 1, false, 0});
    return out;
  }
  // GL pieces come from pairs of equal parts; long roots in B and D, short in C
  const bool gl_tilde = type == 'C' && tilde_short;
  const int keep_parity = type == 'C' ? 0 : 1;
  Partition rest;
  std::map<int, int, std::greater<>> mult;
  for (int x : lambda) ++mult[x];
  for (auto [x, m] : mult) {
    int pairs = m / 2;
    if (x % 2 == keep_parity && m % 2) rest.push_back(x);
    if (x % 2 != keep_parity && m % 2) throw std::invalid_argument("bala_carter_pieces: not a valid Jordan type");
    if (x > 1)
      for (int k = 0; k < pairs; ++k) out.push_back({'A', x - 1, gl_tilde, 0});
  }
  const int size = partition_size(rest);
  const int r = type == 'B' ? (size - 1) / 2 : size / 2;
  if (r <= 0) return out;
  GroupDescriptor g{type == 'B' ? Family::B : type == 'C' ? Family::C : Family::D, r, 0};
  const int a = (centralizer_dim(rest, g) - r) / 2;
  if (type == 'B' && r == 1) {
    out.push_back({'A', 1, tilde_short, 0});
  } else if (type == 'C' && r == 1) {
    out.push_back({'A', 1, false, 0});
  } else if (r == 2 && type != 'D') {
    out.push_back({'B', 2, false, a});
  } else if (type == 'D' && r == 2) {
    out.push_back({'A', 1, false, 0});
    out.push_back({'A', 1, false, 0});
  } else if (type == 'D' && r == 3) {
    out.push_back({'A', 3, false, 0});
  } else {
    out.push_back({type, r, false, a});
  }
  return out;
}

std::string format_bala_carter(std::vector<BCPiece> pieces) {
  if (pieces.empty()) return "1";
  auto key = [](const BCPiece& p) { return std::make_tuple(-p.rank, p.letter == 'A', p.tilde, p.letter, p.a); };
  std::sort(pieces.begin(), pieces.end(), [&](const BCPiece& x, const BCPiece& y) { return key(x) < key(y); });
  std::string s;
  for (size_t i = 0; i < pieces.size();) {
    size_t j = i;
    while (j < pieces.size() && key(pieces[j]) == key(pieces[i])) ++j;
    if (!s.empty()) s += "+";
    if (j - i > 1) s += std::to_string(j - i);
    const auto& p = pieces[i];
    if (p.tilde) s += "~";
    s += p.letter + std::to_string(p.rank);
    if (p.a > 0) s += "(a" + std::to_string(p.a) + ")";
    i = j;
  }
  return s;
}

}  // namespace weylphi
