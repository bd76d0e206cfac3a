#include "weylphi/phi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "weylphi/exceptional_data.hpp"

namespace weylphi {

namespace {

bool label_is_elliptic(const ClassLabel& c, const WeylGroup& w) {
  if (w.family() == Family::A) return c.alpha.size() == 1;
  if (is_classical(w.family())) return c.alpha.empty() && !c.beta.empty();
  return c.sig.multiplicity(1) == 0;
}

// Negative cycles from the characteristic polynomial prod (x^b + 1).
Partition beta_from_signature(CycloSignature sig) {
  Partition beta;
  while (!sig.mult.empty()) {
    const int d = sig.mult.rbegin()->first;
    if (d % 2) throw std::invalid_argument("signature is not a product of x^b + 1");
    const int b = d / 2;
    for (int e = 1; e <= d; ++e) {
      if (d % e || b % e == 0) continue;
      auto it = sig.mult.find(e);
      if (it == sig.mult.end()) throw std::invalid_argument("signature is not a product of x^b + 1");
      if (--it->second == 0) sig.mult.erase(it);
    }
    beta.push_back(b);
  }
  return sorted_desc(beta);
}

struct Component {
  std::vector<int> nodes;  // 0-based
  char type = 'A';
  bool short_roots = false;
};

std::vector<Component> components(uint32_t J, const WeylGroup& w) {
  const IntMatrix& a = w.cartan();
  const IntMatrix& gram = w.gram();
  const int r = w.rank();
  long long longest = 0;
  for (int i = 0; i < r; ++i) longest = std::max(longest, gram(i, i));
  bool simply_laced = true;
  for (int i = 0; i < r; ++i)
    if (gram(i, i) != longest) simply_laced = false;

  std::vector<Component> out;
  std::vector<bool> seen(r, false);
  for (int s = 0; s < r; ++s) {
    if (!(J >> s & 1) || seen[s]) continue;
    Component c;
    std::vector<int> todo{s};
    seen[s] = true;
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      c.nodes.push_back(x);
      for (int y = 0; y < r; ++y)
        if ((J >> y & 1) && !seen[y] && a(x, y) != 0) {
          seen[y] = true;
          todo.push_back(y);
        }
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    int long_count = 0, max_bond = 1, max_degree = 0;
    for (int x : c.nodes) {
      if (gram(x, x) == longest) ++long_count;
      int deg = 0;
      for (int y : c.nodes)
        if (y != x && a(x, y) != 0) {
          ++deg;
          max_bond = std::max<long long>(max_bond, a(x, y) * a(y, x));
        }
      max_degree = std::max(max_degree, deg);
    }
    const int k = static_cast<int>(c.nodes.size());
    if (max_bond == 3) throw std::logic_error("G2 is never a proper Levi factor");
    if (max_bond == 2) {
      if (k == 4) throw std::logic_error("F4 is never a proper Levi factor");
      c.type = (k >= 3 && long_count == 1) ? 'C' : 'B';
    } else if (max_degree >= 3) {
      if (k > 5) throw std::logic_error("E-type component in a proper Levi of a group of rank <= 6");
      c.type = 'D';
    } else {
      c.type = 'A';
      c.short_roots = !simply_laced && long_count == 0;
    }
    out.push_back(std::move(c));
  }
  return out;
}

UnipotentLabel classical_levi_rule(const ClassLabel& c, const WeylGroup& w, int charp) {
  if (w.family() == Family::D && c.beta.empty() &&
      std::all_of(c.alpha.begin(), c.alpha.end(), [](int x) { return x % 2 == 0; }))
    throw UnsupportedCase("class " + c.to_string() + " of W(D" + std::to_string(w.rank()) +
                          ") is split; its image would be a very even class");
  UnipotentLabel u;
  u.family = w.family();
  const int m = partition_size(c.beta);
  if (m > 0) {
    u = gamma_from_partition(c.beta, GroupDescriptor{w.family(), m, 0}, charp);
  } else if (w.family() == Family::B) {
    u.jordan = {1};
    if (charp == 2) u.flags = {FlagState::None};
  }
  for (int a : c.alpha)
    for (int k = 0; k < 2; ++k) {
      u.jordan.push_back(a);
      if (charp == 2) u.flags.push_back(FlagState::NotAsserted);
    }
  std::vector<std::pair<int, FlagState>> v;
  for (size_t i = 0; i < u.jordan.size(); ++i) v.emplace_back(u.jordan[i], charp == 2 ? u.flags[i] : FlagState::None);
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return static_cast<int>(x.second) < static_cast<int>(y.second);
  });
  for (size_t i = 0; i < v.size(); ++i) {
    u.jordan[i] = v[i].first;
    if (charp == 2) u.flags[i] = v[i].second;
  }
  return u;
}

bool good_for_exceptional(int charp) { return charp == 0 || (charp != 2 && charp != 3); }

}  // namespace

UnipotentLabel phi_elliptic(const ClassLabel& c, const WeylGroup& w, int charp) {
  if (!label_is_elliptic(c, w)) throw std::invalid_argument(c.to_string() + " is not elliptic");
  UnipotentLabel u;
  u.family = w.family();
  if (w.family() == Family::A) {
    u.jordan = {w.rank() + 1};
    return u;
  }
  if (is_classical(w.family())) return gamma_from_partition(c.beta, w.descriptor(), charp);
  u.name = exceptional_lookup(w.family(), c.sig, c.disc).name;
  return u;
}

UnipotentLabel phi_via_parabolic(const ClassLabel& c, const WeylGroup& w, int charp,
                                 const ParabolicIntersection& par) {
  if (!is_exceptional(w.family())) throw std::invalid_argument("phi_via_parabolic: exceptional groups only");
  if (!par.ok()) throw std::invalid_argument("phi_via_parabolic: parabolic does not carry an elliptic class");
  if (!good_for_exceptional(charp))
    throw UnsupportedCase("Levi descent in " + w.descriptor().name() + " is implemented for good characteristic");
  if (par.J == (1u << w.rank()) - 1) return phi_elliptic(c, w, charp);
  const WeylElement x = w.element(par.members.front());
  const bool tilde = w.family() == Family::G2 || w.family() == Family::F4;
  std::vector<BCPiece> pieces;
  for (const auto& comp : components(par.J, w)) {
    const int k = static_cast<int>(comp.nodes.size());
    IntMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = x.mat(comp.nodes[i], comp.nodes[j]);
    CycloSignature sig = factor_cyclotomic(charpoly(sub));
    if (comp.type == 'A') {
      // the only elliptic class of W(A_k) is the Coxeter class
      if (sig.multiplicity(1) != 0) throw std::logic_error("component class is not elliptic");
      pieces.push_back({'A', k, comp.short_roots, 0});
      continue;
    }
    Partition beta = beta_from_signature(sig);
    Family f = comp.type == 'B' ? Family::B : comp.type == 'C' ? Family::C : Family::D;
    UnipotentLabel part = gamma_from_partition(beta, GroupDescriptor{f, k, 0}, charp);
    auto more = bala_carter_pieces(part.jordan, comp.type, tilde);
    pieces.insert(pieces.end(), more.begin(), more.end());
  }
  UnipotentLabel u;
  u.family = w.family();
  u.name = format_bala_carter(pieces);
  return u;
}

UnipotentLabel phi_full(const ClassLabel& c, const WeylGroup& w, int charp) {
  if (w.family() == Family::A) {
    UnipotentLabel u;
    u.family = Family::A;
    u.jordan = c.alpha;
    return u;
  }
  if (is_classical(w.family())) return classical_levi_rule(c, w, charp);
  if (label_is_elliptic(c, w)) return phi_elliptic(c, w, charp);
  if (!w.enumerable())
    throw UnsupportedCase("Phi on non-elliptic classes of " + w.descriptor().name() + " needs class fusion data");
  return phi_via_parabolic(c, w, charp, minimal_parabolic(c, w));
}

ClassLabel phi_inverse_basic(const UnipotentLabel& u, const WeylGroup& w, int charp) {
  ClassLabel c;
  c.family = w.family();
  if (w.family() == Family::A) {
    if (u.jordan != Partition{w.rank() + 1}) throw std::invalid_argument(u.to_string() + " is not basic");
    c.alpha = u.jordan;
    return c;
  }
  if (is_classical(w.family())) {
    for (const auto& p : partitions_of(w.rank())) {
      if (w.family() == Family::D && p.size() % 2) continue;
      if (gamma_from_partition(p, w.descriptor(), charp) == u) {
        c.beta = p;
        return c;
      }
    }
    throw std::invalid_argument(u.to_string() + " is not basic in " + w.descriptor().name());
  }
  for (const auto& row : exceptional_table(w.family()))
    if (row.name == u.name) {
      c.sig = row.signature();
      c.disc = row.disc;
      return c;
    }
  throw std::invalid_argument(u.name + " is not basic in " + w.descriptor().name());
}

std::vector<ClassLabel> all_class_labels(const WeylGroup& w) {
  std::vector<ClassLabel> out;
  const Family f = w.family();
  if (f == Family::A) {
    for (const auto& p : partitions_of(w.rank() + 1)) out.push_back(ClassLabel{f, p, {}, 0, {}, ""});
    return out;
  }
  if (is_classical(f)) {
    for (const auto& bp : bipartitions_of(w.rank())) {
      if (f == Family::D && bp.beta.size() % 2) continue;
      ClassLabel c{f, bp.alpha, bp.beta, 0, {}, ""};
      bool split = f == Family::D && bp.beta.empty() &&
                   std::all_of(bp.alpha.begin(), bp.alpha.end(), [](int x) { return x % 2 == 0; });
      if (split) {
        c.split = 1;
        out.push_back(c);
        c.split = 2;
      }
      out.push_back(c);
    }
    return out;
  }
  if (w.enumerable()) {
    for (const auto& cc : w.enumeration().classes) out.push_back(cc.label);
    return out;
  }
  for (const auto& row : exceptional_table(f)) out.push_back(ClassLabel{f, {}, {}, 0, row.signature(), row.disc});
  return out;
}

SurjectivityReport phi_surjectivity_report(const WeylGroup& w, int charp) {
  SurjectivityReport r;
  r.group = w.descriptor().name();
  r.charp = charp;
  if (is_exceptional(w.family()) && !w.enumerable())
    throw UnsupportedCase("surjectivity needs every class of W; " + r.group + " is limited to elliptic classes");
  r.classes = unipotent_classes(w.descriptor(), charp);
  std::set<UnipotentLabel> hit;
  for (const auto& c : all_class_labels(w)) {
    PhiRow row;
    row.c = c;
    row.elliptic = label_is_elliptic(c, w);
    try {
      row.image = phi_full(c, w, charp);
      hit.insert(row.image);
    } catch (const UnsupportedCase& e) {
      row.supported = false;
      row.note = e.what();
    }
    r.rows.push_back(std::move(row));
  }
  std::set<UnipotentLabel> listed(r.classes.begin(), r.classes.end());
  for (const auto& u : hit)
    if (!listed.count(u)) r.unknown.push_back(u);
  for (const auto& u : r.classes) {
    if (hit.count(u)) continue;
    if (w.family() == Family::D && is_very_even(u.jordan))
      r.skipped.push_back(u);
    else
      r.missing.push_back(u);
  }
  return r;
}

}  // namespace weylphi
