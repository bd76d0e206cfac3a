#include "weylphi/fq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "weylphi/elliptic.hpp"
#include "weylphi/isometry.hpp"
#include "weylphi/phi.hpp"

namespace weylphi {

FqKind parse_fq_kind(const std::string& s) {
  std::string t;
  for (char ch : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "sl3") return FqKind::SL3;
  if (t == "sp4") return FqKind::Sp4;
  if (t == "so5") return FqKind::SO5;
  if (t == "so7") return FqKind::SO7;
  throw std::invalid_argument("unknown group '" + s + "' (expected sl3, sp4, so5, so7)");
}

std::string fq_kind_name(FqKind k) {
  switch (k) {
    case FqKind::SL3: return "SL3";
    case FqKind::Sp4: return "Sp4";
    case FqKind::SO5: return "SO5";
    case FqKind::SO7: return "SO7";
  }
  return "?";
}

GroupDescriptor fq_weyl_descriptor(FqKind k) {
  switch (k) {
    case FqKind::SL3: return GroupDescriptor::make(Family::A, 2);
    case FqKind::Sp4: return GroupDescriptor::make(Family::C, 2);
    case FqKind::SO5: return GroupDescriptor::make(Family::B, 2, 1);
    case FqKind::SO7: return GroupDescriptor::make(Family::B, 3, 1);
  }
  throw std::invalid_argument("fq_weyl_descriptor");
}

long long enumeration_budget() {
  if (const char* s = std::getenv("WEYLPHI_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
    throw std::invalid_argument(std::string("WEYLPHI_BUDGET is not a positive integer: ") + s);
  }
  return 1000000;
}

namespace {

void check_q(int q) {
  if (q != 2 && q != 3 && q != 5 && q != 7) throw std::invalid_argument("q must be one of 2, 3, 5, 7");
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

long long fq_group_order(FqKind k, int q) {
  check_q(q);
  const long long Q = q;
  switch (k) {
    case FqKind::SL3: return ipow(Q, 3) * (Q * Q - 1) * (ipow(Q, 3) - 1);
    case FqKind::Sp4:
    case FqKind::SO5: return ipow(Q, 4) * (Q * Q - 1) * (ipow(Q, 4) - 1);
    case FqKind::SO7: return ipow(Q, 9) * (Q * Q - 1) * (ipow(Q, 4) - 1) * (ipow(Q, 6) - 1);
  }
  return 0;
}

long long fq_borel_order(FqKind k, int q) {
  check_q(q);
  switch (k) {
    case FqKind::SL3: return ipow(q, 3) * ipow(q - 1, 2);
    case FqKind::Sp4:
    case FqKind::SO5: return ipow(q, 4) * ipow(q - 1, 2);
    case FqKind::SO7: return ipow(q, 9) * ipow(q - 1, 3);
  }
  return 0;
}

namespace {

template <class Fn>
auto with_field(int q, Fn&& fn) {
  switch (q) {
    case 2: return fn(Fp<2>{});
    case 3: return fn(Fp<3>{});
    case 5: return fn(Fp<5>{});
    case 7: return fn(Fp<7>{});
  }
  throw std::invalid_argument("q must be one of 2, 3, 5, 7");
}

template <class F>
F det(Matrix<F> m) {
  const int n = m.rows();
  F d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != F(0)) {
        piv = i;
        break;
      }
    if (piv < 0) return F(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    F inv = F(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == F(0)) continue;
      F f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

// Every point of the span of `basis` shifted by `base`.
template <class F>
void for_each_point(const std::vector<Vec<F>>& basis, const Vec<F>& base, const std::function<void(const Vec<F>&)>& fn) {
  const int q = static_cast<int>(F::modulus);
  const int d = static_cast<int>(basis.size());
  std::vector<int> digit(d, 0);
  Vec<F> v = base;
  while (true) {
    fn(v);
    int i = 0;
    while (i < d) {
      for (size_t j = 0; j < v.size(); ++j) v[j] += basis[i][j];
      if (++digit[i] < q) break;
      digit[i] = 0;  // q additions wrapped this coordinate back
      ++i;
    }
    if (i == d) return;
  }
}

// Solutions of the rows [a | b] (a x = b) in F^d: a point and a basis of directions.
template <class F>
std::optional<std::pair<Vec<F>, std::vector<Vec<F>>>> affine_solve(const std::vector<Vec<F>>& rows, int d) {
  Vec<F> part(d, F(0));
  std::vector<Vec<F>> free;
  if (rows.empty()) {
    for (int t = 0; t < d; ++t) {
      Vec<F> e(d, F(0));
      e[t] = F(1);
      free.push_back(e);
    }
    return std::make_pair(part, free);
  }
  Matrix<F> A = Matrix<F>::from_rows(rows, d + 1);
  auto piv = rref_inplace(A);
  if (!piv.empty() && piv.back() == d) return std::nullopt;
  for (size_t r = 0; r < piv.size(); ++r) part[piv[r]] = A(static_cast<int>(r), d);
  std::vector<bool> is_piv(d, false);
  for (int c : piv) is_piv[c] = true;
  for (int f = 0; f < d; ++f) {
    if (is_piv[f]) continue;
    Vec<F> e(d, F(0));
    e[f] = F(1);
    for (size_t r = 0; r < piv.size(); ++r) e[piv[r]] = -A(static_cast<int>(r), f);
    free.push_back(e);
  }
  return std::make_pair(part, free);
}

template <class F>
bool is_zero_matrix(const Matrix<F>& m) {
  for (const F& x : m.data())
    if (x != F(0)) return false;
  return true;
}

template <class F>
struct Model {
  FqKind kind;
  int q;
  int nu;
  std::optional<FormedSpace<F>> V;
  WeylGroup W;
  std::vector<F> qdiag;
  Matrix<F> gramT;

  explicit Model(FqKind k)
      : kind(k), q(static_cast<int>(F::modulus)), nu(0), W(fq_weyl_descriptor(k)) {
    switch (k) {
      case FqKind::SL3: nu = 3; break;
      case FqKind::Sp4: V.emplace(2, 0, FormKind::Symplectic); break;
      case FqKind::SO5: V.emplace(2, 1, FormKind::Quadratic); break;
      case FqKind::SO7: V.emplace(3, 1, FormKind::Quadratic); break;
    }
    if (V) {
      nu = V->nu();
      for (int i = 0; i < nu; ++i) qdiag.push_back(V->quad(V->unit(i)));
      gramT = V->gram().transpose();
    }
  }

  bool orthogonal() const { return V && V->kind() == FormKind::Quadratic; }
  bool char2() const { return q == 2; }

  // Conditions on column j given columns 0..j-1.
  bool column_ok(const std::vector<Vec<F>>& cols, int j) const {
    if (!V) return true;
    const auto& G = V->gram();
    for (int i = 0; i <= j; ++i)
      if (V->form(cols[i], cols[j]) != G(i, j)) return false;
    if (orthogonal() && V->quad(cols[j]) != qdiag[j]) return false;
    return true;
  }

  bool final_ok(const Matrix<F>& g) const {
    F d = det(g);
    if (d == F(0)) return false;
    if (kind == FqKind::SL3) return d == F(1);
    if (orthogonal() && !char2()) return d == F(1);
    return true;
  }

  bool member(const Matrix<F>& g) const {
    if (g.rows() != nu || g.cols() != nu) return false;
    if (V && !V->is_isometry(g)) return false;
    return final_ok(g);
  }

  // Column backtracking; with `upper` the columns are those of an upper
  // triangular matrix with nonzero diagonal.
  void enumerate(bool upper, const std::function<void(const Matrix<F>&)>& fn) const {
    std::vector<Vec<F>> cols(nu);
    std::function<void(int)> rec = [&](int j) {
      if (j == nu) {
        Matrix<F> g = Matrix<F>::from_cols(cols, nu);
        if (final_ok(g)) fn(g);
        return;
      }
      // coordinates 0..top; (c_i, x) = G(i, j) for i < j is linear in x
      const int d = upper ? j + 1 : nu;
      std::vector<Vec<F>> rows;
      if (V) {
        for (int i = 0; i < j; ++i) {
          Vec<F> row(d + 1);
          const Vec<F> ci = gramT.apply(cols[i]);
          for (int t = 0; t < d; ++t) row[t] = ci[t];
          row[d] = V->gram()(i, j);
          rows.push_back(row);
        }
      }
      auto sol = affine_solve<F>(rows, d);
      if (!sol) return;
      const auto& [part, free] = *sol;
      for_each_point<F>(free, part, [&](const Vec<F>& x) {
        if (upper && x[j] == F(0)) return;
        if (std::all_of(x.begin(), x.end(), [](const F& y) { return y == F(0); })) return;
        Vec<F> v(nu, F(0));
        std::copy(x.begin(), x.end(), v.begin());
        cols[j] = v;
        if (column_ok(cols, j)) rec(j + 1);
      });
    };
    rec(0);
  }

  Vec<F> unit(int i) const {
    Vec<F> v(nu, F(0));
    v[i] = F(1);
    return v;
  }

  std::vector<Matrix<F>> borel() const {
    std::vector<Matrix<F>> out;
    enumerate(true, [&](const Matrix<F>& b) { out.push_back(b); });
    return out;
  }

  Matrix<F> generator(int h) const {
    if (V) return sdot(*V, h);
    Matrix<F> m = Matrix<F>::identity(nu);
    m(h - 1, h - 1) = F(0);
    m(h, h) = F(0);
    m(h, h - 1) = F(1);
    m(h - 1, h) = F(-1);
    return m;
  }

  std::vector<int> rel(const Matrix<F>& g) const {
    if (V) return rel_position(*V, standard_flag(*V), transform_flag(g, standard_flag(*V)));
    return rel_position_gl(Matrix<F>::identity(nu), g.transpose());
  }

  // A lift of w whose cell is B w. B, i.e. rel(F0, w. F0) = w.
  Matrix<F> wdot(const WeylElement& w) const {
    auto word = W.reduced_word(w);
    for (int pass = 0; pass < 2; ++pass) {
      Matrix<F> m = Matrix<F>::identity(nu);
      for (int h : word) m = m * generator(h);
      if (rel(m) == w.perm) return m;
      std::reverse(word.begin(), word.end());
    }
    throw std::logic_error("wdot: no lift with the requested relative position");
  }

  Family family() const {
    switch (kind) {
      case FqKind::SL3: return Family::A;
      case FqKind::Sp4: return Family::C;
      default: return Family::B;
    }
  }

  bool unipotent(const Matrix<F>& g) const {
    return is_zero_matrix(matrix_power(g - Matrix<F>::identity(nu), nu));
  }

  UnipotentLabel label(const Matrix<F>& g) const {
    if (V) return form_label(g, V->gram(), family());
    UnipotentLabel u;
    u.family = family();
    u.jordan = jordan_type_unipotent(g);
    return u;
  }

  // For each b in B (in enumeration order) with w. b unipotent: fn(g, label).
  void cell_unipotents(const WeylElement& w, const std::vector<Matrix<F>>& B,
                       const std::function<void(const Matrix<F>&, const UnipotentLabel&)>& fn) const {
    const Matrix<F> wd = wdot(w);
    for (const auto& b : B) {
      Matrix<F> g = wd * b;
      if (unipotent(g)) fn(g, label(g));
    }
  }

  std::map<UnipotentLabel, long long> cell_counts(const WeylElement& w, const std::vector<Matrix<F>>& B) const {
    std::map<UnipotentLabel, long long> out;
    cell_unipotents(w, B, [&](const Matrix<F>&, const UnipotentLabel& l) { ++out[l]; });
    return out;
  }

  // Key of the flag g F0: reduced echelon forms of the spans of the leading columns.
  std::vector<std::uint32_t> flag_key(const Matrix<F>& g) const {
    const int half = V ? V->n() : nu - 1;
    std::vector<std::uint32_t> key;
    for (int i = 1; i <= half; ++i) {
      std::vector<Vec<F>> cs;
      for (int j = 0; j < i; ++j) cs.push_back(g.col(j));
      Matrix<F> m = Matrix<F>::from_rows(cs, nu);
      rref_inplace(m);
      for (const F& x : m.data()) key.push_back(x.value());
    }
    return key;
  }

  // |Z(g)(F_q)| for unipotent g: x is determined by the images y_i of Jordan
  // generators v_i, with y_i in ker N^{l_i}; x is an isometry iff the form
  // values (and Q) on the N-powers agree.
  long long centralizer(const Matrix<F>& g) const {
    if (!V) throw UnsupportedCase("centralizer_order: isometry groups only");
    if (!unipotent(g)) throw std::invalid_argument("centralizer_order: element is not unipotent");
    const Matrix<F> N = g - Matrix<F>::identity(nu);
    std::vector<Matrix<F>> Npow{Matrix<F>::identity(nu)};
    while (!is_zero_matrix(Npow.back())) Npow.push_back(Npow.back() * N);
    const int M = static_cast<int>(Npow.size()) - 1;  // N^M = 0
    std::vector<std::vector<Vec<F>>> K(M + 2);
    for (int m = 0; m <= M + 1; ++m) K[m] = m == 0 ? std::vector<Vec<F>>{} : nullspace(Npow[std::min(m, M)]);

    std::vector<Vec<F>> gens;
    std::vector<int> sizes;
    for (int m = M; m >= 1; --m) {
      std::vector<Vec<F>> S = K[m - 1];
      for (const auto& x : K[m + 1]) S.push_back(N.apply(x));
      int r = rank_of_rows(S, nu);
      for (const auto& k : K[m]) {
        S.push_back(k);
        int r2 = rank_of_rows(S, nu);
        if (r2 > r) {
          gens.push_back(k);
          sizes.push_back(m);
          r = r2;
        } else {
          S.pop_back();
        }
      }
    }
    const int s = static_cast<int>(gens.size());
    auto powers = [&](const Vec<F>& v, int l) {
      std::vector<Vec<F>> out{v};
      for (int a = 1; a < l; ++a) out.push_back(N.apply(out.back()));
      return out;
    };
    std::vector<std::vector<Vec<F>>> P0;
    for (int i = 0; i < s; ++i) P0.push_back(powers(gens[i], sizes[i]));

    std::vector<std::vector<Vec<F>>> Y(s);
    long long count = 0;
    std::function<void(int)> rec = [&](int i) {
      if (i == s) {
        if (char2() && orthogonal()) {
          std::vector<Vec<F>> imgs;
          for (const auto& y : Y)
            for (const auto& v : y) imgs.push_back(v);
          if (rank_of_rows(imgs, nu) != nu) return;
        }
        ++count;
        return;
      }
      const int li = sizes[i];
      const auto& kb = K[li];
      const int d = static_cast<int>(kb.size());
      std::vector<std::vector<Vec<F>>> kbp;
      for (const auto& k : kb) kbp.push_back(powers(k, li));
      // cross constraints (N^a y_i, N^b y_j) = (N^a v_i, N^b v_j), j < i
      std::vector<Vec<F>> rows;
      for (int j = 0; j < i; ++j)
        for (int a = 0; a < li; ++a)
          for (int b = 0; b < sizes[j]; ++b) {
            Vec<F> row(d + 1);
            for (int t = 0; t < d; ++t) row[t] = V->form(kbp[t][a], Y[j][b]);
            row[d] = V->form(P0[i][a], P0[j][b]);
            rows.push_back(row);
          }
      auto sol = affine_solve<F>(rows, d);
      if (!sol) return;
      const auto& [part, free] = *sol;
      for_each_point<F>(free, part, [&](const Vec<F>& t) {
        Vec<F> y(nu, F(0));
        for (int k = 0; k < d; ++k)
          if (t[k] != F(0))
            for (int c = 0; c < nu; ++c) y[c] += t[k] * kb[k][c];
        auto yp = powers(y, li);
        for (int a = 0; a < li; ++a) {
          for (int b = 0; b < li; ++b)
            if (V->form(yp[a], yp[b]) != V->form(P0[i][a], P0[i][b])) return;
          if (orthogonal() && V->quad(yp[a]) != V->quad(P0[i][a])) return;
        }
        Y[i] = yp;
        rec(i + 1);
      });
    };
    rec(0);
    // O(Q) = SO(Q) x {+-1} in odd dimension and odd characteristic
    if (orthogonal() && !char2()) count /= 2;
    return count;
  }
};

template <class F>
Matrix<F> reduce(const std::vector<std::vector<long long>>& g) {
  Matrix<F> m(static_cast<int>(g.size()), g.empty() ? 0 : static_cast<int>(g[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = F(g[i][j]);
  return m;
}

long long prime_to(long long v, int p) {
  v = std::llabs(v);
  if (v == 0) return 0;
  while (v % p == 0) v /= p;
  return v;
}

long long center_order(FqKind k, int q) {
  switch (k) {
    case FqKind::SL3: return std::gcd(3, q - 1);
    case FqKind::Sp4: return q % 2 ? 2 : 1;
    default: return 1;
  }
}

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

bool dominated_strictly(const Partition& a, const Partition& b) { return a != b && dominance_leq(a, b); }

}  // namespace

WeylElement cell_representative(const ClassLabel& c, const WeylGroup& w) {
  const Family f = w.family();
  if ((f == Family::B || f == Family::C) && c.alpha.empty() && !c.beta.empty())
    return w_from_partition(c.beta, w.descriptor().kappa);
  auto mins = min_length_elements(c, w);
  if (mins.elements.empty()) throw UnsupportedCase("no minimal length element known for " + c.to_string());
  return mins.elements.front();
}

FqInstanceSummary enumerate_group(FqKind k, int q, long long budget) {
  check_q(q);
  if (budget < 0) budget = enumeration_budget();
  const long long order = fq_group_order(k, q);
  if (order > budget)
    throw BudgetExceeded(fq_kind_name(k) + "(F_" + std::to_string(q) + ") has " + std::to_string(order) +
                         " elements, over the enumeration budget " + std::to_string(budget) +
                         " (set WEYLPHI_BUDGET to raise it)");
  return with_field(q, [&](auto tag) {
    using F = decltype(tag);
    Model<F> M(k);
    FqInstanceSummary s;
    s.kind = k;
    s.q = q;
    std::set<std::vector<std::uint32_t>> flags;
    M.enumerate(false, [&](const Matrix<F>& g) {
      ++s.elements;
      if (!M.member(g)) s.members_valid = false;
      flags.insert(M.flag_key(g));
      if (M.unipotent(g)) {
        ++s.unipotent_total;
        ++s.unipotent_classes[M.label(g).to_string()];
      }
    });
    s.flags = static_cast<long long>(flags.size());
    s.borel = static_cast<long long>(M.borel().size());
    return s;
  });
}

std::map<UnipotentLabel, long long> cell_unipotent_counts(FqKind k, int q, const WeylElement& w) {
  return with_field(q, [&](auto tag) {
    using F = decltype(tag);
    Model<F> M(k);
    return M.cell_counts(w, M.borel());
  });
}

bool label_matches(const UnipotentLabel& target, const UnipotentLabel& computed) {
  if (target.jordan != computed.jordan) return false;
  if (target.flags.empty()) return true;
  // per block size: Holds if any block asks for it, else None if any block does
  std::map<int, FlagState> want, got;
  for (size_t i = 0; i < target.jordan.size(); ++i) {
    const FlagState f = target.flags[i];
    auto [it, fresh] = want.emplace(target.jordan[i], f);
    if (!fresh && (f == FlagState::Holds || it->second == FlagState::NotAsserted)) it->second = f;
    got[computed.jordan[i]] = computed.flags.empty() ? FlagState::None : computed.flags[i];
  }
  for (const auto& [m, st] : want)
    if (st != FlagState::NotAsserted && st != got[m]) return false;
  return true;
}

bool dsv_test(FqKind k, int q, const ClassLabel& c, const UnipotentLabel& gamma) {
  WeylGroup W(fq_weyl_descriptor(k));
  for (const auto& [l, n] : cell_unipotent_counts(k, q, cell_representative(c, W)))
    if (n > 0 && label_matches(gamma, l)) return true;
  return false;
}

bool dsv_independent_of_w(FqKind k, int q, const ClassLabel& c) {
  return with_field(q, [&](auto tag) {
    using F = decltype(tag);
    Model<F> M(k);
    auto B = M.borel();
    auto mins = min_length_elements(c, M.W);
    std::optional<std::set<UnipotentLabel>> first;
    for (const auto& w : mins.elements) {
      std::set<UnipotentLabel> met;
      for (const auto& [l, n] : M.cell_counts(w, B)) met.insert(l);
      if (!first) first = met;
      else if (*first != met) return false;
    }
    return true;
  });
}

MinimalClassReport minimal_class(FqKind k, int q, const ClassLabel& c) {
  if (q % 2 == 0) throw std::invalid_argument("minimal_class: q must be odd");
  WeylGroup W(fq_weyl_descriptor(k));
  MinimalClassReport r;
  r.c = c;
  r.expected = phi_full(c, W, q);
  for (const auto& [l, n] : cell_unipotent_counts(k, q, cell_representative(c, W)))
    if (n > 0) r.met.push_back(l);
  for (const auto& a : r.met) {
    bool minimal = true;
    for (const auto& b : r.met)
      if (dominated_strictly(b.jordan, a.jordan)) minimal = false;
    if (minimal) r.minimal.push_back(a);
  }
  return r;
}

bool bad_char_membership(FqKind k, int q, const ClassLabel& c) {
  if (q != 2) throw std::invalid_argument("bad_char_membership: q must be 2");
  WeylGroup W(fq_weyl_descriptor(k));
  return dsv_test(k, q, c, phi_full(c, W, 2));
}

IsotropyReport isotropy_check(FqKind k, int q, const ClassLabel& c) {
  return with_field(q, [&](auto tag) {
    using F = decltype(tag);
    Model<F> M(k);
    IsotropyReport r;
    r.c = c;
    const auto B = M.borel();
    auto mins = min_length_elements(c, M.W);
    if (mins.elements.empty()) mins.elements.push_back(cell_representative(c, M.W));
    for (const auto& w : mins.elements) {
      const long long bound = prime_to(M.W.det_one_minus(w), q) * center_order(k, q);
      r.bound = std::max(r.bound, bound);
      const Matrix<F> wd = M.wdot(w);
      for (const auto& b : B) {
        const Matrix<F> g = wd * b;
        std::vector<const Matrix<F>*> stab;
        for (const auto& x : B)
          if (x * g == g * x) stab.push_back(&x);
        ++r.samples;
        const long long order = static_cast<long long>(stab.size());
        r.max_order = std::max(r.max_order, order);
        bool abelian = true;
        for (size_t i = 0; i < stab.size() && abelian; ++i)
          for (size_t j = i + 1; j < stab.size() && abelian; ++j)
            if ((*stab[i]) * (*stab[j]) != (*stab[j]) * (*stab[i])) abelian = false;
        const bool divides = bound % order == 0;
        if (!abelian) r.all_abelian = false;
        if (!divides) r.all_divide = false;
        if ((!abelian || !divides) && r.counterexample.empty())
          r.counterexample = "w=" + w.to_string() + " |stab|=" + std::to_string(order) +
                             (abelian ? "" : " non-abelian") + "\n" + to_string(g);
      }
    }
    return r;
  });
}

long long centralizer_order(FqKind k, int q, const std::vector<std::vector<long long>>& g) {
  return with_field(q, [&](auto tag) {
    using F = decltype(tag);
    Model<F> M(k);
    Matrix<F> m = reduce<F>(g);
    if (!M.member(m)) throw std::invalid_argument("centralizer_order: matrix is not in the group");
    return M.centralizer(m);
  });
}

bool CSmallReport::ok() const {
  if (!phi_found) return false;
  for (const auto& r : rows) {
    if (!r.conclusive) continue;
    const int d = r.degree - dim_center;
    if (d > d_C) return false;
    if ((d == d_C) != r.is_phi) return false;
  }
  return true;
}

CSmallReport c_small_check(FqKind k, const ClassLabel& c, const std::vector<int>& qs) {
  WeylGroup W(fq_weyl_descriptor(k));
  if (!is_elliptic(c, W)) throw std::invalid_argument("c_small_check: class must be elliptic");
  CSmallReport rep;
  rep.c = c;
  rep.d_C = d_C(c, W);
  rep.dim_center = 0;
  const WeylElement w = cell_representative(c, W);
  std::map<std::string, CSmallRow> rows;
  for (int q : qs) {
    if (q % 2 == 0) throw std::invalid_argument("c_small_check: q must be odd");
    const std::string phi = phi_full(c, W, q).to_string();
    with_field(q, [&](auto tag) {
      using F = decltype(tag);
      Model<F> M(k);
      std::map<std::string, Matrix<F>> reps;
      M.cell_unipotents(w, M.borel(), [&](const Matrix<F>& g, const UnipotentLabel& l) {
        reps.emplace(l.to_string(), g);
      });
      for (const auto& [label, g] : reps) {
        auto& row = rows[label];
        row.label = label;
        row.is_phi = label == phi;
        row.qs.push_back(q);
        row.centralizer.push_back(M.centralizer(g));
      }
      return 0;
    });
  }
  for (auto& [label, row] : rows) {
    const size_t m = row.qs.size();
    if (m < 2) {
      row.conclusive = false;
    } else {
      double mx = 0, my = 0;
      for (size_t i = 0; i < m; ++i) {
        mx += std::log(row.qs[i]);
        my += std::log(static_cast<double>(row.centralizer[i]));
      }
      mx /= m;
      my /= m;
      double sxy = 0, sxx = 0;
      for (size_t i = 0; i < m; ++i) {
        double dx = std::log(row.qs[i]) - mx;
        sxy += dx * (std::log(static_cast<double>(row.centralizer[i])) - my);
        sxx += dx * dx;
      }
      row.slope = sxy / sxx;
      row.degree = static_cast<int>(std::lround(row.slope));
      row.conclusive = std::fabs(row.slope - row.degree) <= 0.35;
    }
    if (row.is_phi) rep.phi_found = true;
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<PointCountRow> point_count_series(FqKind k, const ClassLabel& c, const std::vector<int>& qs) {
  WeylGroup W(fq_weyl_descriptor(k));
  const WeylElement w = cell_representative(c, W);
  const int ell = W.length(w);
  const int D = ell - W.rank();
  const bool elliptic = is_elliptic(c, W);
  std::map<std::string, PointCountRow> rows;
  std::vector<std::map<std::string, Rational>> at(qs.size());
  std::string phi;
  for (size_t i = 0; i < qs.size(); ++i) {
    const int q = qs[i];
    phi = phi_full(c, W, q).to_string();
    const Rational scale = rat(ipow(q, ell)) / rat(fq_borel_order(k, q));
    for (const auto& [l, n] : cell_unipotent_counts(k, q, w)) {
      at[i][l.to_string()] = scale * rat(n);
      rows[l.to_string()].label = l.to_string();
    }
  }
  std::vector<PointCountRow> out;
  for (auto& [label, row] : rows) {
    row.qs = qs;
    row.degree_bound = D;
    row.is_phi = label == phi;
    for (size_t i = 0; i < qs.size(); ++i) {
      auto it = at[i].find(label);
      row.ratio.push_back(it == at[i].end() ? Rational(0) : it->second);
    }
    const Rational c0 = row.is_phi ? 1 : 0;
    if (!elliptic) {
      row.verdict = "not elliptic";
    } else if (D == 0) {
      bool all = std::all_of(row.ratio.begin(), row.ratio.end(), [&](const Rational& x) { return x == c0; });
      row.verdict = all ? "consistent" : "inconsistent";
    } else if (static_cast<int>(qs.size()) <= D) {
      row.verdict = "underdetermined";
    } else {
      // ratio - c0 = sum_{e=1..D} a_e q^e, solved on the first D points
      Matrix<Rational> A(D, D + 1);
      for (int i = 0; i < D; ++i) {
        for (int e = 1; e <= D; ++e) A(i, e - 1) = rat(ipow(qs[i], e));
        A(i, D) = row.ratio[i] - c0;
      }
      rref_inplace(A);
      bool ok = true;
      for (size_t i = D; i < qs.size(); ++i) {
        Rational v = c0;
        for (int e = 1; e <= D; ++e) v += A(e - 1, D) * rat(ipow(qs[i], e));
        if (v != row.ratio[i]) ok = false;
      }
      row.verdict = ok ? "consistent" : "inconsistent";
    }
    out.push_back(row);
  }
  return out;
}

CanonicalSweep canonical_basis_sweep(FqKind k, int q, const ClassLabel& c) {
  if (k == FqKind::SL3) throw std::invalid_argument("canonical_basis_sweep: isometry groups only");
  return with_field(q, [&](auto tag) {
    using F = decltype(tag);
    Model<F> M(k);
    if (!c.alpha.empty() || c.beta.empty()) throw std::invalid_argument("canonical_basis_sweep: class must be elliptic");
    const Partition& p = c.beta;
    const WeylElement w = w_from_partition(p, M.V->kappa());
    const Matrix<F> wd = M.wdot(w);
    const auto F0 = standard_flag(*M.V);
    CanonicalSweep s;
    auto fail = [&](const std::string& why, const Matrix<F>& g) {
      if (s.failures++ == 0) s.first_failure = why + "\n" + to_string(g);
    };
    for (const auto& b : M.borel()) {
      const Matrix<F> g = wd * b;
      ++s.pairs;
      try {
        auto cb = canonical_basis(*M.V, g, F0);
        auto rep = check_canonical_basis(*M.V, g, F0, cb);
        if (!rep.ok()) fail("clause " + rep.failures.front(), g);
      } catch (const std::exception& e) {
        fail(e.what(), g);
      }
      if (M.unipotent(g)) {
        ++s.unipotent;
        if (!lambda_bounds_check(*M.V, g, p).ok()) fail("rank bounds", g);
      }
    }
    return s;
  });
}

}  // namespace weylphi
