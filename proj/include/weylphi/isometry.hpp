#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylphi/elliptic.hpp"
#include "weylphi/field.hpp"
#include "weylphi/matrix.hpp"
#include "weylphi/unipotent.hpp"
#include "weylphi/weyl.hpp"

namespace weylphi {

enum class FormKind { Symplectic, Quadratic };

// Pure combinatorics of the rank bounds (k >= 0). kappa is 0 or 1 and plays
// the role of 2 p_{sigma+1}.
int lambda_k(const Partition& p, int kappa, int k);
int lambda_prime_k(const Partition& p, int kappa, int k);
int lambda_double_prime_k(const Partition& p, int kappa, int k);
// pi_r = 2 p_r + psi(r) for r = 1..sigma+1 (0-based vector)
std::vector<int> pi_values(const Partition& p, int kappa);
// m_1 + ... + m_c <= n_1 + ... + n_c for every c (missing parts count as 0)
bool prefix_sums_bounded(const Partition& m, const Partition& n);
// Partitions p of n with w_p equal to the given permutation (at most one).
std::optional<Partition> partition_of_w(const std::vector<int>& perm, int n, int kappa);

template <class F>
using Vec = std::vector<F>;

// Basis order e_1..e_n, [e_0], e'_n..e'_1, so the standard flag is spanned by
// leading basis vectors.
template <class F>
class FormedSpace {
 public:
  FormedSpace(int n, int kappa, FormKind kind) : n_(n), kappa_(kappa), kind_(kind) {
    if (n < 1) throw std::invalid_argument("FormedSpace: n must be positive");
    if (kappa != 0 && kappa != 1) throw std::invalid_argument("FormedSpace: kappa must be 0 or 1");
    if (kind == FormKind::Symplectic && kappa) throw std::invalid_argument("FormedSpace: symplectic spaces have kappa = 0");
    gram_ = Matrix<F>(nu(), nu());
    q_.assign(nu(), F(0));
    for (int i = 1; i <= n; ++i) {
      gram_(e(i), ep(i)) = F(1);
      gram_(ep(i), e(i)) = kind == FormKind::Symplectic ? F(-1) : F(1);
    }
    if (kappa) {
      gram_(e(0), e(0)) = F(2);
      q_[e(0)] = F(1);
    }
  }

  int n() const { return n_; }
  int kappa() const { return kappa_; }
  int nu() const { return 2 * n_ + kappa_; }
  FormKind kind() const { return kind_; }
  const Matrix<F>& gram() const { return gram_; }

  // 0-based coordinate of e_i (e_0 when i = 0) and of e'_i
  int e(int i) const {
    if (i == 0 && !kappa_) throw std::invalid_argument("e_0 exists only when kappa = 1");
    return i == 0 ? n_ : i - 1;
  }
  int ep(int i) const { return nu() - i; }

  std::string tag(int idx) const {
    if (idx < n_) return "e" + std::to_string(idx + 1);
    if (kappa_ && idx == n_) return "e0";
    return "e'" + std::to_string(nu() - idx);
  }

  Vec<F> unit(int idx) const {
    Vec<F> v(nu(), F(0));
    v[idx] = F(1);
    return v;
  }

  F form(const Vec<F>& x, const Vec<F>& y) const {
    F s(0);
    for (int i = 0; i < nu(); ++i) {
      if (x[i] == F(0)) continue;
      for (int j = 0; j < nu(); ++j)
        if (gram_(i, j) != F(0)) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
  }

  F quad(const Vec<F>& x) const {
    if (kind_ == FormKind::Symplectic) return F(0);
    F s(0);
    for (int i = 0; i < nu(); ++i) {
      if (x[i] == F(0)) continue;
      s += q_[i] * x[i] * x[i];
      for (int j = i + 1; j < nu(); ++j)
        if (gram_(i, j) != F(0)) s += gram_(i, j) * x[i] * x[j];
    }
    return s;
  }

  bool is_isometry(const Matrix<F>& g) const {
    if (g.rows() != nu() || g.cols() != nu()) return false;
    if (g.transpose() * gram_ * g != gram_) return false;
    for (int j = 0; j < nu(); ++j)
      if (quad(g.col(j)) != q_[j]) return false;
    return static_cast<bool>(inverse(g));
  }

 private:
  int n_, kappa_;
  FormKind kind_;
  Matrix<F> gram_;
  Vec<F> q_;
};

// Row i-1 of `rows` extends V_{i-1} to V_i.
template <class F>
struct FlagSeq {
  Matrix<F> rows;

  Matrix<F> subspace(int i) const {
    std::vector<int> rs(i), cs(rows.cols());
    for (int k = 0; k < i; ++k) rs[k] = k;
    for (int k = 0; k < rows.cols(); ++k) cs[k] = k;
    return rows.submatrix(rs, cs);
  }
};

template <class F>
FlagSeq<F> standard_flag(const FormedSpace<F>& V) {
  return {Matrix<F>::identity(V.nu())};
}

template <class F>
FlagSeq<F> transform_flag(const Matrix<F>& g, const FlagSeq<F>& f) {
  return {(g * f.rows.transpose()).transpose()};
}

template <class F>
Matrix<F> stack_rows(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) m.set_row(i, a.row(i));
  for (int i = 0; i < b.rows(); ++i) m.set_row(a.rows() + i, b.row(i));
  return m;
}

template <class F>
Matrix<F> rows_of(const std::vector<Vec<F>>& vs, int cols) {
  return Matrix<F>::from_rows(vs, cols);
}

// dim(A + B) and dim(A cap B) for row spans
template <class F>
int sum_dim(const Matrix<F>& a, const Matrix<F>& b) {
  return rank(stack_rows(a, b));
}
template <class F>
int meet_dim(const Matrix<F>& a, const Matrix<F>& b) {
  return rank(a) + rank(b) - sum_dim(a, b);
}

// Basis of {x : (a, x) = 0 for every row a}.
template <class F>
std::vector<Vec<F>> perp(const FormedSpace<F>& V, const Matrix<F>& a) {
  if (a.rows() == 0) {
    std::vector<Vec<F>> all;
    for (int i = 0; i < V.nu(); ++i) all.push_back(V.unit(i));
    return all;
  }
  return nullspace(a * V.gram());
}

template <class F>
bool is_valid_flag(const FormedSpace<F>& V, const FlagSeq<F>& f) {
  const int nu = V.nu();
  if (f.rows.rows() != nu || f.rows.cols() != nu || rank(f.rows) != nu) return false;
  for (int i = 0; i < V.n(); ++i) {
    if (V.quad(f.rows.row(i)) != F(0)) return false;
    // V_{i+1} is orthogonal to V_{nu-i-1}
    for (int j = 0; j < nu - i - 1; ++j)
      if (V.form(f.rows.row(i), f.rows.row(j)) != F(0)) return false;
  }
  return true;
}

// i -> a_i where X_i = X_{i-1} + {a_i}, X_i = {j : dim(V'_i cap V_j) / (V'_i cap V_{j-1}) = 1}.
// No form: complete flags of a plain vector space.
template <class F>
std::vector<int> rel_position_gl(const Matrix<F>& A, const Matrix<F>& B) {
  const int nu = A.rows();
  std::vector<std::vector<int>> d(nu + 1, std::vector<int>(nu + 1, 0));
  std::vector<Matrix<F>> a(nu + 1), b(nu + 1);
  for (int i = 1; i <= nu; ++i) {
    a[i] = FlagSeq<F>{A}.subspace(i);
    b[i] = FlagSeq<F>{B}.subspace(i);
  }
  for (int i = 1; i <= nu; ++i)
    for (int j = 1; j <= nu; ++j) d[i][j] = i + j - sum_dim(b[i], a[j]);
  std::vector<int> perm(nu, 0);
  for (int i = 1; i <= nu; ++i) {
    for (int j = 1; j <= nu; ++j) {
      int now = d[i][j] - d[i][j - 1], before = d[i - 1][j] - d[i - 1][j - 1];
      if (now == 1 && before == 0) {
        if (perm[i - 1]) throw std::logic_error("rel_position: two new indices");
        perm[i - 1] = j;
      }
    }
    if (!perm[i - 1]) throw std::logic_error("rel_position: no new index");
  }
  return perm;
}

template <class F>
std::vector<int> rel_position(const FormedSpace<F>& V, const FlagSeq<F>& A, const FlagSeq<F>& B) {
  if (!is_valid_flag(V, A) || !is_valid_flag(V, B)) throw std::invalid_argument("rel_position: invalid flag");
  const int nu = V.nu();
  auto perm = rel_position_gl(A.rows, B.rows);
  for (int i = 1; i <= nu; ++i)
    if (perm[nu - i] != nu + 1 - perm[i - 1]) throw std::logic_error("rel_position: not compatible with the involution");
  return perm;
}

// y_{s_h}(a). For h = n only the symplectic and odd orthogonal cases exist.
template <class F>
Matrix<F> y_s(const FormedSpace<F>& V, int h, const F& a) {
  const int n = V.n();
  if (h < 1 || h > n) throw std::invalid_argument("y_s: generator index out of range");
  Matrix<F> m = Matrix<F>::identity(V.nu());
  if (h < n) {
    m(V.e(h + 1), V.e(h)) += a;
    m(V.ep(h), V.ep(h + 1)) -= a;
  } else if (V.kind() == FormKind::Symplectic) {
    m(V.ep(n), V.e(n)) -= a;
  } else if (V.kappa() == 1) {
    m(V.e(0), V.e(n)) += a;
    m(V.ep(n), V.e(n)) -= a * a;
    m(V.ep(n), V.e(0)) -= F(2) * a;
  } else {
    throw std::invalid_argument("y_s: s_n is not a simple reflection of an even orthogonal group here");
  }
  return m;
}

// Signed permutation lifts; the symplectic s_n uses e_n -> -e'_n, e'_n -> e_n,
// the odd orthogonal one negates e_0 to keep determinant 1.
template <class F>
Matrix<F> sdot(const FormedSpace<F>& V, int h) {
  const int n = V.n();
  if (h < 1 || h > n) throw std::invalid_argument("sdot: generator index out of range");
  const int nu = V.nu();
  Matrix<F> m(nu, nu);
  std::vector<int> to(nu);
  std::vector<F> sign(nu, F(1));
  for (int i = 0; i < nu; ++i) to[i] = i;
  if (h < n) {
    std::swap(to[V.e(h)], to[V.e(h + 1)]);
    std::swap(to[V.ep(h)], to[V.ep(h + 1)]);
  } else {
    if (V.kind() == FormKind::Quadratic && !V.kappa())
      throw std::invalid_argument("sdot: s_n is not a simple reflection of an even orthogonal group here");
    std::swap(to[V.e(n)], to[V.ep(n)]);
    if (V.kind() == FormKind::Symplectic)
      sign[V.e(n)] = F(-1);
    else
      sign[V.e(0)] = F(-1);
  }
  for (int j = 0; j < nu; ++j) m(to[j], j) = sign[j];
  return m;
}

// The product over the palindromic blocks s_1..s_q s_{q+1} s_q..s_1 of
// sdot(s_1..s_q) y_{s_{q+1}}(c_k) sdot(s_1..s_q)^{-1}.
template <class F>
Matrix<F> build_u_w(const FormedSpace<F>& V, const ExcellentDecomposition& dec, const std::vector<F>& c) {
  if (c.size() != dec.blocks.size()) throw std::invalid_argument("build_u_w: need one scalar per block");
  Matrix<F> u = Matrix<F>::identity(V.nu());
  for (size_t k = 0; k < dec.blocks.size(); ++k) {
    if (c[k] == F(0)) throw std::invalid_argument("build_u_w: scalars must be nonzero");
    const auto& b = dec.blocks[k];
    if (b.size() % 2 == 0) throw std::invalid_argument("build_u_w: blocks must have odd length");
    const size_t q = b.size() / 2;
    Matrix<F> s = Matrix<F>::identity(V.nu());
    for (size_t i = 0; i < q; ++i) s = s * sdot(V, b[i]);
    u = u * s * y_s(V, b[q], c[k]) * inverse_or_throw(s);
  }
  return u;
}

template <class F>
ExcellentDecomposition decomposition_for(const FormedSpace<F>& V, const Partition& p) {
  return excellent_decomposition(p, V.kind() == FormKind::Symplectic ? Family::C : Family::B, 'a');
}

template <class F>
Matrix<F> build_u_w(const FormedSpace<F>& V, const Partition& p, const std::vector<F>& c = {}) {
  auto dec = decomposition_for(V, p);
  return build_u_w(V, dec, c.empty() ? std::vector<F>(dec.blocks.size(), F(1)) : c);
}

// u_w^{-1} written out block by block: the product M_1 M_2 ... M_sigma of the
// explicit maps attached to the parts of p.
template <class F>
Matrix<F> oracle_u_w_inverse(const FormedSpace<F>& V, const Partition& p) {
  if (partition_size(p) != V.n()) throw std::invalid_argument("oracle: partition size must be n");
  if (V.kind() == FormKind::Quadratic && !V.kappa()) throw std::invalid_argument("oracle: even orthogonal case not displayed");
  Matrix<F> out = Matrix<F>::identity(V.nu());
  int P = 0;
  for (int ph : p) {
    P += ph;
    Matrix<F> m = Matrix<F>::identity(V.nu());
    F s(1);
    for (int v = 1; v <= ph; ++v) {
      s = -s;
      m(V.ep(P - v + 1), V.e(P)) += s;
      if (V.kappa()) m(V.ep(P - v + 1), V.e(0)) += F(2) * s;
    }
    if (V.kappa()) m(V.e(0), V.e(P)) += F(1);
    for (int k = 1; k < ph; ++k) m(V.e(P - k + 1), V.e(P - k)) += F(1);
    for (int k = 0; k + 1 < ph; ++k) {
      F t(1);
      for (int v = 1; v <= ph - 1 - k; ++v) {
        t = -t;
        m(V.ep(P - k - v), V.ep(P - k)) += t;
      }
    }
    out = out * m;
  }
  return out;
}

template <class F>
Partition jordan_type(const Matrix<F>& g) {
  return jordan_type_unipotent(g);
}

// -2 sum_x (-1)^x e_{p_1+...+p_x} + e_0
// Class label of a unipotent g. In characteristic 2 an even block size m is
// flagged when ((g-1)^{m-1} x, x) != 0 for some x in ker (g-1)^m; `gram` is
// the matrix of the bilinear form in the basis g is written in.
template <class F>
UnipotentLabel form_label(const Matrix<F>& g, const Matrix<F>& gram, Family family) {
  const int nu = g.rows();
  const Matrix<F> N = g - Matrix<F>::identity(nu);
  UnipotentLabel u;
  u.family = family;
  u.jordan = jordan_type_nilpotent(N);
  if (characteristic<F>() != 2) return u;
  u.flags.assign(u.jordan.size(), FlagState::None);
  std::map<int, bool> holds;
  for (size_t i = 0; i < u.jordan.size(); ++i) {
    const int m = u.jordan[i];
    if (m % 2) continue;
    if (!holds.count(m)) {
      const Matrix<F> Nm1 = matrix_power(N, m - 1);
      const auto ker = nullspace(matrix_power(N, m));
      if (ker.size() > 24) throw std::invalid_argument("form_label: kernel too large to search");
      // over F_2 the kernel is the set of subset sums of a basis
      bool h = false;
      for (unsigned long mask = 1; mask < (1UL << ker.size()) && !h; ++mask) {
        Vec<F> x(nu, F(0));
        for (size_t b = 0; b < ker.size(); ++b)
          if (mask >> b & 1)
            for (int c = 0; c < nu; ++c) x[c] += ker[b][c];
        const Vec<F> y = Nm1.apply(x), gx = gram.apply(x);
        F s(0);
        for (int c = 0; c < nu; ++c) s += y[c] * gx[c];
        h = s != F(0);
      }
      holds[m] = h;
    }
    if (holds[m]) u.flags[i] = FlagState::Holds;
  }
  return u;
}

template <class F>
Vec<F> xi_vector(const FormedSpace<F>& V, const Partition& p) {
  Vec<F> x = V.unit(V.e(0));
  int P = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    P += p[i];
    x[V.e(P)] += (i % 2 == 0) ? F(2) : F(-2);
  }
  return x;
}

template <class F>
struct Restriction {
  Matrix<F> basis;   // rows span U
  Matrix<F> action;  // g on U in that basis (columns are images)
  Partition jordan;
  bool stable = true;         // U is g-stable inside V
  bool nondegenerate = true;  // the form restricted to U
  std::string how;
};

// Restriction of g (an odd orthogonal u_w for p with an even number of parts)
// to a 2n-dimensional complement of the fixed line.
template <class F>
Restriction<F> so_even_restriction(const FormedSpace<F>& V, const Matrix<F>& g, const Partition& p) {
  if (V.kind() != FormKind::Quadratic || !V.kappa()) throw std::invalid_argument("so_even_restriction: need an odd orthogonal space");
  if (p.size() % 2) throw std::invalid_argument("so_even_restriction: p needs an even number of parts");
  const int nu = V.nu(), n = V.n();
  Restriction<F> r;
  if (characteristic<F>() == 2) {
    // V / k e_0 identified with span(e_i, e'_i)
    std::vector<int> keep;
    for (int i = 0; i < nu; ++i)
      if (i != V.e(0)) keep.push_back(i);
    std::vector<Vec<F>> b;
    for (int i : keep) b.push_back(V.unit(i));
    r.basis = rows_of(b, nu);
    Vec<F> ge0 = g.col(V.e(0));
    for (int i : keep)
      if (ge0[i] != F(0)) throw std::invalid_argument("so_even_restriction: e_0 is not an eigenvector");
    r.action = g.submatrix(keep, keep);
    for (int j : keep)
      if (g(V.e(0), j) != F(0)) r.stable = false;
    r.how = "quotient by e0";
  } else {
    Vec<F> xi = xi_vector(V, p);
    r.how = "Xi";
    if (g.apply(xi) != xi) {
      // another fixed anisotropic vector
      auto ker = nullspace(g - Matrix<F>::identity(nu));
      bool found = false;
      for (size_t i = 0; i < ker.size() && !found; ++i)
        for (size_t j = i; j < ker.size() && !found; ++j) {
          Vec<F> x = ker[i];
          if (j != i)
            for (int k = 0; k < nu; ++k) x[k] += ker[j][k];
          if (V.quad(x) != F(0)) {
            xi = x;
            found = true;
          }
        }
      if (!found) throw std::invalid_argument("so_even_restriction: no fixed anisotropic vector");
      r.how = "fixed anisotropic vector";
    }
    Matrix<F> one(1, nu);
    one.set_row(0, xi);
    r.basis = rows_of(perp(V, one), nu);
    r.action = Matrix<F>(2 * n, 2 * n);
    for (int j = 0; j < 2 * n; ++j) {
      auto coords = solve_in_rows(r.basis, g.apply(r.basis.row(j)));
      if (!coords) throw std::logic_error("so_even_restriction: complement is not stable");
      for (int i = 0; i < 2 * n; ++i) r.action(i, j) = (*coords)[i];
    }
  }
  Matrix<F> gu(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) gu(i, j) = V.form(r.basis.row(i), r.basis.row(j));
  r.nondegenerate = rank(gu) == 2 * n;
  r.jordan = jordan_type(r.action);
  return r;
}

template <class F>
Matrix<Ext<F>> lift(const Matrix<F>& m) {
  Matrix<Ext<F>> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Ext<F>(m(i, j));
  return out;
}

// v_1..v_sigma (and v_{sigma+1} when kappa = 1). Each v_r is kept as a raw
// vector on the right line together with norm_r = (raw, g^{p_r} raw) (or
// Q(raw) for v_{sigma+1}); v_r = raw_r / sqrt(norm_r). When the square root
// exists in F the scaling is applied and norm_r = 1.
template <class F>
struct CanonicalBasis {
  Partition p;
  int kappa = 0;
  std::vector<Vec<F>> raw;
  std::vector<F> norm;

  Vec<Ext<F>> normalized(size_t r) const {
    Ext<F> s = norm[r] == F(1) ? Ext<F>(F(1)) : Ext<F>(F(0), F(1) / norm[r], norm[r]);
    Vec<Ext<F>> v;
    for (const F& x : raw[r]) v.push_back(s * Ext<F>(x));
    return v;
  }
};

namespace detail {

template <class F>
Vec<F> scaled_first_one(Vec<F> v) {
  for (const F& x : v)
    if (x != F(0)) {
      F inv = F(1) / x;
      for (F& y : v) y *= inv;
      return v;
    }
  return v;
}

// g^k v for k in [-K, K]
template <class F>
class Orbit {
 public:
  Orbit(const Matrix<F>& g, const Matrix<F>& ginv, const Vec<F>& v, int K) : K_(K), v_(2 * K + 1) {
    v_[K] = v;
    for (int k = 1; k <= K; ++k) {
      v_[K + k] = g.apply(v_[K + k - 1]);
      v_[K - k] = ginv.apply(v_[K - k + 1]);
    }
  }
  const Vec<F>& at(int k) const {
    if (k < -K_ || k > K_) throw std::out_of_range("orbit power out of range");
    return v_[K_ + k];
  }

 private:
  int K_;
  std::vector<Vec<F>> v_;
};

// The line V_m cap E^perp, as a vector with first nonzero coordinate 1.
template <class F>
Vec<F> line_in(const FormedSpace<F>& V, const FlagSeq<F>& flag, int m, const std::vector<Vec<F>>& E) {
  Matrix<F> basis = flag.subspace(m);
  Matrix<F> a(static_cast<int>(E.size()), m);
  for (size_t e = 0; e < E.size(); ++e)
    for (int k = 0; k < m; ++k) a(static_cast<int>(e), k) = V.form(E[e], basis.row(k));
  auto ns = E.empty() ? std::vector<Vec<F>>{} : nullspace(a);
  if (E.empty()) {
    if (m != 1) throw std::logic_error("line_in: empty E needs m = 1");
    return scaled_first_one(basis.row(0));
  }
  if (ns.size() != 1) throw std::invalid_argument("canonical_basis: V_m cap E^perp is not a line");
  Vec<F> v(V.nu(), F(0));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < V.nu(); ++j) v[j] += ns[0][k] * basis(k, j);
  return scaled_first_one(v);
}

}  // namespace detail

template <class F>
CanonicalBasis<F> canonical_basis(const FormedSpace<F>& V, const Matrix<F>& g, const FlagSeq<F>& flag) {
  auto perm = rel_position(V, flag, transform_flag(g, flag));
  auto p = partition_of_w(perm, V.n(), V.kappa());
  if (!p) throw std::invalid_argument("canonical_basis: relative position is not of the form w_p");
  const Matrix<F> ginv = inverse_or_throw(g);
  CanonicalBasis<F> cb;
  cb.p = *p;
  cb.kappa = V.kappa();
  const int K = 2 * (*p)[0] + 1;
  std::vector<Vec<F>> E;
  int P = 0;
  for (size_t u = 0; u < p->size(); ++u) {
    const int pu = (*p)[u];
    Vec<F> v = detail::line_in(V, flag, P + 1, E);
    detail::Orbit<F> orb(g, ginv, v, K);
    F nr = V.form(v, orb.at(pu));
    if (nr == F(0)) throw std::invalid_argument("canonical_basis: normalization impossible");
    for (int i = 0; i < pu; ++i) E.push_back(orb.at(-pu + i));
    cb.raw.push_back(v);
    cb.norm.push_back(nr);
    P += pu;
  }
  if (V.kappa()) {
    Vec<F> v = detail::line_in(V, flag, P + 1, E);
    F nr = V.quad(v);
    if (nr == F(0)) throw std::invalid_argument("canonical_basis: Q vanishes on the last line");
    cb.raw.push_back(v);
    cb.norm.push_back(nr);
  }
  for (size_t r = 0; r < cb.raw.size(); ++r) {
    auto s = FieldTraits<F>::sqrt(cb.norm[r]);
    if (!s) continue;
    F inv = F(1) / *s;
    for (F& x : cb.raw[r]) x *= inv;
    cb.norm[r] = F(1);
  }
  return cb;
}

struct ClauseReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Every clause of the construction, checked exactly.
template <class F>
ClauseReport check_canonical_basis(const FormedSpace<F>& V, const Matrix<F>& g, const FlagSeq<F>& flag,
                                   const CanonicalBasis<F>& cb) {
  ClauseReport rep;
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
  const int nu = V.nu();
  const Partition& p = cb.p;
  const int sigma = static_cast<int>(p.size());
  const Matrix<F> ginv = inverse_or_throw(g);
  const int K = 2 * p[0] + 1;
  std::vector<detail::Orbit<F>> orb;
  for (int r = 0; r < sigma; ++r) orb.emplace_back(g, ginv, cb.raw[r], K);

  int P = 0;
  std::vector<Vec<F>> Z, E;
  for (int r = 0; r < sigma; ++r) {
    const int pr = p[r];
    const std::string tag = "r=" + std::to_string(r + 1);
    // (i)
    for (int i = 0; i <= pr; ++i) {
      auto S = Z;
      for (int k = 0; k < i; ++k) S.push_back(orb[r].at(k));
      Matrix<F> vm = flag.subspace(P + i);
      int rs = S.empty() ? 0 : rank(rows_of(S, nu));
      int both = S.empty() ? rank(vm) : sum_dim(rows_of(S, nu), vm);
      if (rs != P + i || both != P + i) fail("(i) " + tag + " i=" + std::to_string(i));
    }
    // (ii)
    for (int t = 0; t < r; ++t)
      for (int i = -p[t]; i < p[t]; ++i)
        if (V.form(orb[t].at(i), cb.raw[r]) != F(0)) fail("(ii) " + tag);
    // (iii)
    for (int i = -pr + 1; i < pr; ++i)
      if (V.form(cb.raw[r], orb[r].at(i)) != F(0)) fail("(iii) " + tag + " i=" + std::to_string(i));
    if (V.quad(cb.raw[r]) != F(0)) fail("(iii) Q " + tag);
    {
      auto vr = cb.normalized(r);
      auto gv = lift(matrix_power(g, pr)).apply(vr);
      Ext<F> s(0);
      Matrix<Ext<F>> G = lift(V.gram());
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j) s += vr[i] * G(i, j) * gv[j];
      if (s != Ext<F>(F(1))) fail("(iii) normalization " + tag);
    }
    for (int i = 0; i < pr; ++i) Z.push_back(orb[r].at(i));
    for (int i = 0; i < pr; ++i) E.push_back(orb[r].at(-pr + i));
    P += pr;
    // (iv)
    std::vector<Vec<F>> ind;
    for (int t = 0; t <= r; ++t)
      for (int i = 0; i < 2 * p[t]; ++i) ind.push_back(orb[t].at(-p[t] + i));
    if (rank(rows_of(ind, nu)) != static_cast<int>(ind.size())) fail("(iv) " + tag);
    // (v)
    auto Ep = perp(V, rows_of(E, nu));
    Matrix<F> vp = flag.subspace(P);
    if (P + static_cast<int>(Ep.size()) != nu || sum_dim(vp, rows_of(Ep, nu)) != nu) fail("(v) " + tag);
  }
  std::vector<Vec<F>> all;
  for (int t = 0; t < sigma; ++t)
    for (int j = -p[t]; j < p[t]; ++j) all.push_back(orb[t].at(j));
  if (cb.kappa) {
    const Vec<F>& w = cb.raw[sigma];
    for (int t = 0; t < sigma; ++t)
      for (int i = -p[t]; i < p[t]; ++i)
        if (V.form(orb[t].at(i), w) != F(0)) fail("(ii') t=" + std::to_string(t + 1));
    // Q(v) = Q(raw) / norm
    if (cb.norm[sigma] == F(0) || V.quad(w) != cb.norm[sigma]) fail("(iii')");
    all.push_back(w);
  }
  // (vi)
  if (static_cast<int>(all.size()) != nu || rank(rows_of(all, nu)) != nu) fail("(vi)");
  return rep;
}

struct XDecomposition {
  bool complements = true;  // V = X_r + X_r^perp for r <= sigma
  bool hypothesis = false;  // dim N^k V = Lambda_k for every k
  bool stable = true;       // each X_r is g-stable (checked when the hypothesis holds)
  bool orthogonal = true;   // (X_r, X_r') = 0 for r != r' (same)
};

template <class F>
std::vector<int> image_dims(const Matrix<F>& g) {
  const int nu = g.rows();
  Matrix<F> N = g - Matrix<F>::identity(nu);
  std::vector<int> dims{nu};
  Matrix<F> pw = Matrix<F>::identity(nu);
  for (int k = 1; k <= nu + 1; ++k) {
    pw = pw * N;
    dims.push_back(rank(pw));
  }
  return dims;
}

template <class F>
XDecomposition x_decomposition(const FormedSpace<F>& V, const Matrix<F>& g, const CanonicalBasis<F>& cb) {
  XDecomposition out;
  const int nu = V.nu();
  const Partition& p = cb.p;
  const int sigma = static_cast<int>(p.size());
  const Matrix<F> ginv = inverse_or_throw(g);
  std::vector<Matrix<F>> X;
  for (int r = 0; r < sigma; ++r) {
    detail::Orbit<F> o(g, ginv, cb.raw[r], 2 * p[r]);
    std::vector<Vec<F>> b;
    for (int i = 0; i < 2 * p[r]; ++i) b.push_back(o.at(-p[r] + i));
    X.push_back(rows_of(b, nu));
  }
  if (cb.kappa) X.push_back(rows_of(std::vector<Vec<F>>{cb.raw[sigma]}, nu));
  for (int r = 0; r < sigma; ++r) {
    auto xp = perp(V, X[r]);
    if (sum_dim(X[r], rows_of(xp, nu)) != nu || X[r].rows() + static_cast<int>(xp.size()) != nu)
      out.complements = false;
  }
  auto dims = image_dims(g);
  out.hypothesis = true;
  for (size_t k = 0; k < dims.size(); ++k)
    if (dims[k] != lambda_k(p, cb.kappa, static_cast<int>(k))) out.hypothesis = false;
  if (!out.hypothesis) return out;
  for (size_t r = 0; r < X.size(); ++r) {
    Matrix<F> img = (g * X[r].transpose()).transpose();
    if (sum_dim(X[r], img) != X[r].rows()) out.stable = false;
    for (size_t s = 0; s < X.size(); ++s) {
      if (s == r) continue;
      for (int i = 0; i < X[r].rows(); ++i)
        for (int j = 0; j < X[s].rows(); ++j)
          if (V.form(X[r].row(i), X[s].row(j)) != F(0)) out.orthogonal = false;
    }
  }
  return out;
}

struct LambdaReport {
  std::vector<int> dims;  // dim N^k V, k = 0..nu+1
  std::vector<int> lambda, lambda_prime, lambda_double_prime;
  bool prime_applies = false;   // odd characteristic and Q != 0
  bool lambda_ok = true;        // dims >= Lambda, equality at k = 0
  bool prime_ok = true;         // dims >= Lambda' (when it applies)
  bool identity_ok = true;      // Lambda'' = Lambda' (when (d) holds)
  bool identity_applies = false;
  bool ok() const { return lambda_ok && prime_ok && identity_ok; }
};

template <class F>
LambdaReport lambda_bounds_check(const FormedSpace<F>& V, const Matrix<F>& g, const Partition& p) {
  LambdaReport r;
  r.dims = image_dims(g);
  const int kappa = V.kappa();
  r.prime_applies = characteristic<F>() != 2 && V.kind() == FormKind::Quadratic;
  r.identity_applies = r.prime_applies && (kappa == 1 || p.size() % 2 == 0);
  for (size_t k = 0; k < r.dims.size(); ++k) {
    const int kk = static_cast<int>(k);
    r.lambda.push_back(lambda_k(p, kappa, kk));
    r.lambda_prime.push_back(lambda_prime_k(p, kappa, kk));
    r.lambda_double_prime.push_back(lambda_double_prime_k(p, kappa, kk));
    if (r.dims[k] < r.lambda[k]) r.lambda_ok = false;
    if (r.prime_applies && r.dims[k] < r.lambda_prime[k]) r.prime_ok = false;
    if (r.identity_applies && r.lambda_double_prime[k] != r.lambda_prime[k]) r.identity_ok = false;
  }
  if (r.dims[0] != r.lambda[0]) r.lambda_ok = false;
  return r;
}

}  // namespace weylphi
