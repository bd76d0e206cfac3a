#include <random>

#include "doctest.h"
#include "weylphi/isometry.hpp"
#include "weylphi/unipotent.hpp"

using namespace weylphi;

using Q = Rational;
using F2 = Fp<2>;
using F3 = Fp<3>;

namespace {

template <class F>
FormedSpace<F> sp(int n) {
  return FormedSpace<F>(n, 0, FormKind::Symplectic);
}
template <class F>
FormedSpace<F> so_odd(int n) {
  return FormedSpace<F>(n, 1, FormKind::Quadratic);
}

template <class F>
Matrix<F> random_isometry(const FormedSpace<F>& V, std::mt19937& rng, int len = 10) {
  std::uniform_int_distribution<int> gen(1, V.n()), coin(0, 1), val(-3, 3);
  Matrix<F> g = Matrix<F>::identity(V.nu());
  for (int k = 0; k < len; ++k) {
    int h = gen(rng);
    g = g * (coin(rng) ? sdot(V, h) : y_s(V, h, F(val(rng))));
  }
  return g;
}

template <class F>
Partition expected_jordan(const FormedSpace<F>& V, const Partition& p) {
  Partition out;
  if (V.kind() == FormKind::Symplectic || characteristic<F>() == 2) {
    for (int x : p) out.push_back(2 * x);
    if (V.kappa()) out.push_back(1);
    return out;
  }
  return gamma_from_partition(p, GroupDescriptor{Family::B, V.n(), 0}, 0).jordan;
}

template <class F>
void check_u_w_family(const FormedSpace<F>& V) {
  const auto flag = standard_flag(V);
  for (const auto& p : partitions_of(V.n())) {
    INFO(to_string(p));
    Matrix<F> u = build_u_w(V, p);
    REQUIRE(V.is_isometry(u));
    CHECK(jordan_type(u) == expected_jordan(V, p));
    auto w = w_from_partition(p, V.kappa());
    WeylGroup W(GroupDescriptor::make(Family::B, V.n(), V.kappa()));
    CHECK(rel_position(V, flag, transform_flag(u, flag)) == W.inverse(w).perm);
  }
}

template <class F>
bool equal_up_to_sign(const Vec<Ext<F>>& a, const Vec<Ext<F>>& b) {
  if (a == b) return true;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

// Same flag, different spanning rows: row i picks up multiples of rows < i.
template <class F>
FlagSeq<F> rebased(const FlagSeq<F>& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> val(-2, 2), scale(1, 3);
  Matrix<F> m = f.rows;
  for (int i = 0; i < m.rows(); ++i) {
    Vec<F> row = f.rows.row(i);
    F s(scale(rng));
    if (s == F(0)) s = F(1);
    for (auto& x : row) x *= s;
    for (int j = 0; j < i; ++j) {
      F c(val(rng));
      for (int k = 0; k < m.cols(); ++k) row[k] += c * f.rows(j, k);
    }
    m.set_row(i, row);
  }
  return {m};
}

template <class F>
void check_canonical_family(const FormedSpace<F>& V, std::mt19937& rng) {
  const auto flag = standard_flag(V);
  for (const auto& p : partitions_of(V.n())) {
    INFO(FieldTraits<F>::name(), " n=", V.n(), " kappa=", V.kappa(), " p=", to_string(p));
    Matrix<F> g = inverse_or_throw(build_u_w(V, p));
    auto cb = canonical_basis(V, g, flag);
    REQUIRE(cb.p == p);
    auto rep = check_canonical_basis(V, g, flag, cb);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());
    // the lines do not depend on the chosen rows of the flag
    auto again = canonical_basis(V, g, rebased(flag, rng));
    REQUIRE(again.raw.size() == cb.raw.size());
    for (size_t r = 0; r < cb.raw.size(); ++r) CHECK(equal_up_to_sign(cb.normalized(r), again.normalized(r)));
    // 3.1 with x_r = g^{-p_r} v_r
    Partition m;
    for (int x : p) m.push_back(2 * x);
    if (V.kappa()) m.push_back(1);
    CHECK(prefix_sums_bounded(m, jordan_type(g)));
    auto lam = lambda_bounds_check(V, g, p);
    CHECK(lam.ok());
    auto xd = x_decomposition(V, g, cb);
    CHECK(xd.complements);
    if (V.kind() == FormKind::Symplectic || characteristic<F>() == 2) CHECK(xd.hypothesis);
    if (xd.hypothesis) {
      CHECK(xd.stable);
      CHECK(xd.orthogonal);
    }
  }
}

}  // namespace

TEST_CASE("formed space") {
  auto V = so_odd<Q>(2);
  CHECK(V.nu() == 5);
  CHECK(V.tag(V.e(0)) == "e0");
  CHECK(V.tag(V.ep(1)) == "e'1");
  CHECK(V.form(V.unit(V.e(1)), V.unit(V.ep(1))) == 1);
  CHECK(V.form(V.unit(V.e(1)), V.unit(V.ep(2))) == 0);
  CHECK(V.form(V.unit(V.e(0)), V.unit(V.e(0))) == 2);
  CHECK(V.quad(V.unit(V.e(0))) == 1);
  CHECK(V.quad(V.unit(V.ep(2))) == 0);
  auto S = sp<Q>(2);
  for (int i = 0; i < S.nu(); ++i) CHECK(S.form(S.unit(i), S.unit(i)) == 0);
  CHECK(S.form(S.unit(S.ep(1)), S.unit(S.e(1))) == -1);
  CHECK_THROWS(FormedSpace<Q>(2, 1, FormKind::Symplectic));
  CHECK(is_valid_flag(V, standard_flag(V)));
}

TEST_CASE("generators are isometries in the right Bruhat cell") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-5, 5);
  auto S = sp<Q>(2);
  CHECK(y_s(S, 1, Q(0)) == Matrix<Q>::identity(4));
  for (int t = 0; t < 10; ++t) CHECK(S.is_isometry(y_s(S, 2, Q(val(rng)))));
  Matrix<Q> sn = sdot(S, 2);
  Vec<Q> minus_e2p = S.unit(S.ep(2));
  minus_e2p[S.ep(2)] = -1;
  CHECK(sn.apply(S.unit(S.e(2))) == minus_e2p);
  CHECK(sn.apply(S.unit(S.ep(2))) == S.unit(S.e(2)));

  for (int n = 2; n <= 4; ++n) {
    auto Vs = sp<Q>(n);
    auto Vo = so_odd<Q>(n);
    auto V2 = so_odd<F2>(n);
    WeylGroup Wc(GroupDescriptor::make(Family::C, n));
    WeylGroup Wb(GroupDescriptor::make(Family::B, n, 1));
    for (int h = 1; h <= n; ++h) {
      for (int a : {-2, 1, 3}) {
        CHECK(Vs.is_isometry(y_s(Vs, h, Q(a))));
        CHECK(Vo.is_isometry(y_s(Vo, h, Q(a))));
        CHECK(V2.is_isometry(y_s(V2, h, F2(a))));
      }
      CHECK(Vs.is_isometry(sdot(Vs, h)));
      CHECK(Vo.is_isometry(sdot(Vo, h)));
      CHECK(rel_position(Vs, standard_flag(Vs), transform_flag(sdot(Vs, h), standard_flag(Vs))) ==
            Wc.generator(h).perm);
      CHECK(rel_position(Vo, standard_flag(Vo), transform_flag(sdot(Vo, h), standard_flag(Vo))) ==
            Wb.generator(h).perm);
    }
  }
}

TEST_CASE("relative position") {
  auto S = sp<Q>(2);
  auto f = standard_flag(S);
  CHECK(rel_position(S, f, f) == std::vector<int>{1, 2, 3, 4});
  CHECK(rel_position(S, f, transform_flag(sdot(S, 1), f)) == std::vector<int>{2, 1, 4, 3});
  // w = w_(2)^{-1} in Sp_4
  WeylGroup W(GroupDescriptor::make(Family::C, 2));
  auto w = W.inverse(w_from_partition({2}, 0));
  CHECK(rel_position(S, f, transform_flag(build_u_w(S, Partition{2}), f)) == w.perm);
  // V_2 = span(e1, e'1) is not isotropic
  Matrix<Q> bad = Matrix<Q>::from_rows({S.unit(S.e(1)), S.unit(S.ep(1)), S.unit(S.e(2)), S.unit(S.ep(2))});
  CHECK_FALSE(is_valid_flag(S, FlagSeq<Q>{bad}));
  CHECK_THROWS(rel_position(S, f, FlagSeq<Q>{bad}));
}

TEST_CASE("relative position is constant on orbits") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n) {
    auto V = so_odd<Q>(n);
    auto f = standard_flag(V);
    for (const auto& p : partitions_of(n)) {
      auto f2 = transform_flag(build_u_w(V, p), f);
      auto before = rel_position(V, f, f2);
      for (int t = 0; t < 3; ++t) {
        Matrix<Q> h = random_isometry(V, rng);
        REQUIRE(V.is_isometry(h));
        CHECK(rel_position(V, transform_flag(h, f), transform_flag(h, f2)) == before);
      }
    }
  }
}

TEST_CASE("u_w examples") {
  CHECK(jordan_type(build_u_w(sp<Q>(2), Partition{2})) == Partition{4});
  CHECK(jordan_type(build_u_w(sp<Q>(2), Partition{1, 1})) == Partition{2, 2});
  CHECK(jordan_type(build_u_w(so_odd<F2>(3), Partition{2, 1})) == Partition{4, 2, 1});
  CHECK(jordan_type(build_u_w(so_odd<Q>(3), Partition{2, 1})) == Partition{5, 1, 1});
  auto S = sp<Q>(2);
  auto dec = decomposition_for(S, Partition{2});
  CHECK_THROWS(build_u_w(S, dec, std::vector<Q>{Q(0)}));
  CHECK_THROWS(build_u_w(S, dec, std::vector<Q>{Q(1), Q(1), Q(1)}));
}

TEST_CASE("jordan_type") {
  CHECK(jordan_type(Matrix<Q>::identity(5)) == Partition{1, 1, 1, 1, 1});
  Matrix<Q> j = Matrix<Q>::identity(4);
  for (int i = 0; i < 3; ++i) j(i, i + 1) = 1;
  CHECK(jordan_type(j) == Partition{4});
  CHECK_THROWS(jordan_type(Matrix<Q>::identity(3).scaled(Q(2))));
}

TEST_CASE("u_w Jordan types, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    check_u_w_family(sp<Q>(n));
    check_u_w_family(so_odd<Q>(n));
    check_u_w_family(so_odd<F2>(n));
    check_u_w_family(sp<F2>(n));
  }
}

TEST_CASE("random nonzero c over F_1009 gives the same Jordan types") {
  std::mt19937 rng(1009);
  std::uniform_int_distribution<int> val(1, 1008);
  using F = Fp<1009>;
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : partitions_of(n))
      for (const auto& V : {sp<F>(n), so_odd<F>(n)}) {
        auto dec = decomposition_for(V, p);
        std::vector<F> c;
        for (size_t k = 0; k < dec.blocks.size(); ++k) c.push_back(F(val(rng)));
        Matrix<F> u = build_u_w(V, dec, c);
        CHECK(V.is_isometry(u));
        CHECK(jordan_type(u) == expected_jordan(V, p));
      }
}

TEST_CASE("explicit maps agree with the product construction") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : partitions_of(n)) {
      INFO(n, " ", to_string(p));
      for (const auto& V : {sp<Q>(n), so_odd<Q>(n)}) {
        Matrix<Q> o = oracle_u_w_inverse(V, p);
        CHECK(V.is_isometry(o));
        CHECK(jordan_type(o) == jordan_type(build_u_w(V, p)));
        auto dec = decomposition_for(V, p);
        std::vector<Q> minus(dec.blocks.size(), Q(-1));
        CHECK(inverse_or_throw(build_u_w(V, dec, minus)) == o);
      }
      auto V2 = so_odd<F2>(n);
      CHECK(inverse_or_throw(build_u_w(V2, p)) == oracle_u_w_inverse(V2, p));
    }
}

TEST_CASE("restriction to the even orthogonal group") {
  auto r = so_even_restriction(so_odd<Q>(4), build_u_w(so_odd<Q>(4), Partition{2, 2}), Partition{2, 2});
  CHECK(r.jordan == Partition{5, 3});
  CHECK(r.nondegenerate);
  auto r2 = so_even_restriction(so_odd<Q>(2), build_u_w(so_odd<Q>(2), Partition{1, 1}), Partition{1, 1});
  CHECK(r2.jordan == Partition{3, 1});
  auto r3 = so_even_restriction(so_odd<F2>(4), build_u_w(so_odd<F2>(4), Partition{2, 2}), Partition{2, 2});
  CHECK(r3.jordan == Partition{4, 4});
  CHECK_THROWS(so_even_restriction(so_odd<Q>(3), build_u_w(so_odd<Q>(3), Partition{3}), Partition{3}));

  for (int n = 2; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      if (p.size() % 2) continue;
      INFO(n, " ", to_string(p));
      auto V = so_odd<Q>(n);
      auto dec = decomposition_for(V, p);
      // with the scalars of the explicit maps Xi itself is fixed
      auto rq = so_even_restriction(V, build_u_w(V, dec, std::vector<Q>(dec.blocks.size(), Q(-1))), p);
      CHECK(rq.how == "Xi");
      CHECK(V.quad(xi_vector(V, p)) == 1);
      CHECK(rq.jordan == gamma_from_partition(p, GroupDescriptor{Family::D, n, 0}, 0).jordan);
      CHECK(rq.nondegenerate);
      auto r1 = so_even_restriction(V, build_u_w(V, p), p);
      CHECK(r1.jordan == rq.jordan);
      auto V3 = so_odd<F3>(n);
      CHECK(so_even_restriction(V3, build_u_w(V3, p), p).jordan == rq.jordan);
      auto W = so_odd<F2>(n);
      auto rw = so_even_restriction(W, build_u_w(W, p), p);
      Partition twice;
      for (int x : p) twice.push_back(2 * x);
      CHECK(rw.jordan == twice);
      CHECK(rw.nondegenerate);
      // span(e_i, e'_i) itself is not stable; the quotient by e_0 is used
      CHECK_FALSE(rw.stable);
    }
}

TEST_CASE("canonical basis examples") {
  {
    auto S = sp<Q>(2);
    Matrix<Q> g = inverse_or_throw(build_u_w(S, Partition{2}));
    auto cb = canonical_basis(S, g, standard_flag(S));
    REQUIRE(cb.raw.size() == 1);
    auto v = cb.normalized(0);
    auto gv = lift(matrix_power(g, 2)).apply(v);
    Ext<Q> s(0);
    auto G = lift(S.gram());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += v[i] * G(i, j) * gv[j];
    CHECK(s == Ext<Q>(Q(1)));
  }
  {
    auto S = sp<Q>(2);
    Matrix<Q> g = inverse_or_throw(build_u_w(S, Partition{1, 1}));
    auto cb = canonical_basis(S, g, standard_flag(S));
    REQUIRE(cb.raw.size() == 2);
    CHECK(S.form(cb.raw[0], cb.raw[1]) == 0);
    CHECK(S.form(inverse_or_throw(g).apply(cb.raw[0]), cb.raw[1]) == 0);
  }
  {
    auto V = so_odd<Q>(3);
    Matrix<Q> g = inverse_or_throw(build_u_w(V, Partition{2, 1}));
    auto cb = canonical_basis(V, g, standard_flag(V));
    REQUIRE(cb.raw.size() == 3);
    CHECK(cb.norm[2] == 1);
    CHECK(V.quad(cb.raw[2]) == 1);
  }
  // not of the form w_p
  auto S = sp<Q>(2);
  CHECK_THROWS(canonical_basis(S, Matrix<Q>::identity(4), standard_flag(S)));
}

TEST_CASE("canonical basis clauses") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 4; ++n) {
    check_canonical_family(sp<Q>(n), rng);
    check_canonical_family(so_odd<Q>(n), rng);
    check_canonical_family(so_odd<F2>(n), rng);
    check_canonical_family(so_odd<F3>(n), rng);
    check_canonical_family(sp<F2>(n), rng);
  }
}

TEST_CASE("canonical basis after conjugating by an isometry") {
  std::mt19937 rng(17);
  auto V = so_odd<Q>(3);
  for (const auto& p : partitions_of(3)) {
    Matrix<Q> g = inverse_or_throw(build_u_w(V, p));
    Matrix<Q> h = random_isometry(V, rng);
    Matrix<Q> hg = h * g * inverse_or_throw(h);
    auto f = transform_flag(h, standard_flag(V));
    auto cb = canonical_basis(V, hg, f);
    CHECK(check_canonical_basis(V, hg, f, cb).ok());
  }
}

TEST_CASE("rank bounds") {
  auto V = so_odd<Q>(3);
  auto rep = lambda_bounds_check(V, inverse_or_throw(build_u_w(V, Partition{2, 1})), Partition{2, 1});
  CHECK(rep.dims[0] == 7);
  CHECK(rep.lambda[0] == 7);
  CHECK(rep.prime_applies);
  CHECK(rep.ok());
  // the rank pattern of u_w is the one of its Jordan type
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : partitions_of(n))
      for (const auto& W : {so_odd<Q>(n), sp<Q>(n)}) {
        Matrix<Q> g = build_u_w(W, p);
        auto r = lambda_bounds_check(W, g, p);
        CHECK(r.ok());
        auto jt = jordan_type(g);
        for (size_t k = 0; k < r.dims.size(); ++k) {
          int s = 0;
          for (int x : jt) s += std::max(x - static_cast<int>(k), 0);
          CHECK(r.dims[k] == s);
        }
      }
}

TEST_CASE("Lambda'' = Lambda'") {
  CHECK(pi_values({2, 1}, 1) == std::vector<int>{5, 1, 1});
  CHECK(pi_values({2, 2}, 0) == std::vector<int>{5, 3, 0});
  CHECK(lambda_prime_k({2, 1}, 1, 4) == lambda_k({2, 1}, 1, 4) + 1);
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : partitions_of(n))
      for (int kappa : {0, 1}) {
        if (kappa == 0 && p.size() % 2) continue;
        for (int k = 0; k <= 2 * p[0] + 2; ++k)
          REQUIRE(lambda_double_prime_k(p, kappa, k) == lambda_prime_k(p, kappa, k));
      }
  CHECK(lambda_k({3, 1}, 0, 0) == 8);
}

TEST_CASE("prefix sums") {
  CHECK(prefix_sums_bounded({2, 2}, {4}));
  CHECK_FALSE(prefix_sums_bounded({4}, {2, 2}));
  CHECK(prefix_sums_bounded({3, 1, 1}, {3, 2}));
}
