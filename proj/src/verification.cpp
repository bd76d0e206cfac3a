#include "weylphi/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"
#include "weylphi/isometry.hpp"
#include "weylphi/phi.hpp"
#include "weylphi/unipotent.hpp"

namespace weylphi {

int SuiteResult::count(const std::string& status) const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [&](const CaseRecord& c) { return c.status == status; }));
}

void SuiteResult::append(SuiteResult other) {
  for (auto& c : other.cases) cases.push_back(std::move(c));
}

namespace {

using Q = Rational;
using F2 = Fp<2>;

struct Recorder {
  std::string suite;
  SuiteResult out;

  void pass(const std::string& name, const std::string& witness = "") { out.cases.push_back({suite, name, "pass", witness, ""}); }
  void fail(const std::string& name, const std::string& why, const std::string& witness = "") {
    out.cases.push_back({suite, name, "fail", witness, why});
  }
  void check(bool ok, const std::string& name, const std::string& witness, const std::string& why) {
    ok ? pass(name, witness) : fail(name, why, witness);
  }
  // runs body, turning an escaping exception into a failed case
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(name, e.what());
    }
  }
};

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string labels(const std::vector<UnipotentLabel>& v) {
  std::vector<std::string> s;
  for (const auto& u : v) s.push_back(u.to_string());
  return "{" + join(s, ", ") + "}";
}

// 2 sum_i i p_i over 0-based i, plus n; minus sigma in type D
int letter_formula(const Partition& p, Family f) {
  int s = partition_size(p);
  for (size_t i = 0; i < p.size(); ++i) s += 2 * static_cast<int>(i) * p[i];
  return f == Family::D ? s - static_cast<int>(p.size()) : s;
}

Partition sorted_parts(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

Partition doubled(const Partition& p, bool extra_one) {
  Partition out;
  for (int x : p) out.push_back(2 * x);
  if (extra_one) out.push_back(1);
  return out;
}

Partition psi_shifted(const Partition& p, bool extra_one) {
  auto ps = psi(p);
  std::vector<int> v;
  for (size_t i = 0; i < p.size(); ++i) v.push_back(2 * p[i] + ps[i]);
  if (extra_one) v.push_back(1);
  return sorted_parts(v);
}

template <class F>
FormedSpace<F> space(int n, bool symplectic) {
  return symplectic ? FormedSpace<F>(n, 0, FormKind::Symplectic) : FormedSpace<F>(n, 1, FormKind::Quadratic);
}

template <class F>
std::string space_name(const FormedSpace<F>& V) {
  return (V.kind() == FormKind::Symplectic ? "Sp" : "SO") + std::to_string(V.nu()) + "(" + FieldTraits<F>::name() + ")";
}

template <class F>
Matrix<F> restricted_gram(const FormedSpace<F>& V, const Restriction<F>& r) {
  const int m = r.basis.rows();
  Matrix<F> g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = V.form(r.basis.row(i), r.basis.row(j));
  return g;
}

template <class F>
void jordan_instance(Recorder& rec, const FormedSpace<F>& V, const Partition& p, const Partition& expected) {
  const std::string name = space_name(V) + " p=" + to_string(p);
  rec.guarded(name, [&] {
    Matrix<F> u = build_u_w(V, p);
    if (!V.is_isometry(u)) return rec.fail(name, "u_w is not an isometry");
    auto got = jordan_type(u);
    rec.check(got == expected, name, "jordan " + to_string(got), "expected " + to_string(expected) + ", got " + to_string(got));
  });
}

template <class F>
void restriction_instance(Recorder& rec, int n, const Partition& p, const Partition& expected) {
  auto V = space<F>(n, false);
  const std::string name = "SO" + std::to_string(2 * n) + "(" + FieldTraits<F>::name() + ") p=" + to_string(p);
  rec.guarded(name, [&] {
    auto r = so_even_restriction(V, build_u_w(V, p), p);
    if (!r.nondegenerate) return rec.fail(name, "form degenerate on the complement");
    rec.check(r.jordan == expected, name, "jordan " + to_string(r.jordan) + " via " + r.how,
              "expected " + to_string(expected) + ", got " + to_string(r.jordan));
  });
}

template <class F>
void canonical_instance(Recorder& rec, const FormedSpace<F>& V, const Partition& p) {
  const std::string name = space_name(V) + " p=" + to_string(p);
  rec.guarded(name, [&] {
    const auto flag = standard_flag(V);
    Matrix<F> g = inverse_or_throw(build_u_w(V, p));
    auto cb = canonical_basis(V, g, flag);
    if (cb.p != p) return rec.fail(name, "recovered partition " + to_string(cb.p));
    auto clauses = check_canonical_basis(V, g, flag, cb);
    if (!clauses.ok()) return rec.fail(name, clauses.failures.front());
    auto lam = lambda_bounds_check(V, g, p);
    if (!lam.lambda_ok) return rec.fail(name, "dim N^k V below Lambda");
    if (!lam.prime_ok) return rec.fail(name, "dim N^k V below Lambda'");
    if (!lam.identity_ok) return rec.fail(name, "Lambda'' differs from Lambda'");
    std::vector<std::string> dims;
    for (int d : lam.dims) dims.push_back(std::to_string(d));
    rec.pass(name, "clauses ok; dim N^k V = " + join(dims, ","));
  });
}

template <class F>
void conjecture_instance(Recorder& rec, const std::string& name, const Matrix<F>& g, const Matrix<F>& gram,
                         const ClassLabel& c, const WeylGroup& W) {
  rec.guarded(name, [&] {
    const int charp = characteristic<F>();
    auto got = form_label(g, gram, c.family);
    auto phi = phi_elliptic(c, W, charp);
    const std::string witness = "u_w " + got.to_string() + ", Phi " + phi.to_string();
    if (label_matches(phi, got))
      rec.pass(name, witness);
    else
      rec.out.cases.push_back({rec.suite, name, "report", witness, "class of u_w differs from Phi(C)"});
  });
}

ClassLabel elliptic_label(Family f, const Partition& p) {
  ClassLabel c;
  c.family = f;
  c.beta = p;
  return c;
}

ClassLabel coxeter_class(const WeylGroup& W) {
  std::vector<int> word(W.rank());
  std::iota(word.begin(), word.end(), 1);
  return W.class_of(W.from_word(word));
}

std::vector<ClassLabel> elliptic_classes(const WeylGroup& W) {
  std::vector<ClassLabel> out;
  for (const auto& c : all_class_labels(W))
    if (is_elliptic(c, W)) out.push_back(c);
  return out;
}

bool isometry_kind(FqKind k) { return k != FqKind::SL3; }

std::string group_tag(FqKind k, int q) { return fq_kind_name(k) + "(F" + std::to_string(q) + ")"; }

std::string met_string(const std::map<UnipotentLabel, long long>& m) {
  std::vector<std::string> s;
  for (const auto& [u, n] : m) s.push_back(u.to_string() + " x" + std::to_string(n));
  return "{" + join(s, ", ") + "}";
}

}  // namespace

SuiteResult suite_excellent(int max_n) {
  Recorder rec{"excellent", {}};
  for (int n = 2; n <= max_n; ++n) {
    WeylGroup C(GroupDescriptor::make(Family::C, n)), B(GroupDescriptor::make(Family::B, n, 1)),
        D(GroupDescriptor::make(Family::D, n));
    for (const auto& p : partitions_of(n)) {
      auto one = [&](const WeylGroup& W, Family f, char variant, int kappa) {
        const std::string name = family_name(f) + std::to_string(n) + (f == Family::D ? "" : std::string(" ") + variant) +
                                 " p=" + to_string(p);
        rec.guarded(name, [&] {
          auto dec = excellent_decomposition(p, f, variant);
          auto target = W.inverse(w_from_partition(p, kappa));
          auto prod = W.from_word(dec.word());
          const int expect = letter_formula(p, f);
          std::string bad;
          for (const auto& b : dec.blocks)
            if (b.size() % 2 == 0 || !std::equal(b.begin(), b.end(), b.rbegin())) bad = "block is not an odd palindrome";
          if (static_cast<int>(dec.blocks.size()) != n) bad = "block count differs from the rank";
          if (!(prod == target)) bad = "product differs from w_p^-1";
          if (dec.letters() != expect) bad = std::to_string(dec.letters()) + " letters, expected " + std::to_string(expect);
          if (W.length(prod) != dec.letters()) bad = "word is not reduced";
          rec.check(bad.empty(), name, dec.to_string(), bad);
        });
      };
      one(C, Family::C, 'a', 0);
      one(B, Family::B, 'a', 1);
      if (p.size() % 2 == 0) {
        one(C, Family::C, 'b', 0);
        one(D, Family::D, 'b', 0);
      }
    }
  }
  return rec.out;
}

SuiteResult suite_jordan(int max_n) {
  Recorder rec{"jordan", {}};
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : partitions_of(n)) {
      const bool even = p.size() % 2 == 0;
      jordan_instance(rec, space<Q>(n, true), p, doubled(p, false));
      jordan_instance(rec, space<F2>(n, false), p, doubled(p, true));
      jordan_instance(rec, space<Q>(n, false), p, psi_shifted(p, even));
      if (even) {
        restriction_instance<Q>(rec, n, p, psi_shifted(p, false));
        restriction_instance<F2>(rec, n, p, doubled(p, false));
      }
    }
  return rec.out;
}

SuiteResult suite_identities(int psi_n, int inj_n, int xy_n) {
  Recorder rec{"identities", {}};
  for (int n = 1; n <= psi_n; ++n) {
    std::string bad;
    int count = 0;
    for (const auto& p : partitions_of(n)) {
      auto v = psi(p);
      ++count;
      if (v.size() != p.size() || v[0] != 1) bad = to_string(p) + ": psi(1) != 1";
      for (size_t a = 1; a + 1 < v.size() && bad.empty(); a += 2)
        if (v[a] + v[a + 1] != 0) bad = to_string(p) + ": psi(2a) + psi(2a+1) != 0";
      if (bad.empty() && std::accumulate(v.begin(), v.end(), 0) != kappa_sigma(p)) bad = to_string(p) + ": sum psi != kappa_sigma";
      if (!bad.empty()) break;
    }
    rec.check(bad.empty(), "psi n=" + std::to_string(n), std::to_string(count) + " partitions", bad);
  }
  for (int n = 1; n <= inj_n; ++n) {
    std::set<Partition> plus, rest;
    std::string bad;
    for (const auto& p : partitions_of(n)) {
      auto v = phi_small_injection(p);
      auto ps = psi(p);
      for (size_t i = 0; i + 1 < p.size(); ++i)
        if (2 * p[i] + ps[i] < 2 * p[i + 1] + ps[i + 1]) bad = to_string(p) + ": 2p_i + psi(i) not monotone";
      if (partition_size(v) != 2 * n + 1) bad = to_string(p) + ": image has the wrong size";
      if (!(p.size() % 2 == 0 ? plus : rest).insert(v).second) bad = to_string(p) + ": image " + to_string(v) + " repeated";
      if (!bad.empty()) break;
    }
    rec.check(bad.empty(), "phi injective n=" + std::to_string(n),
              std::to_string(plus.size()) + " + " + std::to_string(rest.size()) + " distinct images", bad);
  }
  for (int n = 1; n <= xy_n; ++n) {
    std::string bad;
    for (const auto& p : partitions_of(n)) {
      auto r = check_X_equals_2Y(p);
      if (!r.ok()) {
        bad = to_string(p) + ": X=" + std::to_string(r.X) + " Y=" + std::to_string(r.Y);
        break;
      }
    }
    rec.check(bad.empty(), "X=2Y n=" + std::to_string(n), "", bad);
  }
  for (int n = 1; n <= inj_n; ++n) {
    std::string bad;
    for (const auto& p : partitions_of(n)) {
      const int d = centralizer_dim_typeC_p2(doubled(p, false));
      const int dc = letter_formula(p, Family::C);
      if (d != dc) {
        bad = to_string(p) + ": d'=" + std::to_string(d) + " d_C=" + std::to_string(dc);
        break;
      }
    }
    rec.check(bad.empty(), "d'=d_C n=" + std::to_string(n), "", bad);
  }
  return rec.out;
}

SuiteResult suite_tables(bool enumerate) {
  Recorder rec{"tables", {}};
  const std::vector<std::pair<Family, size_t>> counts{
      {Family::G2, 3}, {Family::F4, 9}, {Family::E6, 5}, {Family::E7, 12}, {Family::E8, 30}};
  for (const auto& [f, expect] : counts) {
    const auto& t = exceptional_table(f);
    rec.check(t.size() == expect, family_name(f) + " rows", std::to_string(t.size()) + " rows",
              "expected " + std::to_string(expect) + " rows, found " + std::to_string(t.size()));
    std::set<std::string> keys;
    std::string dup;
    for (const auto& r : t)
      if (!keys.insert(r.sig_key + r.disc).second) dup = r.sig_key + r.disc;
    rec.check(dup.empty(), family_name(f) + " keys", std::to_string(keys.size()) + " distinct", "duplicate key " + dup);
  }
  if (!enumerate) return rec.out;
  for (Family f : {Family::G2, Family::F4, Family::E6}) {
    rec.guarded(family_name(f) + " enumeration", [&, f = f] {
      WeylGroup W(GroupDescriptor::make(f));
      int elliptic = 0;
      for (const auto& c : W.enumeration().classes) elliptic += c.elliptic;
      const int expect = static_cast<int>(exceptional_table(f).size());
      rec.check(elliptic == expect, family_name(f) + " enumeration",
                std::to_string(W.enumeration().size()) + " elements, " + std::to_string(elliptic) + " elliptic classes",
                "enumeration finds " + std::to_string(elliptic) + " elliptic classes, table has " + std::to_string(expect));
      std::set<std::string> hit;
      for (const auto& blocks : exceptional_excellent_words(f)) {
        ExcellentDecomposition dec{blocks};
        const std::string name = family_name(f) + " " + dec.to_string();
        rec.guarded(name, [&] {
          auto x = W.from_word(dec.word());
          auto v = validate_excellent(dec, x, W);
          auto c = W.class_of(x);
          const auto& row = exceptional_lookup(f, c.sig, c.disc);
          std::string bad;
          if (!v.ok) bad = v.failures.front();
          if (W.length(x) != row.d) bad = "length " + std::to_string(W.length(x)) + ", row has d=" + std::to_string(row.d);
          if (!(W.char_poly(x) == row.signature())) bad = "signature " + W.char_poly(x).key() + ", row has " + row.sig_key;
          hit.insert(row.sig_key + row.disc);
          rec.check(bad.empty(), name, "length " + std::to_string(row.d) + ", row " + row.sig_key + row.disc + " -> " + row.name, bad);
        });
      }
      rec.check(hit.size() == exceptional_table(f).size(), family_name(f) + " words cover the table",
                std::to_string(hit.size()) + " rows hit", "only " + std::to_string(hit.size()) + " rows hit");
    });
  }
  return rec.out;
}

SuiteResult suite_fq_coxeter(FqKind k, int q) {
  Recorder rec{"fq", {}};
  const std::string name = group_tag(k, q) + " Coxeter cell";
  rec.guarded(name, [&] {
    WeylGroup W(fq_weyl_descriptor(k));
    auto census = enumerate_group(k, q);
    auto regular = std::max_element(census.unipotent_classes.begin(), census.unipotent_classes.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; })
                       ->first;
    auto counts = cell_unipotent_counts(k, q, cell_representative(coxeter_class(W), W));
    const bool ok = counts.size() == 1 && counts.begin()->first.to_string() == regular;
    rec.check(ok, name, "met " + met_string(counts) + ", regular " + regular, "the Coxeter cell meets " + met_string(counts));
  });
  return rec.out;
}

SuiteResult suite_fq_regular(FqKind k, int q) {
  Recorder rec{"fq", {}};
  const std::string name = group_tag(k, q) + " regular class in every cell";
  rec.guarded(name, [&] {
    WeylGroup W(fq_weyl_descriptor(k));
    auto census = enumerate_group(k, q);
    auto regular = std::max_element(census.unipotent_classes.begin(), census.unipotent_classes.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; })
                       ->first;
    const auto& e = W.enumeration();
    for (int i = 0; i < e.size(); ++i) {
      auto counts = cell_unipotent_counts(k, q, W.element(i));
      bool found = false;
      for (const auto& [u, n] : counts) found = found || u.to_string() == regular;
      if (!found) return rec.fail(name, "the cell of " + e.keys[i] + " misses " + regular);
    }
    rec.pass(name, std::to_string(e.size()) + " cells, regular " + regular);
  });
  return rec.out;
}

SuiteResult suite_fq_minimal(FqKind k, int q) {
  Recorder rec{"fq", {}};
  WeylGroup W(fq_weyl_descriptor(k));
  for (const auto& c : all_class_labels(W)) {
    const std::string name = group_tag(k, q) + " C=" + c.to_string();
    rec.guarded(name, [&] {
      auto r = minimal_class(k, q, c);
      const std::string witness = "met " + labels(r.met) + ", minimal " + labels(r.minimal) + ", phi_full " + r.expected.to_string();
      if (!r.ok()) return rec.fail(name, "minimal " + labels(r.minimal) + " vs phi_full " + r.expected.to_string(), witness);
      if (isometry_kind(k) && !dsv_independent_of_w(k, q, c)) return rec.fail(name, "membership depends on w in C_min", witness);
      rec.pass(name, witness);
    });
  }
  return rec.out;
}

SuiteResult suite_fq_bad_char(FqKind k, int q) {
  Recorder rec{"fq", {}};
  WeylGroup W(fq_weyl_descriptor(k));
  for (const auto& c : elliptic_classes(W)) {
    const std::string name = group_tag(k, q) + " C=" + c.to_string() + " bad characteristic";
    rec.guarded(name, [&] {
      auto phi = phi_full(c, W, q);
      auto counts = cell_unipotent_counts(k, q, cell_representative(c, W));
      rec.check(bad_char_membership(k, q, c), name, "Phi " + phi.to_string() + ", met " + met_string(counts),
                "the cell misses " + phi.to_string());
    });
  }
  return rec.out;
}

SuiteResult suite_fq(FqKind k, int q) {
  SuiteResult out;
  if (q % 2) out.append(suite_fq_minimal(k, q));
  if (q == 2 && isometry_kind(k)) out.append(suite_fq_bad_char(k, q));
  out.append(suite_fq_coxeter(k, q));
  out.append(suite_fq_regular(k, q));
  return out;
}

SuiteResult suite_isotropy(FqKind k, int q) {
  Recorder rec{"isotropy", {}};
  WeylGroup W(fq_weyl_descriptor(k));
  for (const auto& c : elliptic_classes(W)) {
    const std::string name = group_tag(k, q) + " C=" + c.to_string();
    rec.guarded(name, [&] {
      auto r = isotropy_check(k, q, c);
      const std::string witness = std::to_string(r.samples) + " pairs (exhaustive), max order " + std::to_string(r.max_order) +
                                  ", bound " + std::to_string(r.bound);
      rec.check(r.ok(), name, witness, r.counterexample.empty() ? "bound violated" : r.counterexample);
    });
  }
  return rec.out;
}

SuiteResult suite_c_small(FqKind k) {
  Recorder rec{"c-small", {}};
  WeylGroup W(fq_weyl_descriptor(k));
  for (const auto& c : elliptic_classes(W)) {
    const std::string name = fq_kind_name(k) + " C=" + c.to_string();
    rec.guarded(name, [&] {
      auto r = c_small_check(k, c);
      std::vector<std::string> rows;
      bool inconclusive = false;
      for (const auto& row : r.rows) {
        std::vector<std::string> z;
        for (auto x : row.centralizer) z.push_back(std::to_string(x));
        rows.push_back(row.label + (row.is_phi ? "[Phi]" : "") + " |Z|=" + join(z, "/") + " deg " + std::to_string(row.degree) +
                       (row.conclusive ? "" : "?"));
        inconclusive = inconclusive || !row.conclusive;
      }
      const std::string witness = "d_C=" + std::to_string(r.d_C) + "; " + join(rows, "; ");
      if (!r.ok()) return rec.fail(name, "degree bound violated or not sharp at Phi(C)", witness);
      rec.out.cases.push_back({rec.suite, name, inconclusive ? "inconclusive" : "pass", witness, ""});
    });
  }
  return rec.out;
}

SuiteResult suite_canonical(int max_n) {
  Recorder rec{"canonical", {}};
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : partitions_of(n)) {
      canonical_instance(rec, space<Q>(n, true), p);
      canonical_instance(rec, space<Q>(n, false), p);
      canonical_instance(rec, space<F2>(n, false), p);
    }
  return rec.out;
}

SuiteResult suite_canonical_fq(FqKind k, int q) {
  Recorder rec{"canonical", {}};
  WeylGroup W(fq_weyl_descriptor(k));
  for (const auto& c : elliptic_classes(W)) {
    const std::string name = group_tag(k, q) + " cell of C=" + c.to_string();
    rec.guarded(name, [&] {
      auto s = canonical_basis_sweep(k, q, c);
      rec.check(s.ok(), name, std::to_string(s.pairs) + " pairs, " + std::to_string(s.unipotent) + " unipotent",
                s.first_failure);
    });
  }
  return rec.out;
}

SuiteResult suite_conjecture(int max_n) {
  Recorder rec{"conjecture", {}};
  for (int n = 2; n <= max_n; ++n) {
    WeylGroup C(GroupDescriptor::make(Family::C, n)), B(GroupDescriptor::make(Family::B, n, 1)),
        D(GroupDescriptor::make(Family::D, n));
    for (const auto& p : partitions_of(n)) {
      auto sp = [&](auto field) {
        using F = decltype(field);
        auto V = space<F>(n, true);
        conjecture_instance(rec, space_name(V) + " p=" + to_string(p), build_u_w(V, p), V.gram(), elliptic_label(Family::C, p), C);
      };
      auto so = [&](auto field) {
        using F = decltype(field);
        auto V = space<F>(n, false);
        Matrix<F> u = build_u_w(V, p);
        conjecture_instance(rec, space_name(V) + " p=" + to_string(p), u, V.gram(), elliptic_label(Family::B, p), B);
        if (p.size() % 2) return;
        const std::string name = "SO" + std::to_string(2 * n) + "(" + FieldTraits<F>::name() + ") p=" + to_string(p);
        rec.guarded(name, [&] {
          auto r = so_even_restriction(V, u, p);
          conjecture_instance(rec, name, r.action, restricted_gram(V, r), elliptic_label(Family::D, p), D);
        });
      };
      sp(Q{});
      sp(F2{});
      so(Q{});
      so(F2{});
    }
  }
  return rec.out;
}

const std::vector<std::string> kSuiteNames{"jordan",    "identities", "tables",    "fq",        "isotropy",
                                           "excellent", "c-small",    "canonical", "conjecture"};

SuiteResult run_suite(const std::string& suite, std::optional<int> max_n, FqKind k, int q) {
  if (suite == "jordan") return suite_jordan(max_n.value_or(6));
  if (suite == "identities") return max_n ? suite_identities(*max_n, *max_n, *max_n) : suite_identities();
  if (suite == "tables") return suite_tables(true);
  if (suite == "fq") return suite_fq(k, q);
  if (suite == "isotropy") return suite_isotropy(k, q);
  if (suite == "excellent") return suite_excellent(max_n.value_or(9));
  if (suite == "c-small") return suite_c_small(k);
  if (suite == "canonical") return max_n ? suite_canonical(*max_n) : suite_canonical_fq(k, q);
  if (suite == "conjecture") return suite_conjecture(max_n.value_or(6));
  throw std::invalid_argument("unknown suite " + suite);
}

std::string CriterionResult::summary() const {
  std::ostringstream s;
  s << result.cases.size() << " cases";
  if (int f = result.count("fail")) s << ", " << f << " failed";
  if (int i = result.count("inconclusive")) s << ", " << i << " inconclusive";
  if (int r = result.count("report")) s << ", " << r << " discrepancies";
  s.setf(std::ios::fixed);
  s.precision(2);
  s << ", " << seconds << " s (budget " << budget_seconds << " s)";
  if (!error.empty()) s << ", error: " << error;
  return s.str();
}

CriterionResult run_criterion(int id) {
  struct Entry {
    std::string title;
    double budget;
    bool blocking;
    std::function<SuiteResult()> run;
  };
  static const std::map<int, Entry> entries{
      {1, {"excellent decompositions, n <= 9", 10, true, [] { return suite_excellent(9); }}},
      {2, {"Jordan types of u_w, n <= 6", 60, true, [] { return suite_jordan(6); }}},
      {3, {"psi, phi injectivity, X = 2Y, d' = d_C", 10, true, [] { return suite_identities(14, 12, 14); }}},
      {4, {"exceptional tables and words", 300, true, [] { return suite_tables(true); }}},
      {5, {"brute-force minimal classes", 300, true,
           [] {
             SuiteResult r = suite_fq_minimal(FqKind::Sp4, 3);
             r.append(suite_fq_coxeter(FqKind::Sp4, 3));
             r.append(suite_fq_regular(FqKind::Sp4, 3));
             r.append(suite_fq_coxeter(FqKind::SL3, 2));
             r.append(suite_fq_coxeter(FqKind::SL3, 3));
             return r;
           }}},
      {6, {"bad characteristic in Sp4(F2)", 30, true, [] { return suite_fq_bad_char(FqKind::Sp4, 2); }}},
      {7, {"isotropy bound", 120, true,
           [] {
             SuiteResult r = suite_isotropy(FqKind::Sp4, 3);
             r.append(suite_isotropy(FqKind::SL3, 2));
             return r;
           }}},
      {8, {"C-small classes in Sp4", 600, true, [] { return suite_c_small(FqKind::Sp4); }}},
      {9, {"canonical basis", 120, true,
           [] {
             SuiteResult r = suite_canonical(6);
             r.append(suite_canonical_fq(FqKind::Sp4, 3));
             return r;
           }}},
      {10, {"class of u_w against Phi (non-blocking)", 120, false, [] { return suite_conjecture(6); }}},
  };
  auto it = entries.find(id);
  if (it == entries.end()) throw std::invalid_argument("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = it->second.title;
  r.budget_seconds = it->second.budget;
  r.blocking = it->second.blocking;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.result = it->second.run();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace weylphi
