#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"
#include "weylphi/phi.hpp"
#include "weylphi/verification.hpp"

using namespace weylphi;
using ordered_json = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json, Csv };

// Rows of string cells under fixed headers; printed aligned, as CSV or as
// one JSON object per line. Empty cells are omitted from JSON when the
// column is optional.
struct Table {
  std::vector<std::string> headers;
  std::vector<bool> optional;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  void print(Format f, std::ostream& os) const {
    if (f == Format::Json) {
      for (const auto& r : rows) {
        ordered_json j;
        for (size_t i = 0; i < headers.size(); ++i)
          if (!(is_optional(i) && r[i].empty())) j[headers[i]] = r[i];
        os << j.dump() << "\n";
      }
      return;
    }
    if (f == Format::Csv) {
      print_csv_row(headers, os);
      for (const auto& r : rows) print_csv_row(r, os);
      return;
    }
    std::vector<size_t> w(headers.size());
    for (size_t i = 0; i < headers.size(); ++i) w[i] = headers[i].size();
    for (const auto& r : rows)
      for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (size_t i = 0; i < r.size(); ++i) {
        s += r[i];
        if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      os << s << "\n";
    };
    line(headers);
    for (const auto& r : rows) line(r);
  }

 private:
  bool is_optional(size_t i) const { return i < optional.size() && optional[i]; }

  static void print_csv_row(const std::vector<std::string>& r, std::ostream& os) {
    for (size_t i = 0; i < r.size(); ++i) {
      const std::string& c = r[i];
      if (c.find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
        os << '"';
      } else {
        os << c;
      }
      os << (i + 1 < r.size() ? "," : "\n");
    }
  }
};

struct Common {
  bool json = false, csv = false;
  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

void add_format(CLI::App* cmd, Common& c) {
  auto* j = cmd->add_flag("--json", c.json, "JSON lines");
  cmd->add_flag("--csv", c.csv, "CSV")->excludes(j);
}

GroupDescriptor descriptor(const std::string& type, int rank, int kappa = 0) {
  Family f = parse_family(type);
  return GroupDescriptor::make(f, is_exceptional(f) ? 0 : rank, f == Family::B ? kappa : 0);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- phi

struct PhiArgs {
  std::string type;
  int rank = 0;
  int charp = 0;
  std::string cls;
  bool elliptic = false;
};

int cmd_phi(const PhiArgs& a, const Common& common) {
  const auto g = descriptor(a.type, a.rank);
  WeylGroup W(g);
  std::vector<ClassLabel> classes;
  if (!a.cls.empty()) {
    classes.push_back(parse_class_label(a.cls, g));
  } else {
    for (const auto& c : all_class_labels(W))
      if (!a.elliptic || is_elliptic(c, W)) classes.push_back(c);
  }
  Table t{{"class", "elliptic", "d_C", "Phi", "distinguished", "basic", "note"}, {false, false, false, false, false, false, true}, {}};
  int unsupported = 0;
  for (const auto& c : classes) {
    const bool ell = is_elliptic(c, W);
    std::string dc = "?", phi = "-", dist = "-", basic = "-", note;
    try {
      dc = std::to_string(d_C(c, W));
    } catch (const std::exception& e) {
      note = e.what();
    }
    try {
      auto u = phi_full(c, W, a.charp);
      phi = u.to_string();
      try {
        dist = yes_no(is_distinguished(u, g, a.charp));
      } catch (const std::exception&) {
        dist = "?";
      }
      try {
        auto pre = phi_inverse_basic(u, W, a.charp);
        basic = yes_no(phi_full(pre, W, a.charp) == u);
      } catch (const std::exception&) {
        basic = "no";
      }
    } catch (const std::exception& e) {
      ++unsupported;
      note = std::string("unsupported: ") + e.what();
    }
    t.add({c.pretty(), yes_no(ell), dc, phi, dist, basic, note});
  }
  t.print(common.format(), std::cout);
  return !a.cls.empty() && unsupported ? 2 : 0;
}

// ---------------------------------------------------------------- excellent

struct ExcellentArgs {
  std::string type;
  int rank = 0;
  std::string partition;
  char variant = 'a';
};

int cmd_excellent(const ExcellentArgs& a, const Common& common) {
  Family f = parse_family(a.type);
  Table t{{"class", "word", "verdict", "letters", "length", "failures"}, {false, false, false, false, false, true}, {}};
  bool ok = true;
  auto row = [&](const WeylGroup& W, const ExcellentDecomposition& dec, const WeylElement& w) {
    auto v = validate_excellent(dec, w, W);
    ok = ok && v.ok;
    std::string failures;
    for (const auto& s : v.failures) failures += (failures.empty() ? "" : "; ") + s;
    t.add({W.class_of(w).pretty(), dec.to_string(), v.ok ? "excellent" : "invalid", std::to_string(v.letters),
           std::to_string(v.length), failures});
  };
  if (is_exceptional(f)) {
    WeylGroup W(GroupDescriptor::make(f));
    if (W.descriptor().realization() == Realization::TableOnly)
      throw UnsupportedCase(family_name(f) + " is table-only: no explicit words are generated");
    for (const auto& blocks : exceptional_excellent_words(f)) {
      ExcellentDecomposition dec{blocks};
      row(W, dec, W.from_word(dec.word()));
    }
  } else {
    if (f == Family::A) throw UnsupportedCase("excellent decompositions are generated for types B, C, D and G2, F4, E6");
    if (a.partition.empty()) throw std::invalid_argument("--partition is required for classical types");
    Partition p = parse_partition(a.partition);
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + a.partition);
    const int n = a.rank ? a.rank : partition_size(p);
    if (partition_size(p) != n) throw std::invalid_argument("the partition must have size equal to the rank");
    const int kappa = f == Family::B ? 1 : 0;
    WeylGroup W(GroupDescriptor::make(f, n, kappa));
    row(W, excellent_decomposition(p, f, a.variant), W.inverse(w_from_partition(p, kappa)));
  }
  t.print(common.format(), std::cout);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_n;
  std::string group = "sp4";
  int q = 3;
};

int cmd_verify(const VerifyArgs& a, const Common& common) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r = run_suite(a.suite, a.max_n, parse_fq_kind(a.group), a.q);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Table t{{"suite", "case", "status", "witness", "counterexample"}, {false, false, false, true, true}, {}};
  for (const auto& c : r.cases) t.add({c.suite, c.name, c.status, c.witness, c.counterexample});
  t.print(common.format(), std::cout);
  std::cerr << a.suite << ": " << (r.ok() ? "pass" : "FAIL") << ", " << r.cases.size() << " cases, " << r.count("fail")
            << " failed";
  if (int i = r.count("inconclusive")) std::cerr << ", " << i << " inconclusive";
  if (int d = r.count("report")) std::cerr << ", " << d << " reported";
  std::cerr << ", " << std::fixed << std::setprecision(2) << secs << " s" << std::endl;
  return r.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- cells

struct CellArgs {
  std::string group = "sp4";
  int q = 3;
  std::string cls;
};

int cmd_cells(const CellArgs& a, const Common& common) {
  const FqKind k = parse_fq_kind(a.group);
  WeylGroup W(fq_weyl_descriptor(k));
  auto c = parse_class_label(a.cls, W.descriptor());
  auto w = cell_representative(c, W);
  const long long borel = fq_borel_order(k, a.q);
  std::string word;
  for (int i : W.reduced_word(w)) word += (word.empty() ? "s" : " s") + std::to_string(i);
  Table t{{"class", "w", "unipotent", "count", "of"}, {}, {}};
  for (const auto& [u, n] : cell_unipotent_counts(k, a.q, w))
    t.add({c.to_string(), word, u.to_string(), std::to_string(n), std::to_string(borel)});
  t.print(common.format(), std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl group classes and unipotent classes: tables, witnesses and brute-force checks"};
  app.require_subcommand(1);
  app.footer(
      "Class labels: classical \"[alpha];[beta]\" (positive and negative cycles, parentheses optional,\n"
      "a trailing #1 or #2 picks a split class of type D); type A a partition \"[3,1]\";\n"
      "exceptional a cyclotomic signature \"F4:2.2.6\" with an optional ' or '' (or #k).\n"
      "WEYLPHI_BUDGET caps brute-force enumeration (group elements, default 1000000).");
  std::optional<long long> budget;
  app.add_option("--budget", budget, "enumeration budget (overrides WEYLPHI_BUDGET)");

  Common common;
  PhiArgs pa;
  auto* phi = app.add_subcommand("phi", "Phi(C) with d_C and class markers");
  phi->add_option("--type", pa.type, "A, B, C, D, G2, F4, E6, E7 or E8")->required();
  phi->add_option("--rank", pa.rank, "rank (classical types)");
  phi->add_option("--char", pa.charp, "characteristic, 0 or a prime");
  phi->add_option("--class", pa.cls, "a single class label");
  phi->add_flag("--elliptic", pa.elliptic, "elliptic classes only");
  add_format(phi, common);

  ExcellentArgs ea;
  auto* exc = app.add_subcommand("excellent", "excellent decomposition of w_p^-1 (classical) or the stored words");
  exc->add_option("--type", ea.type, "B, C, D, G2, F4 or E6")->required();
  exc->add_option("--rank", ea.rank, "rank (defaults to |p|)");
  exc->add_option("--partition", ea.partition, "p, e.g. 2,1");
  exc->add_option("--variant", ea.variant, "a or b (types B and C)")->check(CLI::IsMember({'a', 'b'}));
  add_format(exc, common);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run a verification suite; exit status 1 on any failure");
  ver->add_option("--suite", va.suite, "jordan, identities, tables, fq, isotropy, excellent, c-small, canonical, conjecture")
      ->required()
      ->check(CLI::IsMember(kSuiteNames));
  ver->add_option("--max-n", va.max_n, "largest rank for the classical suites");
  ver->add_option("--group", va.group, "sl3, sp4, so5 or so7 (finite field suites)");
  ver->add_option("--q", va.q, "field size: 2, 3, 5 or 7");
  add_format(ver, common);

  CellArgs ca;
  auto* cells = app.add_subcommand("cells", "unipotent classes met by the cell of a representative of C");
  cells->add_option("--group", ca.group, "sl3, sp4, so5 or so7");
  cells->add_option("--q", ca.q, "field size");
  cells->add_option("--class", ca.cls, "class label")->required();
  add_format(cells, common);

  CLI11_PARSE(app, argc, argv);
  if (budget) setenv("WEYLPHI_BUDGET", std::to_string(*budget).c_str(), 1);
  try {
    if (*phi) return cmd_phi(pa, common);
    if (*exc) return cmd_excellent(ea, common);
    if (*ver) return cmd_verify(va, common);
    if (*cells) return cmd_cells(ca, common);
  } catch (const UnsupportedCase& e) {
    std::cerr << "unsupported: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
