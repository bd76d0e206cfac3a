#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"
#include "weylphi/isometry.hpp"
#include "weylphi/phi.hpp"
#include "weylphi/verification.hpp"

namespace py = pybind11;
using namespace weylphi;

namespace {

GroupDescriptor descriptor(const std::string& type, int rank) {
  Family f = parse_family(type);
  return GroupDescriptor::make(f, is_exceptional(f) ? 0 : rank);
}

py::dict phi_row(const ClassLabel& c, const WeylGroup& W, int charp) {
  py::dict d;
  d["class"] = c.to_string();
  auto u = phi_full(c, W, charp);
  d["elliptic"] = is_elliptic(c, W);
  d["d_C"] = d_C(c, W);
  d["phi"] = u.to_string();
  d["distinguished"] = is_distinguished(u, W.descriptor(), charp);
  return d;
}

py::list cases(const SuiteResult& r) {
  py::list out;
  for (const auto& c : r.cases) {
    py::dict d;
    d["suite"] = c.suite;
    d["case"] = c.name;
    d["status"] = c.status;
    if (!c.witness.empty()) d["witness"] = c.witness;
    if (!c.counterexample.empty()) d["counterexample"] = c.counterexample;
    out.append(d);
  }
  return out;
}

template <class F>
Partition u_w_jordan_in(const std::string& form, int n, const Partition& p) {
  if (form == "sp") {
    FormedSpace<F> V(n, 0, FormKind::Symplectic);
    return jordan_type(build_u_w(V, p));
  }
  FormedSpace<F> V(n, 1, FormKind::Quadratic);
  auto u = build_u_w(V, p);
  if (form == "so_odd") return jordan_type(u);
  if (form == "so_even") return so_even_restriction(V, u, p).jordan;
  throw std::invalid_argument("form must be sp, so_odd or so_even");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weyl group classes, unipotent classes and the map between them";

  py::register_exception<UnsupportedCase>(m, "UnsupportedCase", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "phi",
      [](const std::string& type, int rank, const std::string& cls, int charp) {
        auto g = descriptor(type, rank);
        WeylGroup W(g);
        return phi_row(parse_class_label(cls, g), W, charp);
      },
      py::arg("type"), py::arg("rank") = 0, py::arg("cls"), py::arg("char") = 0);

  m.def(
      "phi_table",
      [](const std::string& type, int rank, int charp, bool elliptic_only) {
        WeylGroup W(descriptor(type, rank));
        py::list out;
        for (const auto& c : all_class_labels(W))
          if (!elliptic_only || is_elliptic(c, W)) out.append(phi_row(c, W, charp));
        return out;
      },
      py::arg("type"), py::arg("rank") = 0, py::arg("char") = 0, py::arg("elliptic_only") = true);

  m.def(
      "excellent",
      [](const std::string& type, const std::vector<int>& partition, char variant) {
        Family f = parse_family(type);
        const int kappa = f == Family::B ? 1 : 0;
        Partition p(partition.begin(), partition.end());
        WeylGroup W(GroupDescriptor::make(f, partition_size(p), kappa));
        auto dec = excellent_decomposition(p, f, variant);
        auto v = validate_excellent(dec, W.inverse(w_from_partition(p, kappa)), W);
        py::dict d;
        d["word"] = dec.to_string();
        d["blocks"] = dec.blocks;
        d["letters"] = v.letters;
        d["length"] = v.length;
        d["ok"] = v.ok;
        d["failures"] = v.failures;
        return d;
      },
      py::arg("type"), py::arg("partition"), py::arg("variant") = 'a');

  m.def(
      "u_w_jordan",
      [](const std::string& form, const std::vector<int>& partition, int charp) {
        Partition p(partition.begin(), partition.end());
        const int n = partition_size(p);
        if (charp == 0) return u_w_jordan_in<Rational>(form, n, p);
        if (charp == 2) return u_w_jordan_in<Fp<2>>(form, n, p);
        if (charp == 3) return u_w_jordan_in<Fp<3>>(form, n, p);
        throw std::invalid_argument("char must be 0, 2 or 3");
      },
      py::arg("form"), py::arg("partition"), py::arg("char") = 0,
      "Jordan type of u_w for the elliptic class (empty; p); form is sp, so_odd or so_even.");

  m.def(
      "exceptional_table",
      [](const std::string& type) {
        py::list out;
        for (const auto& r : exceptional_table(parse_family(type))) {
          py::dict d;
          d["d"] = r.d;
          d["signature"] = r.sig_key + r.disc;
          d["name"] = r.name;
          d["dist"] = r.dist;
          out.append(d);
        }
        return out;
      },
      py::arg("type"));

  m.def(
      "cell_counts",
      [](const std::string& group, int q, const std::string& cls) {
        const FqKind k = parse_fq_kind(group);
        WeylGroup W(fq_weyl_descriptor(k));
        std::map<std::string, long long> out;
        for (const auto& [u, n] : cell_unipotent_counts(k, q, cell_representative(parse_class_label(cls, W.descriptor()), W)))
          out[u.to_string()] = n;
        return out;
      },
      py::arg("group"), py::arg("q"), py::arg("cls"));

  m.def(
      "minimal_class",
      [](const std::string& group, int q, const std::string& cls) {
        const FqKind k = parse_fq_kind(group);
        WeylGroup W(fq_weyl_descriptor(k));
        auto r = minimal_class(k, q, parse_class_label(cls, W.descriptor()));
        py::dict d;
        std::vector<std::string> met, minimal;
        for (const auto& u : r.met) met.push_back(u.to_string());
        for (const auto& u : r.minimal) minimal.push_back(u.to_string());
        d["met"] = met;
        d["minimal"] = minimal;
        d["expected"] = r.expected.to_string();
        d["ok"] = r.ok();
        return d;
      },
      py::arg("group"), py::arg("q"), py::arg("cls"));

  m.def(
      "group_order", [](const std::string& group, int q) { return fq_group_order(parse_fq_kind(group), q); },
      py::arg("group"), py::arg("q"));

  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> max_n, const std::string& group, int q) {
        return cases(run_suite(suite, max_n, parse_fq_kind(group), q));
      },
      py::arg("suite"), py::arg("max_n") = py::none(), py::arg("group") = "sp4", py::arg("q") = 3);

  m.def(
      "acceptance",
      [](int id) {
        auto r = run_criterion(id);
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["blocking"] = r.blocking;
        d["passed"] = r.passed();
        d["seconds"] = r.seconds;
        d["cases"] = cases(r.result);
        if (!r.error.empty()) d["error"] = r.error;
        return d;
      },
      py::arg("criterion"));
}
