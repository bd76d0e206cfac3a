#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylphi/field.hpp"
#include "weylphi/unipotent.hpp"
#include "weylphi/weyl.hpp"

namespace weylphi {

// Small classical groups over F_q, q in {2, 3, 5, 7}.
enum class FqKind { SL3, Sp4, SO5, SO7 };

FqKind parse_fq_kind(const std::string& s);  // "sl3", "sp4", "so5", "so7"
std::string fq_kind_name(FqKind k);
GroupDescriptor fq_weyl_descriptor(FqKind k);  // A2, C2, B2 (kappa 1), B3 (kappa 1)

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// WEYLPHI_BUDGET, default 10^6 group elements.
long long enumeration_budget();

long long fq_group_order(FqKind k, int q);
long long fq_borel_order(FqKind k, int q);

struct FqInstanceSummary {
  FqKind kind = FqKind::Sp4;
  int q = 0;
  long long elements = 0;
  long long flags = 0;
  long long borel = 0;
  bool members_valid = true;  // every element preserves the form / has det 1
  // unipotent elements by label (Jordan type, plus the form condition when p = 2)
  std::map<std::string, long long> unipotent_classes;
  long long unipotent_total = 0;
};

// Full enumeration; throws BudgetExceeded when |G(F_q)| is over the budget.
FqInstanceSummary enumerate_group(FqKind k, int q, long long budget = -1);

// The representative of C used for cells: w_p for elliptic classical
// classes, otherwise the first element of C_min.
WeylElement cell_representative(const ClassLabel& c, const WeylGroup& w);

// Unipotent classes met by the cell of w: label -> #{b in B : w. b in class}.
// Labels are Jordan types; when p = 2 an even block size m is flagged
// (Holds) iff ((g-1)^{m-1} x, x) != 0 for some x in ker (g-1)^m.
std::map<UnipotentLabel, long long> cell_unipotent_counts(FqKind k, int q, const WeylElement& w);

// Same Jordan type; flags compared per block size, '?' in the target matches both.
bool label_matches(const UnipotentLabel& target, const UnipotentLabel& computed);

bool dsv_test(FqKind k, int q, const ClassLabel& c, const UnipotentLabel& gamma);
// Same, checked for every element of C_min; true when all agree.
bool dsv_independent_of_w(FqKind k, int q, const ClassLabel& c);

struct MinimalClassReport {
  ClassLabel c;
  std::vector<UnipotentLabel> met;
  std::vector<UnipotentLabel> minimal;
  UnipotentLabel expected;
  bool ok() const { return minimal.size() == 1 && minimal.front() == expected; }
};

// q odd only (dominance is the closure order there).
MinimalClassReport minimal_class(FqKind k, int q, const ClassLabel& c);

// p = 2: the cell of C meets Phi(C) (form conditions included).
bool bad_char_membership(FqKind k, int q, const ClassLabel& c);

struct IsotropyReport {
  ClassLabel c;
  long long samples = 0;
  long long bound = 0;  // det(1 - w)^* times |Z(F_q)|
  long long max_order = 0;
  bool all_abelian = true;
  bool all_divide = true;
  std::string counterexample;
  bool ok() const { return all_abelian && all_divide; }
};

// Exhaustive over g = w. b (b in B) for every w in C_min: the stabilizer of
// (g, B) is Z(g) cap B.
IsotropyReport isotropy_check(FqKind k, int q, const ClassLabel& c);

// |Z(g)(F_q)| for a unipotent g given by its class label; the representative
// is taken from the cell of w.
struct CSmallRow {
  std::string label;
  std::vector<int> qs;
  std::vector<long long> centralizer;
  double slope = 0;
  int degree = 0;
  bool conclusive = true;
  bool is_phi = false;
};

struct CSmallReport {
  ClassLabel c;
  int d_C = 0;
  int dim_center = 0;
  std::vector<CSmallRow> rows;
  bool phi_found = false;
  // every conclusive row has degree - dim Z_G <= d_C, with equality exactly at Phi(C)
  bool ok() const;
};

CSmallReport c_small_check(FqKind k, const ClassLabel& c, const std::vector<int>& qs = {3, 5, 7});

// |Z_G(g)(F_q)| for the centralizer of one explicit element (integer entries reduced mod q).
long long centralizer_order(FqKind k, int q, const std::vector<std::vector<long long>>& g);

struct PointCountRow {
  std::string label;
  std::vector<int> qs;
  std::vector<Rational> ratio;  // |B_w^gamma(F_q)| / |G(F_q)|
  int degree_bound = 0;         // l(w) - rank
  bool is_phi = false;
  // fit with the expected constant term (1 for Phi(C), 0 otherwise)
  std::string verdict;          // "consistent", "inconsistent", "underdetermined", "not elliptic"
};

std::vector<PointCountRow> point_count_series(FqKind k, const ClassLabel& c, const std::vector<int>& qs);

struct CanonicalSweep {
  long long pairs = 0;
  long long unipotent = 0;
  long long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

// Every g = w_p. b in the cell of an elliptic w_p: the canonical basis
// clauses, plus the rank bounds when g is unipotent. Isometry groups only.
CanonicalSweep canonical_basis_sweep(FqKind k, int q, const ClassLabel& c);

}  // namespace weylphi
