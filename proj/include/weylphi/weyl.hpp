#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylphi/cyclotomic.hpp"
#include "weylphi/matrix.hpp"
#include "weylphi/partition.hpp"

namespace weylphi {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };
enum class Realization { SignedPerm, RootMatrix, TableOnly };

std::string family_name(Family f);
Family parse_family(const std::string& s);
bool is_classical(Family f);  // B, C, D
bool is_exceptional(Family f);

struct GroupDescriptor {
  Family family = Family::A;
  int rank = 1;
  // Classical only: permutations act on [1..2n+kappa]. Only B admits kappa = 1.
  int kappa = 0;

  // Validates the family/rank pair. rank <= 0 picks the fixed exceptional rank.
  static GroupDescriptor make(Family f, int rank = 0, int kappa = 0);
  Realization realization() const;
  int nu() const { return 2 * rank + kappa; }
  std::string name() const;
  bool operator==(const GroupDescriptor&) const = default;
};

// Classical and type A elements are one-line permutations with 1-based values;
// exceptional elements are matrices acting on the simple-root basis (columns
// are images of simple roots).
struct WeylElement {
  std::vector<int> perm;
  IntMatrix mat;

  bool operator==(const WeylElement& o) const { return perm == o.perm && mat == o.mat; }
  std::string key() const;
  std::string to_string() const;
};

struct ClassLabel {
  Family family = Family::A;
  Partition alpha;  // positive cycles (classical), cycle type (type A)
  Partition beta;   // negative cycles (classical)
  int split = 0;    // type D classes that split in W(D_n): 1 or 2
  CycloSignature sig;  // exceptional
  std::string disc;    // exceptional: "", "'", "''" or "#k"

  // "[a1,a2];[b1]" classical, "[3,1]" type A, "F4:2.2.6'" exceptional
  std::string to_string() const;
  // "(Phi2^2Phi6)'" style for exceptional classes, to_string otherwise
  std::string pretty() const;
  bool operator==(const ClassLabel&) const = default;
  auto operator<=>(const ClassLabel&) const = default;
};

ClassLabel parse_class_label(const std::string& text, const GroupDescriptor& g);

struct ConjugacyClass {
  ClassLabel label;
  std::vector<int> members;      // indices into the enumeration, ascending
  std::vector<int> min_members;  // members of minimal length
  int d_C = 0;
  bool elliptic = false;
};

// Full element list for an enumerable group, in breadth-first order from the
// identity (so the position of an element never decreases with its length).
struct Enumeration {
  std::vector<std::string> keys;
  std::vector<int> length;        // breadth-first distance
  std::vector<uint32_t> support;  // generators occurring in a reduced word
  std::vector<std::vector<int>> right;  // right[i][s] = index of x_i * s
  std::vector<std::vector<int>> left;   // left[i][s]  = index of s * x_i
  std::vector<int> class_index;
  std::vector<ConjugacyClass> classes;
  std::unordered_map<std::string, int> index;

  int size() const { return static_cast<int>(keys.size()); }
  int find(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
  }
};

class WeylGroup {
 public:
  explicit WeylGroup(GroupDescriptor g);

  const GroupDescriptor& descriptor() const { return g_; }
  Family family() const { return g_.family; }
  int rank() const { return g_.rank; }
  int num_generators() const { return g_.rank; }
  int nu() const;  // permutation degree, 0 for exceptional

  WeylElement identity() const;
  WeylElement generator(int i) const;  // 1-based
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  WeylElement from_word(const std::vector<int>& word) const;
  WeylElement longest_element() const;
  // Throws std::invalid_argument if the element does not belong to this group.
  void validate(const WeylElement& a) const;

  int length(const WeylElement& a) const;
  std::vector<int> reduced_word(const WeylElement& a) const;
  uint32_t support(const WeylElement& a) const;
  int num_positive_roots() const;

  // Reflection representation: n x n signed permutation matrix (B/C/D),
  // (n+1) x (n+1) permutation matrix (A, with the trivial summand removed
  // in char_poly), simple-root matrix (exceptional).
  IntMatrix reflection_matrix(const WeylElement& a) const;
  CycloSignature char_poly(const WeylElement& a) const;
  long long det_one_minus(const WeylElement& a) const;

  // Classical signed view u(1..n) with u(k) in {+-1..+-n}.
  std::vector<int> signed_view(const WeylElement& a) const;
  WeylElement from_signed(const std::vector<int>& u) const;

  // Exceptional root data: Gram matrix of simple roots (scaled to integers)
  // and Cartan numbers A_ij = 2 (a_i, a_j) / (a_i, a_i).
  const IntMatrix& gram() const { return gram_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  ClassLabel class_of(const WeylElement& a) const;
  bool enumerable() const;
  // Built once, shared by copies of this object.
  const Enumeration& enumeration() const;
  WeylElement element(int index) const;
  WeylElement from_key(const std::string& key) const;
  const ConjugacyClass& conjugacy_class(const ClassLabel& c) const;

 private:
  WeylElement perm_generator(int i) const;
  struct Cache;
  GroupDescriptor g_;
  IntMatrix gram_, cartan_;
  std::vector<IntMatrix> gens_;
  std::vector<std::vector<int>> pos_roots_;
  std::shared_ptr<Cache> cache_;
};

bool is_elliptic(const ClassLabel& c, const WeylGroup& w);

struct MinLengthResult {
  int d_C = 0;
  std::vector<WeylElement> elements;
  bool complete = false;  // false when only a representative (or nothing) is known
  std::string note;
};
MinLengthResult min_length_elements(const ClassLabel& c, const WeylGroup& w);
int d_C(const ClassLabel& c, const WeylGroup& w);

struct ParabolicIntersection {
  uint32_t J = 0;
  std::vector<int> members;  // C intersected with W_J, enumeration indices
  int num_wj_classes = 0;
  bool elliptic_in_wj = false;
  bool ok() const { return !members.empty() && num_wj_classes == 1 && elliptic_in_wj; }
};
ParabolicIntersection parabolic_class_intersection(const ClassLabel& c, uint32_t J,
                                                   const WeylGroup& w);
// Smallest J (by size, then bit pattern) with C meeting W_J in one elliptic
// W_J-class. Throws std::runtime_error if none exists.
ParabolicIntersection minimal_parabolic(const ClassLabel& c, const WeylGroup& w);
// All J of minimal size that work.
std::vector<ParabolicIntersection> all_minimal_parabolics(const ClassLabel& c, const WeylGroup& w);

std::vector<int> bits_of(uint32_t mask);  // 1-based generator indices

struct UnsupportedCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace weylphi
