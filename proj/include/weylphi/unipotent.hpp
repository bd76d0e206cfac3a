#pragma once

#include <string>
#include <vector>

#include "weylphi/partition.hpp"
#include "weylphi/weyl.hpp"

namespace weylphi {

// Characteristic is passed as an int: 0 or a prime. Only p == 2 changes the
// classical rules; p in {2, 3} matters for exceptional markers.

// p = 2 form condition ((g-1)^{j-1} x, x) != 0 attached to an even block j.
enum class FlagState { None, Holds, NotAsserted };

struct UnipotentLabel {
  Family family = Family::A;
  Partition jordan;              // classical and type A, sizes of the blocks of g-1
  std::vector<FlagState> flags;  // parallel to jordan when p == 2, else empty
  std::string name;              // exceptional groups

  // "(4*,2*,1)": '*' marks a block carrying the form condition, '?' one
  // whose condition is not asserted. Exceptional labels print their name.
  std::string to_string() const;
  bool operator==(const UnipotentLabel&) const = default;
  auto operator<=>(const UnipotentLabel&) const = default;
};

UnipotentLabel parse_unipotent_label(const std::string& text, Family f);

// Natural module dimension: n+1 (A), 2n+1 (B), 2n (C, D).
int natural_dim(const GroupDescriptor& g);

// Jordan type of the class attached to an elliptic class (empty; p) of a
// classical Weyl group. B means SO_{2n+1}, C means Sp_{2n}, D means SO_{2n}.
UnipotentLabel gamma_from_partition(const Partition& p, const GroupDescriptor& g, int charp);

// Odd parts even multiplicity (C); even parts even multiplicity (B, D).
// Good characteristic only.
bool is_classical_jordan_type(const Partition& lambda, const GroupDescriptor& g);
// Very even: type D, all parts even, each with even multiplicity.
bool is_very_even(const Partition& lambda);

// sum_h (f_{2h}^2 - f_{2h}) + n with f_j = #(parts >= j); parts must be even.
int centralizer_dim_typeC_p2(const Partition& lambda);
// Good characteristic: dimension of the centralizer in SL/SO/Sp.
int centralizer_dim(const Partition& lambda, const GroupDescriptor& g);

struct XYCheck {
  long long X = 0, Y = 0;
  bool ok() const { return X == 2 * Y; }
};
XYCheck check_X_equals_2Y(const Partition& p);

// (2p_i + psi(i)), with a final 1 when sigma is even.
Partition phi_small_injection(const Partition& p);

bool is_distinguished(const UnipotentLabel& u, const GroupDescriptor& g, int charp);

// Complete class list. Classical and exceptional lists need good
// characteristic; type A works for every p. In type D a very even
// partition stands for its two classes.
std::vector<UnipotentLabel> unipotent_classes(const GroupDescriptor& g, int charp);

// Bala-Carter style name of a classical class, used when a classical Levi
// factor sits inside an exceptional group. `tilde_short` marks short-root A
// pieces with '~' (F4, G2); a component of type B/C contributes long or
// short GL pieces accordingly.
struct BCPiece {
  char letter = 'A';
  int rank = 0;
  bool tilde = false;
  int a = 0;  // the i in X_r(a_i)
};
std::vector<BCPiece> bala_carter_pieces(const Partition& lambda, char type, bool tilde_short);
std::string format_bala_carter(std::vector<BCPiece> pieces);

}  // namespace weylphi
