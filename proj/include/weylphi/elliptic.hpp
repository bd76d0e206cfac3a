#pragma once

#include <string>
#include <vector>

#include "weylphi/partition.hpp"
#include "weylphi/weyl.hpp"

namespace weylphi {

// psi(t) in {-1, 0, +1} for t = 1..sigma (returned 0-based).
std::vector<int> psi(const Partition& p);
inline int kappa_sigma(const Partition& p) { return static_cast<int>(p.size() % 2); }

// One negative cycle per part on consecutive index blocks; a permutation of
// [1..2n+kappa] commuting with i -> nu+1-i.
WeylElement w_from_partition(const Partition& p, int kappa);

// 2 sum_{v} v p_{v+1} + n, minus sigma in type D.
int d_C_classical(const Partition& p, Family type);

struct ExcellentDecomposition {
  std::vector<std::vector<int>> blocks;  // generator indices, 1-based

  int letters() const;
  std::vector<int> word() const;
  // "(s2)(s1 s2 s1)"
  std::string to_string() const;
};

// variant 'a' or 'b'. Type D always uses the form derived from 'b', with
// generator index n standing for s~_{n-1}.
ExcellentDecomposition excellent_decomposition(const Partition& p, Family type, char variant = 'a');

struct ValidationReport {
  bool ok = true;
  int letters = 0;
  int length = 0;
  std::vector<std::string> failures;
};

// Product equals w, the word is reduced, every block is an odd palindrome,
// the block count is the rank and w has minimal length in its class.
ValidationReport validate_excellent(const ExcellentDecomposition& dec, const WeylElement& w,
                                    const WeylGroup& g);

}  // namespace weylphi
