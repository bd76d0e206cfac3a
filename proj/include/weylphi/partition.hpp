#pragma once

#include <string>
#include <vector>

namespace weylphi {

// Weakly decreasing sequence of positive integers.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
Partition sorted_desc(std::vector<int> parts);

// All partitions of n, largest first part first.
std::vector<Partition> partitions_of(int n);
// Partitions of n with an even number of parts.
std::vector<Partition> even_length_partitions_of(int n);

Partition transpose(const Partition& p);

// Prefix-sum order; throws std::invalid_argument on unequal totals.
bool dominance_leq(const Partition& a, const Partition& b);

std::string to_string(const Partition& p);
// Accepts "2,1", "(2,1)", "[2,1]", "[]" and "2.1".
Partition parse_partition(const std::string& text);

// Multiplicity of the value v in p.
int multiplicity(const Partition& p, int v);

struct Bipartition {
  Partition alpha;
  Partition beta;
  bool operator==(const Bipartition&) const = default;
  auto operator<=>(const Bipartition&) const = default;
};

std::vector<Bipartition> bipartitions_of(int n);

}  // namespace weylphi
