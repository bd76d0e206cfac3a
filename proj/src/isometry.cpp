#include "weylphi/isometry.hpp"

#include <algorithm>

namespace weylphi {

namespace {

// 2 p_1, ..., 2 p_sigma, kappa (= 2 p_{sigma+1})
std::vector<int> doubled(const Partition& p, int kappa) {
  std::vector<int> d;
  for (int x : p) d.push_back(2 * x);
  d.push_back(kappa);
  return d;
}

}  // namespace

int lambda_k(const Partition& p, int kappa, int k) {
  int s = 0;
  for (int x : doubled(p, kappa)) s += std::max(x - k, 0);
  return s;
}

int lambda_prime_k(const Partition& p, int kappa, int k) {
  const int base = lambda_k(p, kappa, k);
  if (k <= 0) return base;
  auto d = doubled(p, kappa);
  for (size_t r = 0; r + 1 < d.size(); r += 2)  // d = r + 1 odd
    if (d[r + 1] <= k && k <= d[r]) return base + 1;
  return base;
}

std::vector<int> pi_values(const Partition& p, int kappa) {
  auto d = doubled(p, kappa);
  const int sigma = static_cast<int>(p.size());
  std::vector<int> out;
  for (int r = 1; r <= sigma + 1; ++r) {
    const int cur = d[r - 1];
    const int prev = r == 1 ? -1 : d[r - 2];
    const int next = r <= sigma ? d[r] : 0;
    int psi = 0;
    if (r % 2 == 1 && r <= sigma && (r == 1 || prev > cur)) psi = 1;
    if (r % 2 == 0 && cur > next) psi = -1;
    out.push_back(cur + psi);
  }
  return out;
}

int lambda_double_prime_k(const Partition& p, int kappa, int k) {
  int s = 0;
  for (int x : pi_values(p, kappa)) s += std::max(x - k, 0);
  return s;
}

bool prefix_sums_bounded(const Partition& m, const Partition& n) {
  long a = 0, b = 0;
  for (size_t c = 0; c < std::max(m.size(), n.size()); ++c) {
    a += c < m.size() ? m[c] : 0;
    b += c < n.size() ? n[c] : 0;
    if (a > b) return false;
  }
  return true;
}

std::optional<Partition> partition_of_w(const std::vector<int>& perm, int n, int kappa) {
  for (const auto& q : partitions_of(n))
    if (w_from_partition(q, kappa).perm == perm) return q;
  return std::nullopt;
}

}  // namespace weylphi
