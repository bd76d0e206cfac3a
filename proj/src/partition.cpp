#include "weylphi/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylphi {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition sorted_desc(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Partition> even_length_partitions_of(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (p.size() % 2 == 0) out.push_back(p);
  return out;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int j = 1; j <= p.front(); ++j) {
    int c = 0;
    for (int x : p)
      if (x >= j) ++c;
    t.push_back(c);
  }
  return t;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (partition_size(a) != partition_size(b))
    throw std::invalid_argument("dominance_leq: partitions of different sizes");
  long sa = 0, sb = 0;
  size_t len = std::max(a.size(), b.size());
  for (size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad partition token: " + tok);
    parts.push_back(v);
    tok.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      tok += ch;
    } else if (ch == ',' || ch == '.' || ch == ' ') {
      flush();
    } else if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
      flush();
    } else {
      throw std::invalid_argument(std::string("bad character in partition: ") + ch);
    }
  }
  flush();
  Partition p = sorted_desc(parts);
  if (!is_partition(p) || p.size() != parts.size())
    throw std::invalid_argument("not a partition: " + text);
  return p;
}

int multiplicity(const Partition& p, int v) {
  return static_cast<int>(std::count(p.begin(), p.end(), v));
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (auto& al : partitions_of(a))
      for (auto& be : partitions_of(n - a)) out.push_back({al, be});
  return out;
}

}  // namespace weylphi
