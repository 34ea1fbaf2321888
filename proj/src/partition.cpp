#include "hopfchain/partition.hpp"

#include <algorithm>
#include <functional>

namespace hopfchain {

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  // same order as the chain states: more parts first, then lexicographic
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if ((mask >> (n - 2 - i)) & 1u) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
void weak_rec(int n, int k, Composition& cur, std::vector<Composition>& out) {
  if (k == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= n; ++i) {
    cur.push_back(i);
    weak_rec(n - i, k - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Composition> weak_compositions(int n, int k) {
  std::vector<Composition> out;
  if (k <= 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  Composition cur;
  weak_rec(n, k, cur, out);
  return out;
}

Partition sorted_partition(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::map<int, int> part_multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

int partition_count(int n, int parts) {
  // p(n, l) = p(n-1, l-1) + p(n-l, l)
  if (n == 0 && parts == 0) return 1;
  if (n <= 0 || parts <= 0 || parts > n) return 0;
  return partition_count(n - 1, parts - 1) + partition_count(n - parts, parts);
}

Integer stirling1_unsigned(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<Integer>> c(static_cast<std::size_t>(n + 1),
                                      std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
  c[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + Integer(i - 1) * c[i - 1][j];
  return k > n ? Integer(0) : c[n][k];
}

Integer stirling1_signed(int n, int k) {
  Integer u = stirling1_unsigned(n, k);
  return ((n - k) % 2 == 0) ? u : Integer(-u);
}

}  // namespace hopfchain
