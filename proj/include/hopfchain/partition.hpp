#pragma once

#include "hopfchain/rational.hpp"

#include <map>
#include <vector>

namespace hopfchain {

using Partition = std::vector<int>;    // weakly decreasing, positive
using Composition = std::vector<int>;  // ordered, zeros allowed

// All partitions of n, more parts first, ties lexicographic (1^n first, (n) last).
std::vector<Partition> partitions(int n);
// Compositions of n into positive parts.
std::vector<Composition> compositions(int n);
// Weak compositions of n into exactly k nonnegative parts.
std::vector<Composition> weak_compositions(int n, int k);

Partition sorted_partition(std::vector<int> parts);
std::map<int, int> part_multiplicities(const Partition& p);
int partition_count(int n, int parts);  // p(n, l)

Integer stirling1_unsigned(int n, int k);  // c(n, k)
Integer stirling1_signed(int n, int k);    // s(n, k)

}  // namespace hopfchain
