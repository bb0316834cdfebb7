#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thom/errors.hpp"

namespace thom {

// Weakly decreasing nonnegative parts, trailing zeros trimmed.
using Partition = std::vector<int>;

// Validates and trims trailing zeros; throws ValidationError on bad input.
Partition normalize_partition(std::vector<int> parts);

int weight(const Partition& p);

// 1-indexed part access; parts beyond the length read as 0.
int part_get(const Partition& p, int i);

Partition conjugate(const Partition& p);

// (s, s-1, ..., 1)
Partition staircase(int s);

// Componentwise containment of Young diagrams.
bool contains(const Partition& outer, const Partition& inner);

// All partitions of n with at most max_len parts, each at most max_part.
std::vector<Partition> partitions_of(int n, int max_len = -1,
                                     int max_part = -1);

// "3,3,3,1"; exponent shorthand "3^3,1" accepted on input.
Partition parse_partition(const std::string& s);
std::string partition_str(const Partition& p);

// Jacobi-Trudi straightening of a raw integer index sequence: the value
// Delta_seq equals 0 (repeated shifted entries or a negative part) or
// sign * Delta_lambda for a true partition lambda. Returns nullopt for 0.
std::optional<std::pair<int, Partition>> straighten(
    const std::vector<int>& seq);

}  // namespace thom
