#include "thom/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace thom {

Partition normalize_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw ValidationError("partition has a negative part: " +
                            std::to_string(parts[i]));
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw ValidationError("partition parts must be weakly decreasing");
  }
  return parts;
}

int weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

int part_get(const Partition& p, int i) {
  if (i < 1) throw ValidationError("part index is 1-based");
  return i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition q(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++q[j];
  return q;
}

Partition staircase(int s) {
  Partition p;
  for (int i = s; i >= 1; --i) p.push_back(i);
  return p;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (i >= outer.size() || outer[i] < inner[i]) return false;
  return true;
}

namespace {
void gen_parts(int n, int max_part, int max_len, Partition& cur,
               std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_parts(n - k, k, max_len - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
  if (n < 0) return {};
  if (max_len < 0) max_len = n;
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  Partition cur;
  gen_parts(n, max_part, max_len, cur, out);
  return out;
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // strip spaces
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) {
      if (s.find_first_not_of(" ,") == std::string::npos) continue;
      throw ValidationError("empty part in partition '" + s + "'");
    }
    std::size_t caret = tok.find('^');
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    long rep = 1;
    if (caret != std::string::npos) {
      if (static_cast<std::size_t>(end - tok.c_str()) != caret)
        throw ValidationError("bad partition part '" + tok + "'");
      char* end2 = nullptr;
      rep = std::strtol(tok.c_str() + caret + 1, &end2, 10);
      if (*end2 != '\0' || rep < 0)
        throw ValidationError("bad repeat count in '" + tok + "'");
    } else if (*end != '\0') {
      throw ValidationError("bad partition part '" + tok + "'");
    }
    for (long r = 0; r < rep; ++r) parts.push_back(static_cast<int>(v));
  }
  return normalize_partition(std::move(parts));
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  return os.str();
}

std::optional<std::pair<int, Partition>> straighten(
    const std::vector<int>& seq) {
  const int r = static_cast<int>(seq.size());
  std::vector<std::pair<int, int>> shifted(r);  // (s_i - i, original i)
  for (int i = 0; i < r; ++i) shifted[i] = {seq[i] - (i + 1), i};
  // Sort descending; count inversions for the sign.
  int sign = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      if (shifted[i].first == shifted[j].first) return std::nullopt;
      if (shifted[i].first < shifted[j].first) {
        std::swap(shifted[i], shifted[j]);
        sign = -sign;
      }
    }
  std::vector<int> parts(r);
  for (int i = 0; i < r; ++i) {
    parts[i] = shifted[i].first + (i + 1);
    if (parts[i] < 0) return std::nullopt;
  }
  return std::make_pair(sign, normalize_partition(std::move(parts)));
}

}  // namespace thom
