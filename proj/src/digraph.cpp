#include "palcheck/digraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "palcheck/errors.hpp"

namespace palcheck {

void Digraph::canonicalize() {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("digraph arc endpoint out of range");
    }
  }
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(u, v));
}

bool Digraph::has_loop() const {
  for (const auto& [u, v] : arcs) {
    if (u == v) return true;
  }
  return false;
}

std::vector<uint64_t> Digraph::rows() const {
  if (n > 64) throw InputError("digraph too large for bitmask rows (n > 64)");
  std::vector<uint64_t> r(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : arcs) {
    r[static_cast<size_t>(u)] |= (uint64_t{1} << v);
  }
  return r;
}

namespace {

// Extend a partial vertex sequence (encoded by `chosen` and the set
// `common` of vertices receiving arcs from everything chosen so far).
bool extend_tt(const std::vector<uint64_t>& rows, int remaining,
               uint64_t chosen, uint64_t common) {
  if (remaining == 0) return true;
  uint64_t cand = common & ~chosen;
  while (cand != 0) {
    const int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    if (extend_tt(rows, remaining - 1, chosen | (uint64_t{1} << v),
                  common & rows[static_cast<size_t>(v)])) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool contains_transitive_tournament(const Digraph& d, int size) {
  if (size <= 0) return true;
  if (size == 1) return d.n >= 1;
  if (size > d.n) return false;
  const std::vector<uint64_t> rows = d.rows();
  const uint64_t all =
      (d.n == 64) ? ~uint64_t{0} : ((uint64_t{1} << d.n) - 1);
  return extend_tt(rows, size, 0, all);
}

int longest_walk(const Digraph& d, int cap) {
  if (cap <= 0) return 0;
  const std::vector<uint64_t> rows = d.rows();
  // reach[v] = set of vertices reachable from v by a walk of the current
  // length; a walk of length L exists iff some reach set is nonempty.
  std::vector<uint64_t> reach = rows;
  for (int len = 1; len <= cap; ++len) {
    bool any = false;
    for (const uint64_t r : reach) {
      if (r != 0) {
        any = true;
        break;
      }
    }
    if (!any) return len - 1;
    if (len == cap) return cap;
    std::vector<uint64_t> next(reach.size(), 0);
    for (size_t v = 0; v < reach.size(); ++v) {
      uint64_t m = reach[v];
      uint64_t acc = 0;
      while (m != 0) {
        const int w = __builtin_ctzll(m);
        m &= m - 1;
        acc |= rows[static_cast<size_t>(w)];
      }
      next[v] = acc;
    }
    reach = std::move(next);
  }
  return cap;
}

}  // namespace palcheck
