#pragma once

// Finite digraphs on vertices 0..n-1, loops permitted unless a caller
// forbids them. Used for the coordinate digraphs derived from palettes and
// for the extremal brute-force oracles.

#include <cstdint>
#include <utility>
#include <vector>

namespace palcheck {

struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted, deduplicated

  void canonicalize();
  bool has_arc(int u, int v) const;  // binary search
  bool has_loop() const;
  // Adjacency rows as bitmasks; requires n <= 64.
  std::vector<uint64_t> rows() const;
};

// True iff some sequence of `size` distinct vertices carries all forward
// arcs (a transitive tournament with that many vertices, as a subgraph).
bool contains_transitive_tournament(const Digraph& d, int size);

// Length of the longest directed walk (vertices and arcs may repeat),
// capped at `cap`: returns cap as soon as a walk of that length exists
// (any cycle or loop yields walks of every length).
int longest_walk(const Digraph& d, int cap);

}  // namespace palcheck
