#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "nestorw/hypergraph.hpp"

namespace fixtures {

using nestorw::OrderedHypergraph;
using nestorw::VertexSet;

inline OrderedHypergraph pent() { return OrderedHypergraph(3, {{1}, {2}, {3}, {1, 2}, {2, 3}}); }
inline OrderedHypergraph tri() { return OrderedHypergraph(3, {{1}, {2}, {3}, {1, 2, 3}}); }
inline OrderedHypergraph square() { return OrderedHypergraph(3, {{1}, {2}, {3}, {1, 2}, {1, 2, 3}}); }
inline OrderedHypergraph k3() { return OrderedHypergraph(3, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}); }

// vertices x<y<z<u
inline OrderedHypergraph h42() {
  return OrderedHypergraph(4, {{1}, {2}, {3}, {4}, {1, 2, 3}, {1, 3, 4}}, {"x", "y", "z", "u"});
}

inline OrderedHypergraph cyc4() {
  return OrderedHypergraph(4, {{1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

inline OrderedHypergraph path(int m) {
  std::vector<VertexSet> e;
  for (int i = 1; i <= m; ++i) e.push_back(VertexSet::singleton(i));
  for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
  return OrderedHypergraph(m, e);
}

inline OrderedHypergraph complete(int m) {
  std::vector<VertexSet> e;
  for (int i = 1; i <= m; ++i) e.push_back(VertexSet::singleton(i));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) e.push_back({i, j});
  return OrderedHypergraph(m, e);
}

// Every connected atomic hypergraph on 1..n, as raw edge families over the non-singleton subsets.
inline std::vector<OrderedHypergraph> all_connected(int n) {
  std::vector<VertexSet> pool;
  nestorw::for_each_nonempty_subset(VertexSet::range(n), [&](VertexSet s) {
    if (s.size() >= 2) pool.push_back(s);
  });
  std::vector<OrderedHypergraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<VertexSet> edges;
    for (int v = 1; v <= n; ++v) edges.push_back(VertexSet::singleton(v));
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(pool[i]);
    OrderedHypergraph h(n, edges);
    if (nestorw::is_connected(h)) out.push_back(std::move(h));
  }
  return out;
}

// Connected atomic hypergraphs on at most n vertices with pairwise distinct saturations.
inline std::vector<OrderedHypergraph> distinct_building_sets(int max_n) {
  std::vector<OrderedHypergraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<VertexSet>> seen;
    for (OrderedHypergraph& h : all_connected(n)) {
      if (std::find(seen.begin(), seen.end(), h.saturation()) != seen.end()) continue;
      seen.push_back(h.saturation());
      out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace fixtures
