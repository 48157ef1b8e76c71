#include "lieqr/cartan.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lieqr {

Series series_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Series::A;
  if (s == "D" || s == "d") return Series::D;
  if (s == "E" || s == "e") return Series::E;
  throw std::invalid_argument("unknown series: " + s + " (expected A, D or E)");
}

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::D: return "D";
    case Series::E: return "E";
  }
  return "?";
}

namespace {

std::vector<std::pair<int, int>> diagram_edges(Series series, int n) {
  std::vector<std::pair<int, int>> edges;
  switch (series) {
    case Series::A:
      if (n < 1) throw std::invalid_argument("A series needs rank >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Series::D:
      if (n < 4) throw std::invalid_argument("D series needs rank >= 4");
      edges.emplace_back(1, 2);
      edges.emplace_back(2, 3);
      edges.emplace_back(2, 4);
      for (int i = 4; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Series::E:
      if (n < 6 || n > 8) throw std::invalid_argument("E series needs rank 6, 7 or 8");
      edges.emplace_back(1, 3);
      edges.emplace_back(3, 4);
      edges.emplace_back(2, 4);
      for (int i = 4; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

}  // namespace

CartanDatum cartan_matrix(Series series, int rank) {
  auto edges = diagram_edges(series, rank);
  CartanDatum d;
  d.series_ = series;
  d.n_ = rank;
  d.a_.assign(rank, std::vector<int>(rank, 0));
  d.adj_.assign(rank, {});
  for (int i = 0; i < rank; ++i) d.a_[i][i] = 2;
  for (auto [u, v] : edges) {
    d.a_[u - 1][v - 1] = -1;
    d.a_[v - 1][u - 1] = -1;
    d.adj_[u - 1].push_back(v);
    d.adj_[v - 1].push_back(u);
  }
  for (auto& nb : d.adj_) std::sort(nb.begin(), nb.end());
  return d;
}

namespace {

void check_vertex(const CartanDatum& d, int v) {
  if (v < 1 || v > d.rank()) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v) + " in " + d.name());
  }
}

std::vector<int> bfs_distances(const CartanDatum& d, int from) {
  std::vector<int> dist(d.rank() + 1, -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : d.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> gamma(const CartanDatum& d, int base, int m) {
  check_vertex(d, base);
  if (m < 0) throw std::invalid_argument("gamma: m must be non-negative");
  auto dist = bfs_distances(d, base);
  std::vector<int> out;
  for (int v = 1; v <= d.rank(); ++v) {
    if (dist[v] >= 0 && dist[v] <= m) out.push_back(v);
  }
  return out;
}

int graph_distance(const CartanDatum& d, int i, int j) {
  check_vertex(d, i);
  check_vertex(d, j);
  return bfs_distances(d, i)[j];
}

std::vector<int> path(const CartanDatum& d, int i, int j) {
  check_vertex(d, i);
  check_vertex(d, j);
  auto dist_to_j = bfs_distances(d, j);
  std::vector<int> p{i};
  int cur = i;
  while (cur != j) {
    // Greedy walk towards j; neighbors are sorted, so the smallest index
    // that shortens the distance wins.
    for (int v : d.neighbors(cur)) {
      if (dist_to_j[v] == dist_to_j[cur] - 1) {
        cur = v;
        break;
      }
    }
    p.push_back(cur);
  }
  return p;
}

}  // namespace lieqr
