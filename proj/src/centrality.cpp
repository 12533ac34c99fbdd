#include "qsc/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsc/errors.hpp"

namespace qsc {

CentralityVector brandes_exact(const WeightedDigraph& g) {
  const std::size_t n = g.num_nodes();
  CentralityVector score(n, 0.0);
  std::vector<double> sigma(n), delta(n);
  std::vector<int> dist(n);
  std::vector<Node> order, queue;
  order.reserve(n);
  queue.reserve(n);

  for (Node s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    queue.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Node v = queue[head];
      order.push_back(v);
      for (const Arc& a : g.out_arcs(v)) {
        const Node w = a.node;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors of w are the in-neighbours one layer closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Node w = *it;
      for (const Arc& a : g.in_arcs(w)) {
        const Node v = a.node;
        if (dist[v] >= 0 && dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }
  return score;
}

namespace {

struct ColorArc {
  Color to;
  double per_node;  // d(i,j): arcs from P_i into P_j over |P_i|
};

std::vector<std::vector<ColorArc>> color_arcs(const WeightedDigraph& g, const Coloring& coloring) {
  const std::size_t k = coloring.num_colors();
  std::vector<std::vector<ColorArc>> out(k);
  std::vector<double> count(k, 0.0);
  std::vector<Color> touched;
  for (Color i = 0; i < k; ++i) {
    touched.clear();
    for (Node u : coloring.members(i))
      for (const Arc& a : g.out_arcs(u)) {
        if (a.node == u) continue;
        const Color j = coloring.color(a.node);
        if (count[j] == 0.0) touched.push_back(j);
        count[j] += 1.0;
      }
    std::sort(touched.begin(), touched.end());
    const auto size = static_cast<double>(coloring.members(i).size());
    for (Color j : touched) {
      out[i].push_back({j, count[j] / size});
      count[j] = 0.0;
    }
  }
  return out;
}

}  // namespace

CentralityVector approx_centrality(const WeightedDigraph& g, const Coloring& coloring) {
  const std::size_t k = coloring.num_colors();
  const auto arcs = color_arcs(g, coloring);
  std::vector<double> size(k);
  for (Color i = 0; i < k; ++i) size[i] = static_cast<double>(coloring.members(i).size());

  std::vector<double> score(k, 0.0);
  // Per layer: expected nodes reached, paths per reached node, and the
  // unreached fraction of each color just before the layer was formed.
  std::vector<std::vector<double>> reached, sigma, open;
  std::vector<double> seen(k), hits(k), paths(k), delta(k), next_delta(k);
  for (Color s = 0; s < k; ++s) {
    reached.assign(1, std::vector<double>(k, 0.0));
    sigma.assign(1, std::vector<double>(k, 0.0));
    open.assign(1, std::vector<double>(k, 0.0));
    std::fill(seen.begin(), seen.end(), 0.0);
    reached[0][s] = sigma[0][s] = seen[s] = 1.0;
    for (;;) {
      std::vector<double> frac(k), layer(k, 0.0), layer_sigma(k, 0.0);
      std::fill(hits.begin(), hits.end(), 0.0);
      std::fill(paths.begin(), paths.end(), 0.0);
      for (Color j = 0; j < k; ++j) frac[j] = std::max(0.0, 1.0 - seen[j] / size[j]);
      const auto& front = reached.back();
      const auto& front_sigma = sigma.back();
      for (Color i = 0; i < k; ++i) {
        if (front[i] <= 0.0) continue;
        for (const ColorArc& e : arcs[i]) {
          hits[e.to] += front[i] * e.per_node;
          paths[e.to] += front[i] * front_sigma[i] * e.per_node;
        }
      }
      double total = 0.0;
      for (Color j = 0; j < k; ++j) {
        layer[j] = std::min(size[j], hits[j]) * frac[j];
        if (layer[j] <= 1e-12) {
          layer[j] = 0.0;
          continue;
        }
        layer_sigma[j] = paths[j] * frac[j] / layer[j];
        total += layer[j];
      }
      if (total <= 1e-9) break;
      for (Color j = 0; j < k; ++j) seen[j] += layer[j];
      reached.push_back(std::move(layer));
      sigma.push_back(std::move(layer_sigma));
      open.push_back(std::move(frac));
    }
    std::fill(next_delta.begin(), next_delta.end(), 0.0);
    for (std::size_t l = reached.size() - 1; l >= 1; --l) {
      std::fill(delta.begin(), delta.end(), 0.0);
      if (l + 1 < reached.size()) {
        for (Color i = 0; i < k; ++i) {
          if (reached[l][i] <= 0.0) continue;
          for (const ColorArc& e : arcs[i]) {
            if (reached[l + 1][e.to] <= 0.0) continue;
            delta[i] += e.per_node * open[l + 1][e.to] * sigma[l][i] / sigma[l + 1][e.to] * (1.0 + next_delta[e.to]);
          }
        }
      }
      for (Color i = 0; i < k; ++i) score[i] += size[s] * reached[l][i] * delta[i];
      std::swap(delta, next_delta);
    }
  }
  CentralityVector out(g.num_nodes());
  for (Node v = 0; v < g.num_nodes(); ++v) out[v] = score[coloring.color(v)] / size[coloring.color(v)];
  return out;
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double mean = 0.5 * static_cast<double>(i + 1 + j);  // mean of positions i+1..j
    for (std::size_t r = i; r < j; ++r) rank[order[r]] = mean;
    i = j;
  }
  return rank;
}

std::optional<double> spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ParameterError("spearman needs equal lengths");
  if (a.size() < 2) throw ParameterError("spearman needs at least two values");
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

}  // namespace qsc
