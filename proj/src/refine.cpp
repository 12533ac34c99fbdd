#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <tuple>

#include "qsc/coloring.hpp"
#include "qsc/errors.hpp"

namespace qsc {

namespace {

struct Contribution {
  Node node;
  double weight;
};

/// Sums weights per node after sorting, so equal multisets give bitwise
/// equal sums regardless of adjacency order.
void accumulate_sorted(std::vector<Contribution>& contribs, std::vector<double>& sums,
                       std::vector<Node>& touched) {
  std::sort(contribs.begin(), contribs.end(), [](const Contribution& a, const Contribution& b) {
    return a.node != b.node ? a.node < b.node : a.weight < b.weight;
  });
  for (const Contribution& c : contribs) {
    if (touched.empty() || touched.back() != c.node) touched.push_back(c.node);
    sums[c.node] += c.weight;
  }
}

}  // namespace

Coloring refine_stable(const WeightedDigraph& g) {
  return refine_stable(g, Coloring::uniform(g.num_nodes()));
}

Coloring refine_stable(const WeightedDigraph& g, const Coloring& initial) {
  const std::size_t n = g.num_nodes();
  if (initial.num_nodes() != n) throw ParameterError("initial coloring size does not match graph");
  if (n == 0) return initial;

  std::vector<Color> color_of = initial.color_of();
  std::vector<NodeSet> classes = initial.classes();
  std::deque<Color> queue;
  std::vector<char> queued(classes.size(), 1);
  for (Color c = 0; c < classes.size(); ++c) queue.push_back(c);

  std::vector<double> out_key(n, 0.0), in_key(n, 0.0);
  std::vector<char> is_touched(n, 0);
  std::vector<Contribution> contribs;
  std::vector<Node> touched_out, touched_in;

  while (!queue.empty()) {
    const Color splitter = queue.front();
    queue.pop_front();
    queued[splitter] = 0;

    // out_key[x] = w(x, S), in_key[x] = w(S, x)
    touched_out.clear();
    touched_in.clear();
    contribs.clear();
    for (Node y : classes[splitter])
      for (const Arc& a : g.in_arcs(y)) contribs.push_back({a.node, a.weight});
    accumulate_sorted(contribs, out_key, touched_out);
    contribs.clear();
    for (Node y : classes[splitter])
      for (const Arc& a : g.out_arcs(y)) contribs.push_back({a.node, a.weight});
    accumulate_sorted(contribs, in_key, touched_in);

    std::vector<Color> affected;
    for (auto* list : {&touched_out, &touched_in})
      for (Node x : *list) {
        if (!is_touched[x]) {
          is_touched[x] = 1;
          affected.push_back(color_of[x]);
        }
      }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

    for (Color c : affected) {
      if (classes[c].size() == 1) continue;
      using Key = std::pair<double, double>;
      std::map<Key, NodeSet> parts;
      for (Node v : classes[c]) parts[{out_key[v], in_key[v]}].push_back(v);
      if (parts.size() == 1) continue;
      bool first = true;
      for (auto& [key, members] : parts) {
        Color target = c;
        if (first) {
          classes[c] = std::move(members);
          first = false;
        } else {
          target = static_cast<Color>(classes.size());
          for (Node v : members) color_of[v] = target;
          classes.push_back(std::move(members));
          queued.push_back(0);
        }
        if (!queued[target]) {
          queued[target] = 1;
          queue.push_back(target);
        }
      }
    }

    for (auto* list : {&touched_out, &touched_in})
      for (Node x : *list) {
        out_key[x] = 0.0;
        in_key[x] = 0.0;
        is_touched[x] = 0;
      }
  }

  std::vector<Color> pinned;
  for (Color c : initial.pinned()) pinned.push_back(color_of[initial.members(c).front()]);
  return Coloring(std::move(color_of), std::move(pinned)).canonical();
}

Coloring refine_congruence(const WeightedDigraph& g, double cap) {
  return refine_congruence(g, cap, Coloring::uniform(g.num_nodes()));
}

Coloring refine_congruence(const WeightedDigraph& g, double cap, const Coloring& initial) {
  const std::size_t n = g.num_nodes();
  if (initial.num_nodes() != n) throw ParameterError("initial coloring size does not match graph");
  if (!(cap >= 0.0)) throw ParameterError("congruence cap must be nonnegative");

  // Signature of a node: its color, then the capped per-color degree sums
  // for each direction, split by a marker entry.
  using Entry = std::pair<Color, double>;
  using Signature = std::vector<Entry>;
  constexpr Color marker = std::numeric_limits<Color>::max();

  Coloring current = initial.canonical();
  std::vector<std::pair<Color, double>> scratch;
  for (;;) {
    std::map<Signature, Color> ids;
    std::vector<Color> next(n);
    for (Node v = 0; v < n; ++v) {
      Signature sig{{current.color(v), 0.0}};
      for (Direction d : {Direction::out, Direction::in}) {
        scratch.clear();
        for (const Arc& a : g.arcs(v, d)) scratch.emplace_back(current.color(a.node), a.weight);
        std::sort(scratch.begin(), scratch.end());
        for (std::size_t i = 0; i < scratch.size();) {
          const Color c = scratch[i].first;
          double sum = 0.0;
          for (; i < scratch.size() && scratch[i].first == c; ++i) sum += scratch[i].second;
          const double capped = std::min(sum, cap);
          if (capped != 0.0) sig.emplace_back(c, capped);
        }
        sig.emplace_back(marker, 0.0);
      }
      auto [it, inserted] = ids.emplace(std::move(sig), static_cast<Color>(ids.size()));
      next[v] = it->second;
    }
    std::vector<Color> pinned;
    for (Color c : current.pinned()) pinned.push_back(next[current.members(c).front()]);
    Coloring refined = Coloring(std::move(next), std::move(pinned)).canonical();
    if (refined.num_colors() == current.num_colors()) return refined;
    current = std::move(refined);
  }
}

Coloring refine_wl2(const WeightedDigraph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return Coloring();

  std::vector<std::uint32_t> pair(n * n);
  {
    std::map<std::tuple<bool, double, double>, std::uint32_t> ids;
    for (Node u = 0; u < n; ++u)
      for (Node v = 0; v < n; ++v) {
        auto key = std::make_tuple(u == v, g.weight(u, v), g.weight(v, u));
        auto [it, _] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
        pair[u * n + v] = it->second;
      }
  }

  auto count_classes = [&](const std::vector<std::uint32_t>& p) {
    std::vector<std::uint32_t> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  };

  std::size_t classes = count_classes(pair);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> multiset(n);
  for (;;) {
    std::map<std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>,
             std::uint32_t>
        ids;
    std::vector<std::uint32_t> next(n * n);
    for (Node u = 0; u < n; ++u)
      for (Node v = 0; v < n; ++v) {
        for (Node w = 0; w < n; ++w) multiset[w] = {pair[u * n + w], pair[w * n + v]};
        std::sort(multiset.begin(), multiset.end());
        auto [it, _] = ids.emplace(std::make_pair(pair[u * n + v], multiset),
                                   static_cast<std::uint32_t>(ids.size()));
        next[u * n + v] = it->second;
      }
    pair = std::move(next);
    const std::size_t refined = ids.size();
    if (refined == classes) break;
    classes = refined;
  }

  std::map<std::uint32_t, Color> node_ids;
  std::vector<Color> colors(n);
  for (Node v = 0; v < n; ++v) {
    auto [it, _] = node_ids.emplace(pair[v * n + v], static_cast<Color>(node_ids.size()));
    colors[v] = it->second;
  }
  return Coloring(std::move(colors));
}

}  // namespace qsc
