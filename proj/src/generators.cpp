#include "qsc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

constexpr int blowup_attempts = 32;

std::uint64_t derive_seed(std::uint64_t seed, int attempt) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::optional<WeightedDigraph> try_blowup(std::size_t groups, std::size_t gs, std::size_t degree,
                                          std::mt19937_64& rng) {
  const std::size_t n = groups * gs;
  GraphBuilder builder(n, /*undirected=*/true);
  for (std::size_t grp = 0; grp < groups; ++grp)
    for (std::size_t a = 0; a < gs; ++a)
      for (std::size_t b = a + 1; b < gs; ++b)
        builder.add(static_cast<Node>(grp * gs + a), static_cast<Node>(grp * gs + b));
  if (degree == 0) return std::move(builder).build();

  // shifts[(lo, hi)] = matchings already laid between the two groups
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> shifts;
  std::uniform_int_distribution<std::size_t> other(0, groups - 2);
  std::uniform_int_distribution<std::size_t> shift_dist(0, gs - 1);
  std::uniform_int_distribution<std::size_t> bundle_dist((7 * gs + 9) / 10, gs);
  for (std::size_t grp = 0; grp < groups; ++grp) {
    std::size_t left = degree, misses = 0;
    while (left > 0) {
      std::size_t target = other(rng);
      if (target >= grp) ++target;
      const auto key = std::minmax(grp, target);
      auto& used = shifts[{key.first, key.second}];
      if (used.size() >= gs) {
        if (++misses > 64 * groups) return std::nullopt;
        continue;
      }
      const std::size_t bundle = std::min({bundle_dist(rng), gs - used.size(), left});
      for (std::size_t r = 0; r < bundle; ++r) {
        std::size_t shift = shift_dist(rng);
        while (std::find(used.begin(), used.end(), shift) != used.end()) shift = (shift + 1) % gs;
        used.push_back(shift);
        for (std::size_t a = 0; a < gs; ++a)
          builder.add(static_cast<Node>(key.first * gs + a), static_cast<Node>(key.second * gs + (a + shift) % gs));
      }
      left -= bundle;
    }
  }
  return std::move(builder).build();
}

}  // namespace

Blowup gen_blowup(std::size_t groups, std::size_t group_size, std::size_t inter_degree, std::uint64_t seed) {
  if (groups == 0 || group_size == 0) throw ParameterError("blow-up needs at least one group and one node per group");
  if (groups == 1 && inter_degree > 0) throw ParameterError("a single group has no other groups to connect to");
  if (groups > 1 && inter_degree * groups > groups * (groups - 1) / 2 * group_size)
    throw ParameterError("too many super-edges for the group pairs available");

  std::vector<Color> group_of(groups * group_size);
  for (std::size_t v = 0; v < group_of.size(); ++v) group_of[v] = static_cast<Color>(v / group_size);
  Coloring partition(std::move(group_of));

  for (int attempt = 0; attempt < blowup_attempts; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, attempt);
    std::mt19937_64 rng(s);
    auto g = try_blowup(groups, group_size, groups == 1 ? 0 : inter_degree, rng);
    if (!g) continue;
    if (refine_stable(*g).num_colors() != groups) continue;
    return {std::move(*g), std::move(partition), s};
  }
  throw ParameterError("no blow-up with exactly " + std::to_string(groups) + " stable colors found");
}

WeightedDigraph perturb(const WeightedDigraph& g, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0)) throw ParameterError("perturbation fraction must be nonnegative");
  const std::size_t n = g.num_nodes();
  const bool sym = g.undirected();
  const std::size_t existing = g.num_edges();
  const auto add = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(existing)));

  const std::uint64_t pairs = sym ? static_cast<std::uint64_t>(n) * (n - (n ? 1 : 0)) / 2
                                  : static_cast<std::uint64_t>(n) * (n - (n ? 1 : 0));
  std::uint64_t present = 0;
  for (Node u = 0; u < n; ++u)
    for (const Arc& a : g.out_arcs(u))
      if (a.node != u && (!sym || u < a.node)) ++present;
  if (add > pairs - present) throw ParameterError("not enough free node pairs for the requested perturbation");

  GraphBuilder builder(n, sym);
  for (Node u = 0; u < n; ++u)
    for (const Arc& a : g.out_arcs(u))
      if (!sym || u <= a.node) builder.add(u, a.node, a.weight);

  auto key = [n](Node u, Node v) { return static_cast<std::uint64_t>(u) * n + v; };
  std::unordered_set<std::uint64_t> added;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Node> pick(0, n ? static_cast<Node>(n - 1) : 0);
  while (added.size() < add) {
    Node u = pick(rng);
    Node v = pick(rng);
    if (u == v) continue;
    if (sym && u > v) std::swap(u, v);
    if (g.weight(u, v) != 0.0 || !added.insert(key(u, v)).second) continue;
    builder.add(u, v, 1.0);
  }
  if (!g.labels().empty()) builder.set_labels(g.labels());
  return std::move(builder).build();
}

WeightedDigraph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw ParameterError("Barabasi-Albert needs 1 <= m < n");
  std::mt19937_64 rng(seed);
  GraphBuilder builder(n, /*undirected=*/true);
  std::vector<Node> targets(m);
  for (std::size_t i = 0; i < m; ++i) targets[i] = static_cast<Node>(i);
  std::vector<Node> repeated;
  for (std::size_t source = m; source < n; ++source) {
    for (Node t : targets) builder.add(static_cast<Node>(source), t);
    repeated.insert(repeated.end(), targets.begin(), targets.end());
    repeated.insert(repeated.end(), m, static_cast<Node>(source));
    std::set<Node> chosen;
    std::uniform_int_distribution<std::size_t> pick(0, repeated.size() - 1);
    while (chosen.size() < m) chosen.insert(repeated[pick(rng)]);
    targets.assign(chosen.begin(), chosen.end());
  }
  return std::move(builder).build();
}

std::optional<double> relative_error(double v, double v_hat) {
  if (!(v > 0.0) || !(v_hat > 0.0)) return std::nullopt;
  return std::max(v / v_hat, v_hat / v);
}

}  // namespace qsc
