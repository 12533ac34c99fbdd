#include "qsc/coloring.hpp"

#include <algorithm>
#include <cmath>

#include "qsc/errors.hpp"

namespace qsc {

Coloring::Coloring(std::vector<Color> color_of, std::vector<Color> pinned)
    : color_of_(std::move(color_of)) {
  Color k = 0;
  for (Color c : color_of_) k = std::max<Color>(k, c + 1);
  classes_.resize(k);
  for (Node v = 0; v < color_of_.size(); ++v) classes_[color_of_[v]].push_back(v);
  for (const NodeSet& cls : classes_)
    if (cls.empty()) throw ParameterError("coloring uses non-dense color indices");

  std::sort(pinned.begin(), pinned.end());
  pinned.erase(std::unique(pinned.begin(), pinned.end()), pinned.end());
  for (Color c : pinned) {
    if (c >= k) throw ParameterError("pinned color out of range");
    if (classes_[c].size() != 1) throw ParameterError("pinned color is not a singleton");
  }
  pinned_ = std::move(pinned);
}

Coloring Coloring::uniform(std::size_t n) { return Coloring(std::vector<Color>(n, 0)); }

Coloring Coloring::discrete(std::size_t n) {
  std::vector<Color> colors(n);
  for (std::size_t v = 0; v < n; ++v) colors[v] = static_cast<Color>(v);
  return Coloring(std::move(colors));
}

Coloring Coloring::with_pins(std::size_t n, const NodeSet& pins) {
  for (Node p : pins)
    if (p >= n) throw ParameterError("pinned node out of range");
  const NodeSet sorted = make_node_set(pins);
  const bool has_rest = sorted.size() < n;
  std::vector<Color> colors(n, 0);
  std::vector<Color> pinned;
  Color next = has_rest ? 1 : 0;
  for (Node p : sorted) {
    pinned.push_back(next);
    colors[p] = next++;
  }
  return Coloring(std::move(colors), std::move(pinned));
}

bool Coloring::is_pinned(Color c) const {
  return std::binary_search(pinned_.begin(), pinned_.end(), c);
}

Coloring Coloring::canonical() const {
  std::vector<Color> remap(num_colors(), std::numeric_limits<Color>::max());
  Color next = 0;
  std::vector<Color> colors(color_of_.size());
  for (Node v = 0; v < color_of_.size(); ++v) {
    Color& r = remap[color_of_[v]];
    if (r == std::numeric_limits<Color>::max()) r = next++;
    colors[v] = r;
  }
  std::vector<Color> pinned;
  for (Color c : pinned_) pinned.push_back(remap[c]);
  return Coloring(std::move(colors), std::move(pinned));
}

bool Coloring::refines(const Coloring& coarser) const {
  if (coarser.num_nodes() != num_nodes()) return false;
  for (const NodeSet& cls : classes_)
    for (Node v : cls)
      if (coarser.color(v) != coarser.color(cls.front())) return false;
  return true;
}

bool Coloring::same_partition(const Coloring& other) const {
  return num_colors() == other.num_colors() && refines(other) && other.refines(*this);
}

namespace {

struct BlockStats {
  Eigen::MatrixXd upper;
  Eigen::MatrixXd lower;
  Eigen::MatrixXi nonzero;  // members of P_i with nonzero degree into P_j
};

BlockStats block_stats(const WeightedDigraph& g, const Coloring& coloring, Direction d) {
  const auto k = static_cast<Eigen::Index>(coloring.num_colors());
  const double inf = std::numeric_limits<double>::infinity();
  BlockStats s{Eigen::MatrixXd::Constant(k, k, -inf), Eigen::MatrixXd::Constant(k, k, inf),
               Eigen::MatrixXi::Zero(k, k)};
  Eigen::MatrixXi touched = Eigen::MatrixXi::Zero(k, k);

  std::vector<double> scratch(k, 0.0);
  std::vector<char> mark(k, 0);
  std::vector<Color> hit;
  for (Node v = 0; v < g.num_nodes(); ++v) {
    const Color i = coloring.color(v);
    for (const Arc& a : g.arcs(v, d)) {
      const Color j = coloring.color(a.node);
      if (!mark[j]) {
        mark[j] = 1;
        hit.push_back(j);
      }
      scratch[j] += a.weight;
    }
    for (Color j : hit) {
      const double deg = scratch[j];
      s.upper(i, j) = std::max(s.upper(i, j), deg);
      s.lower(i, j) = std::min(s.lower(i, j), deg);
      touched(i, j) += 1;
      if (deg != 0.0) s.nonzero(i, j) += 1;
      scratch[j] = 0.0;
      mark[j] = 0;
    }
    hit.clear();
  }
  // Members without any arc into P_j have degree zero.
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto size = static_cast<int>(coloring.members(static_cast<Color>(i)).size());
    for (Eigen::Index j = 0; j < k; ++j) {
      if (touched(i, j) < size) {
        s.upper(i, j) = std::max(s.upper(i, j), 0.0);
        s.lower(i, j) = std::min(s.lower(i, j), 0.0);
      }
    }
  }
  return s;
}

ErrorReport make_report(BlockStats out, BlockStats in, const Coloring& coloring, double alpha,
                        double beta) {
  ErrorReport r;
  r.upper_out = std::move(out.upper);
  r.lower_out = std::move(out.lower);
  r.upper_in = std::move(in.upper);
  r.lower_in = std::move(in.lower);

  const auto k = r.upper_out.rows();
  std::vector<double> size_alpha(k), size_beta(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double size = static_cast<double>(coloring.members(static_cast<Color>(i)).size());
    size_alpha[i] = std::pow(size, alpha);
    size_beta[i] = std::pow(size, beta);
  }

  double best_weighted = -1.0;
  double sum = 0.0;
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      for (Direction d : {Direction::out, Direction::in}) {
        const double err = r.upper(d)(i, j) - r.lower(d)(i, j);
        r.max_q = std::max(r.max_q, err);
        if (r.upper(d)(i, j) > 0.0) {
          sum += err;
          ++count;
        }
        const double weighted = err * size_alpha[i] * size_beta[j];
        if (weighted > best_weighted) {
          best_weighted = weighted;
          r.witness = {static_cast<Color>(i), static_cast<Color>(j), d};
        }
      }
    }
  }
  r.mean_q = count == 0 ? 0.0 : sum / static_cast<double>(count);

  // Extreme exponents can flush every weight to zero; fall back to the
  // unweighted maximum so that the witness still carries an error.
  if (best_weighted <= 0.0 && r.max_q > 0.0) {
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        for (Direction d : {Direction::out, Direction::in})
          if (r.upper(d)(i, j) - r.lower(d)(i, j) == r.max_q) {
            r.witness = {static_cast<Color>(i), static_cast<Color>(j), d};
            return r;
          }
  }
  return r;
}

ErrorReport weighted_report(const WeightedDigraph& g, const Coloring& coloring, double alpha,
                            double beta) {
  return make_report(block_stats(g, coloring, Direction::out),
                     block_stats(g, coloring, Direction::in), coloring, alpha, beta);
}

double split_threshold(const std::vector<double>& degrees, MeanKind kind) {
  double acc = 0.0;
  if (kind == MeanKind::arithmetic) {
    for (double d : degrees) acc += d;
    return acc / static_cast<double>(degrees.size());
  }
  // log(1 + d) keeps zero degrees inside the domain of the logarithm.
  for (double d : degrees) acc += std::log1p(d);
  return std::expm1(acc / static_cast<double>(degrees.size()));
}

}  // namespace

ErrorReport q_error(const WeightedDigraph& g, const Coloring& coloring) {
  if (coloring.num_nodes() != g.num_nodes())
    throw ParameterError("coloring size does not match graph");
  return weighted_report(g, coloring, 0.0, 0.0);
}

RothkoResult rothko(const WeightedDigraph& g, const RothkoParams& params,
                    const RothkoObserver& observer) {
  if (params.max_colors < 1 + params.pinned.size())
    throw ParameterError("color budget must exceed the number of pinned nodes");
  return rothko(g, params, Coloring::with_pins(g.num_nodes(), params.pinned), observer);
}

RothkoResult rothko(const WeightedDigraph& g, const RothkoParams& params, Coloring initial,
                    const RothkoObserver& observer) {
  if (initial.num_nodes() != g.num_nodes())
    throw ParameterError("initial coloring size does not match graph");
  if (params.max_colors < 1) throw ParameterError("color budget must be positive");
  if (!(params.eps >= 0.0)) throw ParameterError("eps must be nonnegative");
  if (params.mean == MeanKind::geometric && g.has_negative_weights())
    throw ParameterError("geometric mean requires nonnegative weights");

  const std::size_t n = g.num_nodes();
  std::vector<Color> color_of = initial.color_of();
  const std::vector<Color> pinned = initial.pinned();
  std::vector<NodeSet> classes = initial.classes();

  RothkoResult result;
  result.coloring = std::move(initial);
  result.report = weighted_report(g, result.coloring, params.alpha, params.beta);

  std::vector<double> degrees;
  while (classes.size() < params.max_colors && classes.size() < n &&
         result.report.max_q > params.eps) {
    const Witness w = result.report.witness;
    const NodeSet& members = classes[w.source];

    degrees.assign(members.size(), 0.0);
    for (std::size_t m = 0; m < members.size(); ++m)
      for (const Arc& a : g.arcs(members[m], w.direction))
        if (color_of[a.node] == w.target) degrees[m] += a.weight;

    double threshold = split_threshold(degrees, params.mean);
    auto eject_count = std::count_if(degrees.begin(), degrees.end(),
                                     [&](double d) { return d > threshold; });
    if (eject_count == 0 || eject_count == static_cast<long>(degrees.size())) {
      // Rounding put every member on one side; split off the minimum instead.
      threshold = *std::min_element(degrees.begin(), degrees.end());
    }

    NodeSet retain, eject;
    for (std::size_t m = 0; m < members.size(); ++m)
      (degrees[m] <= threshold ? retain : eject).push_back(members[m]);

    const auto fresh = static_cast<Color>(classes.size());
    for (Node v : eject) color_of[v] = fresh;
    classes[w.source] = std::move(retain);
    classes.push_back(std::move(eject));

    result.coloring = Coloring(color_of, pinned);
    result.report = weighted_report(g, result.coloring, params.alpha, params.beta);
    ++result.splits;
    if (observer && !observer(result.coloring, result.report)) break;
  }

  // Final report is the unweighted one so its witness matches q_error().
  if (params.alpha != 0.0 || params.beta != 0.0)
    result.report = weighted_report(g, result.coloring, 0.0, 0.0);
  return result;
}

bool Relation::related(double u, double v) const {
  switch (kind) {
    case Kind::equality:
      return u == v;
    case Kind::q_stable:
      return std::abs(u - v) <= parameter;
    case Kind::eps_relative: {
      if (u == 0.0 || v == 0.0) return u == v;
      if ((u > 0) != (v > 0)) return false;
      const double a = std::abs(u), b = std::abs(v);
      return a * std::exp(-parameter) <= b && b <= a * std::exp(parameter);
    }
    case Kind::bisimulation:
      return (u == 0.0) == (v == 0.0);
  }
  return false;
}

bool validate(const WeightedDigraph& g, const Coloring& coloring, Relation relation) {
  if (coloring.num_nodes() != g.num_nodes())
    throw ParameterError("coloring size does not match graph");
  if (!(relation.parameter >= 0.0)) throw ParameterError("relation parameter must be nonnegative");

  for (Direction d : {Direction::out, Direction::in}) {
    const BlockStats s = block_stats(g, coloring, d);
    const auto k = s.upper.rows();
    for (Eigen::Index i = 0; i < k; ++i) {
      const auto size = static_cast<int>(coloring.members(static_cast<Color>(i)).size());
      for (Eigen::Index j = 0; j < k; ++j) {
        const double hi = s.upper(i, j), lo = s.lower(i, j);
        bool ok = true;
        switch (relation.kind) {
          case Relation::Kind::equality:
            ok = hi == lo;
            break;
          case Relation::Kind::q_stable:
            ok = hi - lo <= relation.parameter;
            break;
          case Relation::Kind::eps_relative:
            // Relation is monotone in the ratio, so the extreme pair decides;
            // zero is related only to itself.
            if (s.nonzero(i, j) == 0) ok = true;
            else if (s.nonzero(i, j) < size) ok = false;
            else if (lo > 0.0) ok = relation.related(lo, hi);
            else if (hi < 0.0) ok = relation.related(lo, hi);
            else ok = false;
            break;
          case Relation::Kind::bisimulation:
            ok = s.nonzero(i, j) == 0 || s.nonzero(i, j) == size;
            break;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

}  // namespace qsc
