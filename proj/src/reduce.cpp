#include "qsc/reduce.hpp"

#include <algorithm>
#include <numeric>

namespace qsc {

ReducedGraph reduced_graph(const WeightedDigraph& g, const Coloring& coloring, ReduceMode mode) {
  if (coloring.num_nodes() != g.num_nodes()) throw ParameterError("coloring size does not match graph");
  const auto k = static_cast<Eigen::Index>(coloring.num_colors());
  ReducedGraph out;
  out.mode = mode;
  out.weights = Eigen::MatrixXd::Zero(k, k);
  for (Node u = 0; u < g.num_nodes(); ++u)
    for (const Arc& a : g.out_arcs(u)) out.weights(coloring.color(u), coloring.color(a.node)) += a.weight;
  out.sizes.resize(coloring.num_colors());
  for (Color c = 0; c < coloring.num_colors(); ++c) out.sizes[c] = coloring.members(c).size();
  if (mode == ReduceMode::mean)
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        out.weights(i, j) /= static_cast<double>(out.sizes[i] * out.sizes[j]);
  return out;
}

namespace {

std::size_t dense_count(const std::vector<Color>& colors, std::size_t pin_index, const char* side) {
  if (colors.empty()) throw ParameterError(std::string("bipartite coloring has no ") + side);
  const Color pin = colors[pin_index];
  std::vector<std::size_t> sizes(colors.size() + 1, 0);
  for (Color c : colors) {
    if (c >= colors.size()) throw ParameterError(std::string(side) + " colors are not dense");
    ++sizes[c];
  }
  const std::size_t count = static_cast<std::size_t>(pin) + 1;
  for (std::size_t c = 0; c < count; ++c)
    if (sizes[c] == 0) throw ParameterError(std::string(side) + " colors are not dense");
  for (std::size_t c = count; c < sizes.size(); ++c)
    if (sizes[c] != 0) throw ParameterError(std::string("pinned ") + side + " color must be the last one");
  if (sizes[pin] != 1) throw ParameterError(std::string("border ") + side + " must be a singleton color");
  return count;
}

std::vector<std::size_t> sizes_of(const std::vector<Color>& colors, std::size_t count) {
  std::vector<std::size_t> sizes(count, 0);
  for (Color c : colors) ++sizes[c];
  return sizes;
}

}  // namespace

BipartiteColoring BipartiteColoring::discrete(std::size_t m, std::size_t n) {
  std::vector<Color> rows(m + 1), cols(n + 1);
  std::iota(rows.begin(), rows.end(), Color{0});
  std::iota(cols.begin(), cols.end(), Color{0});
  return from_assignment(std::move(rows), std::move(cols));
}

BipartiteColoring BipartiteColoring::from_assignment(std::vector<Color> rows, std::vector<Color> cols) {
  BipartiteColoring bc;
  bc.row_colors = dense_count(rows, rows.size() - (rows.empty() ? 0 : 1), "row");
  bc.col_colors = dense_count(cols, cols.size() - (cols.empty() ? 0 : 1), "column");
  bc.row_color = std::move(rows);
  bc.col_color = std::move(cols);
  return bc;
}

BipartiteColoring BipartiteColoring::from_graph_coloring(const Coloring& coloring, std::size_t m,
                                                         std::size_t n) {
  if (coloring.num_nodes() != m + n + 2) throw ParameterError("coloring size does not match extended matrix");
  // Renumber each side by first occurrence, with the border color moved last.
  auto side = [&](std::size_t offset, std::size_t count, const char* what) {
    std::vector<Color> out(count + 1);
    std::vector<std::int64_t> local(coloring.num_colors(), -1);
    const Color border = coloring.color(static_cast<Node>(offset + count));
    if (coloring.members(border).size() != 1)
      throw ParameterError(std::string("border ") + what + " is not a singleton color");
    Color next = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const Color c = coloring.color(static_cast<Node>(offset + i));
      if (local[c] < 0) local[c] = next++;
      out[i] = static_cast<Color>(local[c]);
    }
    out[count] = next;
    return std::pair{std::move(out), std::move(local)};
  };
  auto [rows, row_local] = side(0, m, "row");
  auto [cols, col_local] = side(m + 1, n, "column");
  for (std::size_t c = 0; c < coloring.num_colors(); ++c)
    if (row_local[c] >= 0 && col_local[c] >= 0) throw ParameterError("a color mixes rows and columns");
  return from_assignment(std::move(rows), std::move(cols));
}

std::vector<std::size_t> BipartiteColoring::row_sizes() const { return sizes_of(row_color, row_colors); }
std::vector<std::size_t> BipartiteColoring::col_sizes() const { return sizes_of(col_color, col_colors); }

Coloring BipartiteColoring::to_graph_coloring() const {
  std::vector<Color> colors;
  colors.reserve(row_color.size() + col_color.size());
  for (Color c : row_color) colors.push_back(c);
  for (Color c : col_color) colors.push_back(static_cast<Color>(row_colors + c));
  const std::vector<Color> pinned{static_cast<Color>(row_colors - 1),
                                  static_cast<Color>(row_colors + col_colors - 1)};
  return Coloring(std::move(colors), pinned);
}

void BipartiteColoring::check(std::size_t m, std::size_t n) const {
  if (row_color.size() != m + 1 || col_color.size() != n + 1)
    throw ParameterError("bipartite coloring does not match LP dimensions");
  if (dense_count(row_color, m, "row") != row_colors || dense_count(col_color, n, "column") != col_colors)
    throw ParameterError("bipartite coloring color counts are inconsistent");
}

BipartiteColoring color_lp(const ExtendedMatrix& ext, const RothkoParams& params) {
  const auto m = static_cast<std::size_t>(ext.rows());
  const auto n = static_cast<std::size_t>(ext.cols());
  const WeightedDigraph g = ext.graph();

  // {rows}, {columns}, {border row}, {border column}; empty sides are skipped.
  std::vector<Color> colors(g.num_nodes());
  Color next = 0;
  const Color rows = m > 0 ? next++ : 0;
  const Color cols = n > 0 ? next++ : 0;
  const Color pin_row = next++;
  const Color pin_col = next++;
  for (std::size_t i = 0; i < m; ++i) colors[ext.row_node(static_cast<Eigen::Index>(i))] = rows;
  for (std::size_t j = 0; j < n; ++j) colors[ext.col_node(static_cast<Eigen::Index>(j))] = cols;
  colors[ext.row_node(static_cast<Eigen::Index>(m))] = pin_row;
  colors[ext.col_node(static_cast<Eigen::Index>(n))] = pin_col;

  RothkoParams p = params;
  p.mean = MeanKind::arithmetic;
  p.pinned.clear();
  if (p.max_colors < next) p.max_colors = next;
  const RothkoResult result = rothko(g, p, Coloring(std::move(colors), {pin_row, pin_col}));
  return BipartiteColoring::from_graph_coloring(result.coloring, m, n);
}

ErrorReport q_error(const ExtendedMatrix& ext, const BipartiteColoring& bc) {
  bc.check(static_cast<std::size_t>(ext.rows()), static_cast<std::size_t>(ext.cols()));
  return q_error(ext.graph(), bc.to_graph_coloring());
}

}  // namespace qsc
