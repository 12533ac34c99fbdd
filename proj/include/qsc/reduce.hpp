#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cmath>
#include <vector>

#include "qsc/coloring.hpp"
#include "qsc/errors.hpp"
#include "qsc/graph.hpp"

namespace qsc {

// ---------------------------------------------------------------------------
// Reduced graphs

enum class ReduceMode { sum, mean };

struct ReducedGraph {
  Eigen::MatrixXd weights;  // k x k
  ReduceMode mode = ReduceMode::sum;
  std::vector<std::size_t> sizes;  // |P_i|
};

/// w_hat(i,j) = w(P_i, P_j); mean mode divides by |P_i| * |P_j|.
ReducedGraph reduced_graph(const WeightedDigraph& g, const Coloring& coloring,
                           ReduceMode mode = ReduceMode::sum);

// ---------------------------------------------------------------------------
// Linear programs: maximize c^T x subject to A x <= b, x >= 0.

template <typename Scalar>
struct LinearProgramT {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<Eigen::Triplet<Scalar>> entries;  // duplicates are summed
  Vector b;
  Vector c;

  Eigen::SparseMatrix<Scalar> matrix() const {
    Eigen::SparseMatrix<Scalar> a(rows, cols);
    a.setFromTriplets(entries.begin(), entries.end());
    return a;
  }

  Dense dense() const { return Dense(matrix()); }

  void check() const {
    if (rows < 0 || cols < 0) throw ParameterError("negative LP dimensions");
    if (b.size() != rows || c.size() != cols) throw ParameterError("LP vector sizes do not match");
    for (const auto& t : entries) {
      if (t.row() < 0 || t.row() >= rows || t.col() < 0 || t.col() >= cols)
        throw ParameterError("LP entry index out of range");
      if (!std::isfinite(static_cast<double>(t.value()))) throw ParameterError("non-finite LP entry");
    }
    if (!b.allFinite() || !c.allFinite()) throw ParameterError("non-finite LP vector entry");
  }

  template <typename Other>
  LinearProgramT<Other> cast() const {
    LinearProgramT<Other> out;
    out.rows = rows;
    out.cols = cols;
    for (const auto& t : entries) out.entries.emplace_back(t.row(), t.col(), static_cast<Other>(t.value()));
    out.b = b.template cast<Other>();
    out.c = c.template cast<Other>();
    return out;
  }
};

using LinearProgram = LinearProgramT<double>;

template <typename Scalar>
LinearProgramT<Scalar> make_lp(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                               const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
                               const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c) {
  LinearProgramT<Scalar> lp;
  lp.rows = a.rows();
  lp.cols = a.cols();
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != Scalar(0)) lp.entries.emplace_back(i, j, a(i, j));
  lp.b = b;
  lp.c = c;
  lp.check();
  return lp;
}

/// The bordered matrix [[A, b], [c^T, *]]. The corner is a sentinel that no
/// sum ever touches because the last row and column are pinned singletons.
///
/// As a bipartite weighted graph, row i is node i (0..m) and column j is
/// node m+1+j (0..n); row m carries c and column n carries b.
template <typename Scalar>
struct ExtendedMatrixT {
  LinearProgramT<Scalar> base;

  Eigen::Index rows() const { return base.rows; }
  Eigen::Index cols() const { return base.cols; }
  Node row_node(Eigen::Index i) const { return static_cast<Node>(i); }
  Node col_node(Eigen::Index j) const { return static_cast<Node>(base.rows + 1 + j); }
  std::size_t num_nodes() const { return static_cast<std::size_t>(base.rows + base.cols + 2); }

  WeightedDigraph graph() const {
    GraphBuilder builder(num_nodes());
    for (const auto& t : base.entries)
      builder.add(row_node(t.row()), col_node(t.col()), static_cast<double>(t.value()));
    for (Eigen::Index i = 0; i < base.rows; ++i)
      if (base.b(i) != Scalar(0)) builder.add(row_node(i), col_node(base.cols), static_cast<double>(base.b(i)));
    for (Eigen::Index j = 0; j < base.cols; ++j)
      if (base.c(j) != Scalar(0)) builder.add(row_node(base.rows), col_node(j), static_cast<double>(base.c(j)));
    return std::move(builder).build();
  }
};

using ExtendedMatrix = ExtendedMatrixT<double>;

template <typename Scalar>
ExtendedMatrixT<Scalar> extend(LinearProgramT<Scalar> lp) {
  return {std::move(lp)};
}

/// Row colors P_0..P_k and column colors Q_0..Q_l of an extended matrix.
/// The last row and the last column are singleton colors with the highest
/// index on their side.
struct BipartiteColoring {
  std::vector<Color> row_color;  // size m+1
  std::vector<Color> col_color;  // size n+1
  std::size_t row_colors = 0;    // including the pinned row color
  std::size_t col_colors = 0;    // including the pinned column color

  static BipartiteColoring discrete(std::size_t m, std::size_t n);
  /// Builds from explicit row/column assignments whose pins are already last.
  static BipartiteColoring from_assignment(std::vector<Color> rows, std::vector<Color> cols);
  /// Converts a coloring of the extended matrix graph. Throws if a color
  /// mixes rows with columns or the border is not pinned.
  static BipartiteColoring from_graph_coloring(const Coloring& coloring, std::size_t m, std::size_t n);

  std::size_t reduced_rows() const { return row_colors - 1; }
  std::size_t reduced_cols() const { return col_colors - 1; }
  std::vector<std::size_t> row_sizes() const;
  std::vector<std::size_t> col_sizes() const;

  /// Coloring of the extended matrix graph: row colors first.
  Coloring to_graph_coloring() const;
  void check(std::size_t m, std::size_t n) const;
};

/// Rothko on the extended matrix graph, starting from
/// {rows}, {columns}, {last row}, {last column}. The color budget counts all
/// colors on both sides including the two pins; the mean is always
/// arithmetic because matrix entries may be negative.
BipartiteColoring color_lp(const ExtendedMatrix& ext, const RothkoParams& params);

/// q-error of a bipartite coloring, measured on the extended matrix graph.
ErrorReport q_error(const ExtendedMatrix& ext, const BipartiteColoring& bc);

enum class Normalization { sqrt, count };

template <typename Scalar>
struct ReducedLPT {
  LinearProgramT<Scalar> lp;
  Normalization normalization = Normalization::sqrt;
};

using ReducedLP = ReducedLPT<double>;

namespace detail {

template <typename Scalar>
struct BlockSums {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b, c;
};

template <typename Scalar>
BlockSums<Scalar> block_sums(const LinearProgramT<Scalar>& lp, const BipartiteColoring& bc) {
  const auto k = static_cast<Eigen::Index>(bc.reduced_rows());
  const auto l = static_cast<Eigen::Index>(bc.reduced_cols());
  BlockSums<Scalar> s{Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(k, l),
                      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(k),
                      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(l)};
  for (const auto& t : lp.entries) s.a(bc.row_color[t.row()], bc.col_color[t.col()]) += t.value();
  for (Eigen::Index i = 0; i < lp.rows; ++i) s.b(bc.row_color[i]) += lp.b(i);
  for (Eigen::Index j = 0; j < lp.cols; ++j) s.c(bc.col_color[j]) += lp.c(j);
  return s;
}

}  // namespace detail

/// Reduced LP of a bipartite coloring.
///   sqrt:  A(P_r,Q_s)/sqrt(|P_r||Q_s|), b(P_r)/sqrt|P_r|, c(Q_s)/sqrt|Q_s|
///   count: A(P_r,Q_s)/|Q_s|,            b(P_r),          c(Q_s)/|Q_s|
template <typename Scalar>
ReducedLPT<Scalar> reduce_lp(const ExtendedMatrixT<Scalar>& ext, const BipartiteColoring& bc,
                             Normalization normalization = Normalization::sqrt) {
  using std::sqrt;
  const LinearProgramT<Scalar>& lp = ext.base;
  bc.check(static_cast<std::size_t>(lp.rows), static_cast<std::size_t>(lp.cols));
  auto sums = detail::block_sums(lp, bc);
  const auto rs = bc.row_sizes();
  const auto cs = bc.col_sizes();
  const auto k = sums.a.rows();
  const auto l = sums.a.cols();

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row_scale(k), col_scale(l), b_scale(k);
  for (Eigen::Index r = 0; r < k; ++r) {
    const Scalar size = static_cast<Scalar>(rs[r]);
    row_scale(r) = normalization == Normalization::sqrt ? Scalar(1) / sqrt(size) : Scalar(1);
    b_scale(r) = row_scale(r);
  }
  for (Eigen::Index s = 0; s < l; ++s) {
    const Scalar size = static_cast<Scalar>(cs[s]);
    col_scale(s) = normalization == Normalization::sqrt ? Scalar(1) / sqrt(size) : Scalar(1) / size;
  }

  ReducedLPT<Scalar> out;
  out.normalization = normalization;
  out.lp = make_lp<Scalar>(row_scale.asDiagonal() * sums.a * col_scale.asDiagonal(),
                           b_scale.cwiseProduct(sums.b), col_scale.cwiseProduct(sums.c));
  return out;
}

template <typename Scalar>
struct LiftMatricesT {
  Eigen::SparseMatrix<Scalar> u;  // k x m, U(r,i) = [i in P_r] / sqrt|P_r|
  Eigen::SparseMatrix<Scalar> v;  // l x n, V(s,j) = [j in Q_s] / sqrt|Q_s|
};

template <typename Scalar = double>
LiftMatricesT<Scalar> lift_matrices(const BipartiteColoring& bc) {
  using std::sqrt;
  const auto m = static_cast<Eigen::Index>(bc.row_color.size()) - 1;
  const auto n = static_cast<Eigen::Index>(bc.col_color.size()) - 1;
  const auto rs = bc.row_sizes();
  const auto cs = bc.col_sizes();
  std::vector<Eigen::Triplet<Scalar>> ut, vt;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Color r = bc.row_color[i];
    ut.emplace_back(r, i, Scalar(1) / sqrt(static_cast<Scalar>(rs[r])));
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    const Color s = bc.col_color[j];
    vt.emplace_back(s, j, Scalar(1) / sqrt(static_cast<Scalar>(cs[s])));
  }
  LiftMatricesT<Scalar> out{Eigen::SparseMatrix<Scalar>(static_cast<Eigen::Index>(bc.reduced_rows()), m),
                            Eigen::SparseMatrix<Scalar>(static_cast<Eigen::Index>(bc.reduced_cols()), n)};
  out.u.setFromTriplets(ut.begin(), ut.end());
  out.v.setFromTriplets(vt.begin(), vt.end());
  return out;
}

/// Lifting error of a sqrt-normalized reduction:
///   D = A V^T - U^T A_hat,  d1 = b - U^T b_hat,
///   E = U A - A_hat V,      e2 = c - V^T c_hat.
/// bounds_ok checks |D(i,s)| <= q/sqrt|Q_s| and |E(r,j)| <= q/sqrt|P_r|
/// (the border blocks have size one) with q the measured max q-error.
template <typename Scalar>
struct ErrorMatricesT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> d;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d1;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> e;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> e2;
  double q = 0.0;
  bool bounds_ok = false;
};

template <typename Scalar>
ErrorMatricesT<Scalar> error_matrices(const ExtendedMatrixT<Scalar>& ext, const BipartiteColoring& bc,
                                      const ReducedLPT<Scalar>& reduced) {
  using std::abs;
  using std::sqrt;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (reduced.normalization != Normalization::sqrt)
    throw ParameterError("error matrices are defined for the sqrt normalization");
  const auto& lp = ext.base;
  bc.check(static_cast<std::size_t>(lp.rows), static_cast<std::size_t>(lp.cols));

  const auto lift = lift_matrices<Scalar>(bc);
  const Dense a = lp.dense();
  const Dense a_hat = reduced.lp.dense();
  const Dense ut = Dense(lift.u).transpose();
  const Dense vt = Dense(lift.v).transpose();

  ErrorMatricesT<Scalar> out;
  out.d = a * vt - ut * a_hat;
  out.d1 = lp.b - ut * reduced.lp.b;
  out.e = Dense(lift.u) * a - a_hat * Dense(lift.v);
  out.e2 = lp.c - vt * reduced.lp.c;

  if constexpr (std::is_same_v<Scalar, double>) {
    out.q = q_error(ext, bc).max_q;
  } else {
    out.q = q_error(extend(lp.template cast<double>()), bc).max_q;
  }

  const auto rs = bc.row_sizes();
  const auto cs = bc.col_sizes();
  const Scalar q = static_cast<Scalar>(out.q);
  const Scalar slack = Scalar(1e-9) * (Scalar(1) + q + (a.size() ? a.cwiseAbs().maxCoeff() : Scalar(0)));
  bool ok = true;
  for (Eigen::Index i = 0; i < out.d.rows(); ++i)
    for (Eigen::Index s = 0; s < out.d.cols(); ++s)
      ok = ok && abs(out.d(i, s)) <= q / sqrt(static_cast<Scalar>(cs[s])) + slack;
  for (Eigen::Index r = 0; r < out.e.rows(); ++r)
    for (Eigen::Index j = 0; j < out.e.cols(); ++j)
      ok = ok && abs(out.e(r, j)) <= q / sqrt(static_cast<Scalar>(rs[r])) + slack;
  ok = ok && (out.d1.size() == 0 || out.d1.cwiseAbs().maxCoeff() <= q + slack);
  ok = ok && (out.e2.size() == 0 || out.e2.cwiseAbs().maxCoeff() <= q + slack);
  out.bounds_ok = ok;
  return out;
}

}  // namespace qsc
