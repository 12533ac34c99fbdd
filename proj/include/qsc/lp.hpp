#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/reduce.hpp"

namespace qsc {

enum class LPStatus { optimal, infeasible, unbounded };

const char* to_string(LPStatus status);

template <typename Scalar>
struct LPSolutionT {
  LPStatus status = LPStatus::infeasible;
  Scalar objective = Scalar(0);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
  std::size_t pivots = 0;
};

using LPSolution = LPSolutionT<double>;

struct SimplexOptions {
  static constexpr Eigen::Index max_dimension = 2000;

  double pivot_tol = 1e-9;
  // Consecutive degenerate pivots after which pricing switches to Bland's rule.
  std::size_t degenerate_limit = 50;
};

namespace detail {

/// Dense two-phase tableau simplex for max c^T x, A x <= b, x >= 0.
/// Columns are [x | slack | artificial | rhs]; the last row holds z_j - c_j.
template <typename Scalar>
class Tableau {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Tableau(const LinearProgramT<Scalar>& lp, const SimplexOptions& opt)
      : m_(lp.rows), n_(lp.cols), opt_(opt), tol_(static_cast<Scalar>(opt.pivot_tol)) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = lp.dense();
    for (Eigen::Index i = 0; i < m_; ++i)
      if (lp.b(i) < Scalar(0)) ++art_;
    width_ = n_ + m_ + art_;
    t_ = Matrix::Zero(m_ + 1, width_ + 1);
    basis_.resize(static_cast<std::size_t>(m_));
    Eigen::Index next_art = n_ + m_;
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Scalar sign = lp.b(i) < Scalar(0) ? Scalar(-1) : Scalar(1);
      t_.row(i).head(n_) = sign * a.row(i);
      t_(i, n_ + i) = sign;
      t_(i, width_) = sign * lp.b(i);
      if (sign < Scalar(0)) {
        t_(i, next_art) = Scalar(1);
        basis_[i] = next_art++;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  LPSolutionT<Scalar> solve(const LinearProgramT<Scalar>& lp) {
    LPSolutionT<Scalar> out;
    out.x = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n_);

    if (art_ > 0) {
      // Phase one: maximize -sum(artificials).
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1> cost = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(width_);
      cost.tail(art_).setConstant(Scalar(-1));
      price(cost);
      run(n_ + m_ + art_);
      using std::abs;
      const Scalar scale = Scalar(1) + (m_ > 0 ? lp.b.cwiseAbs().maxCoeff() : Scalar(0));
      if (-t_(m_, width_) > Scalar(1e-7) * scale) {
        out.status = LPStatus::infeasible;
        out.pivots = pivots_;
        return out;
      }
      drive_out_artificials();
    }

    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> cost = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(width_);
    cost.head(n_) = lp.c;
    price(cost);
    if (!run(n_ + m_)) {
      out.status = LPStatus::unbounded;
      out.pivots = pivots_;
      return out;
    }

    for (Eigen::Index i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.x(basis_[i]) = std::max(t_(i, width_), Scalar(0));
    out.status = LPStatus::optimal;
    out.objective = lp.c.dot(out.x);
    out.pivots = pivots_;
    return out;
  }

 private:
  void price(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& cost) {
    t_.row(m_).setZero();
    t_.row(m_).head(width_) = -cost.transpose();
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Scalar cb = cost(basis_[i]);
      if (cb != Scalar(0)) t_.row(m_) += cb * t_.row(i);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const Scalar f = t_(i, col);
      if (f != Scalar(0)) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
    ++pivots_;
  }

  /// Pivots until optimal (true) or unbounded (false); only the first
  /// `columns` columns may enter.
  bool run(Eigen::Index columns) {
    std::size_t degenerate = 0;
    const std::size_t cap = 100 * static_cast<std::size_t>(m_ + width_ + 10);
    for (std::size_t iter = 0;; ++iter) {
      if (iter > cap) throw std::runtime_error("simplex iteration limit exceeded");
      const bool bland = degenerate >= opt_.degenerate_limit;
      Eigen::Index enter = -1;
      Scalar best = -tol_;
      for (Eigen::Index j = 0; j < columns; ++j) {
        if (t_(m_, j) < best) {
          enter = j;
          best = t_(m_, j);
          if (bland) break;
        }
      }
      if (enter < 0) return true;

      Eigen::Index leave = -1;
      Scalar ratio = Scalar(0);
      for (Eigen::Index i = 0; i < m_; ++i) {
        const Scalar a = t_(i, enter);
        if (a <= tol_) continue;
        const Scalar r = t_(i, width_) / a;
        if (leave < 0 || r < ratio || (r == ratio && basis_[i] < basis_[leave])) {
          leave = i;
          ratio = r;
        }
      }
      if (leave < 0) return false;
      degenerate = ratio <= tol_ ? degenerate + 1 : 0;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    using std::abs;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + m_) continue;
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n_ + m_; ++j)
        if (abs(t_(i, j)) > tol_ && (col < 0 || abs(t_(i, j)) > abs(t_(i, col)))) col = j;
      // A row without structural entries is redundant; its artificial stays at zero.
      if (col >= 0) pivot(i, col);
    }
  }

  Eigen::Index m_, n_;
  Eigen::Index art_ = 0;
  Eigen::Index width_ = 0;
  SimplexOptions opt_;
  Scalar tol_;
  Matrix t_;
  std::vector<Eigen::Index> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

/// Solves max c^T x subject to A x <= b, x >= 0 with a deterministic
/// two-phase dense simplex (Dantzig pricing, Bland's rule after a run of
/// degenerate pivots). Throws CapacityError above SimplexOptions::max_dimension
/// rows or columns; export to MPS for larger programs.
template <typename Scalar>
LPSolutionT<Scalar> solve_lp(const LinearProgramT<Scalar>& lp, const SimplexOptions& options = {}) {
  lp.check();
  if (lp.rows > SimplexOptions::max_dimension || lp.cols > SimplexOptions::max_dimension)
    throw CapacityError("LP of size " + std::to_string(lp.rows) + "x" + std::to_string(lp.cols) +
                        " exceeds the dense solver limit; export it to MPS for an external solver");
  detail::Tableau<Scalar> tableau(lp, options);
  return tableau.solve(lp);
}

// ---------------------------------------------------------------------------
// Fixed MPS

struct MpsModel {
  std::string name;
  LinearProgram lp;
  /// True when the file minimized; lp then maximizes the negated objective.
  bool objective_negated = false;
};

/// Writes lp as a maximization (OBJSENSE MAX) with rows R1..Rm, columns
/// X1..Xn and objective row COST. Values use the shortest round-trip form.
void write_mps(std::ostream& out, const LinearProgram& lp, const std::string& name = "QSC");
void export_mps(const LinearProgram& lp, const std::string& path, const std::string& name = "QSC");

/// Reads N/L/G/E rows, COLUMNS, RHS and UP/LO 0/PL bounds. G rows are
/// negated, E rows become a pair of inequalities and UP bounds become rows.
/// RANGES, MARKER lines, and FR/MI/FX or nonzero LO bounds are rejected.
MpsModel read_mps(std::istream& in);
MpsModel read_mps_file(const std::string& path);

}  // namespace qsc
