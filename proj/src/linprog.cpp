#include "ipe/linprog.hpp"

#include <cmath>
#include <limits>

namespace ipe {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kFeasEps = 1e-7;

class Tableau {
 public:
  Tableau(const LinearProgram& lp) {
    const int n = static_cast<int>(lp.objective.size());
    const int m = static_cast<int>(lp.constraints.size());
    n_struct_ = n;
    m_ = m;

    // One slack per inequality row, sign-adjusted so every rhs is
    // nonnegative; rows without a usable +1 slack get an artificial.
    std::vector<int> slack_sign(m, 0);
    std::vector<bool> needs_artificial(m, false);
    int n_slack = 0;
    for (int i = 0; i < m; ++i) {
      const auto& con = lp.constraints[i];
      if (static_cast<int>(con.coeffs.size()) != n) {
        raise(Errc::dimension_mismatch, "constraint arity mismatch");
      }
      const double flip = con.rhs < 0.0 ? -1.0 : 1.0;
      if (con.rel == Relation::eq) {
        needs_artificial[i] = true;
      } else {
        const double sign =
            (con.rel == Relation::le ? 1.0 : -1.0) * flip;
        slack_sign[i] = static_cast<int>(sign);
        if (sign < 0.0) needs_artificial[i] = true;
        ++n_slack;
      }
    }
    int n_art = 0;
    for (int i = 0; i < m; ++i) {
      if (needs_artificial[i]) ++n_art;
    }

    cols_ = n + n_slack + n_art;
    rhs_col_ = cols_;
    obj_row_ = m;
    phase_row_ = m + 1;
    t_ = Eigen::MatrixXd::Zero(m + 2, cols_ + 1);
    basis_.assign(m, -1);
    is_artificial_.assign(cols_, false);

    int slack_at = n;
    int art_at = n + n_slack;
    for (int i = 0; i < m; ++i) {
      const auto& con = lp.constraints[i];
      const double flip = con.rhs < 0.0 ? -1.0 : 1.0;
      for (int j = 0; j < n; ++j) t_(i, j) = flip * con.coeffs[j];
      t_(i, rhs_col_) = flip * con.rhs;
      if (con.rel != Relation::eq) {
        t_(i, slack_at) = slack_sign[i];
        if (slack_sign[i] > 0) basis_[i] = slack_at;
        ++slack_at;
      }
      if (needs_artificial[i]) {
        t_(i, art_at) = 1.0;
        is_artificial_[art_at] = true;
        basis_[i] = art_at;
        ++art_at;
      }
    }

    const double obj_sign = lp.sense == Sense::maximize ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t_(obj_row_, j) = obj_sign * lp.objective[j];
    obj_sign_ = obj_sign;

    // Phase-1 reduced costs: unit cost on artificials, then price out the
    // artificial basis rows.
    for (int j = 0; j < cols_; ++j) {
      if (is_artificial_[j]) t_(phase_row_, j) = 1.0;
    }
    for (int i = 0; i < m; ++i) {
      if (basis_[i] >= 0 && is_artificial_[basis_[i]]) {
        t_.row(phase_row_) -= t_.row(i);
      }
    }
    has_artificials_ = n_art > 0;
  }

  LpResult run() {
    if (has_artificials_) {
      if (!iterate(phase_row_)) {
        // Phase-1 objective is bounded below by zero, so an unbounded
        // report here means numerical trouble.
        raise(Errc::internal_check_failed, "phase-1 simplex diverged");
      }
      if (-t_(phase_row_, rhs_col_) > kFeasEps) {
        return {LpStatus::infeasible, 0.0, {}};
      }
      purge_artificials();
    }
    if (!iterate(obj_row_)) {
      return {LpStatus::unbounded, 0.0, {}};
    }
    LpResult res;
    res.status = LpStatus::optimal;
    res.x = Eigen::VectorXd::Zero(n_struct_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= 0 && basis_[i] < n_struct_) {
        res.x[basis_[i]] = t_(i, rhs_col_);
      }
    }
    res.value = obj_sign_ * -t_(obj_row_, rhs_col_);
    return res;
  }

 private:
  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i < t_.rows(); ++i) {
      if (i == row) continue;
      const double factor = t_(i, col);
      if (std::fabs(factor) > 0.0) t_.row(i) -= factor * t_.row(row);
    }
    basis_[row] = col;
  }

  // Price with the given objective row until optimal. Returns false when the
  // problem is unbounded in that objective.
  bool iterate(int price_row) {
    const long long bland_after = 3LL * (m_ + cols_) + 50;
    const long long max_iter = 400LL * (m_ + cols_) + 100000;
    for (long long it = 0; it < max_iter; ++it) {
      int enter = -1;
      if (it < bland_after) {
        double best = -kCostEps;
        for (int j = 0; j < cols_; ++j) {
          if (blocked(price_row, j)) continue;
          if (t_(price_row, j) < best) {
            best = t_(price_row, j);
            enter = j;
          }
        }
      } else {
        for (int j = 0; j < cols_; ++j) {
          if (blocked(price_row, j)) continue;
          if (t_(price_row, j) < -kCostEps) {
            enter = j;
            break;
          }
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotEps) continue;
        const double ratio = t_(i, rhs_col_) / a;
        if (ratio < best_ratio - kPivotEps ||
            (ratio < best_ratio + kPivotEps &&
             (leave < 0 || basis_[i] < basis_[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    raise(Errc::internal_check_failed, "simplex iteration cap exceeded");
  }

  bool blocked(int price_row, int j) const {
    // Keep artificials out of the basis once phase 2 starts.
    return price_row == obj_row_ && is_artificial_[j];
  }

  // After phase 1: pivot basic artificials out on any nonzero structural
  // column; a row with none is redundant and inert (rhs is zero).
  void purge_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < 0 || !is_artificial_[basis_[i]]) continue;
      int col = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!is_artificial_[j] && std::fabs(t_(i, j)) > kPivotEps) {
          col = j;
          break;
        }
      }
      if (col >= 0) pivot(i, col);
    }
  }

  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  std::vector<bool> is_artificial_;
  int n_struct_ = 0;
  int m_ = 0;
  int cols_ = 0;
  int rhs_col_ = 0;
  int obj_row_ = 0;
  int phase_row_ = 0;
  double obj_sign_ = 1.0;
  bool has_artificials_ = false;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  if (lp.objective.size() == 0) {
    raise(Errc::dimension_mismatch, "LP without variables");
  }
  Tableau tableau(lp);
  return tableau.run();
}

}  // namespace ipe
