#include "toricjet/lp.hpp"

#include <utility>

namespace toricjet {

void LinearProgram::add_constraint(RationalVector coeffs, Sense sense, Rational rhs) {
  require_same_dim(coeffs.size(), num_vars_);
  constraints_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

struct Tableau {
  std::vector<RationalVector> rows;  // each row: num_cols entries followed by rhs
  std::vector<std::size_t> basis;
  std::size_t num_cols = 0;

  const Rational& rhs(std::size_t i) const { return rows[i][num_cols]; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= num_cols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Maximizes cost . x over columns flagged in `allowed`. Bland's rule.
  LpStatus optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = num_cols;
      for (std::size_t j = 0; j < num_cols && enter == num_cols; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (rows[i][j] != 0) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced > 0) enter = j;
      }
      if (enter == num_cols) return LpStatus::Optimal;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rhs(i);
    return v;
  }
};

}  // namespace

LpResult LinearProgram::maximize(const RationalVector& objective) const {
  require_same_dim(objective.size(), num_vars_);
  const std::size_t m = constraints_.size();

  // Column layout: originals, then one slack per inequality, then artificials.
  std::size_t num_slack = 0, num_art = 0;
  std::vector<LinearConstraint> rows = constraints_;
  for (auto& c : rows) {
    if (c.rhs < 0) {
      for (auto& x : c.coeffs) x = -x;
      c.rhs = -c.rhs;
      if (c.sense == Sense::LessEqual) c.sense = Sense::GreaterEqual;
      else if (c.sense == Sense::GreaterEqual) c.sense = Sense::LessEqual;
    }
    if (c.sense != Sense::Equal) ++num_slack;
    if (c.sense != Sense::LessEqual) ++num_art;
  }
  const std::size_t first_slack = num_vars_;
  const std::size_t first_art = num_vars_ + num_slack;
  Tableau t;
  t.num_cols = first_art + num_art;
  t.rows.assign(m, RationalVector(t.num_cols + 1, Rational(0)));
  t.basis.assign(m, 0);
  std::size_t slack = first_slack, art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < num_vars_; ++j) t.rows[i][j] = rows[i].coeffs[j];
    t.rows[i][t.num_cols] = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::LessEqual:
        t.rows[i][slack] = 1;
        t.basis[i] = slack++;
        break;
      case Sense::GreaterEqual:
        t.rows[i][slack++] = -1;
        t.rows[i][art] = 1;
        t.basis[i] = art++;
        break;
      case Sense::Equal:
        t.rows[i][art] = 1;
        t.basis[i] = art++;
        break;
    }
  }

  std::vector<bool> allowed(t.num_cols, true);
  if (num_art > 0) {
    RationalVector phase1(t.num_cols, Rational(0));
    for (std::size_t j = first_art; j < t.num_cols; ++j) phase1[j] = -1;
    t.optimize(phase1, allowed);
    if (t.objective(phase1) < 0) return {LpStatus::Infeasible, Rational(0), {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t col = first_art;
      for (std::size_t j = 0; j < first_art; ++j)
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col == first_art) {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
    for (std::size_t j = first_art; j < t.num_cols; ++j) allowed[j] = false;
  }

  RationalVector cost(t.num_cols, Rational(0));
  for (std::size_t j = 0; j < num_vars_; ++j) cost[j] = objective[j];
  if (t.optimize(cost, allowed) == LpStatus::Unbounded) return {LpStatus::Unbounded, Rational(0), {}};

  LpResult res{LpStatus::Optimal, t.objective(cost), RationalVector(num_vars_, Rational(0))};
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < num_vars_) res.solution[t.basis[i]] = t.rhs(i);
  return res;
}

LpResult LinearProgram::minimize(const RationalVector& objective) const {
  RationalVector neg(objective.size());
  for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  LpResult r = maximize(neg);
  if (r.status == LpStatus::Optimal) r.value = -r.value;
  return r;
}

}  // namespace toricjet
