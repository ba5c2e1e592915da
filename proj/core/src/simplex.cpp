#include "dihg/simplex.hpp"

#include <stdexcept>

namespace dihg {
namespace lp {

namespace {

struct Tableau {
  int n_struct = 0;                    // structural variables
  std::vector<std::vector<Rat>> rows;  // per constraint: coeffs (all columns) then rhs last
  std::vector<int> basis;              // basic variable per row
  std::vector<bool> allowed;           // artificial columns become disallowed in phase 2
  std::vector<Rat> obj;                // reduced costs per column
  Rat value;                           // current objective value

  int cols() const { return static_cast<int>(allowed.size()); }
  Rat& rhs(int r) { return rows[static_cast<std::size_t>(r)].back(); }
  Rat& at(int r, int c) { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  void pivot(int row, int col) {
    auto& pr = rows[static_cast<std::size_t>(row)];
    Rat inv = 1 / pr[static_cast<std::size_t>(col)];
    for (auto& v : pr) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      Rat f = rows[i][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < pr.size(); ++j) rows[i][j] -= f * pr[j];
    }
    Rat f = obj[static_cast<std::size_t>(col)];
    if (f != 0) {
      for (int j = 0; j < cols(); ++j) obj[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
      value += f * pr.back();
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Bland's rule; returns Optimal or Unbounded.
  Status run() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j)
        if (allowed[static_cast<std::size_t>(j)] && obj[static_cast<std::size_t>(j)] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return Status::Optimal;
      int leave = -1;
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rat& a = rows[i][static_cast<std::size_t>(enter)];
        if (a <= 0) continue;
        Rat ratio = rows[i].back() / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[static_cast<std::size_t>(leave)])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  void load_objective(const std::vector<Rat>& c) {
    obj.assign(static_cast<std::size_t>(cols()), Rat(0));
    for (std::size_t j = 0; j < c.size() && j < obj.size(); ++j) obj[j] = c[j];
    value = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int b = basis[i];
      Rat cb = b < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(b)] : Rat(0);
      if (cb == 0) continue;
      value += cb * rows[i].back();
      for (int j = 0; j < cols(); ++j)
        obj[static_cast<std::size_t>(j)] -= cb * at(static_cast<int>(i), j);
    }
  }
};

}  // namespace

Solution maximize(const std::vector<Rat>& objective, const std::vector<Constraint>& constraints) {
  const int n = static_cast<int>(objective.size());
  const int m = static_cast<int>(constraints.size());

  // Column layout: structural 0..n-1, then one slack/surplus per inequality,
  // then one artificial per Ge/Eq row.
  int n_slack = 0, n_art = 0;
  for (const Constraint& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != n)
      throw std::invalid_argument("constraint arity != objective arity");
    Rel rel = c.rel;
    if (c.rhs < 0) rel = rel == Rel::Le ? Rel::Ge : (rel == Rel::Ge ? Rel::Le : Rel::Eq);
    if (rel != Rel::Eq) ++n_slack;
    if (rel != Rel::Le) ++n_art;
  }
  Tableau t;
  t.n_struct = n;
  int cols = n + n_slack + n_art;
  t.allowed.assign(static_cast<std::size_t>(cols), true);
  t.basis.assign(static_cast<std::size_t>(m), -1);
  t.rows.assign(static_cast<std::size_t>(m),
                std::vector<Rat>(static_cast<std::size_t>(cols) + 1, Rat(0)));

  int slack_at = n, art_at = n + n_slack;
  std::vector<int> art_cols;
  for (int i = 0; i < m; ++i) {
    const Constraint& c = constraints[static_cast<std::size_t>(i)];
    int sign = c.rhs < 0 ? -1 : 1;
    Rel rel = c.rel;
    if (sign < 0) rel = rel == Rel::Le ? Rel::Ge : (rel == Rel::Ge ? Rel::Le : Rel::Eq);
    for (int j = 0; j < n; ++j) t.at(i, j) = sign * c.coeffs[static_cast<std::size_t>(j)];
    t.rhs(i) = sign * c.rhs;
    if (rel == Rel::Le) {
      t.at(i, slack_at) = 1;
      t.basis[static_cast<std::size_t>(i)] = slack_at++;
    } else if (rel == Rel::Ge) {
      t.at(i, slack_at) = -1;
      ++slack_at;
      t.at(i, art_at) = 1;
      t.basis[static_cast<std::size_t>(i)] = art_at;
      art_cols.push_back(art_at++);
    } else {
      t.at(i, art_at) = 1;
      t.basis[static_cast<std::size_t>(i)] = art_at;
      art_cols.push_back(art_at++);
    }
  }

  Solution sol;
  if (n_art > 0) {
    std::vector<Rat> phase1(static_cast<std::size_t>(cols), Rat(0));
    for (int a : art_cols) phase1[static_cast<std::size_t>(a)] = -1;
    t.load_objective(phase1);
    t.run();  // bounded above by 0, never Unbounded
    if (t.value != 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    for (int a : art_cols) t.allowed[static_cast<std::size_t>(a)] = false;
    // Pivot lingering artificials out where possible; all-zero rows are inert.
    for (int i = 0; i < m; ++i) {
      if (t.basis[static_cast<std::size_t>(i)] < n + n_slack) continue;
      for (int j = 0; j < n + n_slack; ++j)
        if (t.at(i, j) != 0) {
          t.pivot(i, j);
          break;
        }
    }
  }

  t.load_objective(objective);
  Status st = t.run();
  sol.status = st;
  if (st != Status::Optimal) return sol;
  sol.value = t.value;
  sol.x.assign(static_cast<std::size_t>(n), Rat(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[static_cast<std::size_t>(i)] < n)
      sol.x[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] = t.rhs(i);
  return sol;
}

Solution minimize(const std::vector<Rat>& objective, const std::vector<Constraint>& constraints) {
  std::vector<Rat> neg(objective.size());
  for (std::size_t j = 0; j < objective.size(); ++j) neg[j] = -objective[j];
  Solution sol = maximize(neg, constraints);
  if (sol.status == Status::Optimal) sol.value = -sol.value;
  return sol;
}

}  // namespace lp
}  // namespace dihg
