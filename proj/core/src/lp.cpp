#include "sobczyk/lp.hpp"

#include <algorithm>
#include <functional>

#include "sobczyk/error.hpp"

namespace sobczyk::lp {

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= factor * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

class Tableau {
 public:
  Tableau(Matrix rows, std::vector<std::size_t> basis) : t_(std::move(rows)), basis_(std::move(basis)) {}

  /// Runs simplex on cost vector c over the columns allowed by `usable`.
  /// Returns false when unbounded.
  bool run(const Vector& c, const std::vector<bool>& usable) {
    const std::size_t n = usable.size();
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n && !entering; ++j) {
        if (!usable[j] || std::find(basis_.begin(), basis_.end(), j) != basis_.end()) continue;
        Rational reduced = c[j];
        for (std::size_t i = 0; i < t_.size(); ++i) reduced -= c[basis_[i]] * t_[i][j];
        if (reduced < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t j = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][j] <= 0) continue;
        Rational ratio = t_[i].back() / t_[i][j];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, j);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_[row][col];
    for (auto& v : t_[row]) v *= inv;
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == row || t_[r][col] == 0) continue;
      const Rational factor = t_[r][col];
      for (std::size_t k = 0; k < t_[r].size(); ++k) t_[r][k] -= factor * t_[row][k];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  Vector values(std::size_t n) const {
    Vector x(n, Rational(0));
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (basis_[i] < n) x[basis_[i]] = t_[i].back();
    }
    return x;
  }

  Matrix& rows() { return t_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  Matrix t_;
  std::vector<std::size_t> basis_;
};

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  return row_reduce(m, cols).size();
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("solve: row count mismatch");
  const std::size_t n = a.empty() ? 0 : a.front().size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = row_reduce(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

Solution minimize_standard(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw PreconditionError("minimize_standard: rhs size mismatch");
  Matrix rows(m, Vector(n + m + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw PreconditionError("minimize_standard: ragged matrix");
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = sign * a[i][j];
    rows[i][n + i] = 1;
    rows[i][n + m] = sign * b[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(rows), std::move(basis));

  Vector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.run(phase1, std::vector<bool>(n + m, true));
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < tab.rows().size(); ++i) {
    if (tab.basis()[i] >= n) infeasibility += tab.rows()[i].back();
  }
  if (infeasibility != 0) return Solution{Status::Infeasible, 0, {}};

  for (std::size_t i = 0; i < tab.rows().size();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (tab.rows()[i][j] != 0) col = j;
    }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  Vector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  std::vector<bool> usable(n + m, false);
  std::fill(usable.begin(), usable.begin() + static_cast<std::ptrdiff_t>(n), true);
  if (!tab.run(phase2, usable)) return Solution{Status::Unbounded, 0, {}};
  Vector x = tab.values(n);
  Rational value = dot(c, x);
  return Solution{Status::Optimal, value, std::move(x)};
}

std::optional<L1Representation> min_l1_combination(const std::vector<Vector>& columns, const Vector& target) {
  const std::size_t d = target.size();
  const std::size_t t = columns.size();
  Matrix a(d, Vector(2 * t, Rational(0)));
  for (std::size_t j = 0; j < t; ++j) {
    if (columns[j].size() != d) throw PreconditionError("min_l1_combination: column size mismatch");
    for (std::size_t i = 0; i < d; ++i) {
      a[i][j] = columns[j][i];
      a[i][t + j] = -columns[j][i];
    }
  }
  const Solution sol = minimize_standard(a, target, Vector(2 * t, Rational(1)));
  if (sol.status != Status::Optimal) return std::nullopt;
  L1Representation out{sol.value, Vector(t, Rational(0))};
  for (std::size_t j = 0; j < t; ++j) out.weights[j] = sol.x[j] - sol.x[t + j];
  return out;
}

std::optional<L1Representation> min_l1_combination_lex(const std::vector<Vector>& columns, const Vector& target) {
  auto best = min_l1_combination(columns, target);
  if (!best) return std::nullopt;
  const std::size_t t = columns.size();
  const std::size_t d = target.size();
  if (best->norm == 0) return best;
  Matrix all(d, Vector(t, Rational(0)));
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < d; ++i) all[i][j] = columns[j][i];
  }
  const std::size_t r = rank(all);

  // Depth-first over index tuples visits supports in lexicographic order;
  // the first independent tuple whose solution is optimal with full support
  // is the lex-smallest optimal support.
  std::vector<std::size_t> chosen;
  std::optional<L1Representation> found;
  std::size_t budget = 500'000;
  std::function<bool(std::size_t)> visit = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      if (budget-- == 0) return true;
      Matrix sub(d, Vector(chosen.size(), Rational(0)));
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) sub[i][k] = columns[chosen[k]][i];
      }
      if (rank(sub) < chosen.size()) return false;
      if (auto lam = solve(sub, target)) {
        Rational norm = 0;
        bool full = true;
        for (const auto& v : *lam) {
          norm += abs(v);
          full = full && v != 0;
        }
        if (full && norm == best->norm) {
          L1Representation rep{norm, Vector(t, Rational(0))};
          for (std::size_t k = 0; k < chosen.size(); ++k) rep.weights[chosen[k]] = (*lam)[k];
          found = std::move(rep);
          return true;
        }
      }
    }
    if (chosen.size() == r) return false;
    for (std::size_t j = start; j < t; ++j) {
      chosen.push_back(j);
      const bool stop = visit(j + 1);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  };
  visit(0);
  return found ? found : best;
}

}  // namespace sobczyk::lp
