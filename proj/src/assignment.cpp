#include "nbm/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nbm {

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
  double worst = 0.0;
  auto av = a.values(), bv = b.values();
  for (std::size_t k = 0; k < av.size(); ++k) worst = std::max(worst, std::abs(av[k] - bv[k]));
  return worst;
}

double frobenius_norm(const Matrix& m) {
  double sum = 0.0;
  for (double v : m.values()) sum += v * v;
  return std::sqrt(sum);
}

double exact_sum(std::span<const double> values) {
  // Shewchuk's non-overlapping partials, finished with round-half-even.
  double partials[64];
  std::size_t count = 0;
  for (double x : values) {
    std::size_t kept = 0;
    for (std::size_t k = 0; k < count; ++k) {
      double y = partials[k];
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials[kept++] = lo;
      x = hi;
    }
    count = kept;
    partials[count++] = x;
  }
  if (count == 0) return 0.0;
  std::size_t k = count - 1;
  double hi = partials[k];
  double lo = 0.0;
  while (k > 0) {
    const double x = hi;
    const double y = partials[--k];
    hi = x + y;
    lo = y - (hi - x);
    if (lo != 0.0) break;
  }
  if (k > 0 && ((lo < 0.0 && partials[k - 1] < 0.0) || (lo > 0.0 && partials[k - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

namespace {

struct Hungarian {
  std::vector<double> u, v, minv;
  std::vector<std::size_t> p, way;
  std::vector<char> used;

  // Minimises sum of cost(i, j) over a matching that covers all n rows,
  // n <= m. Writes the column of each row into row_to_col.
  template <typename Cost>
  void run(std::size_t n, std::size_t m, Cost cost, std::vector<std::size_t>& row_to_col) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    u.assign(n + 1, 0.0);
    v.assign(m + 1, 0.0);
    p.assign(m + 1, 0);
    way.assign(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      p[0] = i;
      std::size_t j0 = 0;
      minv.assign(m + 1, inf);
      used.assign(m + 1, 0);
      do {
        used[j0] = 1;
        const std::size_t i0 = p[j0];
        double delta = inf;
        std::size_t j1 = 0;
        for (std::size_t j = 1; j <= m; ++j) {
          if (used[j]) continue;
          const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
        for (std::size_t j = 0; j <= m; ++j) {
          if (used[j]) {
            u[p[j]] += delta;
            v[j] -= delta;
          } else {
            minv[j] -= delta;
          }
        }
        j0 = j1;
      } while (p[j0] != 0);
      do {
        const std::size_t j1 = way[j0];
        p[j0] = p[j1];
        j0 = j1;
      } while (j0 != 0);
    }
    row_to_col.assign(n, 0);
    for (std::size_t j = 1; j <= m; ++j)
      if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
};

thread_local Hungarian tl_solver;
thread_local std::vector<std::size_t> tl_assign;
thread_local std::vector<double> tl_terms;

// Fills `pairs_out` (if given) and returns the correctly rounded weight.
double solve(const WeightTable& t, std::vector<std::pair<std::size_t, std::size_t>>* pairs_out) {
  const std::size_t rows = t.rows(), cols = t.cols();
  tl_terms.clear();
  if (pairs_out) pairs_out->clear();
  if (rows <= cols) {
    tl_solver.run(rows, cols, [&](std::size_t i, std::size_t j) { return -t(i, j); }, tl_assign);
    for (std::size_t i = 0; i < rows; ++i) {
      tl_terms.push_back(t(i, tl_assign[i]));
      if (pairs_out) pairs_out->emplace_back(i, tl_assign[i]);
    }
  } else {
    tl_solver.run(cols, rows, [&](std::size_t i, std::size_t j) { return -t(j, i); }, tl_assign);
    if (pairs_out) {
      std::vector<std::size_t> col_of_row(rows, static_cast<std::size_t>(-1));
      for (std::size_t c = 0; c < cols; ++c) col_of_row[tl_assign[c]] = c;
      for (std::size_t r = 0; r < rows; ++r)
        if (col_of_row[r] != static_cast<std::size_t>(-1)) pairs_out->emplace_back(r, col_of_row[r]);
    }
    for (std::size_t c = 0; c < cols; ++c) tl_terms.push_back(t(tl_assign[c], c));
  }
  return exact_sum(tl_terms);
}

}  // namespace

Matching solve_max_assignment(const WeightTable& t) {
  if (t.rows() == 0 || t.cols() == 0) throw std::invalid_argument("assignment table is empty");
  for (double w : t.values())
    if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("assignment weights must be finite and non-negative");
  Matching m;
  m.total_weight = solve(t, &m.pairs);
  return m;
}

double max_assignment_weight(const WeightTable& t) { return solve(t, nullptr); }

}  // namespace nbm
