#include "diagroup/simplex.hpp"

#include <cstddef>

namespace diagroup {

namespace {

// Gaussian elimination in place; returns rank. Rows may have unequal length
// zero-padded on the fly.
std::size_t eliminate(std::vector<std::vector<Rational>>& rows,
                      std::size_t width) {
  for (auto& r : rows) {
    r.resize(width, Rational(0));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    Rational inv = Rational(1) / rows[rank][col];
    for (auto& v : rows[rank]) {
      v = v * inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && !rows[i][col].is_zero()) {
        Rational f = rows[i][col];
        for (std::size_t j = 0; j < width; ++j) {
          rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t width = 0;
  for (auto const& r : rows) {
    width = std::max(width, r.size());
  }
  return eliminate(rows, width);
}

bool in_row_space(std::vector<std::vector<Rational>> const& rows,
                  std::vector<Rational> const& target) {
  std::size_t base = matrix_rank(rows);
  auto extended = rows;
  extended.push_back(target);
  return matrix_rank(std::move(extended)) == base;
}

std::optional<std::vector<Rational>> lp_feasible_point(
    std::size_t num_vars, std::vector<LinearConstraint> const& constraints) {
  // Standard phase-one tableau: slack/surplus variables for inequalities,
  // one artificial variable per row, minimise the sum of artificials.
  std::size_t m = constraints.size();
  if (m == 0) {
    return std::vector<Rational>(num_vars, Rational(0));
  }

  std::size_t num_slack = 0;
  for (auto const& c : constraints) {
    if (c.rel != LinearConstraint::Relation::Eq) {
      ++num_slack;
    }
  }
  std::size_t total = num_vars + num_slack + m;  // + artificials
  // tableau: m rows of [coeffs | rhs]
  std::vector<std::vector<Rational>> tab(
      m, std::vector<Rational>(total + 1, Rational(0)));
  std::vector<std::size_t> basis(m);

  std::size_t slack_at = num_vars;
  for (std::size_t i = 0; i < m; ++i) {
    auto const& c = constraints[i];
    Rational sign(1);
    if (c.rhs.is_negative()) {
      sign = Rational(-1);
    }
    for (std::size_t j = 0; j < num_vars && j < c.coeffs.size(); ++j) {
      tab[i][j] = sign * c.coeffs[j];
    }
    tab[i][total] = sign * c.rhs;
    auto rel = c.rel;
    if (sign.is_negative()) {
      if (rel == LinearConstraint::Relation::Le) {
        rel = LinearConstraint::Relation::Ge;
      } else if (rel == LinearConstraint::Relation::Ge) {
        rel = LinearConstraint::Relation::Le;
      }
    }
    if (rel == LinearConstraint::Relation::Le) {
      tab[i][slack_at++] = Rational(1);
    } else if (rel == LinearConstraint::Relation::Ge) {
      tab[i][slack_at++] = Rational(-1);
    }
    tab[i][num_vars + num_slack + i] = Rational(1);
    basis[i] = num_vars + num_slack + i;
  }

  // Objective row: minimise sum of artificials; expressed in terms of the
  // nonbasic variables by subtracting the constraint rows.
  std::vector<Rational> obj(total + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= total; ++j) {
      obj[j] = obj[j] - tab[i][j];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    obj[num_vars + num_slack + i] += Rational(1);
  }

  auto pivot = [&](std::size_t row, std::size_t col) {
    Rational inv = Rational(1) / tab[row][col];
    for (auto& v : tab[row]) {
      v = v * inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i != row && !tab[i][col].is_zero()) {
        Rational f = tab[i][col];
        for (std::size_t j = 0; j <= total; ++j) {
          tab[i][j] = tab[i][j] - f * tab[row][j];
        }
      }
    }
    if (!obj[col].is_zero()) {
      Rational f = obj[col];
      for (std::size_t j = 0; j <= total; ++j) {
        obj[j] = obj[j] - f * tab[row][j];
      }
    }
    basis[row] = col;
  };

  while (true) {
    // Bland's rule: the lowest-index improving column.
    std::size_t col = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (obj[j].is_negative()) {
        col = j;
        break;
      }
    }
    if (col == total) {
      break;
    }
    std::size_t row = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!tab[i][col].is_positive()) {
        continue;
      }
      if (row == m) {
        row = i;
        continue;
      }
      Rational lhs = tab[i][total] * tab[row][col];
      Rational rhs = tab[row][total] * tab[i][col];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[row])) {
        row = i;
      }
    }
    if (row == m) {
      break;  // unbounded phase-one objective cannot happen, be safe
    }
    pivot(row, col);
  }

  if (!(-obj[total]).is_zero()) {
    return std::nullopt;  // artificials cannot all vanish: infeasible
  }
  std::vector<Rational> point(num_vars, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < num_vars) {
      point[basis[i]] = tab[i][total];
    }
  }
  return point;
}

}  // namespace diagroup
