#ifndef DIAGROUP_SIMPLEX_HPP
#define DIAGROUP_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "diagroup/rational.hpp"

namespace diagroup {

/// One linear constraint sum_j coeffs[j] * x_j (relation) rhs over
/// nonnegative variables x.
struct LinearConstraint {
  enum class Relation { Le, Eq, Ge };
  std::vector<Rational> coeffs;
  Relation rel;
  Rational rhs;
};

/// Exact phase-one simplex (Bland's rule) for feasibility of a small system
/// of linear constraints over x >= 0. Returns a feasible point when one
/// exists. Sizes here are a few dozen variables at most, so no effort is
/// spent on sparsity.
std::optional<std::vector<Rational>> lp_feasible_point(
    std::size_t num_vars, std::vector<LinearConstraint> const& constraints);

/// Rank of a rational matrix (rows are vectors).
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

/// Whether `target` lies in the row space of `rows`.
bool in_row_space(std::vector<std::vector<Rational>> const& rows,
                  std::vector<Rational> const& target);

}  // namespace diagroup

#endif
