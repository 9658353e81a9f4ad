#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigatoms/rational.hpp"

namespace sigatoms {

struct LinearEquation {
  std::vector<Rational> coefficients;
  Rational rhs;
  std::string origin;  // human-readable source, used in witnesses
};

/// Reduced row echelon form of an exact rational system.
///
/// Pivots are chosen column by column from the left; within a column the
/// lowest-indexed remaining equation with a non-zero coefficient wins.
class RowReduction {
 public:
  RowReduction(const std::vector<LinearEquation>& equations, std::size_t unknowns);

  bool consistent() const { return !witness_.has_value(); }
  /// Original index of the first equation that reduced to 0 = c with c != 0.
  std::optional<std::size_t> witness() const { return witness_; }
  const Rational& witness_residual() const { return residual_; }

  /// Unknowns whose value is not fixed by the system, ascending.
  std::vector<std::size_t> undetermined() const;
  bool unique() const { return consistent() && undetermined().empty(); }
  /// Requires unique().
  std::vector<Rational> solution() const;

  /// Value of sum_j weights[j] * x_j when the system determines it.
  std::optional<Rational> determined_value(const std::vector<Rational>& weights) const;

 private:
  std::size_t unknowns_;
  std::vector<std::vector<Rational>> rows_;  // pivot rows only
  std::vector<Rational> rhs_;
  std::vector<std::size_t> pivot_col_;
  std::optional<std::size_t> witness_;
  Rational residual_;
};

}  // namespace sigatoms
