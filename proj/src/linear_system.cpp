#include "sigatoms/linear_system.hpp"

#include "sigatoms/error.hpp"

namespace sigatoms {

RowReduction::RowReduction(const std::vector<LinearEquation>& equations, std::size_t unknowns)
    : unknowns_(unknowns) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(equations.size());
  for (const auto& eq : equations) {
    if (eq.coefficients.size() != unknowns) {
      throw Error(ErrorKind::InvalidArgument, "equation '" + eq.origin + "' has wrong arity");
    }
    a.push_back(eq.coefficients);
    b.push_back(eq.rhs);
  }
  std::vector<bool> used(a.size(), false);
  std::vector<std::size_t> pivot_rows;

  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t pivot = a.size();
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (!used[r] && !a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == a.size()) continue;
    used[pivot] = true;

    const Rational scale = a[pivot][col];
    for (auto& v : a[pivot]) v /= scale;
    b[pivot] /= scale;

    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == pivot || a[r][col].is_zero()) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < unknowns; ++c) {
        if (!a[pivot][c].is_zero()) a[r][c] -= factor * a[pivot][c];
      }
      b[r] -= factor * b[pivot];
    }
    pivot_col_.push_back(col);
    pivot_rows.push_back(pivot);
  }
  for (auto r : pivot_rows) {
    rows_.push_back(a[r]);
    rhs_.push_back(b[r]);
  }

  for (std::size_t r = 0; r < a.size(); ++r) {
    if (!used[r] && !b[r].is_zero()) {
      witness_ = r;
      residual_ = b[r];
      break;
    }
  }
}

std::vector<std::size_t> RowReduction::undetermined() const {
  std::vector<bool> pivot(unknowns_, false);
  for (auto c : pivot_col_) pivot[c] = true;
  std::vector<bool> free(unknowns_, false);
  for (std::size_t c = 0; c < unknowns_; ++c) free[c] = !pivot[c];

  std::vector<bool> loose = free;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < unknowns_; ++c) {
      if (free[c] && !rows_[r][c].is_zero()) {
        loose[pivot_col_[r]] = true;
        break;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (loose[c]) out.push_back(c);
  }
  return out;
}

std::vector<Rational> RowReduction::solution() const {
  if (!unique()) throw Error(ErrorKind::InvalidArgument, "system has no unique solution");
  std::vector<Rational> x(unknowns_);
  for (std::size_t r = 0; r < rows_.size(); ++r) x[pivot_col_[r]] = rhs_[r];
  return x;
}

std::optional<Rational> RowReduction::determined_value(const std::vector<Rational>& weights) const {
  if (weights.size() != unknowns_) {
    throw Error(ErrorKind::InvalidArgument, "functional has wrong arity");
  }
  auto rest = weights;
  Rational value;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = rest[pivot_col_[r]];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < unknowns_; ++c) {
      if (!rows_[r][c].is_zero()) rest[c] -= factor * rows_[r][c];
    }
    value += factor * rhs_[r];
  }
  for (const auto& v : rest) {
    if (!v.is_zero()) return std::nullopt;
  }
  return value;
}

}  // namespace sigatoms
