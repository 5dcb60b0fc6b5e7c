#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "locweil/numfield.hpp"

namespace locweil {

/// Dense system A x = b over Q or Q(sqrt d), row-major.
class LinearSystem {
 public:
  LinearSystem(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols), rhs_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  FieldElement& rhs(std::size_t r) { return rhs_[r]; }
  const FieldElement& rhs(std::size_t r) const { return rhs_[r]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
  std::vector<FieldElement> rhs_;
};

/// One exact solution by fraction-free (Bareiss) elimination. Pivots are the first
/// nonzero entry scanning columns left to right; free variables are set to 0.
/// Returns nullopt when the system is inconsistent.
///
/// Rational systems are scaled row-wise to integers and eliminated over Z, so every
/// Bareiss division is an exact integer division.
std::optional<std::vector<FieldElement>> solve_linear_exact(const LinearSystem& system);

}  // namespace locweil
