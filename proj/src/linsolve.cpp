#include "locweil/linsolve.hpp"

#include <algorithm>

namespace locweil {
namespace {

template <typename T>
struct Echelon {
  std::vector<std::vector<T>> rows;  // augmented, rhs in the last column
  std::vector<std::size_t> pivot_cols;
};

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

template <typename T>
Echelon<T> bareiss(std::vector<std::vector<T>> m, std::size_t cols) {
  Echelon<T> out;
  const std::size_t n_rows = m.size();
  T previous(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n_rows; ++c) {
    std::size_t pivot = r;
    while (pivot < n_rows && is_zero(m[pivot][c])) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      const T factor = m[i][c];
      for (std::size_t j = c + 1; j <= cols; ++j) {
        m[i][j] = exact_div(m[r][c] * m[i][j] - factor * m[r][j], previous);
      }
      m[i][c] = T(0);
    }
    // Rows below the pivot were already multiplied through; rows above are untouched.
    previous = m[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

template <typename T>
FieldElement to_field(const T& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return FieldElement(Rational(x));
  } else {
    return x;
  }
}

template <typename T>
std::optional<std::vector<FieldElement>> back_substitute(const Echelon<T>& e, std::size_t cols) {
  const std::size_t rank = e.pivot_cols.size();
  for (std::size_t i = rank; i < e.rows.size(); ++i) {
    if (!is_zero(e.rows[i][cols])) return std::nullopt;
  }
  std::vector<FieldElement> x(cols);
  for (std::size_t k = rank; k-- > 0;) {
    const auto& row = e.rows[k];
    FieldElement acc = to_field(row[cols]);
    for (std::size_t j = e.pivot_cols[k] + 1; j < cols; ++j) {
      if (!is_zero(row[j]) && !x[j].is_zero()) acc -= to_field(row[j]) * x[j];
    }
    x[e.pivot_cols[k]] = acc / to_field(row[e.pivot_cols[k]]);
  }
  return x;
}

}  // namespace

std::optional<std::vector<FieldElement>> solve_linear_exact(const LinearSystem& system) {
  const std::size_t rows = system.rows();
  const std::size_t cols = system.cols();
  bool rational = true;
  for (std::size_t r = 0; r < rows && rational; ++r) {
    if (!system.rhs(r).is_rational()) rational = false;
    for (std::size_t c = 0; c < cols && rational; ++c) {
      if (!system.at(r, c).is_rational()) rational = false;
    }
  }
  if (rational) {
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
      Integer scale = 1;
      for (std::size_t c = 0; c < cols; ++c) scale = lcm(scale, system.at(r, c).a().get_den());
      scale = lcm(scale, system.rhs(r).a().get_den());
      for (std::size_t c = 0; c < cols; ++c) {
        const Rational& q = system.at(r, c).a();
        m[r][c] = q.get_num() * (scale / q.get_den());
      }
      const Rational& b = system.rhs(r).a();
      m[r][cols] = b.get_num() * (scale / b.get_den());
    }
    return back_substitute(bareiss(std::move(m), cols), cols);
  }
  std::vector<std::vector<FieldElement>> m(rows, std::vector<FieldElement>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = system.at(r, c);
    m[r][cols] = system.rhs(r);
  }
  return back_substitute(bareiss(std::move(m), cols), cols);
}

}  // namespace locweil
