#include "matroidal/linalg.hpp"

#include <algorithm>

namespace matroidal {

int rank_fraction_free(std::vector<std::vector<Int>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  Int prev_pivot(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot_row = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    std::swap(m[rank], m[pivot_row]);
    const Int pivot = m[rank][col];
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Int t = m[i][j] * pivot - m[i][col] * m[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        m[i][j] = t;
      }
      m[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

int rank_of(const RatMatrix& m) {
  std::vector<std::vector<Int>> rows(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Int lcm(1);
    for (int j = 0; j < m.cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    rows[i].resize(m.cols);
    for (int j = 0; j < m.cols; ++j) {
      Rat scaled = m.at(i, j) * Rat(lcm);
      rows[i][j] = scaled.get_num();
    }
  }
  return rank_fraction_free(std::move(rows));
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix w = m;
  int lead = 0;
  std::vector<int> pivot_cols;
  for (int col = 0; col < w.cols && lead < w.rows; ++col) {
    int pivot = -1;
    for (int i = lead; i < w.rows; ++i)
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(lead, j), w.at(pivot, j));
    const Rat inv = Rat(1) / w.at(lead, col);
    for (int j = col; j < w.cols; ++j) w.at(lead, j) *= inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == lead || w.at(i, col) == 0) continue;
      const Rat factor = w.at(i, col);
      for (int j = col; j < w.cols; ++j) w.at(i, j) -= factor * w.at(lead, j);
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  RatMatrix out(lead, w.cols);
  for (int i = 0; i < lead; ++i)
    for (int j = 0; j < w.cols; ++j) out.at(i, j) = w.at(i, j);
  return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  RatMatrix r = rref(m);
  std::vector<int> pivot_col_of_row(r.rows, -1);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j)
      if (r.at(i, j) != 0) {
        pivot_col_of_row[i] = j;
        is_pivot[j] = true;
        break;
      }
  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(m.cols, Rat(0));
    v[free_col] = Rat(1);
    for (int i = 0; i < r.rows; ++i) {
      const int pc = pivot_col_of_row[i];
      if (pc >= 0) v[pc] = -r.at(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace matroidal
