#include "vfib/numeric.hpp"

#include <stdexcept>

namespace vfib {

std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<bool> col_is_pivot(cols, false);

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    Rat inv = m[r][c];
    for (int j = 0; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col_of_row[r] = c;
    col_is_pivot[c] = true;
    ++r;
  }

  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (col_is_pivot[free_col]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  Int lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, den(x));
  std::vector<Int> w;
  w.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    Int e = num(x) * (lcm_den / den(x));
    g = boost::multiprecision::gcd(g, e);
    w.push_back(std::move(e));
  }
  if (g == 0) throw std::invalid_argument("primitive_integer_vector: zero vector");
  for (auto& e : w) e /= g;
  for (const auto& e : w) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& f : w) f = -f;
    break;
  }
  return w;
}

}  // namespace vfib
