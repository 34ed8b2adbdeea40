#include "spochar/linalg.hpp"

#include <unordered_map>

namespace spochar {

std::vector<std::size_t> row_reduce(QMatrix &a, std::size_t cols)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[row]);
    mpq_class inv = 1 / a[row][c];
    for (std::size_t k = c; k < cols; ++k)
      a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0)
        continue;
      mpq_class f = a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix a, std::size_t cols)
{
  return row_reduce(a, cols).size();
}

std::vector<QVector> nullspace(QMatrix a, std::size_t cols)
{
  auto pivots = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    QVector v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector solve(QMatrix a, const QVector &b)
{
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n)
      throw DimensionMismatch();
    a[i].push_back(b[i]);
  }
  auto pivots = row_reduce(a, n + 1);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw MathError("singular linear system");
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = a[i][n];
  return x;
}

namespace {

struct DetMemo {
  const PolyMatrix &a;
  Lattice lat;
  std::unordered_map<unsigned, LaurentPoly> memo;

  // determinant of rows [row, k) against the columns not in `used`
  LaurentPoly minor(std::size_t row, unsigned used)
  {
    const std::size_t k = a.size();
    if (row == k)
      return LaurentPoly::constant(lat, 1);
    auto it = memo.find(used);
    if (it != memo.end())
      return it->second;
    LaurentPoly acc(lat);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (used & (1u << c))
        continue;
      if (!a[row][c].is_zero()) {
        LaurentPoly sub = minor(row + 1, used | (1u << c));
        if (!sub.is_zero()) {
          LaurentPoly t = a[row][c] * sub;
          if (sign > 0)
            acc += t;
          else
            acc -= t;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  }
};

} // namespace

LaurentPoly determinant(const PolyMatrix &a, Lattice lattice)
{
  for (const auto &row : a)
    if (row.size() != a.size())
      throw DimensionMismatch();
  if (a.size() > 24)
    throw InvalidInput("determinant too large");
  DetMemo d{a, lattice, {}};
  return d.minor(0, 0);
}

} // namespace spochar
