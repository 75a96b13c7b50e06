#include "tautring/linalg.hpp"

#include <stdexcept>

namespace tautring::linalg {

namespace {

std::vector<Integer> clear_denominators(const std::vector<Rational>& row) {
  Integer lcm = 1;
  for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * (lcm / q.get_den()));
  return out;
}

}  // namespace

Echelon row_echelon(const Matrix& m, int columns) {
  Echelon out;
  for (const auto& r : m) {
    if (static_cast<int>(r.size()) != columns) throw std::invalid_argument("ragged matrix");
    out.rows.push_back(clear_denominators(r));
  }
  auto& a = out.rows;
  const int nrows = static_cast<int>(a.size());
  Integer prev = 1;
  int row = 0;
  for (int col = 0; col < columns && row < nrows; ++col) {
    int p = row;
    while (p < nrows && a[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[row]);
    for (int i = row + 1; i < nrows; ++i) {
      for (int j = col + 1; j < columns; ++j) {
        Integer t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        Integer rem;
        mpz_tdiv_qr(a[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("Bareiss step is not exact");
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return out;
}

int rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_echelon(m, static_cast<int>(m.front().size())).rank();
}

Solution solve(const Matrix& a, const std::vector<Rational>& b, int unknowns) {
  if (a.size() != b.size()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix aug = a;
  for (size_t i = 0; i < aug.size(); ++i) {
    if (static_cast<int>(aug[i].size()) != unknowns) throw std::invalid_argument("ragged matrix");
    aug[i].push_back(b[i]);
  }
  Echelon e = row_echelon(aug, unknowns + 1);
  Solution s;
  s.pivots = e.pivots;
  for (int i = 0; i < e.rank(); ++i)
    if (e.pivots[i] == unknowns) {
      s.consistent = false;
      s.witness_row = i;
      s.residual = Rational(e.rows[i][unknowns]);
      s.pivots.pop_back();
      return s;
    }
  s.consistent = true;
  s.x.assign(unknowns, 0);
  for (int i = e.rank() - 1; i >= 0; --i) {
    const int pc = e.pivots[i];
    Rational acc(e.rows[i][unknowns]);
    for (int j = pc + 1; j < unknowns; ++j)
      if (e.rows[i][j] != 0) acc -= Rational(e.rows[i][j]) * s.x[j];
    s.x[pc] = acc / Rational(e.rows[i][pc]);
  }
  return s;
}

}  // namespace tautring::linalg
