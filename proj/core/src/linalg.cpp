#include "tiltkit/linalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tiltkit {

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scale(Int c, std::span<const Int> a) {
  IntVec r(a.begin(), a.end());
  for (auto& x : r) x *= c;
  return r;
}

IntVec negate(std::span<const Int> a) { return scale(-1, a); }

bool is_zero(std::span<const Int> a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, int cols) {
  IntMat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("IntMat::from_rows: ragged rows");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::apply(std::span<const Int> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat::apply: dimension mismatch");
  IntVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    Int s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat::operator*: dimension mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

namespace {

using RMat = std::vector<std::vector<Rational>>;

RMat to_rational(const IntMat& m) {
  RMat r(m.rows(), std::vector<Rational>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMat& a, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(a.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int p = row;
    while (p < nrows && a[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const IntMat& m) {
  RMat a = to_rational(m);
  return static_cast<int>(rref(a, m.cols()).size());
}

std::optional<std::vector<Rational>> solve(const IntMat& a, std::span<const Int> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw std::invalid_argument("solve: shape mismatch");
  RMat aug = to_rational(a);
  for (int i = 0; i < n; ++i) aug[i].push_back(Rational(b[i]));
  if (static_cast<int>(rref(aug, n).size()) < n) return std::nullopt;
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::optional<std::vector<Rational>> row_coordinates(const IntMat& m, std::span<const Int> b) {
  // x M = b  <=>  M^T x^T = b^T; M^T is r x k with full column rank.
  const int k = m.rows();
  const int r = m.cols();
  if (static_cast<int>(b.size()) != r) throw std::invalid_argument("row_coordinates: shape mismatch");
  RMat aug = to_rational(m.transpose());
  for (int i = 0; i < r; ++i) aug[i].push_back(Rational(b[i]));
  auto piv = rref(aug, k + 1);
  if (!piv.empty() && piv.back() == k) return std::nullopt;  // inconsistent
  if (static_cast<int>(piv.size()) < k) throw std::invalid_argument("row_coordinates: rows not independent");
  std::vector<Rational> x(k);
  for (int i = 0; i < k; ++i) x[i] = aug[i][k];
  return x;
}

QPoint QPoint::from_rationals(std::span<const Rational> coords) {
  Int den = 1;
  for (const auto& c : coords) den = std::lcm(den, c.denominator());
  QPoint p;
  p.den = den;
  for (const auto& c : coords) p.num.push_back(c.numerator() * (den / c.denominator()));
  return p;
}

QPoint QPoint::normalized() const {
  Int g = den;
  for (Int x : num) g = std::gcd(g, x);
  if (g == 0) g = 1;
  QPoint p{num, den};
  if (p.den < 0) g = -g;
  for (auto& x : p.num) x /= g;
  p.den /= g;
  return p;
}

bool operator==(const QPoint& a, const QPoint& b) {
  QPoint x = a.normalized(), y = b.normalized();
  return x.den == y.den && x.num == y.num;
}

std::size_t VecHash::operator()(const IntVec& v) const noexcept {
  std::size_t seed = v.size();
  for (Int x : v) hash_combine(seed, std::hash<Int>{}(x));
  return seed;
}

}  // namespace tiltkit
