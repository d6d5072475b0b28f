#pragma once

// Small exact integer/rational linear algebra used throughout the library.
// Everything here is desk-scale: ranks are at most a dozen or so.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever once C++20
// adds reversed candidates. Exact-match overloads, in boost so ADL finds them
// from any caller.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace tiltkit {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Rational = boost::rational<Int>;



Int dot(std::span<const Int> a, std::span<const Int> b);
IntVec add(std::span<const Int> a, std::span<const Int> b);
IntVec sub(std::span<const Int> a, std::span<const Int> b);
IntVec scale(Int c, std::span<const Int> a);
IntVec negate(std::span<const Int> a);
bool is_zero(std::span<const Int> a);

std::string to_string(std::span<const Int> v);

/// Dense row-major integer matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

  static IntMat identity(int n);
  /// Matrix whose rows are the given vectors.
  static IntMat from_rows(const std::vector<IntVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  Int operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  IntVec apply(std::span<const Int> v) const;
  IntMat operator*(const IntMat& o) const;
  IntMat transpose() const;

  const std::vector<Int>& data() const { return a_; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
  friend auto operator<=>(const IntMat& x, const IntMat& y) {
    return x.a_ <=> y.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

/// Rank of an integer matrix (computed over Q).
int rank(const IntMat& m);

/// Solve A x = b over Q for square nonsingular A. Returns nullopt if singular.
std::optional<std::vector<Rational>> solve(const IntMat& a, std::span<const Int> b);

/// Solve x * M = b for x, where M has full row rank (k x r, k <= r).
/// Returns nullopt if b is not in the row span of M.
std::optional<std::vector<Rational>> row_coordinates(const IntMat& m, std::span<const Int> b);

/// Exact rational point of X^vee (x) Q: numerators over a single positive denominator.
struct QPoint {
  IntVec num;
  Int den = 1;

  static QPoint integral(IntVec v) { return {std::move(v), 1}; }
  static QPoint from_rationals(std::span<const Rational> coords);

  QPoint normalized() const;
  bool is_integral() const { return normalized().den == 1; }
  Rational coord(std::size_t i) const { return Rational(num[i], den); }
  std::size_t size() const { return num.size(); }

  friend bool operator==(const QPoint& a, const QPoint& b);
};

struct VecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace tiltkit
