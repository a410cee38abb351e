#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "diwidth/digraph.hpp"
#include "diwidth/util.hpp"

namespace diwidth {

namespace detail {

// (x0 + x1 a)(y0 + y1 a) = x0 y0 + (x0 y1 + x1 y0) a + x1 y1 a2 with a2 = a + 1,
// which is forced by 1 + a + a2 = 0 in characteristic 2 (and gives a3 = 1).
constexpr std::uint8_t gf4_mul_code(std::uint8_t x, std::uint8_t y) {
  std::uint8_t x0 = x & 1, x1 = (x >> 1) & 1, y0 = y & 1, y1 = (y >> 1) & 1;
  std::uint8_t c0 = x0 & y0, c1 = (x0 & y1) ^ (x1 & y0), c2 = x1 & y1;
  return static_cast<std::uint8_t>((c0 ^ c2) | ((c1 ^ c2) << 1));
}

constexpr std::array<std::array<std::uint8_t, 4>, 4> make_gf4_mul_table() {
  std::array<std::array<std::uint8_t, 4>, 4> t{};
  for (std::uint8_t x = 0; x < 4; ++x)
    for (std::uint8_t y = 0; y < 4; ++y) t[x][y] = gf4_mul_code(x, y);
  return t;
}

inline constexpr auto kGf4MulTable = make_gf4_mul_table();

}  // namespace detail

// GF(4) = {0, 1, a, a2}. Elements are stored as two bits (b0 + b1*a over
// GF(2)), so a2 = 1 + a has code 3. Addition is xor; multiplication goes
// through the table generated above.
class Gf4 {
 public:
  constexpr Gf4() = default;
  constexpr explicit Gf4(std::uint8_t code) : code_(code & 3) {}

  static constexpr Gf4 zero() { return Gf4(0); }
  static constexpr Gf4 one() { return Gf4(1); }
  static constexpr Gf4 a() { return Gf4(2); }
  static constexpr Gf4 a2() { return Gf4(3); }

  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr Gf4 operator+(Gf4 x, Gf4 y) { return Gf4(x.code_ ^ y.code_); }
  friend constexpr Gf4 operator*(Gf4 x, Gf4 y) {
    return Gf4(detail::kGf4MulTable[x.code_][y.code_]);
  }
  Gf4& operator+=(Gf4 y) { code_ ^= y.code_; return *this; }
  Gf4& operator*=(Gf4 y) { code_ = detail::kGf4MulTable[code_][y.code_]; return *this; }
  friend constexpr bool operator==(Gf4 x, Gf4 y) { return x.code_ == y.code_; }
  friend constexpr bool operator!=(Gf4 x, Gf4 y) { return x.code_ != y.code_; }

  // Nonzero elements form a cyclic group of order 3, so x^-1 = x^2 there.
  constexpr Gf4 inverse() const { return *this * *this * *this == one() ? *this * *this : zero(); }

  std::string to_string() const {
    static const char* names[4] = {"0", "1", "a", "a2"};
    return names[code_];
  }

 private:
  std::uint8_t code_ = 0;
};

inline Gf4 gf4_add(Gf4 x, Gf4 y) { return x + y; }
inline Gf4 gf4_mul(Gf4 x, Gf4 y) { return x * y; }

class Gf4Matrix {
 public:
  Gf4Matrix() = default;
  Gf4Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Gf4& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  Gf4 at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const Gf4Matrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Gf4> e_;
};

// Rows are stored as bitmasks over at most 64 columns.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, 0) {
    if (cols > 64) throw input_error("Gf2Matrix: at most 64 columns supported");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, bool v) {
    if (v)
      row_[r] |= std::uint64_t{1} << c;
    else
      row_[r] &= ~(std::uint64_t{1} << c);
  }
  bool get(int r, int c) const { return (row_[r] >> c) & 1; }
  std::uint64_t row(int r) const { return row_[r]; }

  bool operator==(const Gf2Matrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> row_;
};

// Gaussian elimination with pivoting on the first nonzero entry of each
// remaining row; exact field arithmetic, no tolerances.
inline int gf4_rank(Gf4Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = col; c < cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    Gf4 inv = m.at(rank, col).inverse();
    for (int c = col; c < cols; ++c) m.at(rank, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Gf4 f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < cols; ++c) m.at(r, c) += f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

inline int gf2_rank(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < static_cast<int>(rows.size()); ++col) {
    std::uint64_t bit = std::uint64_t{1} << col;
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

// Entry (i,j) for the i-th vertex of A and j-th vertex of B (both ascending):
// 0 = no arc either way, a = forward only, a2 = backward only, 1 = both.
inline Gf4Matrix cut_matrix_gf4(const Digraph& g, VertexMask a, VertexMask b) {
  if ((a & b) != 0) throw input_error("cut_matrix_gf4: vertex sets overlap");
  if (((a | b) & ~g.vertex_mask()) != 0) throw input_error("cut_matrix_gf4: vertex out of range");
  Gf4Matrix m(popcount(a), popcount(b));
  int i = 0;
  for (int u : bits(a)) {
    int j = 0;
    for (int v : bits(b)) {
      bool fwd = g.has_arc(u, v), bwd = g.has_arc(v, u);
      Gf4 e = fwd ? (bwd ? Gf4::one() : Gf4::a()) : (bwd ? Gf4::a2() : Gf4::zero());
      m.at(i, j) = e;
      ++j;
    }
    ++i;
  }
  return m;
}

inline Gf2Matrix cut_matrix_gf2(const UndirectedGraph& g, VertexMask a, VertexMask b) {
  if ((a & b) != 0) throw input_error("cut_matrix_gf2: vertex sets overlap");
  if (((a | b) & ~g.vertex_mask()) != 0) throw input_error("cut_matrix_gf2: vertex out of range");
  Gf2Matrix m(popcount(a), popcount(b));
  int i = 0;
  for (int u : bits(a)) {
    int j = 0;
    for (int v : bits(b)) {
      m.set(i, j, g.has_edge(u, v));
      ++j;
    }
    ++i;
  }
  return m;
}

inline int cut_rank_gf4(const Digraph& g, VertexMask a, VertexMask b) {
  return gf4_rank(cut_matrix_gf4(g, a, b));
}

inline int cut_rank_gf2(const UndirectedGraph& g, VertexMask a, VertexMask b) {
  return gf2_rank(cut_matrix_gf2(g, a, b));
}

}  // namespace diwidth
