#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace diwidth {

// Vertex subsets are 64-bit masks; everything in this library is desk-scale.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

// Malformed input (files, witnesses, out-of-range parameters).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured solver/search limit.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask full_mask(int n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

// Iteration over the set bits of a mask, lowest first.
class BitRange {
 public:
  class iterator {
   public:
    explicit iterator(VertexMask m) : m_(m) {}
    int operator*() const { return std::countr_zero(m_); }
    iterator& operator++() {
      m_ &= m_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return m_ != o.m_; }

   private:
    VertexMask m_;
  };

  explicit BitRange(VertexMask m) : m_(m) {}
  iterator begin() const { return iterator(m_); }
  iterator end() const { return iterator(0); }

 private:
  VertexMask m_;
};

inline BitRange bits(VertexMask m) { return BitRange(m); }

}  // namespace diwidth
