#pragma once

// Fixed-width bitsets for the exponential search kernels. A kernel is
// instantiated for W words; W = 1 covers every graph with at most 64 vertices
// and the blocked widths cover products up to 1024 vertices.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "vizing/error.hpp"
#include "vizing/graph.hpp"

namespace vizing::detail {

inline constexpr std::size_t kMaxKernelOrder = 1024;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static Bits full(std::size_t n) {
    Bits b;
    for (std::size_t i = 0; i < W; ++i) {
      std::size_t lo = i * 64;
      if (n >= lo + 64) {
        b.w[i] = ~std::uint64_t{0};
      } else if (n > lo) {
        b.w[i] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return b;
  }

  void set(std::size_t v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const { return ((w[v >> 6] >> (v & 63)) & 1U) != 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool none() const {
    for (auto x : w) {
      if (x != 0) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  /// Lowest set bit; undefined when none().
  std::size_t first() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    }
    return W * 64;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x != 0) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  /// Set difference.
  Bits operator-(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(w[i] & o.w[i]));
    return c;
  }

  friend bool operator==(const Bits&, const Bits&) = default;
};

template <std::size_t W>
Bits<W> to_bits(const VertexSet& s) {
  Bits<W> b;
  s.for_each([&](Vertex v) { b.set(v); });
  return b;
}

template <std::size_t W>
VertexSet to_vertex_set(const Bits<W>& b, std::size_t n) {
  VertexSet s(n);
  b.for_each([&](std::size_t v) { s.insert(v); });
  return s;
}

template <std::size_t W>
std::vector<Bits<W>> closed_rows(const Graph& g) {
  std::vector<Bits<W>> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(to_bits<W>(g.closed_neighbors(v)));
  return rows;
}

template <std::size_t W>
std::vector<Bits<W>> open_rows(const Graph& g) {
  std::vector<Bits<W>> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(to_bits<W>(g.neighbors(v)));
  return rows;
}

/// Calls fn(std::integral_constant<std::size_t, W>{}) with the smallest
/// supported width holding n bits.
template <typename Fn>
decltype(auto) with_width(std::size_t n, Fn&& fn) {
  if (n <= 64) return fn(std::integral_constant<std::size_t, 1>{});
  if (n <= 128) return fn(std::integral_constant<std::size_t, 2>{});
  if (n <= 256) return fn(std::integral_constant<std::size_t, 4>{});
  if (n <= 512) return fn(std::integral_constant<std::size_t, 8>{});
  if (n <= kMaxKernelOrder) return fn(std::integral_constant<std::size_t, 16>{});
  throw SizeError("search kernels support at most " + std::to_string(kMaxKernelOrder) +
                  " vertices, got " + std::to_string(n));
}

}  // namespace vizing::detail
