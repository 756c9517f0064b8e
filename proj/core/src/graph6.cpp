#include "vizing/graph6.hpp"

#include <cstdint>
#include <vector>

#include "vizing/error.hpp"

namespace vizing {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxChar = 126;

unsigned char data_byte(std::string_view text, std::size_t offset) {
  auto c = static_cast<unsigned char>(text[offset]);
  if (c < kBias || c > kMaxChar) {
    throw ParseError(offset, "character " + std::to_string(c) + " outside graph6 range 63..126");
  }
  return static_cast<unsigned char>(c - kBias);
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  std::size_t pos = base;
  if (pos >= text.size()) throw ParseError(pos, "missing size field");

  std::size_t n = 0;
  if (static_cast<unsigned char>(text[pos]) == kMaxChar) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == kMaxChar) {
      throw SizeError("eight-byte graph6 size field (n > 258047) is not supported");
    }
    if (pos + 4 > text.size()) throw ParseError(text.size(), "truncated four-byte size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | data_byte(text, pos + i);
    if (n < 63) throw ParseError(pos, "four-byte size field used for n < 63");
    pos += 4;
  } else {
    n = data_byte(text, pos);
    pos += 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError(text.size() - pos < body ? text.size() : pos + body,
                     "expected " + std::to_string(body) + " adjacency bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      unsigned char byte = data_byte(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    std::size_t last = pos + body - 1;
    unsigned char byte = data_byte(text, last);
    unsigned pad = static_cast<unsigned>(6 - bits % 6);
    if ((byte & ((1U << pad) - 1)) != 0) throw ParseError(last, "nonzero padding bits");
  }
  // Validate every body byte even when no bit of it was read (n = 0 or 1 has none).
  for (std::size_t i = pos; i < text.size(); ++i) data_byte(text, i);

  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw SizeError("graph6 size field supports n <= " + std::to_string(kGraph6MaxOrder) +
                    ", got " + std::to_string(n));
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxChar));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
  }

  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace vizing
