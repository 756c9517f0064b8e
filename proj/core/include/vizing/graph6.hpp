#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "vizing/graph.hpp"

namespace vizing {

/// Largest order the graph6 size field supports here: the one-byte form
/// covers n <= 62, the four-byte form ('~' + 18 bits) covers n <= 258047.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decode one graph6 record. A leading ">>graph6<<" header is skipped.
/// Throws ParseError naming the offending byte offset.
Graph decode_graph6(std::string_view text);

/// Standard graph6 encoding, no header and no trailing newline.
/// Throws SizeError above kGraph6MaxOrder.
std::string encode_graph6(const Graph& g);

}  // namespace vizing
