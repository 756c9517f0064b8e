#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "vizing/graph.hpp"

namespace vizing {

struct CorpusEntry {
  /// The graph6 record exactly as it appeared in the file.
  std::string id;
  Graph graph;
  std::string source;
  std::size_t line = 0;
};

/// One graph6 record per line; blank lines, lines starting with '#' and a
/// ">>graph6<<" prefix are skipped. Parse errors are rethrown naming source
/// and line.
std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& source = "<stream>");
std::vector<CorpusEntry> load_corpus(const std::string& path);
std::vector<CorpusEntry> load_corpus(const std::vector<std::string>& paths);

}  // namespace vizing
