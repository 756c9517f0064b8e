#include "vizing/corpus.hpp"

#include <fstream>

#include "vizing/error.hpp"
#include "vizing/graph6.hpp"

namespace vizing {

std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& source) {
  std::vector<CorpusEntry> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::string_view record = line;
    if (record.starts_with(">>graph6<<")) record.remove_prefix(10);
    if (record.empty() || record.front() == '#') continue;
    try {
      out.push_back(CorpusEntry{std::string(record), decode_graph6(record), source, number});
    } catch (const ParseError& e) {
      throw ParseError(e.offset(), source + ":" + std::to_string(number) + ": " + e.detail());
    }
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus file '" + path + "'");
  return read_corpus(in, path);
}

std::vector<CorpusEntry> load_corpus(const std::vector<std::string>& paths) {
  std::vector<CorpusEntry> out;
  for (const auto& path : paths) {
    auto part = load_corpus(path);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace vizing
