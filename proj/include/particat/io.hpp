#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace particat {

namespace detail {

struct ParsedRow {
  std::vector<int> letters;
  std::vector<Color> colors;
  bool has_colors = false;
};

inline ParsedRow parse_row(std::string_view text, std::size_t offset) {
  ParsedRow row;
  std::size_t i = 0;
  for (; i < text.size() && text[i] != '@'; ++i) {
    const char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "'", offset + i);
    row.letters.push_back(static_cast<unsigned char>(c));
  }
  if (i < text.size()) {
    row.has_colors = true;
    const std::size_t start = ++i;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c == 'w') row.colors.push_back(Color::white);
      else if (c == 'b') row.colors.push_back(Color::black);
      else throw ParseError(std::string("bad color '") + c + "'", offset + i);
    }
    if (row.colors.size() != row.letters.size())
      throw ParseError("color string length differs from word length", offset + start);
  }
  return row;
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  text.remove_prefix(lead);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':'", lead + text.size());
  if (text.find(':', colon + 1) != std::string_view::npos)
    throw ParseError("more than one ':'", lead + text.find(':', colon + 1));
  auto up = detail::parse_row(text.substr(0, colon), lead);
  auto down = detail::parse_row(text.substr(colon + 1), lead + colon + 1);
  const bool colored = up.has_colors || down.has_colors;
  if (colored) {
    if (!up.has_colors && !up.letters.empty())
      throw ParseError("upper row lacks colors", lead);
    if (!down.has_colors && !down.letters.empty())
      throw ParseError("lower row lacks colors", lead + colon + 1);
  }
  std::vector<int> blocks = up.letters;
  blocks.insert(blocks.end(), down.letters.begin(), down.letters.end());
  if (!colored) return Partition(up.letters.size(), down.letters.size(), blocks);
  std::vector<Color> colors = up.colors;
  colors.insert(colors.end(), down.colors.begin(), down.colors.end());
  return Partition(up.letters.size(), down.letters.size(), blocks, colors);
}

inline std::string serialize(const Partition& p) { return p.text(); }

// One partition per line; blank lines and '#' comments are skipped.
inline std::vector<Partition> read_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file '" + path + "'", 0);
  std::vector<Partition> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_partition(line));
  }
  return out;
}

}  // namespace particat
