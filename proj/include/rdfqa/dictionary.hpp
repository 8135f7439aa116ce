// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rdfqa/term.hpp"
#include "rdfqa/vocabulary.hpp"

namespace rdfqa {

inline std::string toLowerAscii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Word list for the misspelling check. Lookups ignore ASCII case.
class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(std::string id) : id_(std::move(id)) {}

  void add(std::string_view word) {
    if (!word.empty()) words_.insert(toLowerAscii(word));
  }

  bool contains(std::string_view token) const { return words_.count(toLowerAscii(token)) > 0; }
  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::string& id() const noexcept { return id_; }

  // One word per line; blank lines and lines starting with '#' are skipped.
  static Dictionary load(std::istream& in, std::string id) {
    Dictionary dict(std::move(id));
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      dict.add(std::string_view(line).substr(first, last - first + 1));
    }
    return dict;
  }

  static Dictionary load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dictionary " + path.string());
    return load(in, path.stem().string());
  }

 private:
  std::string id_;
  std::unordered_set<std::string> words_;
};

// Natural-language literals: plain, English-tagged, or xsd:string.
inline bool isCheckableLiteral(const Literal& lit) {
  if (lit.language) {
    const auto& tag = *lit.language;
    return (tag.size() == 2 || (tag.size() > 2 && tag[2] == '-')) &&
           (tag[0] | 0x20) == 'e' && (tag[1] | 0x20) == 'n';
  }
  return !lit.datatype || *lit.datatype == vocab::xsdString;
}

// Tokens of a literal that the spell check looks at. Whitespace-separated
// words that look like IRIs or e-mail addresses are skipped whole; the rest
// split on anything that is not an ASCII letter, digit or non-ASCII byte.
// A token is kept when it is at least two characters of ASCII letters only.
inline std::vector<std::string_view> checkableTokens(std::string_view lexical) {
  std::vector<std::string_view> tokens;
  auto isSpace = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  auto isTokenChar = [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u >= 0x80;
  };
  std::size_t pos = 0;
  while (pos < lexical.size()) {
    while (pos < lexical.size() && isSpace(lexical[pos])) ++pos;
    std::size_t end = pos;
    while (end < lexical.size() && !isSpace(lexical[end])) ++end;
    const auto word = lexical.substr(pos, end - pos);
    pos = end;
    if (word.empty() || word.find("://") != std::string_view::npos ||
        word.find('@') != std::string_view::npos) {
      continue;
    }
    std::size_t i = 0;
    while (i < word.size()) {
      while (i < word.size() && !isTokenChar(word[i])) ++i;
      std::size_t j = i;
      bool alphaOnly = true;
      while (j < word.size() && isTokenChar(word[j])) {
        const auto u = static_cast<unsigned char>(word[j]);
        alphaOnly &= (u < 0x80 && std::isalpha(u));
        ++j;
      }
      if (j - i >= 2 && alphaOnly) tokens.push_back(word.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

// True when a checkable literal has a token missing from the dictionary.
inline bool isMisspelled(const Literal& lit, const Dictionary& dict) {
  if (!isCheckableLiteral(lit)) return false;
  for (auto token : checkableTokens(lit.lexical)) {
    if (!dict.contains(token)) return true;
  }
  return false;
}

}  // namespace rdfqa
