// SPDX-License-Identifier: Apache-2.0
#pragma once

// Streaming reader for N-Triples and Turtle.
//
// Both syntaxes share one recursive-descent cursor. In N-Triples mode the
// Turtle-only productions (directives, prefixed names, `a`, `;`, `,`,
// anonymous nodes, collections, numeric and long literals) are rejected and
// blank node labels are kept verbatim. In Turtle mode every blank node,
// labelled or anonymous, is renamed to `b<N>` in order of first appearance so
// generated labels can never collide with document labels.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rdfqa/error.hpp"
#include "rdfqa/term.hpp"
#include "rdfqa/vocabulary.hpp"

namespace rdfqa {

enum class Format { NTriples, Turtle };

inline std::string_view formatName(Format f) {
  return f == Format::NTriples ? "ntriples" : "turtle";
}

namespace detail {

struct IriParts {
  std::string scheme;
  bool hasAuthority = false;
  std::string authority;
  std::string path;
  bool hasQuery = false;
  std::string query;
  bool hasFragment = false;
  std::string fragment;
};

inline IriParts splitIri(std::string_view s) {
  IriParts p;
  if (isAbsoluteIri(s)) {
    const auto colon = s.find(':');
    p.scheme = std::string(s.substr(0, colon));
    s.remove_prefix(colon + 1);
  }
  if (s.starts_with("//")) {
    s.remove_prefix(2);
    const auto end = s.find_first_of("/?#");
    p.hasAuthority = true;
    p.authority = std::string(s.substr(0, end));
    s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  }
  const auto pathEnd = s.find_first_of("?#");
  p.path = std::string(s.substr(0, pathEnd));
  s = pathEnd == std::string_view::npos ? std::string_view{} : s.substr(pathEnd);
  if (s.starts_with('?')) {
    const auto end = s.find('#');
    p.hasQuery = true;
    p.query = std::string(s.substr(1, end == std::string_view::npos ? end : end - 1));
    s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  }
  if (s.starts_with('#')) {
    p.hasFragment = true;
    p.fragment = std::string(s.substr(1));
  }
  return p;
}

inline std::string removeDotSegments(std::string_view input) {
  std::string in(input);
  std::string out;
  while (!in.empty()) {
    if (in.starts_with("../")) {
      in.erase(0, 3);
    } else if (in.starts_with("./")) {
      in.erase(0, 2);
    } else if (in.starts_with("/./")) {
      in.erase(0, 2);
    } else if (in == "/.") {
      in = "/";
    } else if (in.starts_with("/../") || in == "/..") {
      in = in == "/.." ? "/" : in.substr(3);
      const auto cut = out.rfind('/');
      out.erase(cut == std::string::npos ? 0 : cut);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      const auto next = in.find('/', in.starts_with('/') ? 1 : 0);
      out += in.substr(0, next);
      in.erase(0, next == std::string::npos ? in.size() : next);
    }
  }
  return out;
}

inline std::string joinIri(const IriParts& p) {
  std::string r;
  if (!p.scheme.empty()) r += p.scheme + ":";
  if (p.hasAuthority) r += "//" + p.authority;
  r += p.path;
  if (p.hasQuery) r += "?" + p.query;
  if (p.hasFragment) r += "#" + p.fragment;
  return r;
}

}  // namespace detail

// Reference resolution against an absolute base (RFC 3986, section 5.2).
inline std::string resolveIri(std::string_view base, std::string_view ref) {
  if (isAbsoluteIri(ref)) {
    auto r = detail::splitIri(ref);
    r.path = detail::removeDotSegments(r.path);
    return detail::joinIri(r);
  }
  const auto b = detail::splitIri(base);
  auto r = detail::splitIri(ref);
  detail::IriParts t;
  t.scheme = b.scheme;
  if (r.hasAuthority) {
    t.hasAuthority = true;
    t.authority = r.authority;
    t.path = detail::removeDotSegments(r.path);
    t.hasQuery = r.hasQuery;
    t.query = r.query;
  } else {
    t.hasAuthority = b.hasAuthority;
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.hasQuery = r.hasQuery || b.hasQuery;
      t.query = r.hasQuery ? r.query : b.query;
    } else {
      if (r.path.starts_with('/')) {
        t.path = detail::removeDotSegments(r.path);
      } else {
        std::string merged;
        if (b.hasAuthority && b.path.empty()) {
          merged = "/" + r.path;
        } else {
          const auto slash = b.path.rfind('/');
          merged = (slash == std::string::npos ? std::string{} : b.path.substr(0, slash + 1)) +
                   r.path;
        }
        t.path = detail::removeDotSegments(merged);
      }
      t.hasQuery = r.hasQuery;
      t.query = r.query;
    }
  }
  t.hasFragment = r.hasFragment;
  t.fragment = r.fragment;
  return detail::joinIri(t);
}

struct ReadOptions {
  // Base for relative IRIs in Turtle; ignored for N-Triples.
  std::string baseIri;
};

class RdfReader {
 public:
  using Sink = std::function<void(Triple&&)>;

  RdfReader(std::string_view text, Format format, ReadOptions options = {})
      : text_(text), format_(format), base_(std::move(options.baseIri)) {}

  void read(const Sink& sink) {
    sink_ = &sink;
    skipWs();
    while (!eof()) {
      if (format_ == Format::NTriples) {
        ntriplesStatement();
      } else {
        turtleStatement();
      }
      skipWs();
    }
    sink_ = nullptr;
  }

 private:
  // ---- cursor -------------------------------------------------------------

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const { failAt(pos_, message); }

  [[noreturn]] void failAt(std::size_t at, const std::string& message) const {
    std::size_t line = 1;
    std::size_t lineStart = 0;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        lineStart = i + 1;
      }
    }
    throw SyntaxError(line, at - lineStart + 1, message);
  }

  void expect(char c) {
    if (peek() != c || eof()) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skipWs() {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!eof() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void emit(Term subject, Iri predicate, Term object) {
    (*sink_)(Triple{std::move(subject), std::move(predicate), std::move(object)});
  }

  // ---- character classes ----------------------------------------------------

  static bool isAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool isDigit(char c) { return c >= '0' && c <= '9'; }
  static bool isHex(char c) {
    return isDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
  }
  static bool isPnCharsBase(char c) {
    return isAlpha(c) || static_cast<unsigned char>(c) >= 0x80;
  }
  static bool isPnCharsU(char c) { return isPnCharsBase(c) || c == '_'; }
  static bool isPnChars(char c) { return isPnCharsU(c) || c == '-' || isDigit(c); }
  static bool isWs(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  static void appendUtf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  // Reads the hex digits of \uXXXX or \UXXXXXXXX; the cursor is after the 'u'.
  std::uint32_t readUchar(std::size_t digits) {
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = peek();
      if (eof() || !isHex(c)) fail("invalid unicode escape");
      cp = cp * 16 + static_cast<std::uint32_t>(isDigit(c) ? c - '0' : (c | 0x20) - 'a' + 10);
      ++pos_;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point in escape");
    return cp;
  }

  // ---- terminals --------------------------------------------------------------

  std::string readIriRef() {
    const std::size_t start = pos_;
    expect('<');
    std::string value;
    for (;;) {
      if (eof()) failAt(start, "unterminated IRI");
      const char c = next();
      if (c == '>') break;
      if (c == '\\') {
        const char kind = eof() ? '\0' : next();
        if (kind == 'u') {
          appendUtf8(value, readUchar(4));
        } else if (kind == 'U') {
          appendUtf8(value, readUchar(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      const auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`') {
        failAt(pos_ - 1, "invalid character in IRI");
      }
      value += c;
    }
    if (format_ == Format::NTriples) {
      if (!isAbsoluteIri(value)) failAt(start, "relative IRI not allowed in N-Triples");
      return value;
    }
    if (isAbsoluteIri(value)) return value;
    if (base_.empty()) failAt(start, "relative IRI <" + value + "> without a base");
    return resolveIri(base_, value);
  }

  std::string readBlankLabel() {
    if (peek() != '_' || peek(1) != ':') fail("expected blank node label");
    pos_ += 2;
    if (eof() || !(isPnCharsU(peek()) || isDigit(peek()))) fail("empty blank node label");
    std::string label;
    while (!eof() && (isPnChars(peek()) || peek() == '.')) label += next();
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    if (format_ == Format::NTriples) return label;
    auto [it, inserted] = labels_.try_emplace(label, std::string{});
    if (inserted) it->second = freshLabel();
    return it->second;
  }

  std::string freshLabel() { return "b" + std::to_string(blankCounter_++); }

  std::string readLangTag() {
    expect('@');
    std::string tag;
    if (eof() || !isAlpha(peek())) fail("invalid language tag");
    while (!eof() && isAlpha(peek())) tag += next();
    while (peek() == '-' && (isAlpha(peek(1)) || isDigit(peek(1)))) {
      tag += next();
      while (!eof() && (isAlpha(peek()) || isDigit(peek()))) tag += next();
    }
    return tag;
  }

  std::string readQuoted() {
    const std::size_t start = pos_;
    const char quote = peek();
    const bool isLong = peek(1) == quote && peek(2) == quote;
    if (format_ == Format::NTriples && (quote != '"' || isLong)) {
      fail("only \"...\" literals are allowed in N-Triples");
    }
    pos_ += isLong ? 3 : 1;
    std::string value;
    for (;;) {
      if (eof()) failAt(start, "unterminated string literal");
      const char c = next();
      if (c == quote) {
        if (!isLong) break;
        if (peek() == quote && peek(1) == quote) {
          // Up to two extra quotes may close a long string: """a""""" -> a""
          if (peek(2) == quote) {
            value += c;
            continue;
          }
          pos_ += 2;
          break;
        }
        value += c;
        continue;
      }
      if (!isLong && (c == '\n' || c == '\r')) failAt(pos_ - 1, "newline in string literal");
      if (c == '\\') {
        const char e = eof() ? '\0' : next();
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': appendUtf8(value, readUchar(4)); break;
          case 'U': appendUtf8(value, readUchar(8)); break;
          default: failAt(pos_ - 1, "invalid escape in string literal");
        }
        continue;
      }
      value += c;
    }
    return value;
  }

  Term readQuotedLiteral() {
    std::string lexical = readQuoted();
    if (peek() == '@') return Literal{std::move(lexical), std::nullopt, readLangTag()};
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      std::string datatype = format_ == Format::NTriples ? readIriRef() : readIri();
      return Literal{std::move(lexical), std::move(datatype), std::nullopt};
    }
    return Literal{std::move(lexical), std::nullopt, std::nullopt};
  }

  // ---- N-Triples --------------------------------------------------------------

  void ntriplesStatement() {
    Term subject;
    if (peek() == '<') {
      subject = Iri{readIriRef()};
    } else if (peek() == '_') {
      subject = BlankNode{readBlankLabel()};
    } else {
      fail("expected subject IRI or blank node");
    }
    skipWs();
    if (peek() != '<') fail("expected predicate IRI");
    Iri predicate{readIriRef()};
    skipWs();
    Term object;
    if (peek() == '<') {
      object = Iri{readIriRef()};
    } else if (peek() == '_') {
      object = BlankNode{readBlankLabel()};
    } else if (peek() == '"') {
      object = readQuotedLiteral();
    } else {
      fail("expected object IRI, blank node or literal");
    }
    skipWs();
    expect('.');
    emit(std::move(subject), std::move(predicate), std::move(object));
  }

  // ---- Turtle -----------------------------------------------------------------

  bool matchKeyword(std::string_view word) const {
    if (pos_ + word.size() > text_.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if ((text_[pos_ + i] | 0x20) != (word[i] | 0x20)) return false;
    }
    return isWs(peek(word.size())) || peek(word.size()) == '<';
  }

  void turtleStatement() {
    if (peek() == '@') {
      if (text_.substr(pos_).starts_with("@prefix")) {
        pos_ += 7;
        prefixDirective();
        skipWs();
        expect('.');
      } else if (text_.substr(pos_).starts_with("@base")) {
        pos_ += 5;
        baseDirective();
        skipWs();
        expect('.');
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (matchKeyword("prefix")) {
      pos_ += 6;
      prefixDirective();
      return;
    }
    if (matchKeyword("base")) {
      pos_ += 4;
      baseDirective();
      return;
    }
    if (peek() == '[' && !atAnon()) {
      Term subject = blankPropertyList();
      skipWs();
      if (peek() != '.') predicateObjectList(subject);
    } else {
      Term subject = readSubject();
      skipWs();
      predicateObjectList(subject);
    }
    skipWs();
    expect('.');
  }

  void prefixDirective() {
    skipWs();
    std::string prefix;
    while (!eof() && peek() != ':') {
      const char c = peek();
      if (!(isPnChars(c) || c == '.')) fail("invalid prefix name");
      prefix += next();
    }
    if (!prefix.empty() && (!isPnCharsBase(prefix.front()) || prefix.back() == '.')) {
      fail("invalid prefix name");
    }
    expect(':');
    skipWs();
    prefixes_[prefix] = readIriRef();
  }

  void baseDirective() {
    skipWs();
    base_ = readIriRef();
  }

  bool atAnon() const {
    if (peek() != '[') return false;
    std::size_t i = pos_ + 1;
    while (i < text_.size()) {
      const char c = text_[i];
      if (isWs(c)) {
        ++i;
      } else if (c == '#') {
        while (i < text_.size() && text_[i] != '\n') ++i;
      } else {
        return c == ']';
      }
    }
    return false;
  }

  std::string readPrefixedName() {
    const std::size_t start = pos_;
    std::string prefix;
    while (!eof() && peek() != ':') {
      const char c = peek();
      if (!(isPnChars(c) || c == '.')) failAt(start, "expected IRI or prefixed name");
      prefix += next();
    }
    if (eof()) failAt(start, "expected IRI or prefixed name");
    ++pos_;  // ':'
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) failAt(start, "undefined prefix '" + prefix + ":'");
    std::string local;
    std::size_t trailingDots = 0;
    bool first = true;
    for (;;) {
      const char c = peek();
      if (eof()) break;
      if (c == '%' && isHex(peek(1)) && isHex(peek(2))) {
        local += text_.substr(pos_, 3);
        pos_ += 3;
        trailingDots = 0;
      } else if (c == '\\' && std::string_view("_~.-!$&'()*+,;=/?#@%").find(peek(1)) !=
                                     std::string_view::npos &&
                 peek(1) != '\0') {
        local += peek(1);
        pos_ += 2;
        trailingDots = 0;
      } else if (isPnCharsU(c) || c == ':' || isDigit(c) || (!first && (c == '-'))) {
        local += next();
        trailingDots = 0;
      } else if (!first && c == '.') {
        local += next();
        ++trailingDots;
      } else {
        break;
      }
      first = false;
    }
    if (trailingDots > 0) {
      local.erase(local.size() - trailingDots);
      pos_ -= trailingDots;
    }
    return it->second + local;
  }

  std::string readIri() {
    if (peek() == '<') return readIriRef();
    return readPrefixedName();
  }

  Term readSubject() {
    switch (peek()) {
      case '<': return Iri{readIriRef()};
      case '_': return BlankNode{readBlankLabel()};
      case '[':
        if (!atAnon()) fail("unexpected '['");
        skipAnon();
        return BlankNode{freshLabel()};
      case '(': return collection();
      case '"':
      case '\'': fail("literal in subject position");
      default: return Iri{readPrefixedName()};
    }
  }

  void skipAnon() {
    expect('[');
    skipWs();
    expect(']');
  }

  Iri readVerb() {
    if (peek() == 'a' && !(isPnChars(peek(1)) || peek(1) == ':' || peek(1) == '.')) {
      ++pos_;
      return Iri{vocab::rdfType};
    }
    if (peek() == '<') return Iri{readIriRef()};
    if (peek() == '_' || peek() == '[' || peek() == '"') fail("expected predicate");
    return Iri{readPrefixedName()};
  }

  void predicateObjectList(const Term& subject) {
    for (;;) {
      Iri verb = readVerb();
      objectList(subject, verb);
      skipWs();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skipWs();
      }
      if (eof() || peek() == '.' || peek() == ']') return;
    }
  }

  void objectList(const Term& subject, const Iri& verb) {
    for (;;) {
      skipWs();
      Term object = readObject();
      emit(subject, verb, std::move(object));
      skipWs();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  bool atKeyword(std::string_view word) const {
    if (!text_.substr(pos_).starts_with(word)) return false;
    const char after = peek(word.size());
    return !(isPnChars(after) || after == ':');
  }

  Term readNumber() {
    const std::size_t start = pos_;
    std::string lexical;
    if (peek() == '+' || peek() == '-') lexical += next();
    bool digitsBefore = false;
    while (isDigit(peek())) {
      lexical += next();
      digitsBefore = true;
    }
    bool isDecimal = false;
    if (peek() == '.' && isDigit(peek(1))) {
      isDecimal = true;
      lexical += next();
      while (isDigit(peek())) lexical += next();
    } else if (!digitsBefore) {
      failAt(start, "invalid numeric literal");
    }
    if (peek() == 'e' || peek() == 'E') {
      std::string exp(1, next());
      if (peek() == '+' || peek() == '-') exp += next();
      if (!isDigit(peek())) failAt(start, "invalid exponent in numeric literal");
      while (isDigit(peek())) exp += next();
      return Literal{lexical + exp, vocab::xsdDouble, std::nullopt};
    }
    return Literal{std::move(lexical), isDecimal ? vocab::xsdDecimal : vocab::xsdInteger,
                   std::nullopt};
  }

  Term readObject() {
    const char c = peek();
    switch (c) {
      case '<': return Iri{readIriRef()};
      case '_': return BlankNode{readBlankLabel()};
      case '[':
        if (atAnon()) {
          skipAnon();
          return BlankNode{freshLabel()};
        }
        return blankPropertyList();
      case '(': return collection();
      case '"':
      case '\'': return readQuotedLiteral();
      default: break;
    }
    if (isDigit(c) || c == '+' || c == '-' || (c == '.' && isDigit(peek(1)))) return readNumber();
    if (atKeyword("true")) {
      pos_ += 4;
      return Literal{"true", vocab::xsdBoolean, std::nullopt};
    }
    if (atKeyword("false")) {
      pos_ += 5;
      return Literal{"false", vocab::xsdBoolean, std::nullopt};
    }
    if (eof()) fail("unexpected end of input, expected object");
    return Iri{readPrefixedName()};
  }

  Term blankPropertyList() {
    expect('[');
    Term node = BlankNode{freshLabel()};
    skipWs();
    predicateObjectList(node);
    skipWs();
    expect(']');
    return node;
  }

  Term collection() {
    expect('(');
    std::vector<Term> items;
    for (;;) {
      skipWs();
      if (eof()) fail("unterminated collection");
      if (peek() == ')') {
        ++pos_;
        break;
      }
      items.push_back(readObject());
    }
    if (items.empty()) return Iri{vocab::rdfNil};
    std::vector<Term> cells;
    cells.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(BlankNode{freshLabel()});
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(cells[i], Iri{vocab::rdfFirst}, std::move(items[i]));
      emit(cells[i], Iri{vocab::rdfRest},
           i + 1 < items.size() ? cells[i + 1] : Term{Iri{vocab::rdfNil}});
    }
    return cells.front();
  }

  std::string_view text_;
  Format format_;
  std::string base_;
  std::size_t pos_ = 0;
  const Sink* sink_ = nullptr;
  std::unordered_map<std::string, std::string> prefixes_;
  std::unordered_map<std::string, std::string> labels_;
  std::size_t blankCounter_ = 0;
};

}  // namespace rdfqa
