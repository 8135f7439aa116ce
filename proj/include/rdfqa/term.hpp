// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace rdfqa {

struct Iri {
  std::string value;

  friend bool operator==(const Iri&, const Iri&) = default;
};

struct BlankNode {
  std::string label;

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
};

// At most one of datatype / language is set. Neither set means a plain literal.
struct Literal {
  std::string lexical;
  std::optional<std::string> datatype;
  std::optional<std::string> language;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline Term iri(std::string value) { return Iri{std::move(value)}; }
inline Term blank(std::string label) { return BlankNode{std::move(label)}; }
inline Term plainLiteral(std::string lexical) { return Literal{std::move(lexical), {}, {}}; }
inline Term typedLiteral(std::string lexical, std::string datatype) {
  return Literal{std::move(lexical), std::move(datatype), {}};
}
inline Term langLiteral(std::string lexical, std::string language) {
  return Literal{std::move(lexical), {}, std::move(language)};
}

inline bool isIri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool isBlank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool isLiteral(const Term& t) { return std::holds_alternative<Literal>(t); }

inline const Iri* asIri(const Term& t) { return std::get_if<Iri>(&t); }
inline const Literal* asLiteral(const Term& t) { return std::get_if<Literal>(&t); }

// The IRI text if `t` is an IRI, empty otherwise.
inline std::string_view iriText(const Term& t) {
  if (const auto* i = asIri(t)) return i->value;
  return {};
}

// An absolute IRI carries a scheme: ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":".
inline bool isAbsoluteIri(std::string_view s) {
  if (s.empty()) return false;
  auto isAlpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  if (!isAlpha(s.front())) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (c == ':') return true;
    if (!(isAlpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.')) return false;
  }
  return false;
}

struct Triple {
  Term subject;  // Iri or BlankNode
  Iri predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

namespace detail {
inline void hashCombine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}
}  // namespace detail

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    std::size_t seed = t.index();
    std::hash<std::string_view> h;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Iri>) {
            detail::hashCombine(seed, h(v.value));
          } else if constexpr (std::is_same_v<T, BlankNode>) {
            detail::hashCombine(seed, h(v.label));
          } else {
            detail::hashCombine(seed, h(v.lexical));
            detail::hashCombine(seed, v.datatype ? h(*v.datatype) + 1 : 0);
            detail::hashCombine(seed, v.language ? h(*v.language) + 2 : 0);
          }
        },
        t);
    return seed;
  }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    TermHash th;
    std::size_t seed = th(t.subject);
    detail::hashCombine(seed, std::hash<std::string_view>{}(t.predicate.value));
    detail::hashCombine(seed, th(t.object));
    return seed;
  }
};

}  // namespace rdfqa
