// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <string>
#include <string_view>

#include "rdfqa/term.hpp"

namespace rdfqa {

namespace detail {

inline void appendUcharEscape(std::string& out, unsigned char c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
  out += buf;
}

inline void appendIri(std::string& out, std::string_view iri) {
  out += '<';
  for (const char ch : iri) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        appendUcharEscape(out, c);
        break;
      default:
        if (c <= 0x20) {
          appendUcharEscape(out, c);
        } else {
          out += ch;
        }
    }
  }
  out += '>';
}

inline void appendQuoted(std::string& out, std::string_view lexical) {
  out += '"';
  for (const char ch : lexical) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: {
        const auto c = static_cast<unsigned char>(ch);
        if (c <= 0x07 || c == 0x0B || (c >= 0x0E && c <= 0x1F) || c == 0x7F) {
          appendUcharEscape(out, c);
        } else {
          out += ch;
        }
      }
    }
  }
  out += '"';
}

}  // namespace detail

inline void appendNTriples(std::string& out, const Term& term) {
  if (const auto* i = std::get_if<Iri>(&term)) {
    detail::appendIri(out, i->value);
  } else if (const auto* b = std::get_if<BlankNode>(&term)) {
    out += "_:";
    out += b->label;
  } else {
    const auto& lit = std::get<Literal>(term);
    detail::appendQuoted(out, lit.lexical);
    if (lit.language) {
      out += '@';
      out += *lit.language;
    } else if (lit.datatype) {
      out += "^^";
      detail::appendIri(out, *lit.datatype);
    }
  }
}

// Canonical single-term rendering. Distinct terms always render differently,
// so the result doubles as a hash key.
inline std::string toNTriples(const Term& term) {
  std::string out;
  appendNTriples(out, term);
  return out;
}

// One statement without the trailing newline: `<s> <p> <o> .`
inline std::string toNTriples(const Triple& t) {
  std::string out;
  appendNTriples(out, t.subject);
  out += ' ';
  detail::appendIri(out, t.predicate.value);
  out += ' ';
  appendNTriples(out, t.object);
  out += " .";
  return out;
}

}  // namespace rdfqa
