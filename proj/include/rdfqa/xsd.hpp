// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "rdfqa/vocabulary.hpp"

namespace rdfqa::xsd {

namespace detail {

inline bool isDigit(char c) { return c >= '0' && c <= '9'; }

inline std::string_view collapse(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::size_t digitRun(std::string_view s, std::size_t pos) {
  std::size_t n = 0;
  while (pos + n < s.size() && isDigit(s[pos + n])) ++n;
  return n;
}

inline int number(std::string_view s, std::size_t pos, std::size_t len) {
  int v = 0;
  for (std::size_t i = 0; i < len; ++i) v = v * 10 + (s[pos + i] - '0');
  return v;
}

// Optional timezone: Z | (+|-)hh:mm with hh <= 14.
inline bool timezoneAt(std::string_view s, std::size_t pos) {
  if (pos == s.size()) return true;
  if (s[pos] == 'Z') return pos + 1 == s.size();
  if (s[pos] != '+' && s[pos] != '-') return false;
  if (s.size() != pos + 6 || s[pos + 3] != ':') return false;
  if (digitRun(s, pos + 1) < 2 || digitRun(s, pos + 4) < 2) return false;
  const int hh = number(s, pos + 1, 2);
  const int mm = number(s, pos + 4, 2);
  return mm <= 59 && (hh < 14 || (hh == 14 && mm == 0));
}

// -?YYYY+ with no leading zeros beyond four digits; returns end position.
inline std::optional<std::size_t> yearAt(std::string_view s, std::size_t pos,
                                         long long* year = nullptr) {
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  const auto n = digitRun(s, pos);
  if (n < 4 || (n > 4 && s[pos] == '0')) return std::nullopt;
  if (year != nullptr) {
    long long v = 0;
    for (std::size_t i = 0; i < n && i < 18; ++i) v = v * 10 + (s[pos + i] - '0');
    *year = negative ? -v : v;
  }
  return pos + n;
}

inline bool isLeap(long long y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

inline int daysIn(long long year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return month == 2 && isLeap(year) ? 29 : kDays[month - 1];
}

// YYYY-MM-DD; returns end position.
inline std::optional<std::size_t> dateAt(std::string_view s, std::size_t pos) {
  long long year = 0;
  auto end = yearAt(s, pos, &year);
  if (!end) return std::nullopt;
  pos = *end;
  if (s.size() < pos + 6 || s[pos] != '-' || s[pos + 3] != '-') return std::nullopt;
  if (digitRun(s, pos + 1) != 2 || digitRun(s, pos + 4) < 2) return std::nullopt;
  const int month = number(s, pos + 1, 2);
  const int day = number(s, pos + 4, 2);
  if (month < 1 || month > 12 || day < 1 || day > daysIn(year, month)) return std::nullopt;
  return pos + 6;
}

inline bool strictInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() && digitRun(s, 0) == s.size();
}

inline bool strictDecimal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  const auto intDigits = digitRun(s, 0);
  if (intDigits == s.size()) return intDigits > 0;
  if (s[intDigits] != '.') return false;
  const auto fracDigits = digitRun(s, intDigits + 1);
  return intDigits + 1 + fracDigits == s.size() && intDigits + fracDigits > 0;
}

}  // namespace detail

inline bool isValidInteger(std::string_view s) { return detail::strictInteger(detail::collapse(s)); }

inline bool isValidDecimal(std::string_view s) { return detail::strictDecimal(detail::collapse(s)); }

inline bool isValidDouble(std::string_view s) {
  s = detail::collapse(s);
  if (s == "INF" || s == "+INF" || s == "-INF" || s == "NaN") return true;
  const auto e = s.find_first_of("eE");
  if (e == std::string_view::npos) return detail::strictDecimal(s);
  return detail::strictDecimal(s.substr(0, e)) && detail::strictInteger(s.substr(e + 1));
}

inline bool isValidBoolean(std::string_view s) {
  s = detail::collapse(s);
  return s == "true" || s == "false" || s == "1" || s == "0";
}

inline bool isValidDate(std::string_view s) {
  s = detail::collapse(s);
  const auto end = detail::dateAt(s, 0);
  return end && detail::timezoneAt(s, *end);
}

inline bool isValidDateTime(std::string_view s) {
  s = detail::collapse(s);
  const auto end = detail::dateAt(s, 0);
  if (!end) return false;
  std::size_t pos = *end;
  if (s.size() < pos + 9 || s[pos] != 'T' || s[pos + 3] != ':' || s[pos + 6] != ':') return false;
  if (detail::digitRun(s, pos + 1) != 2 || detail::digitRun(s, pos + 4) != 2 ||
      detail::digitRun(s, pos + 7) != 2) {
    return false;
  }
  const int hh = detail::number(s, pos + 1, 2);
  const int mm = detail::number(s, pos + 4, 2);
  const int ss = detail::number(s, pos + 7, 2);
  pos += 9;
  bool fractionIsZero = true;
  if (pos < s.size() && s[pos] == '.') {
    const auto frac = detail::digitRun(s, pos + 1);
    if (frac == 0) return false;
    for (std::size_t i = 0; i < frac; ++i) fractionIsZero &= s[pos + 1 + i] == '0';
    pos += 1 + frac;
  }
  const bool endOfDay = hh == 24 && mm == 0 && ss == 0 && fractionIsZero;
  if (!endOfDay && (hh > 23 || mm > 59 || ss > 59)) return false;
  return detail::timezoneAt(s, pos);
}

inline bool isValidGYear(std::string_view s) {
  s = detail::collapse(s);
  const auto end = detail::yearAt(s, 0);
  return end && detail::timezoneAt(s, *end);
}

// Whether `datatype` is one whose lexical space is checked.
inline bool isCheckable(std::string_view datatype) {
  return datatype == vocab::xsdInteger || datatype == vocab::xsdDecimal ||
         datatype == vocab::xsdDouble || datatype == vocab::xsdBoolean ||
         datatype == vocab::xsdDate || datatype == vocab::xsdDateTime ||
         datatype == vocab::xsdGYear || datatype == vocab::xsdString;
}

// Lexical-space membership. Datatypes outside the checked set always pass.
inline bool isValidLexical(std::string_view lexical, std::string_view datatype) {
  if (datatype == vocab::xsdInteger) return isValidInteger(lexical);
  if (datatype == vocab::xsdDecimal) return isValidDecimal(lexical);
  if (datatype == vocab::xsdDouble) return isValidDouble(lexical);
  if (datatype == vocab::xsdBoolean) return isValidBoolean(lexical);
  if (datatype == vocab::xsdDate) return isValidDate(lexical);
  if (datatype == vocab::xsdDateTime) return isValidDateTime(lexical);
  if (datatype == vocab::xsdGYear) return isValidGYear(lexical);
  return true;
}

}  // namespace rdfqa::xsd
