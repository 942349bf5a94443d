// Tiny text helpers shared by the pretty-printers: Unicode superscript and
// subscript digits for exponents in element output and table cells.
#pragma once

#include <string>

namespace equicohom {

inline std::string unicode_superscript(long long v) {
  static const char* kDigits[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  unsigned long long mag;
  if (v < 0) {
    out += "⁻";
    mag = static_cast<unsigned long long>(-(v + 1)) + 1;
  } else {
    mag = static_cast<unsigned long long>(v);
  }
  for (char c : std::to_string(mag)) out += kDigits[c - '0'];
  return out;
}

inline std::string unicode_subscript(long long v) {
  static const char* kDigits[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  unsigned long long mag;
  if (v < 0) {
    out += "₋";
    mag = static_cast<unsigned long long>(-(v + 1)) + 1;
  } else {
    mag = static_cast<unsigned long long>(v);
  }
  for (char c : std::to_string(mag)) out += kDigits[c - '0'];
  return out;
}

// Number of display columns of a UTF-8 string under the assumption (true for
// every glyph this library emits) that each code point occupies one column.
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace equicohom
