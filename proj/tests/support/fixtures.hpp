#pragma once

#include <string>
#include <string_view>

#include "omega/syntax.hpp"
#include "omega/theory.hpp"

namespace fx {

inline omega::Polynomial poly(const omega::TheoryPreset& t, std::string_view text) {
  return omega::parse_polynomial(text, t.signature);
}

inline omega::Word word(const omega::TheoryPreset& t, std::string_view text) {
  return omega::parse_word(text, t.signature);
}

inline std::string show(const omega::TheoryPreset& t, const omega::Polynomial& f) {
  return omega::format_polynomial(f, t.signature, &t.order);
}

inline omega::Polynomial nf(const omega::TheoryPreset& t, const omega::Polynomial& f) {
  return omega::normal_form(f, t.rules(), t.order, {.record_trace = false}).first;
}

// Shared presets; construction runs the leading-word assertions once.
inline const omega::TheoryPreset& rb() {
  static const auto t = omega::preset(omega::TheoryId::rb);
  return t;
}
inline const omega::TheoryPreset& diff() {
  static const auto t = omega::preset(omega::TheoryId::diff);
  return t;
}
inline const omega::TheoryPreset& drb() {
  static const auto t = omega::preset(omega::TheoryId::drb);
  return t;
}

}  // namespace fx
