#pragma once

#include <string>

#include "parkhopf/linmod.hpp"
#include "parkhopf/word.hpp"

namespace parkhopf {

/// "2*F12 - F21 + 1/2"; label_text returns "" for the unit label.
template <class Label, class Tag, class LabelText>
std::string format_terms(const LinComb<Label, Tag>& x, LabelText&& label_text) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [label, c] : x) {
    const std::string name = label_text(label);
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (name.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += name;
    } else {
      out += magnitude.get_str() + "*" + name;
    }
  }
  return out;
}


/// Word-labelled element: "F12 + F21", unit printed as "1".
template <class Tag>
std::string to_string(const LinComb<Word, Tag>& x) {
  return format_terms(x, [](const Word& w) {
    return w.empty() ? std::string() : std::string(Tag::name) + to_string(w);
  });
}

/// "F1 ⊗ F132 + F21 ⊗ F21"; empty labels print as 1.
template <class Tag>
std::string to_string(const Tensor<Word, Tag>& x) {
  auto side = [](const Word& w) { return w.empty() ? std::string("1") : std::string(Tag::name) + to_string(w); };
  return format_terms(x, [&](const std::pair<Word, Word>& p) { return side(p.first) + " ⊗ " + side(p.second); });
}

}  // namespace parkhopf
