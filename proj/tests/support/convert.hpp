#pragma once

#include <map>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "parkhopf/linmod.hpp"
#include "parkhopf/word.hpp"

namespace support {

inline parkhopf::Word word(const oracle::Vec& v) { return parkhopf::Word(v); }
inline oracle::Vec vec(const parkhopf::Word& w) { return oracle::Vec(w.begin(), w.end()); }

inline std::vector<parkhopf::Word> words(const std::vector<oracle::Vec>& vs) {
  std::vector<parkhopf::Word> out;
  for (const auto& v : vs) out.push_back(word(v));
  return out;
}

template <class Tag>
parkhopf::LinComb<parkhopf::Word, Tag> element(const std::map<oracle::Vec, long>& m) {
  parkhopf::LinComb<parkhopf::Word, Tag> out;
  for (const auto& [v, c] : m) out.add(word(v), c);
  return out;
}

template <class Tag>
parkhopf::Tensor<parkhopf::Word, Tag> tensor(const std::map<std::pair<oracle::Vec, oracle::Vec>, long>& m) {
  parkhopf::Tensor<parkhopf::Word, Tag> out;
  for (const auto& [p, c] : m) out.add({word(p.first), word(p.second)}, c);
  return out;
}

}  // namespace support
