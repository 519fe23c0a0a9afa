#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "parkhopf/cqsym.hpp"
#include "parkhopf/linmod.hpp"
#include "parkhopf/matreal.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/sqsym.hpp"
#include "parkhopf/symfun.hpp"
#include "parkhopf/word.hpp"

namespace parkhopf {

using Json = nlohmann::ordered_json;

Json to_json(const Word& w);
Json to_json(const Composition& c);
Json to_json(const Partition& p);
Json to_json(const NonCrossingPartition& pi);
Json to_json(const HypoKey& q);
Json to_json(const PackedMatrix& m);
Json to_json(const Rational& q);

Word word_from_json(const Json& j);
HypoKey hypo_key_from_json(const Json& j);
PackedMatrix matrix_from_json(const Json& j);
/// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);

template <class Label, class Tag>
Json to_json(const LinComb<Label, Tag>& x) {
  Json terms = Json::array();
  for (const auto& [label, c] : x) terms.push_back({{"idx", to_json(label)}, {"c", to_json(c)}});
  return {{"basis", std::string(Tag::name)}, {"algebra", std::string(Tag::algebra)}, {"terms", terms}};
}

template <class Label, class Tag>
Json to_json(const Tensor<Label, Tag>& x) {
  Json terms = Json::array();
  for (const auto& [pair, c] : x) {
    terms.push_back({{"idx", Json::array({to_json(pair.first), to_json(pair.second)})}, {"c", to_json(c)}});
  }
  return {{"basis", std::string(Tag::name)}, {"algebra", std::string(Tag::algebra)}, {"tensor", true}, {"terms", terms}};
}

/// Word-labelled element; throws std::invalid_argument when the basis tag differs.
template <class Tag>
LinComb<Word, Tag> word_element_from_json(const Json& j) {
  if (j.at("basis").get<std::string>() != Tag::name) throw std::invalid_argument("basis mismatch");
  LinComb<Word, Tag> out;
  for (const auto& t : j.at("terms")) out.add(word_from_json(t.at("idx")), rational_from_json(t.at("c")));
  return out;
}

Json to_json(const Polynomial& p);
Json to_json(const SymFunction& x);
Json to_json(const QSymFunction& x);
Json to_json(const NSymFunction& x);

Json sequence_json(const std::string& key, const std::vector<Rational>& values);
Json sequence_json(const std::string& key, const std::vector<Integer>& values);

}  // namespace parkhopf
