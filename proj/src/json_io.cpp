#include "parkhopf/json_io.hpp"

#include <stdexcept>

namespace parkhopf {

namespace {

template <class Map>
Json terms_json(const Map& terms) {
  Json out = Json::array();
  for (const auto& [label, c] : terms) out.push_back({{"idx", to_json(label)}, {"c", to_json(c)}});
  return out;
}

}  // namespace

Json to_json(const Word& w) { return Json(w.vec()); }
Json to_json(const Composition& c) { return Json(c.parts()); }
Json to_json(const Partition& p) { return Json(p.parts()); }
Json to_json(const NonCrossingPartition& pi) { return Json(pi.blocks()); }
Json to_json(const HypoKey& q) { return {{"ev", q.ev}, {"recoil", q.recoil.parts()}}; }
Json to_json(const PackedMatrix& m) { return Json(m.rows()); }
Json to_json(const Rational& q) { return to_string(q); }

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be a JSON array");
  std::vector<Letter> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 1) throw std::invalid_argument("letters must be positive integers");
    letters.push_back(x.get<Letter>());
  }
  return Word(std::move(letters));
}

HypoKey hypo_key_from_json(const Json& j) {
  HypoKey q;
  q.ev = j.at("ev").get<std::vector<int>>();
  q.recoil = Composition(j.at("recoil").get<std::vector<int>>());
  return q;
}

PackedMatrix matrix_from_json(const Json& j) { return PackedMatrix(j.get<std::vector<std::vector<int>>>()); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("coefficient must be a string or an integer");
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p) terms.push_back({{"exponents", e}, {"c", to_json(c)}});
  return {{"terms", terms}};
}

Json to_json(const SymFunction& x) {
  static const char* names[] = {"m", "e", "h"};
  return {{"basis", names[static_cast<int>(x.basis())]}, {"algebra", "Sym"}, {"terms", terms_json(x.terms())}};
}

Json to_json(const QSymFunction& x) {
  return {{"basis", x.basis() == QSymBasis::M ? "M" : "F"}, {"algebra", "QSym"}, {"terms", terms_json(x.terms())}};
}

Json to_json(const NSymFunction& x) {
  return {{"basis", x.basis() == NSymBasis::S ? "S" : "R"}, {"algebra", "NSym"}, {"terms", terms_json(x.terms())}};
}

Json sequence_json(const std::string& key, const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& q : values) arr.push_back(to_json(q));
  return {{key, arr}};
}

Json sequence_json(const std::string& key, const std::vector<Integer>& values) {
  Json arr = Json::array();
  for (const Integer& z : values) arr.push_back(z.get_str());
  return {{key, arr}};
}

}  // namespace parkhopf
