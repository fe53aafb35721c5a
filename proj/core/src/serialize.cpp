#include "spweyl/serialize.hpp"

#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace spweyl {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::int64_t as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_ints(const Json& v, const char* what) {
  if (!v.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(as_int(e, what));
  return out;
}

std::vector<Row> as_rows(const Json& v, const char* what, int expected_rows) {
  if (!v.is_array() || static_cast<int>(v.size()) != expected_rows)
    malformed(std::string(what) + " must have " + std::to_string(expected_rows) + " rows");
  std::vector<Row> rows;
  for (int j = 1; j <= expected_rows; ++j) {
    rows.push_back(as_ints(v[j - 1], what));
    if (static_cast<int>(rows.back().size()) != j) malformed(std::string(what) + " row " + std::to_string(j) + " has the wrong length");
  }
  return rows;
}

template <bool R>
Json pattern_json(const BasicPattern<R>& p) {
  return Json{{"rank", p.rank}, {"eta", p.eta}, {"lambda", p.lambda}};
}

template <bool R>
BasicPattern<R> pattern_of(const Json& j) {
  BasicPattern<R> p;
  p.rank = static_cast<int>(as_int(field(j, "rank"), "rank"));
  if (p.rank < 1) malformed("rank must be positive");
  p.eta = as_rows(field(j, "eta"), "eta", p.rank);
  p.lambda = as_rows(field(j, "lambda"), "lambda", R ? p.rank - 1 : p.rank);
  return p;
}

template <bool R>
Json pop_json(const BasicPop<R>& p) {
  Json j = pattern_json(p.pattern);
  Json overlays = Json::array();
  for (const auto& pos : overlay_positions(p.rank(), R))
    overlays.push_back(Json{{"i", pos.i}, {"j", pos.j}, {"barred", pos.barred}, {"parts", p.overlay(pos).parts}});
  j["overlays"] = std::move(overlays);
  return j;
}

template <bool R>
BasicPop<R> pop_of(const Json& j) {
  BasicPop<R> p;
  p.pattern = pattern_of<R>(j);
  const int r = p.rank();
  p.barred.resize(tri_size(R ? r - 1 : r));
  p.unbarred.resize(tri_size(r - 1));
  const Json& overlays = field(j, "overlays");
  const auto slots = overlay_positions(r, R);
  if (!overlays.is_array() || overlays.size() != slots.size()) malformed("overlays must list every position once");
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const Json& o = overlays[k];
    const auto& bar = field(o, "barred");
    if (!bar.is_boolean()) malformed("barred must be a boolean");
    const Position pos{static_cast<int>(as_int(field(o, "i"), "i")), static_cast<int>(as_int(field(o, "j"), "j")),
                       bar.get<bool>()};
    if (!(pos == slots[k])) malformed("overlay " + std::to_string(k) + " is out of order");
    p.overlay(pos).parts = as_ints(field(o, "parts"), "parts");
  }
  return p;
}

}  // namespace

std::string to_json(const PatternC& p) { return pattern_json(p).dump(); }
std::string to_json(const RestrictedPattern& p) { return pattern_json(p).dump(); }
std::string to_json(const Pop& p) { return pop_json(p).dump(); }
std::string to_json(const RestrictedPop& p) { return pop_json(p).dump(); }

std::string to_json(const GradedCharacter& ch) {
  Json terms = Json::array();
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& [k, v] : ch.terms()) {
    Json t{{"grade", k.grade}, {"weight", k.weight.coords}};
    if (v >= lo && v <= hi)
      t["mult"] = static_cast<std::int64_t>(v);
    else
      t["mult"] = v.str();
    terms.push_back(std::move(t));
  }
  return Json{{"rank", ch.rank()}, {"terms", std::move(terms)}}.dump();
}

PatternC pattern_from_json(std::string_view text) { return pattern_of<false>(parse_text(text)); }
RestrictedPattern restricted_pattern_from_json(std::string_view text) { return pattern_of<true>(parse_text(text)); }
Pop pop_from_json(std::string_view text) { return pop_of<false>(parse_text(text)); }
RestrictedPop restricted_pop_from_json(std::string_view text) { return pop_of<true>(parse_text(text)); }

GradedCharacter character_from_json(std::string_view text) {
  const Json j = parse_text(text);
  const int r = static_cast<int>(as_int(field(j, "rank"), "rank"));
  if (r < 1) malformed("rank must be positive");
  GradedCharacter ch(r);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  for (const auto& t : terms) {
    const auto w = as_ints(field(t, "weight"), "weight");
    if (static_cast<int>(w.size()) != r) malformed("weight has the wrong length");
    const Json& m = field(t, "mult");
    BigInt mult;
    if (m.is_number_integer())
      mult = m.get<std::int64_t>();
    else if (m.is_string())
      try {
        mult = BigInt(m.get<std::string>());
      } catch (const std::exception&) {
        malformed("mult string is not an integer");
      }
    else
      malformed("mult must be an integer or a decimal string");
    if (mult == 0) malformed("zero multiplicity");
    const TermKey key{as_int(field(t, "grade"), "grade"), WeightVector(w)};
    if (ch.mult(key.grade, key.weight) != 0) malformed("duplicate term");
    ch.add(key.grade, key.weight, mult);
  }
  return ch;
}

}  // namespace spweyl
