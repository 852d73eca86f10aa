#include "tropbundle/bundle_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace tropbundle {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& message) {
  throw ParseError("at " + (pointer.empty() ? std::string("document root") : pointer) + ": " + message);
}

const json& member(const json& obj, const std::string& pointer, const char* key) {
  if (!obj.is_object()) schema_error(pointer, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(pointer, std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t integer_field(const json& value, const std::string& pointer) {
  if (!value.is_number_integer()) schema_error(pointer, "expected an integer");
  return value.get<std::int64_t>();
}

/// Integer JSON numbers or "p/q" strings.
Rational rational_field(const json& value, const std::string& pointer) {
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<std::int64_t>()));
  if (!value.is_string()) schema_error(pointer, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema_error(pointer, e.what());
  }
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Bundle parse_bundle(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }

  const json& curve_json = member(doc, "", "curve");
  const Rational length = rational_field(member(curve_json, "/curve", "length"), "/curve/length");
  const std::int64_t charts = integer_field(member(curve_json, "/curve", "charts"), "/curve/charts");
  if (length <= 0) schema_error("/curve/length", "length must be positive");
  if (charts < 3) schema_error("/curve/charts", "at least 3 charts are required");
  const Curve curve(length, static_cast<int>(charts));

  const std::int64_t rank = integer_field(member(doc, "", "rank"), "/rank");
  if (rank < 1) schema_error("/rank", "rank must be at least 1");

  std::vector<TransitionMap> transitions(curve.charts(), TransitionMap::identity(rank));
  const json& list = member(doc, "", "transitions");
  if (!list.is_array()) schema_error("/transitions", "expected a list");
  std::set<std::int64_t> seen;
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string at = "/transitions/" + std::to_string(t);
    const json& item = list[t];
    const std::int64_t overlap = integer_field(member(item, at, "overlap"), at + "/overlap");
    if (overlap < 1 || overlap > charts) schema_error(at + "/overlap", "overlap index out of range");
    if (!seen.insert(overlap).second) schema_error(at + "/overlap", "overlap listed twice");

    const json& perm_json = member(item, at, "perm");
    if (!perm_json.is_array() || perm_json.size() != static_cast<std::size_t>(rank)) {
      schema_error(at + "/perm", "expected a list of " + std::to_string(rank) + " integers");
    }
    std::vector<int> images;
    for (std::size_t i = 0; i < perm_json.size(); ++i) {
      images.push_back(static_cast<int>(integer_field(perm_json[i], at + "/perm/" + std::to_string(i))));
    }
    Permutation perm;
    try {
      perm = Permutation::from_one_based(images);
    } catch (const std::invalid_argument&) {
      schema_error(at + "/perm", "not a permutation of 1.." + std::to_string(rank));
    }

    const json& entries = member(item, at, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rank)) {
      schema_error(at + "/entries", "expected a list of " + std::to_string(rank) + " entries");
    }
    const Rational ref = curve.overlap(static_cast<int>(overlap - 1)).lo;
    AffineMonomial m{perm, {}};
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string eat = at + "/entries/" + std::to_string(i);
      const Rational slope = rational_field(member(entries[i], eat, "slope"), eat + "/slope");
      const Rational value = rational_field(member(entries[i], eat, "value_at_ref"), eat + "/value_at_ref");
      Rational at_zero = value - slope * ref;
      at_zero.canonicalize();
      m.rows.push_back({slope, at_zero});
    }
    transitions[overlap - 1] = TransitionMap(m);
  }
  return {curve, static_cast<int>(rank), std::move(transitions)};
}

Bundle read_bundle_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bundle(buffer.str());
}

std::string format_bundle(const Bundle& f) {
  const Curve& curve = f.curve();
  json doc;
  doc["curve"] = {{"length", rational_json(curve.length())}, {"charts", curve.charts()}};
  doc["rank"] = f.rank();
  json list = json::array();
  for (std::size_t k = 0; k < f.transitions().size(); ++k) {
    const auto m = f.transitions()[k].as_monomial();
    if (!m) throw std::invalid_argument("cannot serialize a transition outside G(r)");
    if (m->is_identity()) continue;
    const Rational ref = curve.overlap(static_cast<int>(k)).lo;
    json entries = json::array();
    for (const auto& row : m->rows) {
      json slope = is_integer(row.slope) ? json(to_int64(row.slope)) : rational_json(row.slope);
      entries.push_back({{"slope", slope}, {"value_at_ref", rational_json(row(ref))}});
    }
    list.push_back({{"overlap", k + 1}, {"perm", m->perm.one_based()}, {"entries", entries}});
  }
  doc["transitions"] = list;
  return doc.dump(2) + "\n";
}

}  // namespace tropbundle
