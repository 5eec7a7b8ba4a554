#include "discheb/record.hpp"

#include <stdexcept>
#include <utility>

#include "discheb/chebyshev.hpp"
#include "discheb/errors.hpp"

namespace discheb {

namespace {

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

std::vector<Rational> to_rationals(const std::vector<std::string>& strings) {
  std::vector<Rational> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.push_back(Rational::from_string(s));
  return out;
}

std::vector<std::string> string_list(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_array())
    throw ParseError(std::string("record: missing or non-array field '") + key + "'");
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const auto& e : *it) {
    if (!e.is_string())
      throw ParseError(std::string("record: non-string entry in '") + key + "'");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string string_field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    throw ParseError(std::string("record: missing or non-string field '") + key + "'");
  return it->get<std::string>();
}

bool bool_field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_boolean())
    throw ParseError(std::string("record: missing or non-boolean field '") + key + "'");
  return it->get<bool>();
}

int int_field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer())
    throw ParseError(std::string("record: missing or non-integer field '") + key + "'");
  return it->get<int>();
}

}  // namespace

OutputRecord make_record(const PointSet& ps, int degree, const ExtremalResult& result) {
  OutputRecord rec;
  rec.degree = degree;
  rec.points = to_strings(ps.points());
  rec.coefficients = to_strings(result.polynomial.coefficients());
  rec.lead = result.lead.str();
  rec.certificate = to_strings(result.certificate.points);
  rec.verification = verify(result, ps, degree);
  rec.chebyshev_floor = continuous_lead_bound(degree, ps.front(), ps.back()).str();
  if (ps.is_unit_range())
    rec.correction =
        to_strings(correction_term(result.polynomial, degree, ps.size()).delta.coefficients());
  return rec;
}

nlohmann::json record_to_json(const OutputRecord& record) {
  nlohmann::json j;
  j["degree"] = record.degree;
  j["points"] = record.points;
  j["coefficients"] = record.coefficients;
  j["lead"] = record.lead;
  j["certificate"] = record.certificate;
  j["verification"] = {{"terminal_ok", record.verification.terminal_ok},
                       {"bounded_ok", record.verification.bounded_ok},
                       {"alternation_ok", record.verification.alternation_ok},
                       {"sign_change_count", record.verification.sign_change_count},
                       {"unique_max_ok", record.verification.unique_max_ok}};
  j["chebyshev_floor"] = record.chebyshev_floor;
  if (record.correction) j["correction"] = *record.correction;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("record: not a JSON object");
  OutputRecord rec;
  rec.degree = int_field(j, "degree");
  rec.points = string_list(j, "points");
  rec.coefficients = string_list(j, "coefficients");
  rec.lead = string_field(j, "lead");
  rec.certificate = string_list(j, "certificate");
  const auto vit = j.find("verification");
  if (vit == j.end() || !vit->is_object())
    throw ParseError("record: missing or non-object field 'verification'");
  rec.verification.terminal_ok = bool_field(*vit, "terminal_ok");
  rec.verification.bounded_ok = bool_field(*vit, "bounded_ok");
  rec.verification.alternation_ok = bool_field(*vit, "alternation_ok");
  rec.verification.sign_change_count = int_field(*vit, "sign_change_count");
  rec.verification.unique_max_ok = bool_field(*vit, "unique_max_ok");
  rec.chebyshev_floor = string_field(j, "chebyshev_floor");
  if (j.contains("correction")) rec.correction = string_list(j, "correction");
  return rec;
}

std::string csv_field(std::string_view cell) {
  if (cell.find_first_of(",\"\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(cells[i]);
  }
  out += '\n';
  return out;
}

std::string record_to_csv(const OutputRecord& record) {
  auto join = [](const std::vector<std::string>& list) {
    std::string out;
    for (size_t i = 0; i < list.size(); ++i) {
      if (i > 0) out += ',';
      out += list[i];
    }
    return out;
  };
  std::string out = csv_row({"degree", "points", "coefficients", "lead", "certificate",
                             "terminal_ok", "bounded_ok", "alternation_ok",
                             "sign_change_count", "unique_max_ok", "chebyshev_floor",
                             "correction"});
  out += csv_row({std::to_string(record.degree), join(record.points),
                  join(record.coefficients), record.lead, join(record.certificate),
                  record.verification.terminal_ok ? "true" : "false",
                  record.verification.bounded_ok ? "true" : "false",
                  record.verification.alternation_ok ? "true" : "false",
                  std::to_string(record.verification.sign_change_count),
                  record.verification.unique_max_ok ? "true" : "false",
                  record.chebyshev_floor,
                  record.correction ? join(*record.correction) : ""});
  return out;
}

RecordInstance instance_from_record(const OutputRecord& record) {
  try {
    PointSet ps(to_rationals(record.points));
    ExtremalResult result;
    result.polynomial = Polynomial(to_rationals(record.coefficients));
    result.lead = Rational::from_string(record.lead);
    result.certificate.points = to_rationals(record.certificate);
    RecordInstance inst{std::move(ps), record.degree, std::move(result)};
    if (inst.degree < 1) throw ParseError("record: degree must be positive");
    return inst;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("record: ") + e.what());
  }
}

}  // namespace discheb
