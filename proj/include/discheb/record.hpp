#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "discheb/point_set.hpp"
#include "discheb/solver.hpp"

namespace discheb {

// Flat export of one solved instance. Every rational travels as its
// canonical "p/q" string so the record round-trips exactly; coefficient
// lists are lowest degree first and the zero polynomial is the empty list.
struct OutputRecord {
  int degree = 0;
  std::vector<std::string> points;
  std::vector<std::string> coefficients;
  std::string lead;
  std::vector<std::string> certificate;
  VerificationReport verification;
  std::string chebyshev_floor;
  // Present only when the points are exactly {1, ..., k}.
  std::optional<std::vector<std::string>> correction;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// Runs verification and the Chebyshev comparison on a solved instance.
OutputRecord make_record(const PointSet& ps, int degree, const ExtremalResult& result);

nlohmann::json record_to_json(const OutputRecord& record);
// Throws ParseError on missing fields or wrong types.
OutputRecord record_from_json(const nlohmann::json& j);

// Header line plus one data row; list cells are comma-joined and quoted.
std::string record_to_csv(const OutputRecord& record);

// The solver-facing objects encoded in a record. Throws ParseError when the
// rationals or the point list do not form a valid instance.
struct RecordInstance {
  PointSet points;
  int degree;
  ExtremalResult result;
};
RecordInstance instance_from_record(const OutputRecord& record);

// RFC-style CSV quoting: wraps and doubles quotes when the cell needs it.
std::string csv_field(std::string_view cell);
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace discheb
