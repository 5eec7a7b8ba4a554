#include <string>
#include <vector>

#include "doctest.h"

#include "discheb/errors.hpp"
#include "discheb/record.hpp"

using namespace discheb;

namespace {

OutputRecord solved_record(const PointSet& ps, int degree) {
  return make_record(ps, degree, solve(ps, degree));
}

}  // namespace

TEST_CASE("record fields for the three-point parabola") {
  const OutputRecord rec = solved_record(PointSet::arithmetic(1, 1, 3), 2);
  CHECK(rec.degree == 2);
  CHECK(rec.points == std::vector<std::string>{"1", "2", "3"});
  CHECK(rec.coefficients == std::vector<std::string>{"7", "-8", "2"});
  CHECK(rec.lead == "2");
  CHECK(rec.certificate == std::vector<std::string>{"1", "2", "3"});
  CHECK(rec.chebyshev_floor == "2");
  REQUIRE(rec.correction.has_value());
  CHECK(rec.correction->empty());  // the pullback is exactly Chebyshev here
  CHECK(rec.verification.pass(2));
}

TEST_CASE("record keeps canonical rational strings") {
  const OutputRecord rec = solved_record(PointSet::arithmetic(1, 1, 6), 4);
  CHECK(rec.lead == "1/4");
  REQUIRE(rec.correction.has_value());
  // delta = (1/64)(x^2 - 1)(113 x^2 - 25), lowest degree first
  CHECK(*rec.correction ==
        std::vector<std::string>{"25/64", "0", "-69/32", "0", "113/64"});
}

TEST_CASE("correction appears only on the unit grid") {
  const OutputRecord unit = solved_record(PointSet::arithmetic(1, 1, 5), 2);
  CHECK(unit.correction.has_value());
  const OutputRecord shifted = solved_record(PointSet::arithmetic(2, 1, 5), 2);
  CHECK_FALSE(shifted.correction.has_value());
  const OutputRecord rationals =
      solved_record(PointSet({Rational(0), Rational(1, 2), Rational(1)}), 2);
  CHECK_FALSE(rationals.correction.has_value());
  CHECK(rationals.lead == "8");
  CHECK(rationals.points == std::vector<std::string>{"0", "1/2", "1"});
}

TEST_CASE("json round trip is exact") {
  for (int d : {1, 2, 3, 4}) {
    const OutputRecord rec = solved_record(PointSet::arithmetic(1, 1, 8), d);
    const nlohmann::json j = record_to_json(rec);
    const OutputRecord back = record_from_json(j);
    CHECK(back == rec);
    CHECK(record_to_json(back).dump() == j.dump());
  }
  const OutputRecord off_grid =
      solved_record(PointSet({Rational(-1, 2), Rational(1, 3), Rational(2)}), 2);
  const OutputRecord back = record_from_json(record_to_json(off_grid));
  CHECK(back == off_grid);
  CHECK_FALSE(back.correction.has_value());
}

TEST_CASE("parsed records rebuild a verifiable instance") {
  const PointSet ps = PointSet::arithmetic(1, 1, 7);
  const OutputRecord rec = solved_record(ps, 3);
  const RecordInstance inst = instance_from_record(record_from_json(record_to_json(rec)));
  CHECK(inst.degree == 3);
  CHECK(inst.points.points() == ps.points());
  CHECK(verify(inst.result, inst.points, inst.degree).pass(3));
}

TEST_CASE("malformed records raise parse errors") {
  const OutputRecord rec = solved_record(PointSet::arithmetic(1, 1, 5), 2);
  nlohmann::json j = record_to_json(rec);

  nlohmann::json missing = j;
  missing.erase("lead");
  CHECK_THROWS_AS(record_from_json(missing), ParseError);

  nlohmann::json wrong_type = j;
  wrong_type["degree"] = "two";
  CHECK_THROWS_AS(record_from_json(wrong_type), ParseError);

  nlohmann::json bad_list = j;
  bad_list["points"] = nlohmann::json::array({1, 2, 3});
  CHECK_THROWS_AS(record_from_json(bad_list), ParseError);

  nlohmann::json no_verification = j;
  no_verification.erase("verification");
  CHECK_THROWS_AS(record_from_json(no_verification), ParseError);

  CHECK_THROWS_AS(record_from_json(nlohmann::json::array()), ParseError);

  // parses as a record, but the rationals inside are garbage
  nlohmann::json bad_rational = j;
  bad_rational["lead"] = "2/x";
  CHECK_THROWS_AS(instance_from_record(record_from_json(bad_rational)), ParseError);

  nlohmann::json bad_points = j;
  bad_points["points"] = std::vector<std::string>{"3", "2", "1"};
  CHECK_THROWS_AS(instance_from_record(record_from_json(bad_points)), ParseError);
}

TEST_CASE("csv export carries the same strings as json") {
  const OutputRecord rec = solved_record(PointSet::arithmetic(1, 1, 6), 4);
  const std::string csv = record_to_csv(rec);
  const auto newline = csv.find('\n');
  REQUIRE(newline != std::string::npos);
  CHECK(csv.substr(0, newline) ==
        "degree,points,coefficients,lead,certificate,terminal_ok,bounded_ok,"
        "alternation_ok,sign_change_count,unique_max_ok,chebyshev_floor,correction");
  const std::string row = csv.substr(newline + 1);
  CHECK(row.find("\"1,2,3,4,5,6\"") != std::string::npos);      // quoted point list
  CHECK(row.find("1/4") != std::string::npos);                  // same lead string
  CHECK(row.find("25/64,0,-69/32,0,113/64") != std::string::npos);
  CHECK(row.find("true") != std::string::npos);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_row({"a", "b,c", ""}) == "a,\"b,c\",\n");
}
