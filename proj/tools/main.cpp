// Command line front end: solve one instance, tabulate a degree across grid
// sizes, re-verify an exported record, or emit plot samples.
//
// Exit codes: 0 success, 1 malformed input, 2 no maximum exists (k <= d),
// 3 internal consistency violation, 4 verification failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "discheb/chebyshev.hpp"
#include "discheb/closed_forms.hpp"
#include "discheb/errors.hpp"
#include "discheb/record.hpp"
#include "discheb/solver.hpp"

namespace {

using namespace discheb;

struct InstanceArgs {
  int degree = 0;
  std::string points_csv;
  std::string start = "1";
  std::string step = "1";
  int count = 0;
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("-d,--degree", args.degree, "target degree (>= 1)")->required();
  auto* points =
      cmd->add_option("--points", args.points_csv, "comma-separated rational points");
  auto* start = cmd->add_option("--start", args.start, "first point of the progression");
  auto* step = cmd->add_option("--step", args.step, "spacing of the progression");
  auto* count = cmd->add_option("--count", args.count, "number of points");
  points->excludes(start)->excludes(step)->excludes(count);
}

PointSet build_point_set(const InstanceArgs& args) {
  try {
    if (!args.points_csv.empty()) {
      std::vector<Rational> xs;
      std::stringstream ss(args.points_csv);
      std::string item;
      while (std::getline(ss, item, ',')) xs.push_back(Rational::from_string(item));
      return PointSet(std::move(xs));
    }
    if (args.count == 0)
      throw ParseError("specify either --points or --start/--step/--count");
    return PointSet::arithmetic(Rational::from_string(args.start),
                                Rational::from_string(args.step), args.count);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid point set: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << text;
}

std::string verification_lines(const VerificationReport& rep, int degree) {
  std::ostringstream os;
  auto flag = [](bool ok) { return ok ? "ok" : "FAILED"; };
  os << "terminal values:  " << flag(rep.terminal_ok) << "\n"
     << "bounded on set:   " << flag(rep.bounded_ok) << "\n"
     << "alternation:      " << flag(rep.alternation_ok) << "\n"
     << "sign changes:     " << rep.sign_change_count << " (expected " << degree << ")\n"
     << "unique maximum:   " << flag(rep.unique_max_ok) << "\n";
  return os.str();
}

std::string human_summary(const OutputRecord& rec, const ExtremalResult& result) {
  std::ostringstream os;
  auto join = [](const std::vector<std::string>& list) {
    std::string out;
    for (size_t i = 0; i < list.size(); ++i) {
      if (i > 0) out += ", ";
      out += list[i];
    }
    return out;
  };
  os << "degree:           " << rec.degree << "\n"
     << "points:           " << join(rec.points) << "\n"
     << "polynomial:       " << result.polynomial << "\n"
     << "coefficients:     [" << join(rec.coefficients) << "]\n"
     << "lead:             " << rec.lead << "\n"
     << "certificate:      " << join(rec.certificate) << "\n"
     << "chebyshev floor:  " << rec.chebyshev_floor << "\n";
  if (rec.correction) os << "correction:       [" << join(*rec.correction) << "]\n";
  os << "candidates:       " << result.candidates_enumerated << " enumerated, "
     << result.candidates_feasible << " feasible\n"
     << verification_lines(rec.verification, rec.degree);
  return os.str();
}

int cmd_solve(const InstanceArgs& args, const std::string& format, const std::string& out_path,
              int threads) {
  const PointSet ps = build_point_set(args);
  const ExtremalResult result = solve(ps, args.degree, threads);
  const OutputRecord rec = make_record(ps, args.degree, result);
  std::string text;
  if (format == "json")
    text = record_to_json(rec).dump(2) + "\n";
  else if (format == "csv")
    text = record_to_csv(rec);
  else
    text = human_summary(rec, result);
  write_output(out_path, text);
  return 0;
}

int cmd_table(int degree, const std::string& range, const std::string& format,
              const std::string& out_path, int threads) {
  const auto dots = range.find("..");
  if (dots == std::string::npos)
    throw ParseError("range must look like LO..HI, got '" + range + "'");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(range.substr(0, dots));
    hi = std::stoi(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw ParseError("range must look like LO..HI, got '" + range + "'");
  }
  if (lo > hi) throw ParseError("empty range: " + range);
  if (lo <= degree)
    throw NoMaximum("no maximum for k = " + std::to_string(lo) +
                    " <= d = " + std::to_string(degree));

  std::ostringstream os;
  bool all_match = true;
  const bool have_closed_form = degree <= 4;
  if (format == "csv")
    os << csv_row({"k", "closed_form_lead", "enumerated_lead", "chebyshev_floor",
                   "correction", "agree"});
  else
    os << "d = " << degree << "\n"
       << "k | closed form | enumerated | chebyshev floor | correction | agree\n";

  for (int k = lo; k <= hi; ++k) {
    const PointSet ps = PointSet::arithmetic(1, 1, k);
    const ExtremalResult result = solve(ps, degree, threads);
    const Rational floor = continuous_lead_bound(degree, ps.front(), ps.back());
    const Polynomial delta = correction_term(result.polynomial, degree, k).delta;
    std::string closed_str = "-";
    std::string agree_str = "-";
    if (have_closed_form) {
      const Rational closed =
          lead_coefficient_closed_form({degree, k, Rational(1), Rational(1)});
      const bool match = closed == result.lead;
      all_match = all_match && match;
      closed_str = closed.str();
      agree_str = match ? "yes" : "NO";
    }
    std::ostringstream delta_os;
    delta_os << delta;
    if (format == "csv")
      os << csv_row({std::to_string(k), closed_str == "-" ? "" : closed_str,
                     result.lead.str(), floor.str(), delta_os.str(),
                     agree_str == "-" ? "" : agree_str});
    else
      os << k << " | " << closed_str << " | " << result.lead.str() << " | " << floor.str()
         << " | " << delta_os.str() << " | " << agree_str << "\n";
  }
  write_output(out_path, os.str());
  if (!all_match)
    throw InternalInconsistency("closed form and enumeration disagree in table");
  return 0;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open record file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("record is not valid JSON: ") + e.what());
  }
  const OutputRecord rec = record_from_json(j);
  const RecordInstance inst = instance_from_record(rec);
  const VerificationReport rep = verify(inst.result, inst.points, inst.degree);
  std::cout << verification_lines(rep, inst.degree);
  if (rep.pass(inst.degree)) {
    std::cout << "result: PASS\n";
    return 0;
  }
  std::cout << "result: FAIL\n";
  return 4;
}

int cmd_plotdata(const InstanceArgs& args, int samples, int digits,
                 const std::string& out_path, int threads) {
  if (samples < 2) throw ParseError("need at least 2 samples");
  if (digits < 0) throw ParseError("digits must be nonnegative");
  const PointSet ps = build_point_set(args);
  const ExtremalResult result = solve(ps, args.degree, threads);
  const Polynomial& q = result.polynomial;

  std::string out = csv_row({"x", "value", "kind"});
  const Rational width = ps.back() - ps.front();
  for (int i = 0; i < samples; ++i) {
    const Rational x = ps.front() + width * Rational(i, samples - 1);
    out += csv_row({x.decimal(digits), q(x).decimal(digits), "sample"});
  }
  for (int i = 0; i < ps.size(); ++i)
    out += csv_row({ps[i].decimal(digits), q(ps[i]).decimal(digits), "grid"});
  write_output(out_path, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal polynomials with maximal lead on finite point sets"};
  app.require_subcommand(1);

  InstanceArgs solve_args;
  std::string solve_format = "text";
  std::string solve_out;
  int solve_threads = 0;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  add_instance_flags(solve_cmd, solve_args);
  solve_cmd->add_option("--format", solve_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  solve_cmd->add_option("-o,--output", solve_out, "write to file instead of stdout");
  solve_cmd->add_option("--threads", solve_threads, "solver threads (0 = default)");

  int table_degree = 0;
  std::string table_range;
  std::string table_format = "text";
  std::string table_out;
  int table_threads = 0;
  auto* table_cmd = app.add_subcommand("table", "closed form vs enumeration over a k range");
  table_cmd->add_option("-d,--degree", table_degree, "target degree")->required();
  table_cmd->add_option("-k,--k", table_range, "grid size range LO..HI")->required();
  table_cmd->add_option("--format", table_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  table_cmd->add_option("-o,--output", table_out, "write to file instead of stdout");
  table_cmd->add_option("--threads", table_threads, "solver threads (0 = default)");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify an exported JSON record");
  verify_cmd->add_option("record", verify_path, "path to a JSON record")->required();

  InstanceArgs plot_args;
  int plot_samples = 100;
  int plot_digits = 12;
  std::string plot_out;
  int plot_threads = 0;
  auto* plot_cmd = app.add_subcommand("plotdata", "dense samples of the solved polynomial");
  add_instance_flags(plot_cmd, plot_args);
  plot_cmd->add_option("-n,--samples", plot_samples, "number of evenly spaced samples");
  plot_cmd->add_option("--digits", plot_digits, "decimal digits in the output");
  plot_cmd->add_option("-o,--output", plot_out, "write to file instead of stdout");
  plot_cmd->add_option("--threads", plot_threads, "solver threads (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_args, solve_format, solve_out, solve_threads);
    if (table_cmd->parsed())
      return cmd_table(table_degree, table_range, table_format, table_out, table_threads);
    if (verify_cmd->parsed()) return cmd_verify(verify_path);
    if (plot_cmd->parsed())
      return cmd_plotdata(plot_args, plot_samples, plot_digits, plot_out, plot_threads);
  } catch (const NoMaximum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
