#include "vfib/cli.hpp"

#include "vfib/certificate.hpp"
#include "vfib/cover.hpp"
#include "vfib/graph_manifold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace vfib::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNotApplicable = 1;
constexpr int kExitFail = 2;
constexpr int kExitParse = 3;
constexpr int kExitIo = 4;

struct Range {
  long long lo = 0, hi = -1;
};

Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoll(text);
    } else {
      r.lo = std::stoll(text.substr(0, dots));
      r.hi = std::stoll(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected an integer or a..b: " + text);
  }
  return r;
}

std::vector<long long> parse_set(const std::string& text) {
  std::vector<long long> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      values.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("set", "expected comma-separated integers: " + text);
    }
  }
  return values;
}

int write_output(const std::string& payload, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  if (path.empty()) {
    out << payload;
    return kExitPass;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  file << payload;
  if (!file) {
    err << "error: write to " << path << " failed\n";
    return kExitIo;
  }
  return kExitPass;
}

bool color_enabled() { return std::getenv("NO_COLOR") == nullptr; }

int exit_code_for(const cert::FibrationCertificate& c) {
  switch (c.outcome) {
    case cert::Outcome::Pass: return kExitPass;
    case cert::Outcome::NotApplicable: return kExitNotApplicable;
    default: return kExitFail;
  }
}

int run_check(const std::string& notation, bool as_json, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  tangle::MontesinosLink link;
  try {
    link = tangle::parse_montesinos(notation);
  } catch (const tangle::ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  auto certificate = cert::run_certificate(link);
  std::string payload = as_json ? cert::certificate_json(certificate)
                                : cert::certificate_text(certificate, color_enabled() &&
                                                                          out_path.empty());
  int io = write_output(payload, out_path, out, err);
  if (io != kExitPass) return io;
  return exit_code_for(certificate);
}

void enumerate_tuples(int n, const std::vector<long long>& q_set,
                      std::vector<long long>& tuple,
                      const std::function<void(const std::vector<long long>&)>& fn) {
  if (static_cast<int>(tuple.size()) == n) {
    fn(tuple);
    return;
  }
  for (long long q : q_set) {
    tuple.push_back(q);
    enumerate_tuples(n, q_set, tuple, fn);
    tuple.pop_back();
  }
}

int run_batch(const Range& p_range, const Range& n_range, const std::vector<long long>& q_set,
              bool as_json, const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::ostringstream text;
  nlohmann::json rows = nlohmann::json::array();
  bool any_fail = false;

  // Deterministic row order: lexicographic in (p, n, q-tuple).
  for (long long p = p_range.lo; p <= p_range.hi; ++p) {
    if (p % 2 == 0) continue;  // only odd denominators are in scope
    if (p < 2) continue;
    for (long long n = n_range.lo; n <= n_range.hi; ++n) {
      if (n < 1) continue;
      std::vector<long long> tuple;
      enumerate_tuples(static_cast<int>(n), q_set, tuple,
                       [&](const std::vector<long long>& qs) {
                         tangle::MontesinosLink link;
                         for (long long q : qs) link.tangles.push_back({q, p});
                         auto c = cert::run_certificate(link);
                         any_fail = any_fail || c.outcome == cert::Outcome::Fail;
                         if (as_json) {
                           nlohmann::json row;
                           row["notation"] = tangle::format_montesinos(link);
                           row["case"] = tangle::to_string(c.applicability.case_tag);
                           row["verdict"] = cert::to_string(c.outcome);
                           if (c.invariants) {
                             row["euler_number_wk"] =
                                 fraction_string(c.invariants->euler_number_wk);
                             row["chi_orb"] = fraction_string(c.invariants->chi_orb);
                           }
                           if (c.euler_data) row["e_tilde"] = c.euler_data->e_tilde.str();
                           rows.push_back(row);
                         } else {
                           text << tangle::format_montesinos(link) << "\t";
                           if (c.invariants)
                             text << fraction_string(c.invariants->euler_number_wk) << "\t"
                                  << fraction_string(c.invariants->chi_orb) << "\t";
                           else
                             text << "-\t-\t";
                           text << tangle::to_string(c.applicability.case_tag) << "\t"
                                << cert::to_string(c.outcome) << "\n";
                         }
                       });
    }
  }

  std::string payload = as_json ? rows.dump(2) + "\n" : text.str();
  int io = write_output(payload, out_path, out, err);
  if (io != kExitPass) return io;
  return any_fail ? kExitFail : kExitPass;
}

// Builds the reoriented curve system for a gated link, or reports why not.
std::optional<cover::MarkedCurveSystem> gated_system(const tangle::MontesinosLink& link,
                                                     std::ostream& err, int& code) {
  auto report = tangle::validate_theorem_hypotheses(link);
  if (!report.applicable()) {
    err << "not applicable: " << report.reason << "\n";
    code = kExitNotApplicable;
    return std::nullopt;
  }
  auto tower = cover::build_cover_tower(link);
  return cover::reorient_curves(cover::decompose_arcs(cover::build_curve_system(tower)));
}

int run_cover_dot(const std::string& notation, const std::string& which,
                  const std::string& out_path, std::ostream& out, std::ostream& err) {
  tangle::MontesinosLink link;
  try {
    link = tangle::parse_montesinos(notation);
  } catch (const tangle::ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  int code = kExitPass;
  auto system = gated_system(link, err, code);
  if (!system) return code;
  std::string payload =
      which == "f1" ? cover::f1_boundary_dot(*system) : cover::curve_incidence_dot(*system);
  return write_output(payload, out_path, out, err);
}

int run_jsj_dot(const std::string& notation, const std::string& which,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  tangle::MontesinosLink link;
  try {
    link = tangle::parse_montesinos(notation);
  } catch (const tangle::ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  auto report = tangle::validate_theorem_hypotheses(link);
  if (!report.applicable()) {
    err << "not applicable: " << report.reason << "\n";
    return kExitNotApplicable;
  }
  auto euler = seifert::cover_euler_data(link);
  auto basis = gm::BasisChange::canonical(tangle::component_count(link));
  auto gluing = gm::gluing_matrices(basis, euler.e_tilde);
  auto graph = gm::build_jsj_graph(report.case_tag, static_cast<int>(report.p),
                                   which == "doubled", euler.e_tilde, gluing);
  return write_output(gm::jsj_dot(graph), out_path, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"virtual-fibration certificates for classic Montesinos links"};
  app.require_subcommand(1);

  std::string notation, out_path, dot_which;
  bool as_json = false;
  std::string p_text, n_text, q_text;

  auto* check = app.add_subcommand("check", "verify one link and emit its certificate");
  check->add_option("notation", notation, "cyclic tangle list, e.g. \"(1/5, 1/5, 1/5)\"")
      ->required();
  check->add_flag("--json", as_json, "emit the JSON certificate");
  check->add_option("--out", out_path, "write output to a file");

  auto* batch = app.add_subcommand("batch", "sweep a parameter box, one row per link");
  batch->add_option("--p", p_text, "denominator range a..b (odd values used)")->required();
  batch->add_option("--n", n_text, "tangle count range a..b")->required();
  batch->add_option("--q", q_text, "comma-separated numerator set")->required();
  batch->add_flag("--json", as_json, "emit rows as JSON");
  batch->add_option("--out", out_path, "write output to a file");

  auto* cover_dot = app.add_subcommand("cover-dot", "emit a curve-system graph in DOT form");
  cover_dot->add_option("notation", notation, "cyclic tangle list")->required();
  cover_dot->add_option("--dot", dot_which, "incidence | f1")
      ->default_val("incidence")
      ->check(CLI::IsMember({"incidence", "f1"}));
  cover_dot->add_option("--out", out_path, "write output to a file");

  auto* jsj_dot = app.add_subcommand("jsj-dot", "emit the decomposition graph in DOT form");
  jsj_dot->add_option("notation", notation, "cyclic tangle list")->required();
  jsj_dot->add_option("--dot", dot_which, "single | doubled")
      ->default_val("single")
      ->check(CLI::IsMember({"single", "doubled"}));
  jsj_dot->add_option("--out", out_path, "write output to a file");

  std::vector<const char*> argv;
  argv.push_back("vfib");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      // --help goes to stdout with a zero exit.
      out << app.help();
      return kExitPass;
    }
    err << ex.what() << "\n";
    return kExitParse;
  }

  try {
    if (check->parsed()) return run_check(notation, as_json, out_path, out, err);
    if (batch->parsed())
      return run_batch(parse_range(p_text), parse_range(n_text), parse_set(q_text), as_json,
                       out_path, out, err);
    if (cover_dot->parsed()) return run_cover_dot(notation, dot_which, out_path, out, err);
    if (jsj_dot->parsed()) return run_jsj_dot(notation, dot_which, out_path, out, err);
  } catch (const CLI::ValidationError& ex) {
    err << ex.what() << "\n";
    return kExitParse;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitFail;
  }
  return kExitParse;
}

}  // namespace vfib::cli
