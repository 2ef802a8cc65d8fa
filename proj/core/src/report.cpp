#include "chernob/report.hpp"

#include <json.hpp>

#include <sstream>

namespace chernob {

namespace {

using Json = nlohmann::ordered_json;

Json colength_json(const Colength& c) {
  if (c.is_finite()) return Json(c.value());
  return Json("infinite");
}

Json problem_json(const ProblemFile& file) {
  Json j;
  j["variables"] = file.variables;
  j["equations"] = file.equations;
  j["partition"] = file.partition;
  if (file.uses_maps()) {
    j["maps"] = file.maps;
  } else {
    j["collection"] = file.collection;
  }
  return j;
}

}  // namespace

std::string render_machine(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["problem"] = problem_json(report.problem);
  j["seed"] = report.seed;
  if (report.alg_index) j["alg_index"] = colength_json(*report.alg_index);
  if (report.baseline) j["baseline"] = colength_json(*report.baseline);
  if (report.chern) j["chern"] = *report.chern;
  if (report.chern) j["negative_flag"] = report.negative_flag;
  if (!report.trial_values.empty()) j["trial_values"] = report.trial_values;
  if (report.oracle_count) j["oracle_count"] = *report.oracle_count;
  if (!report.per_deformation_counts.empty()) {
    j["per_deformation_counts"] = report.per_deformation_counts;
  }
  if (!report.scheme_generators.empty()) j["scheme_generators"] = report.scheme_generators;
  if (!report.leading_ideal.empty()) j["leading_ideal"] = report.leading_ideal;
  if (report.scheme_colength) j["scheme_colength"] = colength_json(*report.scheme_colength);
  if (report.pass) j["pass"] = *report.pass;
  if (report.failure_cause) j["failure_cause"] = *report.failure_cause;
  return j.dump(2) + "\n";
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  out << problem_file_text(report.problem);
  out << "seed: " << report.seed << "\n";
  if (report.alg_index) out << "alg_index: " << report.alg_index->str() << "\n";
  if (report.baseline) {
    out << "baseline: " << report.baseline->str();
    if (!report.trial_values.empty()) {
      out << " (trials:";
      for (std::uint64_t v : report.trial_values) out << " " << v;
      out << ")";
    }
    out << "\n";
  }
  if (report.chern) {
    out << "chern: " << *report.chern << "\n";
    if (report.negative_flag) out << "negative_flag: true\n";
  }
  if (report.oracle_count) {
    out << "oracle_count: " << *report.oracle_count;
    if (!report.per_deformation_counts.empty()) {
      out << " (deformations:";
      for (std::uint64_t v : report.per_deformation_counts) out << " " << v;
      out << ")";
    }
    out << "\n";
  }
  if (!report.scheme_generators.empty()) {
    out << "scheme_generators:\n";
    for (const std::string& g : report.scheme_generators) out << "  " << g << "\n";
  }
  if (!report.leading_ideal.empty()) {
    out << "leading_ideal:\n";
    for (const std::string& g : report.leading_ideal) out << "  " << g << "\n";
  }
  if (report.scheme_colength) out << "scheme_colength: " << report.scheme_colength->str() << "\n";
  if (report.pass) {
    if (*report.pass) {
      out << "check: PASS";
      if (report.chern && report.oracle_count) {
        out << " (" << *report.chern << " = " << *report.oracle_count << ")";
      }
      out << "\n";
    } else {
      out << "check: FAIL";
      if (report.failure_cause) out << " (" << *report.failure_cause << ")";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace chernob
