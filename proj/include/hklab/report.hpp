#ifndef HKLAB_REPORT_HPP
#define HKLAB_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hklab/formulas.hpp"
#include "hklab/frobenius.hpp"

namespace hklab {

struct ReportProvenance {
  std::string input_hash;  // fnv1a-64 of the job description
  std::string order;
  unsigned e_max = 0;
  std::string method;
};

// Everything a command produces.  Rendering in any format is a pure function
// of the fields below except wall_seconds, which only appears in the human
// format and only when show_timings is set.
struct Report {
  std::string command;
  std::string subject;
  ReportProvenance provenance;
  int dimension = 0;
  std::vector<HKSample> samples;
  std::optional<HKEstimate> estimate;
  std::vector<FormulaVerdict> verdicts;
  std::vector<std::string> notes;
  bool show_timings = false;
};

std::uint64_t fnv1a64(const std::string& data);
// 16 lowercase hex digits of fnv1a64.
std::string input_hash(const std::string& data);

std::string render_human(const Report& report);
// Sample table only: header e,q,length,normalized_num,normalized_den.
std::string render_csv(const Report& report);
std::string render_json(const Report& report);

}  // namespace hklab

#endif
