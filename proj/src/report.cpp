#include "hklab/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace hklab {
namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string verdict_line(const FormulaVerdict& v) {
  std::ostringstream os;
  os << (v.pass ? "[pass] " : "[FAIL] ") << v.citation << ": predicted " << v.predicted.str()
     << ", estimated " << v.estimated.value.str() << ", relative gap " << v.relative_gap.str()
     << (v.pass ? " <= " : " > ") << v.tolerance.str();
  return os.str();
}

}  // namespace

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string input_hash(const std::string& data) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
  return os.str();
}

std::string render_human(const Report& report) {
  std::ostringstream os;
  os << "command: " << report.command;
  if (!report.subject.empty()) os << "  subject: " << report.subject;
  os << "\n";
  os << "order: " << report.provenance.order << "  e_max: " << report.provenance.e_max
     << "  method: " << report.provenance.method << "  input: " << report.provenance.input_hash
     << "\n";
  if (!report.samples.empty() || report.estimate) os << "dimension: " << report.dimension << "\n";
  for (const auto& note : report.notes) os << note << "\n";
  if (!report.samples.empty()) {
    os << "\n" << pad_left("e", 4) << pad_left("q", 10) << pad_left("length", 14)
       << "  normalized";
    if (report.show_timings) os << "  seconds";
    os << "\n";
    for (const auto& s : report.samples) {
      os << pad_left(std::to_string(s.e), 4) << pad_left(std::to_string(s.q), 10)
         << pad_left(std::to_string(s.length), 14) << "  " << s.normalized.str();
      if (report.show_timings) {
        std::ostringstream t;
        t << std::fixed << std::setprecision(3) << s.wall_seconds;
        os << "  " << t.str();
      }
      os << "\n";
    }
  }
  if (report.estimate) {
    const auto& est = *report.estimate;
    os << "\nestimate: " << est.value.str() << " (" << fit_method_name(est.method)
       << ", spread " << est.error.str() << ")\n";
  }
  if (!report.verdicts.empty()) {
    os << "\n";
    for (const auto& v : report.verdicts) os << verdict_line(v) << "\n";
  }
  return os.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  os << "e,q,length,normalized_num,normalized_den\n";
  for (const auto& s : report.samples) {
    os << s.e << "," << s.q << "," << s.length << "," << s.normalized.numerator().get_str()
       << "," << s.normalized.denominator().get_str() << "\n";
  }
  return os.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["subject"] = report.subject;
  j["provenance"] = {{"input_hash", report.provenance.input_hash},
                     {"order", report.provenance.order},
                     {"e_max", report.provenance.e_max},
                     {"method", report.provenance.method}};
  j["dimension"] = report.dimension;
  auto samples = nlohmann::ordered_json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"e", s.e},
                       {"q", s.q},
                       {"length", s.length},
                       {"normalized", s.normalized.str()}});
  }
  j["samples"] = std::move(samples);
  if (report.estimate) {
    const auto& est = *report.estimate;
    j["estimate"] = {{"value", est.value.str()},
                     {"method", fit_method_name(est.method)},
                     {"error", est.error.str()},
                     {"dimension", est.dimension}};
  } else {
    j["estimate"] = nullptr;
  }
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"citation", v.citation},
                        {"predicted", v.predicted.str()},
                        {"estimated", v.estimated.value.str()},
                        {"absolute_gap", v.absolute_gap.str()},
                        {"relative_gap", v.relative_gap.str()},
                        {"tolerance", v.tolerance.str()},
                        {"pass", v.pass}});
  }
  j["verdicts"] = std::move(verdicts);
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

}  // namespace hklab
