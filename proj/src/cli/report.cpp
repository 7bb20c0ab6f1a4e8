#include <chrono>
#include <cstdio>

#include "apn/error.hpp"
#include "cli_internal.hpp"

namespace apn::cli {

namespace {

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Leaves become one row each; the section is the first path component under
// "results" and the key is the rest of the path joined with '.'.
void flatten(const json& node, const std::string& section, const std::string& key, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) {
      if (section.empty()) {
        flatten(v, k, "", out);
      } else {
        flatten(v, section, key.empty() ? k : key + "." + k, out);
      }
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      const std::string k = std::to_string(i);
      flatten(node[i], section.empty() ? k : section, key.empty() ? k : key + "." + k, out);
    }
  } else {
    const std::string value = node.is_string() ? node.get<std::string>() : node.dump();
    out << csv_escape(section) << ',' << csv_escape(key) << ',' << csv_escape(value) << '\n';
  }
}

}  // namespace

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

FieldPtr make_field(const RunConfig& cfg) {
  if (cfg.m == 0) throw UsageError("--m is required");
  return Field::make(cfg.m, cfg.field_poly);
}

VectorialFunction load_function(const FieldPtr& field, const RunConfig& cfg) {
  if (cfg.poly.has_value() == cfg.lut_file.has_value()) {
    throw UsageError("exactly one of --poly and --lut-file is required");
  }
  if (cfg.poly) return VectorialFunction::from_polynomial(field, parse_polynomial(*cfg.poly));
  return read_lut_file(field, *cfg.lut_file);
}

json make_report(const RunConfig& cfg, const Field& field, json results) {
  return json{{"tool_version", APNKIT_VERSION},
              {"m", field.degree()},
              {"poly", hex(field.polynomial())},
              {"command", cfg.command},
              {"results", std::move(results)}};
}

void emit(const json& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << report.dump(2) << '\n';
    return;
  }
  out << "section,key,value\n";
  for (const char* k : {"tool_version", "m", "poly", "command"}) {
    const json& v = report.at(k);
    out << "meta," << k << ',' << csv_escape(v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  flatten(report.at("results"), "", "", out);
}

Heartbeat::Heartbeat(std::ostream& err, bool quiet, double interval_seconds)
    : err_(err), quiet_(quiet), interval_(interval_seconds), start_(now_seconds()), last_(start_) {}

bool Heartbeat::due() {
  if (quiet_) return false;
  const double t = now_seconds();
  if (t - last_ < interval_) return false;
  last_ = t;
  return true;
}

std::ostream& Heartbeat::line() {
  char buf[32];
  std::snprintf(buf, sizeof buf, "[%8.1fs] ", elapsed());
  return err_ << buf;
}

double Heartbeat::elapsed() const { return now_seconds() - start_; }

}  // namespace apn::cli
