#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "apn/cli.hpp"
#include "apn/field.hpp"
#include "apn/function.hpp"

namespace apn::cli {

using nlohmann::json;

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;
  unsigned m = 0;
  std::optional<std::uint32_t> field_poly;
  std::optional<std::string> poly;
  std::optional<std::string> lut_file;
  Format format = Format::Json;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  bool quiet = false;
};

/// Thrown for bad flag combinations; mapped to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldPtr make_field(const RunConfig& cfg);
VectorialFunction load_function(const FieldPtr& field, const RunConfig& cfg);
std::string hex(std::uint64_t v);

/// {tool_version, m, poly, command, results}
json make_report(const RunConfig& cfg, const Field& field, json results);
void emit(const json& report, Format format, std::ostream& out);

/// Throttled progress lines on the diagnostic stream.
class Heartbeat {
 public:
  Heartbeat(std::ostream& err, bool quiet, double interval_seconds = 2.0);
  bool due();
  std::ostream& line();
  double elapsed() const;

 private:
  std::ostream& err_;
  bool quiet_;
  double interval_;
  double start_;
  double last_;
};

struct RankArgs {
  std::string target = "af";
  std::size_t max_dim = 0;
  std::optional<std::string> save_basis;
  std::optional<std::string> load_basis;
};

struct SearchArgs {
  std::optional<std::uint64_t> d1, d2;
  std::optional<std::string> u_from, u_to;
  std::string out;
  bool resume = false;
  std::optional<bool> every_u;
};

struct CatalogArgs {
  bool theorem1_us = false;
  bool theorem2_us = false;
};

struct VerifyArgs {
  std::string suite;
  unsigned samples = 20;
};

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_rank(const RunConfig& cfg, const RankArgs& args, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, const SearchArgs& args, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& cfg, const CatalogArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace apn::cli
