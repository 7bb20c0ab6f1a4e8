#include <CLI11.hpp>

#include "apn/cli.hpp"
#include "apn/error.hpp"
#include "apn/parallel.hpp"
#include "cli_internal.hpp"

namespace apn::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

void add_field_flags(CLI::App* sub, RunConfig& cfg, std::string& field_poly, bool required = true) {
  auto* m = sub->add_option("--m", cfg.m, "Extension degree m (2..16)")->check(CLI::Range(2, 16));
  if (required) m->required();
  sub->add_option("--field-poly", field_poly, "Reduction polynomial as a hex bitmask (default: built-in)");
}

void add_function_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--poly", cfg.poly, "Function as exponent:coefficient-hex terms, e.g. \"3:1,36:0x2f4\"");
  sub->add_option("--lut-file", cfg.lut_file, "Function as a LUT file (one hex value per line)");
}

void add_common_flags(CLI::App* sub, RunConfig& cfg, bool& csv) {
  sub->add_option("--jobs", cfg.jobs, "Worker threads (default: APNKIT_JOBS or 1)")->check(CLI::PositiveNumber);
  sub->add_flag("--csv", csv, "Emit section,key,value rows instead of JSON");
  sub->add_flag("--quiet", cfg.quiet, "No progress lines on stderr");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis of vectorial Boolean functions over GF(2^m)", "apnkit"};
  app.set_version_flag("--version", APNKIT_VERSION);
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.jobs = default_jobs();
  cfg.seed = kDefaultSeed;
  std::string field_poly;
  bool csv = false;
  RankArgs rank;
  SearchArgs search;
  CatalogArgs catalog;
  VerifyArgs verify;

  auto* analyze_cmd = app.add_subcommand("analyze", "Differential and Walsh spectra, APN / AB / crooked, degree");
  add_field_flags(analyze_cmd, cfg, field_poly);
  add_function_flags(analyze_cmd, cfg);
  add_common_flags(analyze_cmd, cfg, csv);

  auto* rank_cmd = app.add_subcommand("rank", "Dimension of the ideal generated by A_F or G_F");
  add_field_flags(rank_cmd, cfg, field_poly);
  add_function_flags(rank_cmd, cfg);
  add_common_flags(rank_cmd, cfg, csv);
  rank_cmd->add_option("--target", rank.target, "af or graph")->check(CLI::IsMember({"af", "graph"}));
  rank_cmd->add_option("--max-dim", rank.max_dim, "Stop once the dimension exceeds this cap");
  rank_cmd->add_option("--save-basis", rank.save_basis, "Checkpoint file written after every stage");
  rank_cmd->add_option("--load-basis", rank.load_basis, "Resume from a checkpoint file");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for APN binomials x^d1 + u x^d2");
  add_field_flags(search_cmd, cfg, field_poly);
  add_common_flags(search_cmd, cfg, csv);
  search_cmd->add_option("--d1", search.d1, "First exponent (fixes one slice together with --d2)");
  search_cmd->add_option("--d2", search.d2, "Second exponent");
  search_cmd->add_option("--u-from", search.u_from, "First u (hex)");
  search_cmd->add_option("--u-to", search.u_to, "Last u (hex, inclusive)");
  search_cmd->add_option("--out", search.out, "JSONL output file")->required();
  search_cmd->add_flag("--resume", search.resume, "Skip slices already completed in --out");
  search_cmd->add_flag("--every-u,!--orbit-reps", search.every_u,
                       "Test every u (default for slices) or one u per orbit (default for full sweeps)");

  auto* catalog_cmd = app.add_subcommand("catalog", "Known APN functions at this m");
  add_field_flags(catalog_cmd, cfg, field_poly);
  add_common_flags(catalog_cmd, cfg, csv);
  catalog_cmd->add_flag("--theorem1-us", catalog.theorem1_us, "List the u making x^3 + u x^36 APN (m = 10)");
  catalog_cmd->add_flag("--theorem2-us", catalog.theorem2_us, "List the u making x^3 + u x^528 APN (m = 12)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a named check suite; exit 1 on failure");
  add_field_flags(verify_cmd, cfg, field_poly, false);
  add_common_flags(verify_cmd, cfg, csv);
  verify_cmd->add_option("--suite", verify.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2-sample", "table1", "table2-small", "table2-full"}));
  verify_cmd->add_option("--seed", cfg.seed, "Seed for sampled checks");
  verify_cmd->add_option("--samples", verify.samples, "Extra valid u sampled by theorem2-sample");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << APNKIT_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "apnkit: " << e.what() << '\n';
    return kUsage;
  }

  cfg.format = csv ? Format::Csv : Format::Json;
  try {
    if (!field_poly.empty()) {
      std::size_t pos = 0;
      cfg.field_poly = static_cast<std::uint32_t>(std::stoul(field_poly, &pos, 16));
      if (pos != field_poly.size()) throw std::invalid_argument(field_poly);
    }
  } catch (const std::exception&) {
    err << "apnkit: --field-poly: not a hex value: " << field_poly << '\n';
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      cfg.command = "analyze";
      return cmd_analyze(cfg, out, err);
    }
    if (rank_cmd->parsed()) {
      cfg.command = "rank";
      return cmd_rank(cfg, rank, out, err);
    }
    if (search_cmd->parsed()) {
      cfg.command = "search";
      return cmd_search(cfg, search, out, err);
    }
    if (catalog_cmd->parsed()) {
      cfg.command = "catalog";
      return cmd_catalog(cfg, catalog, out, err);
    }
    cfg.command = "verify";
    if (!cfg.quiet) err << "apnkit: verify seed " << cfg.seed << '\n';
    return cmd_verify(cfg, verify, out, err);
  } catch (const UsageError& e) {
    err << "apnkit: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError& e) {
    err << "apnkit: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "apnkit: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "apnkit: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace apn::cli
