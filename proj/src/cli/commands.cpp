#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "apn/catalog.hpp"
#include "apn/error.hpp"
#include "apn/group_algebra.hpp"
#include "apn/ideal.hpp"
#include "apn/search.hpp"
#include "apn/spectra.hpp"
#include "cli_internal.hpp"

namespace apn::cli {

namespace {

template <typename Map>
json histogram_json(const Map& h) {
  json out = json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

std::string describe_source(const RunConfig& cfg) {
  if (cfg.poly) return *cfg.poly;
  return "lut:" + cfg.lut_file.value_or("");
}

Element parse_hex_element(const std::string& text, const std::string& flag) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(text, &pos, 16);
    if (pos != text.size()) throw std::invalid_argument(text);
    return static_cast<Element>(v);
  } catch (const std::exception&) {
    throw UsageError(flag + ": not a hex value: " + text);
  }
}

// Collects named pass/fail checks for verify.
class Checklist {
 public:
  void add(const std::string& name, bool pass, json detail = json::object()) {
    all_ &= pass;
    items_.push_back({{"check", name}, {"pass", pass}, {"detail", std::move(detail)}});
  }
  bool passed() const { return all_; }
  json to_json(const std::string& suite) const {
    return {{"suite", suite}, {"pass", all_}, {"checks", items_}};
  }

 private:
  bool all_ = true;
  json items_ = json::array();
};

FieldPtr field_for(const RunConfig& cfg, unsigned m) {
  if (cfg.m != 0 && cfg.m != m) throw UsageError("this suite runs at m = " + std::to_string(m));
  return Field::make(m, cfg.field_poly);
}

void suite_theorem1(const RunConfig& cfg, Checklist& checks, Heartbeat& hb) {
  const FieldPtr field = field_for(cfg, 10);
  std::vector<Element> apn_us, mismatches;
  for (Element u = 1; u < field->size(); ++u) {
    const bool apn = is_apn(theorem1_function(field, u), cfg.jobs);
    if (apn) apn_us.push_back(u);
    if (apn != theorem1_u_is_valid(*field, u)) mismatches.push_back(u);
    if (hb.due()) hb.line() << "theorem1: u = " << u << "/1023, APN so far " << apn_us.size() << '\n';
  }
  json bad = json::array();
  for (Element u : mismatches) bad.push_back(hex(u));
  checks.add("apn_iff_condition_all_u", mismatches.empty(), {{"mismatches", bad}});
  checks.add("apn_count_62", apn_us.size() == 62, {{"count", apn_us.size()}});

  std::set<BinomialTriple> reps;
  for (Element u : apn_us) reps.insert(canonical_orbit_representative(*field, {3, 36, u}));
  checks.add("single_affine_orbit", reps.size() == 1, {{"orbits", reps.size()}});
}

void suite_theorem2(const RunConfig& cfg, const VerifyArgs& args, Checklist& checks, Heartbeat& hb) {
  const FieldPtr field = field_for(cfg, 12);
  const std::uint64_t n = field->group_order();
  auto phi = [](std::uint64_t k) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= k; ++i) c += std::gcd(i, k) == 1;
    return c;
  };
  std::uint64_t predicted = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if ((d % 45 == 0 && 585 % d == 0) || (d % 7 == 0 && 273 % d == 0)) predicted += phi(d);
  }
  const auto valid = theorem2_valid_us(*field);
  checks.add("valid_count_matches_totient_sum", valid.size() == predicted && predicted == 546,
             {{"scan", valid.size()}, {"totient_sum", predicted}});

  std::vector<Element> order45, order91, other_valid, invalid;
  const std::set<Element> valid_set(valid.begin(), valid.end());
  for (Element u = 1; u < field->size(); ++u) {
    const std::uint64_t ord = field->element_order(u);
    if (ord == 45) {
      order45.push_back(u);
    } else if (ord == 91) {
      order91.push_back(u);
    } else if (valid_set.count(u)) {
      other_valid.push_back(u);
    } else {
      invalid.push_back(u);
    }
  }
  std::mt19937_64 rng(cfg.seed);
  std::shuffle(other_valid.begin(), other_valid.end(), rng);
  other_valid.resize(std::min<std::size_t>(other_valid.size(), args.samples));
  std::shuffle(invalid.begin(), invalid.end(), rng);
  invalid.resize(std::min<std::size_t>(invalid.size(), 50));

  auto run_group = [&](const std::string& name, const std::vector<Element>& us, bool expect) {
    json bad = json::array();
    for (Element u : us) {
      if (is_apn(theorem2_function(field, u), cfg.jobs) != expect) bad.push_back(hex(u));
      if (hb.due()) hb.line() << "theorem2: " << name << '\n';
    }
    checks.add(name, bad.empty(), {{"tested", us.size()}, {"mismatches", bad}});
  };
  run_group("order_45_all_apn", order45, true);
  run_group("order_91_all_apn", order91, true);
  run_group("other_valid_sample_apn", other_valid, true);
  run_group("invalid_sample_not_apn", invalid, false);
}

void suite_table1(const RunConfig& cfg, Checklist& checks) {
  if (cfg.m == 0) throw UsageError("table1 needs --m");
  const FieldPtr field = make_field(cfg);
  const unsigned m = cfg.m;
  for (const CatalogEntry& e : known_apn_functions(m)) {
    const VectorialFunction f = e.function(field);
    const std::string name = family_name(e.family) + " x^" + std::to_string(e.exponents.front());
    const DifferentialSpectrum ds = differential_spectrum(f, cfg.jobs);
    const WalshSpectrum ws = walsh_spectrum(f, cfg.jobs);
    json detail = {{"uniformity", ds.uniformity}, {"linearity", ws.linearity},
                   {"walsh_abs_values", ws.abs_values.size()}};
    if (e.family == Family::Inverse) {
      if (m % 2 == 1) {
        checks.add(name + " apn", ds.uniformity == 2, detail);
        checks.add(name + " walsh_abs_more_than_three_values", ws.abs_values.size() > 3, detail);
      } else {
        checks.add(name + " uniformity_4", ds.uniformity == 4, detail);
      }
      continue;
    }
    checks.add(name + " apn", ds.uniformity == 2, detail);
    const bool ab_family = e.family == Family::Gold || e.family == Family::Kasami || e.family == Family::Welch ||
                           e.family == Family::Niho;
    if (ab_family && m % 2 == 1) {
      checks.add(name + " ab", ws.linearity == (std::uint64_t{1} << ((m + 1) / 2)), detail);
    }
  }
}

void suite_table2_small(const RunConfig& cfg, Checklist& checks) {
  ClosureOptions opts;
  opts.jobs = cfg.jobs;
  auto compare = [&](const std::string& name, const GroupAlgebraElement& a) {
    const std::size_t closure = ideal_dimension(a, opts);
    const std::size_t oracle = ideal_dimension_oracle(a);
    checks.add(name, closure == oracle, {{"closure", closure}, {"oracle", oracle}});
  };
  for (unsigned m : {4U, 5U, 6U}) {
    const FieldPtr field = Field::make(m, cfg.m == m ? cfg.field_poly : std::nullopt);
    for (std::uint64_t d : {3U, 5U}) {
      const VectorialFunction f = VectorialFunction::power(field, d);
      const std::string name = "m" + std::to_string(m) + " x^" + std::to_string(d);
      if (is_apn(f)) {
        compare(name + " A_F", build_aF(f));
      } else {
        // A_F needs an APN function; make sure it is refused.
        bool refused = false;
        try {
          build_aF(f);
        } catch (const NotApn&) {
          refused = true;
        }
        checks.add(name + " A_F refused (not APN)", refused);
      }
      compare(name + " G_F", build_graph_element(f));
    }
  }
}

void suite_table2_full(const RunConfig& cfg, Checklist& checks, Heartbeat& hb) {
  const FieldPtr field = field_for(cfg, 10);
  struct Row {
    std::string name;
    VectorialFunction f;
    std::size_t expected;
  };
  const Element u = theorem1_valid_us(*field).front();
  const std::vector<Row> rows = {
      {"x^3", VectorialFunction::power(field, 3), 1804},
      {"x^9", VectorialFunction::power(field, 9), 1804},
      {"x^57", VectorialFunction::power(field, 57), 5734},
      {"x^3+u*x^36", theorem1_function(field, u), 1896},
  };
  for (const Row& r : rows) {
    ClosureOptions opts;
    opts.jobs = cfg.jobs;
    opts.on_batch = [&](const ClosureProgress& p) {
      if (hb.due()) {
        hb.line() << r.name << ": stage " << p.stage << '/' << p.stages << ", row " << p.cursor << '/'
                  << p.stage_rows << ", dim " << p.dimension << '\n';
      }
    };
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t dim = ideal_dimension(build_aF(r.f), opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks.add(r.name, dim == r.expected, {{"dimension", dim}, {"expected", r.expected}, {"seconds", secs}});
  }
}

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const FieldPtr field = make_field(cfg);
  const VectorialFunction f = load_function(field, cfg);
  const DifferentialSpectrum ds = differential_spectrum(f, cfg.jobs);
  const WalshSpectrum ws = walsh_spectrum(f, cfg.jobs);
  const bool ab = f.m() % 2 == 1 && ws.linearity == (std::uint64_t{1} << ((f.m() + 1) / 2));
  json results = {
      {"function", describe_source(cfg)},
      {"uniformity", ds.uniformity},
      {"differential_histogram", histogram_json(ds.histogram)},
      {"linearity", ws.linearity},
      {"walsh_abs", histogram_json(ws.abs_values)},
      {"flags",
       {{"apn", ds.uniformity == 2}, {"ab", ab}, {"crooked", is_crooked(f)}, {"degree", algebraic_degree(f)},
        {"bijective", f.is_bijective()}}},
  };
  emit(make_report(cfg, *field, std::move(results)), cfg.format, out);
  return kOk;
}

int cmd_rank(const RunConfig& cfg, const RankArgs& args, std::ostream& out, std::ostream& err) {
  const FieldPtr field = make_field(cfg);
  Heartbeat hb(err, cfg.quiet);
  std::optional<TranslateClosure> closure;
  if (args.load_basis) {
    closure.emplace(TranslateClosure::load(*args.load_basis));
    if (closure->basis().m() != field->degree()) throw UsageError("--load-basis: checkpoint has a different m");
  } else {
    const VectorialFunction f = load_function(field, cfg);
    GroupAlgebraElement seed = args.target == "graph" ? build_graph_element(f) : build_aF(f);
    closure.emplace(seed);
  }
  ClosureOptions opts;
  opts.jobs = cfg.jobs;
  opts.max_dimension = args.max_dim;
  opts.on_batch = [&](const ClosureProgress& p) {
    if (hb.due()) {
      hb.line() << "stage " << p.stage << '/' << p.stages << ", row " << p.cursor << '/' << p.stage_rows
                << ", dim " << p.dimension << '\n';
    }
  };
  if (args.save_basis) {
    opts.on_stage = [&](const ClosureProgress&) { closure->save(*args.save_basis); };
  }
  const auto t0 = std::chrono::steady_clock::now();
  const bool complete = closure->run(opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (args.save_basis) closure->save(*args.save_basis);
  json results = {{"target", args.target},
                  {"dimension", closure->dimension()},
                  {"rows", closure->dimension()},
                  {"complete", complete},
                  {"seconds", secs},
                  {"basis_bytes", closure->basis().storage_bytes()}};
  if (!cfg.lut_file && !args.load_basis) results["function"] = describe_source(cfg);
  emit(make_report(cfg, *field, std::move(results)), cfg.format, out);
  return kOk;
}

namespace {

json hit_json(const SearchHit& h) {
  return {{"d1", h.triple.d1},
          {"d2", h.triple.d2},
          {"u", hex(h.triple.u)},
          {"verified", h.verified},
          {"orbit_size", h.orbit_size},
          {"members_found", h.members_found},
          {"monomial_equivalent", h.monomial_equivalent}};
}

SearchHit hit_from_json(const json& j) {
  SearchHit h;
  h.triple = {j.at("d1").get<std::uint64_t>(), j.at("d2").get<std::uint64_t>(),
              static_cast<Element>(std::stoul(j.at("u").get<std::string>(), nullptr, 16))};
  h.verified = j.at("verified").get<bool>();
  h.orbit_size = j.at("orbit_size").get<std::uint64_t>();
  h.members_found = j.at("members_found").get<std::uint64_t>();
  h.monomial_equivalent = j.at("monomial_equivalent").get<bool>();
  return h;
}

}  // namespace

int cmd_search(const RunConfig& cfg, const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const FieldPtr field = make_field(cfg);
  if (args.d1.has_value() != args.d2.has_value()) throw UsageError("--d1 and --d2 go together");
  if (args.out.empty()) throw UsageError("--out is required");
  SearchSpace space;
  space.m = cfg.m;
  if (args.d1) space.pair = ExponentPair{*args.d1, *args.d2};
  if (args.u_from) space.u_from = parse_hex_element(*args.u_from, "--u-from");
  if (args.u_to) space.u_to = parse_hex_element(*args.u_to, "--u-to");
  space.every_u = args.every_u;

  SearchOptions opts;
  opts.jobs = cfg.jobs;
  std::vector<SearchHit> previous;
  if (args.resume && std::filesystem::exists(args.out)) {
    std::ifstream in(args.out);
    if (!in) throw FileError("cannot read " + args.out);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
        if (j.contains("slice_done")) {
          opts.skip.insert({j["slice_done"][0].get<std::uint64_t>(), j["slice_done"][1].get<std::uint64_t>()});
        } else {
          previous.push_back(hit_from_json(j));
        }
      } catch (const json::exception& e) {
        throw ParseError(args.out + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    // Hits of a slice without its completion marker are recomputed.
    std::erase_if(previous, [&](const SearchHit& h) { return opts.skip.count({h.triple.d1, h.triple.d2}) == 0; });
  }

  // Rewritten from scratch so partial slices from an interrupted run disappear.
  std::ofstream sink(args.out, std::ios::trunc);
  if (!sink) throw FileError("cannot write " + args.out);
  for (const SearchHit& h : previous) sink << hit_json(h).dump() << '\n';
  for (const ExponentPair& p : opts.skip) sink << json{{"slice_done", {p.first, p.second}}}.dump() << '\n';
  sink.flush();
  std::mutex mu;
  Heartbeat hb(err, cfg.quiet);
  std::size_t slices = 0;
  opts.on_slice = [&](const ExponentPair& p, const std::vector<SearchHit>& hits) {
    std::lock_guard lock(mu);
    for (const SearchHit& h : hits) sink << hit_json(h).dump() << '\n';
    sink << json{{"slice_done", {p.first, p.second}}}.dump() << '\n';
    sink.flush();
    ++slices;
    if (hb.due()) hb.line() << "search: " << slices << " slices done, last (" << p.first << ", " << p.second << ")\n";
  };
  std::vector<SearchHit> hits = search_binomials(field, space, opts);
  hits.insert(hits.end(), previous.begin(), previous.end());
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) { return a.triple < b.triple; });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const SearchHit& a, const SearchHit& b) { return a.triple == b.triple; }),
             hits.end());

  json list = json::array();
  std::size_t non_trivial = 0;
  for (const SearchHit& h : hits) {
    list.push_back(hit_json(h));
    non_trivial += !h.monomial_equivalent;
  }
  json results = {{"slices_searched", slices},
                  {"slices_skipped", opts.skip.size()},
                  {"hits", list.size()},
                  {"non_monomial_hits", non_trivial},
                  {"orbits", list},
                  {"out", args.out}};
  emit(make_report(cfg, *field, std::move(results)), cfg.format, out);
  return kOk;
}

int cmd_catalog(const RunConfig& cfg, const CatalogArgs& args, std::ostream& out, std::ostream&) {
  const FieldPtr field = make_field(cfg);
  json results = json::object();
  json entries = json::array();
  for (const CatalogEntry& e : known_apn_functions(cfg.m)) {
    entries.push_back({{"family", family_name(e.family)},
                       {"parameter", e.parameter},
                       {"exponents", e.exponents},
                       {"condition", e.condition}});
  }
  if (cfg.m == 10) {
    const CatalogEntry e = theorem1_entry(*field, theorem1_valid_us(*field).front());
    entries.push_back({{"family", family_name(e.family)}, {"exponents", e.exponents}, {"condition", e.condition}});
  }
  if (cfg.m == 12) {
    const CatalogEntry e = theorem2_entry(*field, theorem2_valid_us(*field).front());
    entries.push_back({{"family", family_name(e.family)}, {"exponents", e.exponents}, {"condition", e.condition}});
  }
  results["entries"] = entries;
  auto dump_us = [&](const std::vector<Element>& us) {
    json a = json::array();
    for (Element u : us) a.push_back(hex(u));
    return a;
  };
  if (args.theorem1_us) {
    if (cfg.m != 10) throw UsageError("--theorem1-us needs --m 10");
    results["theorem1_us"] = dump_us(theorem1_valid_us(*field));
  }
  if (args.theorem2_us) {
    if (cfg.m != 12) throw UsageError("--theorem2-us needs --m 12");
    results["theorem2_us"] = dump_us(theorem2_valid_us(*field));
  }
  emit(make_report(cfg, *field, std::move(results)), cfg.format, out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  Heartbeat hb(err, cfg.quiet);
  Checklist checks;
  FieldPtr field;
  if (args.suite == "theorem1") {
    suite_theorem1(cfg, checks, hb);
    field = field_for(cfg, 10);
  } else if (args.suite == "theorem2-sample") {
    suite_theorem2(cfg, args, checks, hb);
    field = field_for(cfg, 12);
  } else if (args.suite == "table1") {
    suite_table1(cfg, checks);
    field = make_field(cfg);
  } else if (args.suite == "table2-small") {
    suite_table2_small(cfg, checks);
    field = Field::make(cfg.m ? cfg.m : 6, cfg.m ? cfg.field_poly : std::nullopt);
  } else if (args.suite == "table2-full") {
    suite_table2_full(cfg, checks, hb);
    field = field_for(cfg, 10);
  } else {
    throw UsageError("unknown suite: " + args.suite);
  }
  json results = checks.to_json(args.suite);
  results["seed"] = cfg.seed;
  emit(make_report(cfg, *field, std::move(results)), cfg.format, out);
  return checks.passed() ? kOk : kCheckFailed;
}

}  // namespace apn::cli
