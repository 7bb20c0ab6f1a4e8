// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "apn/catalog.hpp"
#include "apn/cli.hpp"
#include "apn/error.hpp"
#include "apn/group_algebra.hpp"
#include "apn/ideal.hpp"
#include "apn/search.hpp"
#include "apn/spectra.hpp"
#include "property_checks.hpp"

using namespace apn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

Outcome criterion1() {
  Outcome o;
  const FieldPtr f = Field::make(10);
  std::set<Element> apn_us;
  for (Element u = 1; u < f->size(); ++u) {
    if (is_apn(theorem1_function(f, u))) apn_us.insert(u);
  }
  std::set<Element> expected;
  const Element w = order3_element(*f);
  for (unsigned k = 0; k < 31; ++k) {
    const Element s = f->exp(33 * k);
    expected.insert(f->mul(w, s));
    expected.insert(f->mul(f->mul(w, w), s));
  }
  o.check(expected.size() == 62, "w GF(32)* u w^2 GF(32)* does not have 62 elements");
  o.check(apn_us == expected, "APN set differs from w GF(32)* u w^2 GF(32)*");
  o.detail = o.pass ? "62 of 1023 u give APN, exactly w GF(32)* u w^2 GF(32)*" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  // Dense-oracle fixtures: A_F where F is APN, G_F otherwise.
  struct Fixture {
    unsigned m;
    std::uint64_t d;
    std::size_t af;     // 0: F not APN
    std::size_t graph;
  };
  const std::vector<Fixture> fixtures = {{4, 3, 20, 100}, {4, 5, 0, 64},  {5, 3, 42, 330},
                                         {5, 5, 42, 330}, {6, 3, 94, 1102}, {6, 5, 0, 896}};
  std::ostringstream d;
  for (const auto& fx : fixtures) {
    const auto F = VectorialFunction::power(Field::make(fx.m), fx.d);
    const std::string tag = "m=" + std::to_string(fx.m) + " x^" + std::to_string(fx.d);
    if (fx.af) {
      const auto a = build_aF(F);
      const std::size_t closure = ideal_dimension(a), dense = ideal_dimension_oracle(a);
      o.check(closure == dense && dense == fx.af, tag + ": A_F closure " + std::to_string(closure) + ", oracle " +
                                                        std::to_string(dense));
      d << tag << " A_F=" << closure << "; ";
    } else {
      bool refused = false;
      try {
        build_aF(F);
      } catch (const NotApn&) {
        refused = true;
      }
      o.check(refused, tag + ": A_F built for a non-APN function");
      d << tag << " not APN (A_F undefined); ";
    }
    const auto g = build_graph_element(F);
    const std::size_t closure = ideal_dimension(g), dense = ideal_dimension_oracle(g);
    o.check(closure == dense && dense == fx.graph, tag + ": G_F closure " + std::to_string(closure));
  }
  if (o.pass) o.detail = d.str() + "closure = oracle everywhere";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const FieldPtr f = Field::make(10);
  const struct {
    const char* name;
    VectorialFunction fn;
    std::size_t expected;
  } rows[] = {
      {"x^3", VectorialFunction::power(f, 3), 1804},
      {"x^9", VectorialFunction::power(f, 9), 1804},
      {"x^57", VectorialFunction::power(f, 57), 5734},
      {"x^3+u x^36", theorem1_function(f, theorem1_valid_us(*f).front()), 1896},
  };
  std::ostringstream d;
  std::size_t peak = 0;
  for (const auto& r : rows) {
    TranslateClosure closure(build_aF(r.fn));
    closure.run();
    peak = std::max(peak, closure.basis().storage_bytes());
    o.check(closure.dimension() == r.expected,
            std::string(r.name) + ": " + std::to_string(closure.dimension()) + " != " + std::to_string(r.expected));
    d << r.name << "=" << closure.dimension() << " ";
  }
  o.check(peak < (std::size_t{1} << 30), "basis storage exceeded 1 GiB");
  if (o.pass) d << "(peak basis " << peak / (1 << 20) << " MiB)";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  const FieldPtr f = Field::make(10);
  const auto t1 = walsh_spectrum(theorem1_function(f, theorem1_valid_us(*f).front())).abs_values;
  const auto x3 = walsh_spectrum(VectorialFunction::power(f, 3)).abs_values;
  const auto x57 = walsh_spectrum(VectorialFunction::power(f, 57)).abs_values;
  const auto x339 = walsh_spectrum(VectorialFunction::power(f, 339)).abs_values;
  o.check(t1 == x3, "x^3+u x^36 and x^3 differ");
  o.check(x57 == x3, "x^57 and x^3 differ");
  o.check(x339 != x3, "x^339 matches x^3");
  if (o.pass) {
    o.detail = "|W| multisets equal for x^3+u x^36, x^3, x^57 (" + std::to_string(x3.size()) +
               " values); x^339 differs (" + std::to_string(x339.size()) + " values)";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t ab = 0;
  for (unsigned m : {5U, 7U, 9U}) {
    const FieldPtr f = Field::make(m);
    const std::uint64_t bound = std::uint64_t{1} << ((m + 1) / 2);
    for (const CatalogEntry& e : known_apn_functions(m)) {
      const auto F = e.function(f);
      const auto ws = walsh_spectrum(F);
      const std::string tag = family_name(e.family) + " x^" + std::to_string(e.exponents[0]) + " m=" + std::to_string(m);
      switch (e.family) {
        case Family::Gold:
        case Family::Kasami:
        case Family::Welch:
        case Family::Niho:
          o.check(ws.linearity == bound, tag + ": LN=" + std::to_string(ws.linearity));
          ++ab;
          break;
        case Family::Inverse:
          o.check(is_apn(F), tag + " not APN");
          o.check(ws.abs_values.size() > 3, tag + ": only " + std::to_string(ws.abs_values.size()) + " |W| values");
          break;
        default:
          break;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(ab) + " Gold/Kasami/Welch/Niho entries reach LN = 2^((m+1)/2); inverse APN with > 3 |W| values";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const FieldPtr f = Field::make(10);
  const auto us = theorem1_valid_us(*f);
  o.check(is_crooked(theorem1_function(f, us.front())), "x^3+u x^36 not crooked");
  o.check(!is_crooked(VectorialFunction::power(f, 339)), "x^339 reported crooked");
  if (o.pass) o.detail = "x^3+u x^36 crooked, x^339 not";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const FieldPtr f = Field::make(12);
  std::uint64_t scan = 0;
  std::vector<Element> order45, order91, invalid;
  for (Element u = 1; u < f->size(); ++u) {
    const std::uint64_t ord = f->element_order(u);
    if ((ord % 45 == 0 && 585 % ord == 0) || (ord % 7 == 0 && 273 % ord == 0)) ++scan;
    if (ord == 45) order45.push_back(u);
    if (ord == 91) order91.push_back(u);
    if (!theorem2_u_is_valid(*f, u)) invalid.push_back(u);
  }
  o.check(scan == 546 && theorem2_valid_us(*f).size() == 546, "valid u count " + std::to_string(scan));
  for (Element u : order45) o.check(is_apn(theorem2_function(f, u)), "order-45 u not APN");
  for (Element u : order91) o.check(is_apn(theorem2_function(f, u)), "order-91 u not APN");
  std::mt19937_64 rng(20240611);
  std::shuffle(invalid.begin(), invalid.end(), rng);
  invalid.resize(50);
  for (Element u : invalid) o.check(!is_apn(theorem2_function(f, u)), "u outside the sets is APN");
  if (o.pass) {
    o.detail = "546 valid u; all " + std::to_string(order45.size()) + " of order 45 and " +
               std::to_string(order91.size()) + " of order 91 APN; 50 random invalid u not APN";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t functions = 0;
  for (unsigned m : {4U, 5U, 6U}) {
    const FieldPtr f = Field::make(m);
    for (const auto& F : props::sample_functions(f, m)) {
      ++functions;
      for (const std::string& r :
           {props::delta_parity_and_mass(F), props::parseval(F), m <= 5 ? props::fwht_matches_naive(F) : "",
            props::anf_round_trip(F), props::affine_invariance(F, 20, 1000 + m),
            props::automorphism_invariance(F, 20, 2000 + m)}) {
        o.check(r.empty(), r);
      }
    }
    for (std::uint64_t d : {3ULL, 5ULL, 7ULL, (1ULL << m) - 2}) {
      const std::string r = props::basis_independence(m, d);
      o.check(r.empty(), r);
    }
  }
  if (o.pass) o.detail = std::to_string(functions) + " functions at m=4,5,6: all property suites hold";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::string out_file = (std::filesystem::temp_directory_path() / "apnkit_acceptance.jsonl").string();
  auto search = [&](const std::string& jobs) {
    const std::vector<std::string> args = {"search", "--m", "10", "--d1", "3", "--d2", "36", "--jobs", jobs,
                                           "--out", out_file, "--quiet"};
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    o.check(code == 0, "search exited with " + std::to_string(code) + ": " + err.str());
    return code == 0 ? nlohmann::json::parse(out.str())["results"]["orbits"] : nlohmann::json();
  };
  const auto one = search("1");
  const auto eight = search("8");
  std::filesystem::remove(out_file);
  o.check(one == eight, "--jobs 1 and --jobs 8 disagree");
  o.check(one.size() == 1 && one[0]["orbit_size"] == 62 && one[0]["members_found"] == 62 &&
              one[0]["verified"].get<bool>(),
          "expected one verified orbit of size 62, got " + one.dump());
  if (o.pass) o.detail = "one orbit of size 62, canonical u=" + one[0]["u"].get<std::string>() + ", jobs 1 = jobs 8";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"x^3+u x^36 APN iff u in w GF(32)* u w^2 GF(32)* (m=10)", criterion1},
      {"ideal dimension closure = oracle (m=4,5,6)", criterion2},
      {"ideal dimensions of A_F at m=10", criterion3},
      {"Walsh spectra relations at m=10", criterion4},
      {"AB certification at m=5,7,9", criterion5},
      {"crookedness", criterion6},
      {"x^3+u x^528 APN iff order conditions, sampled (m=12)", criterion7},
      {"property suites", criterion8},
      {"search regression (3, 36) at m=10", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("criterion %zu: %s  %s  [%s] (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
