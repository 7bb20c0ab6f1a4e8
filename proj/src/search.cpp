#include "apn/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "apn/error.hpp"
#include "apn/parallel.hpp"
#include "apn/spectra.hpp"

namespace apn {

std::uint64_t normalize_exponent(std::uint64_t d, unsigned m) {
  if (d == 0) throw Error("constant terms are not part of the binomial search");
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  return (d - 1) % n + 1;
}

namespace {

struct PairImage {
  ExponentPair pair;
  bool swapped;
};

// Images of (d1, d2) under output squaring, j = 0 .. m-1, ordered so that
// the first exponent is the smaller one.
std::vector<PairImage> pair_orbit(unsigned m, std::uint64_t d1, std::uint64_t d2) {
  std::vector<PairImage> out;
  std::uint64_t a = normalize_exponent(d1, m), b = normalize_exponent(d2, m);
  for (unsigned j = 0; j < m; ++j) {
    out.push_back(a < b ? PairImage{{a, b}, false} : PairImage{{b, a}, true});
    a = normalize_exponent(2 * a, m);
    b = normalize_exponent(2 * b, m);
  }
  return out;
}

std::uint64_t class_modulus(unsigned m, std::uint64_t d1, std::uint64_t d2) {
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  const std::uint64_t a = normalize_exponent(d1, m) % n, b = normalize_exponent(d2, m) % n;
  return std::gcd((b + n - a) % n, n);
}

// Marks the doubling cycle of r (or of -r) modulo g.
void close_classes(std::uint64_t g, std::uint64_t r, bool negate, std::vector<bool>& mark) {
  std::uint64_t x = negate ? (g - r % g) % g : r % g;
  for (std::uint64_t i = 0; i <= 64 && !mark[x]; ++i) {
    mark[x] = true;
    x = (2 * x) % g;
  }
}

struct Orbit {
  ExponentPair canonical_pair;
  std::vector<bool> canonical_classes;  // residues of log u mod g at the canonical pair
  std::vector<bool> input_classes;      // same, at the input pair
  std::uint64_t modulus;
};

Orbit compute_orbit(const Field& field, const BinomialTriple& t) {
  const unsigned m = field.degree();
  if (normalize_exponent(t.d1, m) == normalize_exponent(t.d2, m)) {
    throw Error("binomial exponents coincide modulo 2^m - 1");
  }
  if (t.u == 0 || !field.contains(t.u)) throw Error("binomial coefficient must be a nonzero field element");
  Orbit o;
  o.modulus = class_modulus(m, t.d1, t.d2);
  const std::uint64_t g = o.modulus;
  const std::uint64_t r = field.log(t.u) % g;
  const auto images = pair_orbit(m, t.d1, t.d2);
  o.canonical_pair = std::min_element(images.begin(), images.end(), [](const PairImage& x, const PairImage& y) {
                       return x.pair < y.pair;
                     })->pair;
  o.canonical_classes.assign(g, false);
  o.input_classes.assign(g, false);
  const ExponentPair input = images.front().pair;
  const bool input_swapped = images.front().swapped;
  for (const auto& img : images) {
    // Relative to the input orientation: a swap in between inverts u.
    if (img.pair == o.canonical_pair) close_classes(g, r, img.swapped != input_swapped, o.canonical_classes);
    if (img.pair == input) close_classes(g, r, img.swapped != input_swapped, o.input_classes);
  }
  return o;
}

Element least_in_classes(const Field& field, std::uint64_t g, const std::vector<bool>& classes) {
  for (Element u = 1; u < field.size(); ++u) {
    if (classes[field.log(u) % g]) return u;
  }
  return 0;
}

}  // namespace

BinomialTriple canonical_orbit_representative(const Field& field, const BinomialTriple& t) {
  const Orbit o = compute_orbit(field, t);
  // When the input pair was given with d1 > d2, the canonical orientation is
  // the swapped one; compute_orbit measured classes relative to the input.
  const unsigned m = field.degree();
  const bool input_swapped = normalize_exponent(t.d1, m) > normalize_exponent(t.d2, m);
  std::vector<bool> classes = o.canonical_classes;
  if (input_swapped) {
    std::vector<bool> flipped(o.modulus, false);
    for (std::uint64_t r = 0; r < o.modulus; ++r) {
      if (classes[r]) flipped[(o.modulus - r) % o.modulus] = true;
    }
    classes = std::move(flipped);
  }
  return {o.canonical_pair.first, o.canonical_pair.second, least_in_classes(field, o.modulus, classes)};
}

std::vector<Element> orbit_members(const Field& field, const BinomialTriple& t) {
  const Orbit o = compute_orbit(field, t);
  std::vector<Element> out;
  for (Element u = 1; u < field.size(); ++u) {
    if (o.input_classes[field.log(u) % o.modulus]) out.push_back(u);
  }
  return out;
}

bool is_canonical_pair(unsigned m, std::uint64_t d1, std::uint64_t d2) {
  const ExponentPair p{normalize_exponent(d1, m), normalize_exponent(d2, m)};
  if (p.first >= p.second) return false;
  for (const auto& img : pair_orbit(m, d1, d2)) {
    if (img.pair < p) return false;
  }
  return true;
}

bool is_monomial_equivalent(unsigned m, std::uint64_t d1, std::uint64_t d2) {
  const std::uint64_t a = normalize_exponent(d1, m), b = normalize_exponent(d2, m);
  if (std::has_single_bit(a) || std::has_single_bit(b)) return true;
  std::uint64_t x = a;
  for (unsigned k = 0; k < m; ++k) {
    if (x == b) return true;
    x = normalize_exponent(2 * x, m);
  }
  return false;
}

VectorialFunction binomial_function(FieldPtr field, const BinomialTriple& t) {
  const std::vector<Term> terms = {{t.d1, 1}, {t.d2, t.u}};
  return VectorialFunction::from_polynomial(std::move(field), terms);
}

namespace {

std::vector<Element> power_table(const Field& field, std::uint64_t d) {
  std::vector<Element> out(field.size(), 0);
  for (Element x = 1; x < field.size(); ++x) out[x] = field.pow(x, d);
  return out;
}

std::vector<SearchHit> search_slice(const FieldPtr& field, const ExponentPair& pair, const SearchSpace& space,
                                    bool every_u) {
  const Field& f = *field;
  const unsigned m = f.degree();
  const Element lo = space.u_from.value_or(1);
  const Element hi = space.u_to.value_or(f.group_order());
  const auto p1 = power_table(f, pair.first);
  const auto p2 = power_table(f, pair.second);
  const std::uint64_t g = class_modulus(m, pair.first, pair.second);

  std::vector<Element> candidates;
  if (every_u) {
    for (Element u = std::max<Element>(lo, 1); u <= hi && u < f.size(); ++u) candidates.push_back(u);
  } else {
    // One u per orbit: the smallest u of each unvisited class.
    std::vector<bool> covered(g, false);
    for (Element u = std::max<Element>(lo, 1); u <= hi && u < f.size(); ++u) {
      const std::uint64_t r = f.log(u) % g;
      if (covered[r]) continue;
      for (Element member : orbit_members(f, {pair.first, pair.second, u})) covered[f.log(member) % g] = true;
      candidates.push_back(u);
    }
  }

  std::map<BinomialTriple, SearchHit> hits;
  std::vector<Element> lut(f.size());
  for (Element u : candidates) {
    for (Element x = 0; x < f.size(); ++x) lut[x] = p1[x] ^ f.mul(u, p2[x]);
    if (!is_apn(VectorialFunction(field, lut))) continue;
    const BinomialTriple canon = canonical_orbit_representative(f, {pair.first, pair.second, u});
    auto [it, fresh] = hits.try_emplace(canon);
    if (fresh) {
      SearchHit& h = it->second;
      h.triple = canon;
      h.orbit_size = orbit_members(f, {pair.first, pair.second, u}).size();
      h.monomial_equivalent = is_monomial_equivalent(m, canon.d1, canon.d2);
      h.verified = differential_spectrum(binomial_function(field, canon)).uniformity == 2;
    }
    ++it->second.members_found;
  }
  std::vector<SearchHit> out;
  for (auto& [_, h] : hits) out.push_back(h);
  return out;
}

}  // namespace

std::vector<SearchHit> search_binomials(const FieldPtr& field, const SearchSpace& space,
                                        const SearchOptions& options) {
  const unsigned m = field->degree();
  if (space.m != 0 && space.m != m) throw FieldMismatch("search space and field disagree on m");
  const std::uint64_t n = field->group_order();

  std::vector<ExponentPair> pairs;
  if (space.pair) {
    const std::uint64_t d1 = normalize_exponent(space.pair->first, m);
    const std::uint64_t d2 = normalize_exponent(space.pair->second, m);
    if (d1 >= d2) throw Error("search slice needs d1 < d2 after reduction mod 2^m - 1");
    pairs.push_back({d1, d2});
  } else {
    for (std::uint64_t d1 = 1; d1 <= n; ++d1) {
      for (std::uint64_t d2 = d1 + 1; d2 <= n; ++d2) {
        if (is_canonical_pair(m, d1, d2)) pairs.push_back({d1, d2});
      }
    }
  }
  std::erase_if(pairs, [&](const ExponentPair& p) { return options.skip.count(p) != 0; });

  const bool every_u = space.every_u.value_or(space.pair.has_value() || space.u_from || space.u_to);
  std::vector<std::vector<SearchHit>> per_pair(pairs.size());
  std::atomic<std::size_t> next{0};
  const unsigned jobs = std::max(options.jobs, 1U);
  parallel_for(jobs, jobs, [&](std::size_t, std::size_t, unsigned) {
    for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
      per_pair[i] = search_slice(field, pairs[i], space, every_u);
      if (options.on_slice) options.on_slice(pairs[i], per_pair[i]);
    }
  });

  std::vector<SearchHit> out;
  for (auto& v : per_pair) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const SearchHit& a, const SearchHit& b) { return a.triple < b.triple; });
  return out;
}

}  // namespace apn
