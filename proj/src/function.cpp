#include "apn/function.hpp"

#include <algorithm>

#include "apn/error.hpp"
#include "apn/kernels.hpp"

namespace apn {

VectorialFunction::VectorialFunction(FieldPtr field, std::vector<Element> lut,
                                     std::optional<std::vector<Term>> source)
    : field_(std::move(field)), lut_(std::move(lut)), source_(std::move(source)) {
  if (!field_) throw Error("function needs a field");
  if (lut_.size() != field_->size()) {
    throw Error("lookup table has " + std::to_string(lut_.size()) + " entries, expected " +
                std::to_string(field_->size()));
  }
  for (Element v : lut_) {
    if (!field_->contains(v)) throw Error("lookup table entry " + std::to_string(v) + " is not a field element");
  }
}

VectorialFunction VectorialFunction::from_polynomial(FieldPtr field, std::span<const Term> terms) {
  const Field& f = *field;
  std::vector<Element> lut(f.size(), 0);
  for (const Term& t : terms) {
    if (!f.contains(t.coefficient)) throw Error("coefficient is not a field element");
    if (t.coefficient == 0) continue;
    for (Element x = 0; x < f.size(); ++x) lut[x] ^= f.mul(t.coefficient, f.pow(x, t.exponent));
  }
  return VectorialFunction(std::move(field), std::move(lut), std::vector<Term>(terms.begin(), terms.end()));
}

VectorialFunction VectorialFunction::power(FieldPtr field, std::uint64_t d) {
  const Term term{d, 1};
  return from_polynomial(std::move(field), std::span<const Term>(&term, 1));
}

bool VectorialFunction::is_bijective() const {
  std::vector<bool> seen(lut_.size(), false);
  for (Element v : lut_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::uint32_t> Anf::monomials(unsigned coordinate) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < coefficients.size(); ++u) {
    if ((coefficients[u] >> coordinate) & 1U) out.push_back(u);
  }
  return out;
}

std::vector<std::uint32_t> moebius_transform(std::span<const std::uint32_t> table) {
  std::vector<std::uint32_t> out(table.begin(), table.end());
  kernels::moebius(out);
  return out;
}

Anf anf(const VectorialFunction& f) {
  return Anf{f.m(), moebius_transform(f.lut())};
}

unsigned algebraic_degree(const VectorialFunction& f) {
  const Anf a = anf(f);
  unsigned degree = 0;
  for (std::uint32_t u = 0; u < a.coefficients.size(); ++u) {
    if (a.coefficients[u] != 0) degree = std::max(degree, binary_weight(u));
  }
  return degree;
}

LinearMap::LinearMap(unsigned m, std::vector<Element> lut) : m_(m), lut_(std::move(lut)) {
  if (lut_.size() != (std::size_t{1} << m)) throw NotLinear("linear map table has the wrong size");
  // Exhaustive linearity: L(x) must equal the XOR of the images of x's bits.
  if (lut_[0] != 0) throw NotLinear("linear map does not fix 0");
  for (std::uint32_t x = 1; x < lut_.size(); ++x) {
    const std::uint32_t low = x & (~x + 1);
    if (lut_[x] != (lut_[low] ^ lut_[x ^ low])) throw NotLinear("map is not F2-linear");
  }
  std::vector<bool> seen(lut_.size(), false);
  for (Element v : lut_) {
    if (v >= lut_.size() || seen[v]) throw NotBijective("linear map is not a bijection");
    seen[v] = true;
  }
}

LinearMap LinearMap::identity(unsigned m) {
  std::vector<Element> lut(std::size_t{1} << m);
  for (std::uint32_t x = 0; x < lut.size(); ++x) lut[x] = x;
  return LinearMap(m, std::move(lut));
}

LinearMap LinearMap::from_columns(std::span<const Element> columns) {
  const unsigned m = static_cast<unsigned>(columns.size());
  std::vector<Element> lut(std::size_t{1} << m, 0);
  for (std::uint32_t x = 1; x < lut.size(); ++x) {
    const unsigned bit = static_cast<unsigned>(__builtin_ctz(x));
    lut[x] = lut[x & (x - 1)] ^ columns[bit];
  }
  return LinearMap(m, std::move(lut));
}

LinearMap LinearMap::scaling(const Field& field, Element c) {
  if (c == 0) throw NotBijective("scaling by zero");
  std::vector<Element> lut(field.size());
  for (Element x = 0; x < field.size(); ++x) lut[x] = field.mul(c, x);
  return LinearMap(field.degree(), std::move(lut));
}

namespace {

bool full_rank(std::vector<Element> cols) {
  unsigned rank = 0;
  for (unsigned bit = 0; bit < 32 && rank < cols.size(); ++bit) {
    auto it = std::find_if(cols.begin() + rank, cols.end(), [&](Element c) { return (c >> bit) & 1U; });
    if (it == cols.end()) continue;
    std::iter_swap(cols.begin() + rank, it);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j != rank && ((cols[j] >> bit) & 1U)) cols[j] ^= cols[rank];
    }
    ++rank;
  }
  return rank == cols.size();
}

}  // namespace

LinearMap LinearMap::random(unsigned m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, (1U << m) - 1);
  std::vector<Element> cols(m);
  do {
    for (auto& c : cols) c = dist(rng);
  } while (!full_rank(cols));
  return from_columns(cols);
}

VectorialFunction add_functions(const VectorialFunction& f1, const VectorialFunction& f2) {
  if (!(f1.field() == f2.field())) throw FieldMismatch("functions are defined over different fields");
  std::vector<Element> lut(f1.size());
  for (Element x = 0; x < f1.size(); ++x) lut[x] = f1(x) ^ f2(x);
  return VectorialFunction(f1.field_ptr(), std::move(lut));
}

VectorialFunction compose_with_linear(const VectorialFunction& f, const LinearMap& l1,
                                      const LinearMap& l2, Element a, Element b) {
  if (l1.m() != f.m() || l2.m() != f.m()) throw FieldMismatch("linear map dimension differs from the field degree");
  if (!f.field().contains(a) || !f.field().contains(b)) throw Error("translation is not a field element");
  std::vector<Element> lut(f.size());
  for (Element x = 0; x < f.size(); ++x) lut[x] = l2(f(l1(x ^ a))) ^ b;
  return VectorialFunction(f.field_ptr(), std::move(lut));
}

}  // namespace apn
