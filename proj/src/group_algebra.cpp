#include "apn/group_algebra.hpp"

#include <algorithm>

#include "apn/error.hpp"
#include "apn/kernels.hpp"

namespace apn {

GroupAlgebraElement::GroupAlgebraElement(unsigned m) : m_(m) {
  if (m < 1 || m > 13) throw TooLarge("group algebra over GF(2^" + std::to_string(m) + ") is not supported");
  words_.assign(std::max<std::uint64_t>(1, size() / 64), 0);
}

std::uint64_t GroupAlgebraElement::weight() const { return kernels::popcount(words_); }

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t GroupAlgebraElement::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(words_[w]));
  }
  return size();
}

std::vector<std::uint64_t> GroupAlgebraElement::support() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(bits)));
    }
  }
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.m_ != m_) throw FieldMismatch("group algebra elements of different size");
  kernels::xor_into(words_, other.words_);
  return *this;
}

GroupAlgebraElement translate(const GroupAlgebraElement& e, std::uint64_t g) {
  if (g >= e.size()) throw Error("translation by an element outside U x V");
  GroupAlgebraElement out(e.m());
  kernels::active().translate_bits(out.words().data(), e.words().data(), e.words().size(), g);
  return out;
}

GroupAlgebraElement build_graph_element(const VectorialFunction& f) {
  GroupAlgebraElement g(f.m());
  for (Element x = 0; x < f.size(); ++x) g.set(GroupAlgebraElement::index(x, f(x), f.m()));
  return g;
}

namespace {

GroupAlgebraElement two_solution_pairs(const VectorialFunction& f) {
  const unsigned m = f.m();
  const std::uint32_t q = f.size();
  GroupAlgebraElement out(m);
  std::vector<std::uint32_t> count(q);
  for (Element a = 1; a < q; ++a) {
    std::fill(count.begin(), count.end(), 0);
    for (Element x = 0; x < q; ++x) ++count[f(x) ^ f(x ^ a)];
    for (Element b = 0; b < q; ++b) {
      if (count[b] > 2) throw NotApn("A_F is only defined for APN functions");
      if (count[b] == 2) out.set(GroupAlgebraElement::index(a, b, m));
    }
  }
  return out;
}

}  // namespace

GroupAlgebraElement build_aF(const VectorialFunction& f) { return two_solution_pairs(f); }

GroupAutomorphism::GroupAutomorphism(std::vector<std::uint64_t> columns) : columns_(std::move(columns)) {
  std::vector<std::uint64_t> work = columns_;
  std::size_t rank = 0;
  for (unsigned bit = 0; bit < 64 && rank < work.size(); ++bit) {
    auto it = std::find_if(work.begin() + static_cast<std::ptrdiff_t>(rank), work.end(),
                           [&](std::uint64_t c) { return (c >> bit) & 1U; });
    if (it == work.end()) continue;
    std::iter_swap(work.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t j = 0; j < work.size(); ++j) {
      if (j != rank && ((work[j] >> bit) & 1U)) work[j] ^= work[rank];
    }
    ++rank;
  }
  const std::uint64_t limit = columns_.size() >= 64 ? ~0ULL : (std::uint64_t{1} << columns_.size());
  const bool in_range = std::all_of(columns_.begin(), columns_.end(), [&](std::uint64_t c) { return c < limit; });
  if (rank != columns_.size() || !in_range) throw NotBijective("matrix does not define an automorphism");
}

GroupAutomorphism GroupAutomorphism::from_linear_maps(const LinearMap& l1, const LinearMap& l2) {
  const unsigned m = l1.m();
  std::vector<std::uint64_t> cols(2 * m);
  for (unsigned i = 0; i < m; ++i) {
    cols[i] = l2(1U << i);                                  // V coordinates are the low bits
    cols[m + i] = static_cast<std::uint64_t>(l1(1U << i)) << m;  // U coordinates are the high bits
  }
  return GroupAutomorphism(std::move(cols));
}

GroupAutomorphism GroupAutomorphism::random(unsigned m, std::mt19937_64& rng) {
  const unsigned n = 2 * m;
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << n) - 1);
  for (;;) {
    std::vector<std::uint64_t> cols(n);
    for (auto& c : cols) c = dist(rng);
    try {
      return GroupAutomorphism(std::move(cols));
    } catch (const NotBijective&) {
    }
  }
}

std::uint64_t GroupAutomorphism::operator()(std::uint64_t g) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; g != 0; ++i, g >>= 1) {
    if (g & 1U) out ^= columns_[i];
  }
  return out;
}

GroupAlgebraElement apply_automorphism(const GroupAlgebraElement& e, const GroupAutomorphism& aut) {
  if (aut.group_rank() != e.group_rank()) throw FieldMismatch("automorphism rank differs from the group rank");
  GroupAlgebraElement out(e.m());
  for (std::uint64_t g : e.support()) out.set(aut(g));
  return out;
}

}  // namespace apn
