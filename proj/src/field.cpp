#include "apn/field.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "apn/error.hpp"

namespace apn {
namespace {

constexpr std::array<std::uint32_t, 17> kDefaultPolynomials = {
    0,       0,
    0x7,     // x^2+x+1
    0xB,     // x^3+x+1
    0x13,    // x^4+x+1
    0x25,    // x^5+x^2+1
    0x43,    // x^6+x+1
    0x83,    // x^7+x+1
    0x11D,   // x^8+x^4+x^3+x^2+1
    0x211,   // x^9+x^4+1
    0x409,   // x^10+x^3+1
    0x805,   // x^11+x^2+1
    0x1053,  // x^12+x^6+x^4+x+1
    0x201B,  // x^13+x^4+x^3+x+1
    0x4443,  // x^14+x^10+x^6+x+1
    0x8003,  // x^15+x+1
    0x1100B  // x^16+x^12+x^3+x+1
};

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = poly_degree(p);
  for (int d = poly_degree(a); d >= dp; d = poly_degree(a)) a ^= p << (d - dp);
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = 0;
  for (a = poly_mod(a, p); b != 0; b >>= 1) {
    if (b & 1) r ^= a;
    a = poly_mod(a << 1, p);
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::string hex(std::uint32_t v) {
  std::ostringstream s;
  s << "0x" << std::hex << v;
  return s.str();
}

}  // namespace

std::uint32_t default_polynomial(unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw UnsupportedDegree("extension degree " + std::to_string(m) + " outside [2, 16]");
  }
  return kDefaultPolynomials[m];
}

// Rabin's test: p of degree m is irreducible iff x^(2^m) = x mod p and
// gcd(x^(2^(m/q)) - x, p) = 1 for every prime q dividing m.
bool is_irreducible(std::uint32_t poly) {
  const int m = poly_degree(poly);
  if (m < 1) return false;
  if ((poly & 1U) == 0) return m == 1;
  auto frobenius_power = [&](int k) {
    std::uint64_t t = 2;  // x
    for (int i = 0; i < k; ++i) t = poly_mulmod(t, t, poly);
    return t;
  };
  if (frobenius_power(m) != 2) return false;
  for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(m))) {
    const std::uint64_t t = frobenius_power(m / static_cast<int>(q)) ^ 2;
    if (poly_gcd(poly, t) != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(unsigned m, std::optional<std::uint32_t> poly) : m_(m), poly_(0) {
  poly_ = poly.value_or(default_polynomial(m));
  if (poly_degree(poly_) != static_cast<int>(m)) {
    throw RejectedPolynomial("polynomial " + hex(poly_) + " does not have degree " + std::to_string(m));
  }
  if (!is_irreducible(poly_)) {
    throw RejectedPolynomial("polynomial " + hex(poly_) + " is reducible over F2");
  }
  factors_ = prime_factors(group_order());

  // Smallest element of full order serves as the log base.
  const std::uint64_t n = group_order();
  auto slow_pow = [&](Element a, std::uint64_t e) {
    Element r = 1;
    for (; e != 0; e >>= 1) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
    }
    return r;
  };
  for (Element g = 2; g < size(); ++g) {
    bool primitive = true;
    for (std::uint64_t q : factors_) {
      if (slow_pow(g, n / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  log_.assign(size(), 0);
  antilog_.assign(2 * n, 0);
  Element v = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    antilog_[k] = v;
    antilog_[k + n] = v;
    log_[v] = static_cast<std::uint32_t>(k);
    v = slow_mul(v, generator_);
  }

  for (unsigned i = 0; i < m; ++i) {
    Element a = 1U << i;
    Element t = 0;
    for (unsigned j = 0; j < m; ++j) {
      t ^= a;
      a = mul(a, a);
    }
    if (t & 1U) trace_mask_ |= 1U << i;
  }
}

Element Field::slow_mul(Element a, Element b) const {
  return static_cast<Element>(poly_mulmod(a, b, poly_));
}

Element Field::inv(Element a) const {
  if (a == 0) throw ZeroHasNoOrder("zero has no inverse");
  return antilog_[(group_order() - log_[a]) % group_order()];
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t n = group_order();
  return antilog_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
}

std::uint64_t Field::element_order(Element a) const {
  if (a == 0) throw ZeroHasNoOrder("zero has no multiplicative order");
  std::uint64_t order = group_order();
  for (std::uint64_t q : factors_) {
    while (order % q == 0 && pow(a, order / q) == 1) order /= q;
  }
  return order;
}

bool Field::in_subfield(Element a, unsigned k) const {
  if (k == 0 || m_ % k != 0) {
    throw NotASubfield("GF(2^" + std::to_string(k) + ") is not a subfield of GF(2^" + std::to_string(m_) + ")");
  }
  Element r = a;
  for (unsigned i = 0; i < k; ++i) r = mul(r, r);
  return r == a;
}

}  // namespace apn
