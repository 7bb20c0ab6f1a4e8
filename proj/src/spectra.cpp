#include "apn/spectra.hpp"

#include <atomic>
#include <cstdlib>

#include "apn/error.hpp"
#include "apn/kernels.hpp"
#include "apn/parallel.hpp"

namespace apn {

DifferentialSpectrum differential_spectrum(const VectorialFunction& f, unsigned jobs) {
  const std::uint32_t q = f.size();
  const auto lut = f.lut();
  // Slots 1 .. q-1 of a; each worker fills a private histogram indexed by delta.
  std::vector<std::vector<std::uint64_t>> partial(std::max(jobs, 1U));
  parallel_for(q - 1, jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    std::vector<std::uint64_t> hist(q + 1, 0);
    std::vector<std::uint32_t> count(q);
    for (std::size_t slot = begin; slot < end; ++slot) {
      const std::uint32_t a = static_cast<std::uint32_t>(slot) + 1;
      std::fill(count.begin(), count.end(), 0);
      for (std::uint32_t x = 0; x < q; ++x) ++count[lut[x] ^ lut[x ^ a]];
      for (std::uint32_t c : count) ++hist[c];
    }
    partial[w] = std::move(hist);
  });

  std::vector<std::uint64_t> hist(q + 1, 0);
  hist[0] = q - 1;  // a = 0, b != 0
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < p.size(); ++i) hist[i] += p[i];
  }
  DifferentialSpectrum out;
  for (std::uint32_t d = 0; d <= q; ++d) {
    if (hist[d] == 0) continue;
    out.histogram[d] = hist[d];
    out.uniformity = d;
  }
  return out;
}

bool is_apn(const VectorialFunction& f, unsigned jobs) {
  const std::uint32_t q = f.size();
  const auto lut = f.lut();
  std::atomic<bool> failed{false};
  parallel_for(q - 1, jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    // seen[b] == a marks b as already produced by derivative a.
    std::vector<std::uint32_t> seen(q, 0);
    for (std::size_t slot = begin; slot < end; ++slot) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::uint32_t a = static_cast<std::uint32_t>(slot) + 1;
      const std::uint32_t top = 1U << (31 - __builtin_clz(a));
      for (std::uint32_t x = 0; x < q; ++x) {
        if (x & top) continue;  // x and x ^ a give the same b
        const std::uint32_t b = lut[x] ^ lut[x ^ a];
        if (seen[b] == a) {
          failed.store(true, std::memory_order_relaxed);
          return;
        }
        seen[b] = a;
      }
    }
  });
  return !failed.load();
}

namespace {

void fill_component(const VectorialFunction& f, Element beta, std::vector<std::int32_t>& s) {
  const Field& field = f.field();
  const std::uint32_t mask = field.trace_mask();
  for (Element x = 0; x < f.size(); ++x) {
    s[x] = (__builtin_parity(field.mul(beta, f(x)) & mask) != 0) ? -1 : 1;
  }
}

}  // namespace

WalshSpectrum walsh_spectrum(const VectorialFunction& f, unsigned jobs) {
  const std::uint32_t q = f.size();
  // Character sums lie in [-q, q]; count them with offset q.
  std::vector<std::vector<std::uint64_t>> partial(std::max(jobs, 1U));
  std::vector<std::uint64_t> worker_max(std::max(jobs, 1U), 0);
  parallel_for(q, jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    std::vector<std::uint64_t> hist(2 * std::size_t{q} + 1, 0);
    std::vector<std::int32_t> s(q);
    std::uint64_t lin = 0;
    for (std::size_t beta = begin; beta < end; ++beta) {
      fill_component(f, static_cast<Element>(beta), s);
      kernels::fwht(s);
      for (std::uint32_t i = 0; i < q; ++i) {
        ++hist[static_cast<std::size_t>(s[i] + static_cast<std::int32_t>(q))];
        if (beta != 0 || i != 0) lin = std::max<std::uint64_t>(lin, static_cast<std::uint64_t>(std::abs(s[i])));
      }
    }
    partial[w] = std::move(hist);
    worker_max[w] = lin;
  });

  WalshSpectrum out;
  std::vector<std::uint64_t> hist(2 * std::size_t{q} + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < p.size(); ++i) hist[i] += p[i];
  }
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i] == 0) continue;
    const std::int64_t v = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(q);
    out.values[v] += hist[i];
    out.abs_values[static_cast<std::uint64_t>(std::abs(v))] += hist[i];
  }
  for (std::uint64_t l : worker_max) out.linearity = std::max(out.linearity, l);
  return out;
}

std::vector<std::int32_t> walsh_coefficients(const VectorialFunction& f, Element beta) {
  const Field& field = f.field();
  std::vector<std::int32_t> s(f.size());
  fill_component(f, beta, s);
  kernels::fwht(s);
  // FWHT index w pairs with alpha where w_i = tr(alpha * x^i).
  std::vector<std::int32_t> out(f.size());
  for (Element alpha = 0; alpha < f.size(); ++alpha) {
    std::uint32_t w = 0;
    for (unsigned i = 0; i < field.degree(); ++i) w |= field.trace(field.mul(alpha, 1U << i)) << i;
    out[alpha] = s[w];
  }
  return out;
}

bool is_ab(const VectorialFunction& f, unsigned jobs) {
  const unsigned m = f.m();
  if (m % 2 == 0) return false;
  return walsh_spectrum(f, jobs).linearity == (std::uint64_t{1} << ((m + 1) / 2));
}

bool is_crooked(const VectorialFunction& f) {
  const std::uint32_t q = f.size();
  const unsigned m = f.m();
  std::vector<std::uint32_t> seen(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    const Element h0 = f(0) ^ f(a);
    std::uint32_t distinct = 0;
    // Row-reduced basis of span{h + h0 : h in H_a}, indexed by leading bit.
    std::uint32_t basis[32] = {};
    unsigned rank = 0;
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t h = f(x) ^ f(x ^ a);
      if (seen[h] == a) continue;
      seen[h] = a;
      ++distinct;
      std::uint32_t v = h ^ h0;
      for (int bit = static_cast<int>(m) - 1; bit >= 0 && v != 0; --bit) {
        if (!((v >> bit) & 1U)) continue;
        if (basis[bit] == 0) {
          basis[bit] = v;
          ++rank;
          v = 0;
        } else {
          v ^= basis[bit];
        }
      }
    }
    if (distinct != q / 2 || rank != m - 1) return false;
  }
  return true;
}

bool spectra_equal(const VectorialFunction& f1, const VectorialFunction& f2, unsigned jobs) {
  if (f1.m() != f2.m()) throw FieldMismatch("spectra compared across different extension degrees");
  if (differential_spectrum(f1, jobs) != differential_spectrum(f2, jobs)) return false;
  return walsh_spectrum(f1, jobs).abs_values == walsh_spectrum(f2, jobs).abs_values;
}

}  // namespace apn
