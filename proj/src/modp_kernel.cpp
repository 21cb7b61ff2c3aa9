#include "galie/modp_kernel.hpp"

#include <limits>

namespace galie {

std::uint64_t ModpExtensionTable::candidate_count() const {
  const std::size_t digits = (n + m) * m;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p)
      return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

namespace {

// determinant-based invertibility test mod p, destroys its argument
bool invertible_mod_p(std::uint32_t* a, std::size_t m, std::uint32_t p) {
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv * m + col] == 0) ++piv;
    if (piv == m) return false;
    if (piv != col)
      for (std::size_t j = 0; j < m; ++j) std::swap(a[piv * m + j], a[col * m + j]);
    // eliminate below without normalizing: row_i -= (a_ic / a_cc) row_c
    std::uint64_t pivval = a[col * m + col];
    for (std::size_t i = col + 1; i < m; ++i) {
      if (a[i * m + col] == 0) continue;
      // scale row i by pivval then subtract a_ic * row_c; keeps det nonzero-ness
      std::uint64_t f = a[i * m + col];
      for (std::size_t j = col; j < m; ++j) {
        std::uint64_t v = (static_cast<std::uint64_t>(a[i * m + j]) * pivval) % p;
        std::uint64_t s = (f * a[col * m + j]) % p;
        a[i * m + j] = static_cast<std::uint32_t>((v + p - s) % p);
      }
    }
  }
  return true;
}

}  // namespace

bool modp_candidate_ok(const ModpExtensionTable& t, std::uint64_t cand) {
  const std::uint32_t p = t.p;
  const std::size_t n = t.n, m = t.m, d = n + m;
  std::uint32_t digits[64];
  const std::size_t ndigits = d * m;
  for (std::size_t i = 0; i < ndigits; ++i) {
    digits[i] = static_cast<std::uint32_t>(cand % p);
    cand /= p;
  }
  const std::uint32_t* S = digits;          // S[y][x] at y*m + x
  const std::uint32_t* R = digits + m * m;  // R[i][x] at i*m + x
  std::uint32_t scopy[64];
  for (std::size_t i = 0; i < m * m; ++i) scopy[i] = S[i];
  if (!invertible_mod_p(scopy, m, p)) return false;

  auto bra = [&](std::size_t i, std::size_t j) { return &t.bracket[(i * d + j) * d]; };
  // tau column for index n+x
  auto tau = [&](std::size_t x, std::size_t k) -> std::uint32_t {
    return k < n ? R[k * m + x] : S[(k - n) * m + x];
  };
  // apply tau to a vector w (dim d): out[k] = w[k] for the g block plus image
  // of the V block
  std::uint32_t lhs[64], rhs[64];
  auto apply_tau = [&](const std::uint32_t* w, std::uint32_t* out) {
    for (std::size_t k = 0; k < d; ++k) out[k] = k < n ? w[k] : 0;
    for (std::size_t x = 0; x < m; ++x) {
      std::uint64_t wx = w[n + x];
      if (wx == 0) continue;
      for (std::size_t k = 0; k < d; ++k)
        out[k] = static_cast<std::uint32_t>((out[k] + wx * tau(x, k)) % p);
    }
  };

  // pairs (g_i, v_x): tau([e_i, e_{n+x}]) == [e_i, tau(e_{n+x})]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x) {
      apply_tau(bra(i, n + x), lhs);
      for (std::size_t k = 0; k < d; ++k) rhs[k] = 0;
      for (std::size_t l = 0; l < d; ++l) {
        std::uint64_t c = tau(x, l);
        if (c == 0) continue;
        const std::uint32_t* b = bra(i, l);
        for (std::size_t k = 0; k < d; ++k)
          rhs[k] = static_cast<std::uint32_t>((rhs[k] + c * b[k]) % p);
      }
      for (std::size_t k = 0; k < d; ++k)
        if (lhs[k] != rhs[k]) return false;
    }

  // pairs (v_x, v_y), x < y
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      apply_tau(bra(n + x, n + y), lhs);
      for (std::size_t k = 0; k < d; ++k) rhs[k] = 0;
      for (std::size_t a = 0; a < d; ++a) {
        std::uint64_t ca = tau(x, a);
        if (ca == 0) continue;
        for (std::size_t b = 0; b < d; ++b) {
          if (a == b) continue;
          std::uint64_t cb = tau(y, b);
          if (cb == 0) continue;
          std::uint64_t c = (ca * cb) % p;
          const std::uint32_t* br = bra(a, b);
          for (std::size_t k = 0; k < d; ++k)
            rhs[k] = static_cast<std::uint32_t>((rhs[k] + c * br[k]) % p);
        }
      }
      for (std::size_t k = 0; k < d; ++k)
        if (lhs[k] != rhs[k]) return false;
    }
  return true;
}

std::vector<std::uint64_t> modp_scan_serial(const ModpExtensionTable& t, std::uint64_t begin,
                                            std::uint64_t end) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t c = begin; c < end; ++c)
    if (modp_candidate_ok(t, c)) hits.push_back(c);
  return hits;
}

std::vector<std::uint64_t> modp_scan_parallel(const ModpExtensionTable& t, std::uint64_t begin,
                                              std::uint64_t end) {
#ifdef GALIE_HAVE_OPENMP
  const std::uint64_t total = end - begin;
  const std::uint64_t nblocks = total < 4096 ? 1 : 512;
  const std::uint64_t step = (total + nblocks - 1) / nblocks;
  std::vector<std::vector<std::uint64_t>> blocks(nblocks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    std::uint64_t lo = begin + static_cast<std::uint64_t>(b) * step;
    std::uint64_t hi = lo + step < end ? lo + step : end;
    if (lo < hi) blocks[b] = modp_scan_serial(t, lo, hi);
  }
  std::vector<std::uint64_t> hits;
  for (auto& blk : blocks) hits.insert(hits.end(), blk.begin(), blk.end());
  return hits;
#else
  return modp_scan_serial(t, begin, end);
#endif
}

}  // namespace galie
