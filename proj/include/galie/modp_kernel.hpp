#ifndef GALIE_MODP_KERNEL_HPP
#define GALIE_MODP_KERNEL_HPP

#include <cstdint>
#include <vector>

namespace galie {

/// The bracket table of an extension in its adapted basis, reduced to u32
/// residues for fast scanning: g spans the first n coordinates, the
/// complement V the last m. bracket[(i*d + j)*d + k] is [e_i, e_j]_k with
/// d = n + m, stored for all ordered pairs (antisymmetry included).
struct ModpExtensionTable {
  std::uint32_t p = 0;
  std::size_t n = 0, m = 0;
  std::vector<std::uint32_t> bracket;

  std::size_t dim() const { return n + m; }
  std::uint64_t candidate_count() const;  // p^((n+m)*m), saturates at UINT64_MAX
};

/// Candidate encoding: base-p digits, least significant first. The first
/// m*m digits are S row-major (S[y][x] at y*m + x), the next n*m digits are
/// R row-major (R[i][x] at m*m + i*m + x). The candidate automorphism fixes
/// g pointwise and maps e_{n+x} to sum_i R[i][x] e_i + sum_y S[y][x] e_{n+y}.
bool modp_candidate_ok(const ModpExtensionTable& t, std::uint64_t cand);

/// Scans [begin, end) and returns accepted candidates in increasing order.
std::vector<std::uint64_t> modp_scan_serial(const ModpExtensionTable& t, std::uint64_t begin,
                                            std::uint64_t end);
/// OpenMP variant; bitwise-identical output to the serial scan.
std::vector<std::uint64_t> modp_scan_parallel(const ModpExtensionTable& t, std::uint64_t begin,
                                              std::uint64_t end);

}  // namespace galie

#endif
