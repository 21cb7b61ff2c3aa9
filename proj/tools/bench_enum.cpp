// Benchmarks the serial reference scan against the OpenMP scan on the
// direct Galois enumeration kernel for h^3 inside h^5.
#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "galie/format.hpp"
#include "galie/galois.hpp"

using namespace galie;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel enumeration kernel benchmark"};
  std::uint32_t p = 5;
  std::size_t repeats = 1;
  app.add_option("--p", p, "prime field (default 5: ~9.8M candidates)");
  app.add_option("--repeats", repeats, "timing repetitions");
  CLI11_PARSE(app, argc, argv);

  Field f = Field::prime(p);
  ExtensionSpec es = extension_catalog("heisenberg:1", f);
  Extension ext = make_extension(es.h, es.sub);
  ModpExtensionTable t = adapted_modp_table(ext);
  std::uint64_t total = t.candidate_count();
  std::cout << "field F" << p << ", candidates " << total << "\n";

  double best_serial = 0, best_parallel = 0;
  std::vector<std::uint64_t> serial_hits, parallel_hits;
  for (std::size_t r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    serial_hits = modp_scan_serial(t, 0, total);
    double s = seconds(t0);
    if (r == 0 || s < best_serial) best_serial = s;

    t0 = std::chrono::steady_clock::now();
    parallel_hits = modp_scan_parallel(t, 0, total);
    s = seconds(t0);
    if (r == 0 || s < best_parallel) best_parallel = s;
  }
  bool same = serial_hits == parallel_hits;
  std::cout << "hits " << serial_hits.size() << ", outputs identical: " << (same ? "yes" : "NO")
            << "\n";
  std::cout << "serial:   " << best_serial << " s (" << total / best_serial / 1e6
            << " M candidates/s)\n";
  std::cout << "parallel: " << best_parallel << " s (" << total / best_parallel / 1e6
            << " M candidates/s)\n";
  std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
  return same ? 0 : 1;
}
