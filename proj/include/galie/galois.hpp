#ifndef GALIE_GALOIS_HPP
#define GALIE_GALOIS_HPP

#include "galie/actions.hpp"
#include "galie/modp_kernel.hpp"
#include "galie/products.hpp"

namespace galie {

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would range over an infinite field.
class InfiniteFieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Galois group element in the (σ, r) parameterization: σ in GL(V),
/// r : V → g, with the corresponding automorphism Ω(σ,r)(g + x) = g + r(x) + σ(x).
struct GaloisElement {
  Matrix sigma;  // m x m
  Matrix r;      // n x m
};

struct GaloisGroup {
  Extension ext;
  std::vector<GaloisElement> elements;  // sorted lexicographically on (σ, r)
  FiniteGroupTable table;
  std::uint64_t candidates_scanned = 0;

  std::size_t order() const { return elements.size(); }
};

/// Checks (G1)-(G4) for the canonical extending system of ext; works over
/// any field.
bool is_galois_pair(const Extension& ext, const ExtendingSystem& sys, const Matrix& sigma,
                    const Matrix& r);

/// The ambient automorphism Ω(σ, r) of ext.h as a matrix.
Matrix omega(const Extension& ext, const GaloisElement& el);

/// Enumerates Gal(h/g) by solving the linear axioms (G1)-(G2) once and
/// walking the affine solution space against (G3)-(G4). Over Q this only
/// succeeds when the solution is unique.
GaloisGroup galois_group_structured(const Extension& ext, std::uint64_t budget = 1ull << 24);

/// Independent oracle: scans all p^((n+m)m) block-triangular candidates with
/// the mod-p kernels. Finite fields only.
GaloisGroup galois_group_direct(const Extension& ext, std::uint64_t budget = 1ull << 24,
                                bool parallel = true);

/// The adapted bracket table of ext reduced to u32 residues.
ModpExtensionTable adapted_modp_table(const Extension& ext);

/// The group G_g(λ, Δ) of pairs (u, g0) with λ(g) g0 = [g0, g] + (u−1)Δ(g),
/// multiplication (u, g)·(u', g') = (uu', u'g + g').
struct Codim1Element {
  Scalar u;
  Vec g0;
};
struct Codim1Group {
  std::vector<Codim1Element> elements;
  FiniteGroupTable table;
};
/// Finite fields only (the parameter u ranges over k^*).
Codim1Group codim1_group(const LieAlgebra& g, const TwistedDerivation& td,
                         std::uint64_t budget = 1ull << 24);
/// Ω(u, g0)(g + αx) = g + α g0 + uα x on g_(λ,Δ) in its natural basis.
Matrix codim1_omega(const LieAlgebra& g, const Codim1Element& el);

/// A chain g = h_0 ⊂ h_1 ⊂ ... ⊂ h_m = h of codimension-1 subalgebras.
struct RadicalChainStep {
  std::size_t galois_order = 0;
  bool metabelian = false;
  bool stable = false;  // every τ in Gal(h/g) maps h_i into itself
};
struct RadicalChainReport {
  bool chain_valid = false;
  std::string invalid_reason;
  std::vector<RadicalChainStep> steps;  // one per intermediate inclusion
  std::size_t galois_order = 0;         // |Gal(h/g)|
  bool solvable = false;                // the full Galois group
};
RadicalChainReport verify_radical_chain(const LieAlgebra& h, const std::vector<Subspace>& chain,
                                        std::uint64_t budget = 1ull << 24);

}  // namespace galie

#endif
