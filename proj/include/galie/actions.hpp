#ifndef GALIE_ACTIONS_HPP
#define GALIE_ACTIONS_HPP

#include "galie/groups.hpp"
#include "galie/products.hpp"

namespace galie {

/// Raised when a construction needs |G| invertible in the base field and the
/// characteristic divides the group order.
class ModularCaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group of Lie algebra automorphisms of h, closed under
/// composition; elements[table.id] is the identity matrix.
struct GroupAction {
  LieAlgebra h;
  std::vector<Matrix> elements;
  FiniteGroupTable table;

  std::size_t order() const { return elements.size(); }
  const Matrix& identity() const { return elements[table.id]; }
};

/// Closes the generated group by breadth-first multiplication. Throws
/// std::invalid_argument if a generator is not an automorphism of h and
/// std::runtime_error if the closure exceeds `cap` elements.
GroupAction close_group(const LieAlgebra& h, const std::vector<Matrix>& generators,
                        std::size_t cap = 20000);

/// The invariant subalgebra h^G.
Subspace invariants(const GroupAction& a);

/// Reynolds (trace) operator t(x) = |G|^{-1} Σ g ▷ x and its kernel.
struct ReynoldsData {
  Matrix t;
  Subspace inv;     // image of t = h^G
  Subspace kernel;  // V = Ker t, the canonical complement
};
/// Throws ModularCaseError when char(k) divides |G|.
ReynoldsData reynolds(const GroupAction& a);

/// The subspace h_γ = {y − γ ▷ y}.
Subspace twist_image(const GroupAction& a, std::size_t gamma);

/// For cyclic G = <γ>: checks Ker t = h_γ. Throws std::invalid_argument if
/// γ does not generate the group.
bool hilbert90_check(const GroupAction& a, std::size_t gamma);

/// [g ▷ z, g' ▷ z'] = 0 for all ordered pairs g ≠ g' and z, z' in h_γ.
bool gamma_abelian_check(const GroupAction& a, std::size_t gamma);

/// Artin reconstruction of h from h^G along the Reynolds retraction.
struct ArtinResult {
  Extension ext;          // h over h^G with complement Ker t
  ExtendingSystem sys;    // the canonical extending system of the trace map
  AxiomReport skew;       // (T1)-(T5) on the system
  ProductKind kind = ProductKind::General;
  bool theta_matches = false;  // θ(x,y) = |G|^{-1} Σ [γ▷x, γ▷y]
  bool phi_ok = false;         // φ(g,x) = g + x is an isomorphism
};
ArtinResult artin_reconstruct(const GroupAction& a);

/// Structure of h under a γ-abelian cyclic action: h ≅ h^G ⋉ h_γ.
struct CyclicStructureResult {
  bool cyclic = false;
  bool hilbert90 = false;       // Ker t = h_γ
  bool gamma_abelian = false;
  bool theta_trivial = false;
  bool ideal = false;           // h_γ is an ideal of h
  bool semidirect_iso = false;  // φ : h^G ⋉ h_γ → h works
};
CyclicStructureResult cyclic_structure(const GroupAction& a, std::size_t gamma);

// -- stock automorphisms used by tests and the command line tool --

/// Conjugation X ↦ M X M^{-1} as a linear map on gl(n), n*n coordinates
/// in row-major basis order e11, e12, ..., enn.
Matrix gl_conjugation(const Field& f, std::size_t n, const Matrix& m);
/// The permutation action τ ▷ e_ij = e_{τ(i)τ(j)} on gl(n); perm is 0-based.
Matrix gl_permutation(const Field& f, const std::vector<std::size_t>& perm);
/// diag(u^{-1}, u, 1) on sl(2) in the basis e1, e2, e3.
Matrix sl2_scaling(const Field& f, const Scalar& u);

}  // namespace galie

#endif
