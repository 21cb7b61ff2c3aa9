#ifndef GALIE_PRODUCTS_HPP
#define GALIE_PRODUCTS_HPP

#include "galie/lie.hpp"

namespace galie {

/// An extending system of g (dim n) through a space V (dim m): two actions,
/// a cocycle and a quasi-bracket, stored on basis elements.
///   left[x*n + i]  = x ⇀ e_i   in k^n
///   right[x*n + i] = x ↼ e_i   in k^m
///   theta(x, y), vbr(x, y) stored for x < y only; evaluators antisymmetrize.
struct ExtendingSystem {
  Field field = Field::rationals();
  std::size_t n = 0, m = 0;
  std::vector<Vec> left;
  std::vector<Vec> right;
  std::vector<Vec> theta;  // index x*m + y, x < y
  std::vector<Vec> vbr;    // index x*m + y, x < y

  static ExtendingSystem zero(Field f, std::size_t n, std::size_t m);

  Vec theta_basis(std::size_t x, std::size_t y) const;
  Vec vbr_basis(std::size_t x, std::size_t y) const;

  // bilinear evaluators on coordinate vectors
  Vec lact(const Vec& x, const Vec& g) const;      // x ⇀ g, in k^n
  Vec ract(const Vec& x, const Vec& g) const;      // x ↼ g, in k^m
  Vec cocycle(const Vec& x, const Vec& y) const;   // θ(x, y), in k^n
  Vec vbracket(const Vec& x, const Vec& y) const;  // {x, y}, in k^m

  bool left_trivial() const;
  bool right_trivial() const;
  bool theta_trivial() const;
};

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample, when ok is false
};

struct AxiomReport {
  std::vector<AxiomCheck> axioms;
  bool all_ok() const;
  std::string first_failure() const;
};

/// The six compatibility axioms of an extending system.
AxiomReport check_extending_axioms(const LieAlgebra& g, const ExtendingSystem& s);
/// The five skew-crossed-product axioms; requires ⇀ = 0 (reported as a
/// failed precondition otherwise).
AxiomReport check_skew_axioms(const LieAlgebra& g, const ExtendingSystem& s);

enum class ProductKind { General, Skew, Crossed, MatchedPair, Semidirect };
ProductKind classify(const ExtendingSystem& s);
std::string to_string(ProductKind k);

/// g ⋉ V with bracket
///   [(a,x),(b,y)] = ([a,b] + x⇀b − y⇀a + θ(x,y), {x,y} + x↼b − y↼a).
/// Basis order: g basis first, then V. Throws std::invalid_argument naming
/// the first failed axiom when the system is not an extending system.
LieAlgebra unified_product(const LieAlgebra& g, const ExtendingSystem& s,
                           std::vector<std::string> v_names = {});
/// unified_product restricted to ⇀ = 0 systems.
LieAlgebra skew_crossed_product(const LieAlgebra& g, const ExtendingSystem& s,
                                std::vector<std::string> v_names = {});
/// unified_product restricted to ⇀ = 0, θ = 0 systems.
LieAlgebra semidirect_product(const LieAlgebra& g, const ExtendingSystem& s,
                              std::vector<std::string> v_names = {});

/// An extension g ⊆ h in an adapted basis: the columns of A are the
/// canonical basis of g followed by a chosen complement V; p is the
/// projection onto g along V in ambient coordinates.
struct Extension {
  LieAlgebra h;
  Subspace g_sub;
  LieAlgebra g;    // restriction of h to g_sub, in g_sub's canonical basis
  Matrix v_rows;   // m x dim(h)
  Matrix A, A_inv; // adapted basis change, dim(h) x dim(h)
  Matrix proj;     // ambient projection with image g_sub and kernel V

  std::size_t n() const { return g_sub.dim(); }
  std::size_t m() const { return v_rows.rows(); }
  Vec to_adapted(const Vec& ambient) const { return A_inv.apply(ambient); }
  Vec to_ambient(const Vec& adapted) const { return A.apply(adapted); }
};

/// Chooses the complement greedily from coordinate vectors.
Extension make_extension(const LieAlgebra& h, const Subspace& g_sub);
/// Uses the given complement rows (must complete g_sub to a basis).
Extension make_extension(const LieAlgebra& h, const Subspace& g_sub, const Matrix& v_rows);

/// The canonical extending system of p: x⇀g = p([x,g]), x↼g = [x,g] − p([x,g]),
/// θ(x,y) = p([x,y]), {x,y} = [x,y] − p([x,y]).
ExtendingSystem canonical_extending_system(const Extension& ext);

/// Verifies that φ(g, x) = g + x is an isomorphism from the unified product
/// of the canonical extending system back onto h.
bool phi_iso_check(const Extension& ext);

/// A twisted derivation (λ, Δ): λ([g,h]) = 0 and
/// Δ([g,h]) = [Δg,h] + [g,Δh] + λ(g)Δ(h) − λ(h)Δ(g).
struct TwistedDerivation {
  Vec lambda;    // k^n functional on basis
  Matrix delta;  // n x n
};
bool twisted_derivation_check(const LieAlgebra& g, const TwistedDerivation& td);

/// The codimension-1 algebra g_(λ,Δ): the unified product of the system
/// x↼g = λ(g)x, x⇀g = Δ(g), θ = 0, {,} = 0. Throws std::invalid_argument
/// if (λ, Δ) is not a twisted derivation.
LieAlgebra single_extension(const LieAlgebra& g, const TwistedDerivation& td,
                            const std::string& v_name = "x");

}  // namespace galie

#endif
