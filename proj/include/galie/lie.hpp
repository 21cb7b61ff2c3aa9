#ifndef GALIE_LIE_HPP
#define GALIE_LIE_HPP

#include <string>
#include <variant>
#include <vector>

#include "galie/matrix.hpp"

namespace galie {

/// One structure-constant entry: [e_i, e_j] = value, with i < j (0-based).
struct BracketEntry {
  std::size_t i = 0, j = 0;
  Vec value;
};

/// Jacobi failure report: the offending basis triple and its Jacobiator.
struct JacobiViolation {
  std::size_t i = 0, j = 0, k = 0;
  Vec jacobiator;
  std::string describe() const;
};

/// A finite-dimensional Lie algebra given by structure constants over a
/// named basis. Construction always validates the Jacobi identity; there is
/// no raw constructor.
class LieAlgebra {
 public:
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// [e_i, e_j] for any i, j (antisymmetry is definitional).
  Vec basis_bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;
  /// ad_x as a matrix: ad(x) y = [x, y].
  Matrix ad(const Vec& x) const;

  friend std::variant<LieAlgebra, JacobiViolation> make_lie_algebra(
      Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
      std::vector<std::string> names);

 private:
  LieAlgebra() = default;
  std::size_t pair_index(std::size_t i, std::size_t j) const { return (i * dim_) + j; }

  Field field_ = Field::rationals();
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Vec> table_;  // [e_i, e_j] for i < j at i*dim+j; unused slots empty
};

/// Builds and validates. Throws std::invalid_argument on malformed input
/// (bad index, duplicate entry, field mismatch); a Jacobi failure is an
/// ordinary return variant.
std::variant<LieAlgebra, JacobiViolation> make_lie_algebra(
    Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
    std::vector<std::string> names = {});

/// make_lie_algebra that must succeed (internal constructions); throws
/// std::logic_error if Jacobi fails.
LieAlgebra require_lie_algebra(Field f, std::size_t dim,
                               const std::vector<BracketEntry>& entries,
                               std::vector<std::string> names = {});

// -- subspace invariants --
Subspace derived_subalgebra(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);
Subspace centralizer(const LieAlgebra& l, const Subspace& s);

/// Space of derivations as flattened dim x dim matrices (row-major).
Subspace derivations(const LieAlgebra& l);
/// Witness x with ad_x = d, if one exists.
std::optional<Vec> is_inner(const LieAlgebra& l, const Matrix& d);

struct StructuralReport {
  bool perfect = false;
  bool abelian = false;
  bool solvable = false;
  bool nilpotent_center_free = false;  // Z(g) = 0
  bool all_derivations_inner = false;
  bool complete = false;     // centerless and all derivations inner
  bool sympathetic = false;  // perfect and complete
  std::vector<std::size_t> derived_series_dims;  // dim g, dim g', ... until stable
};
StructuralReport structural_predicates(const LieAlgebra& l);

bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_ideal(const LieAlgebra& l, const Subspace& s);
bool is_automorphism(const LieAlgebra& l, const Matrix& m);
/// m maps a-coordinates to b-coordinates and must be a bijective Lie map.
bool is_isomorphism(const LieAlgebra& a, const LieAlgebra& b, const Matrix& m);

/// The Lie algebra induced on a bracket-closed subspace, in the subspace's
/// canonical basis. Throws if s is not closed under the bracket.
LieAlgebra restrict_to_subalgebra(const LieAlgebra& l, const Subspace& s);

/// Named algebras: "gl" (n = matrix size), "sl", "heisenberg" (dim 2n+1),
/// "l" (dim 2n+1), "aff2", "fivedim_perfect", "t" (dim 2n+2), "t_alt"
/// (opposite sign convention on the adjoined generator), "b" (dim 2n+2),
/// "glaff" (gl(n) acting on k^n).
LieAlgebra catalog(const std::string& name, std::size_t n, const Field& f);
LieAlgebra holomorph(const LieAlgebra& g);

/// The non-inner derivation of the 5-dimensional perfect algebra and the
/// twisted derivation data used by the "t"/"b" catalog entries.
Matrix fivedim_delta(const Field& f);
void heisenberg_twist(const Field& f, std::size_t n, Vec& lambda, Matrix& delta);

}  // namespace galie

#endif
