#ifndef GALIE_FORMAT_HPP
#define GALIE_FORMAT_HPP

#include <string>

#include "galie/products.hpp"

namespace galie {

/// Parse failure with a line-numbered diagnostic in what().
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line-oriented algebra files:
///   field Q | field F<p>
///   dim <n>
///   names a b c ...            (optional)
///   [i,j] = c1,...,cn          (1-based, i < j)
/// '#' starts a comment. Throws FormatError on syntax errors and
/// std::invalid_argument on Jacobi violations.
LieAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const LieAlgebra& l);

/// "basis:0,1,2" (0-based coordinate indices) or "rows:1,0,0;0,1,0".
Subspace parse_subspace_spec(const Field& f, std::size_t dim, const std::string& spec);

/// Comma-separated scalars.
Vec parse_vector(const Field& f, const std::string& csv);
/// One matrix row per line, comma-separated entries; all rows equal length.
Matrix parse_matrix(const Field& f, const std::string& text);
/// Blank-line separated square matrices of size dim.
std::vector<Matrix> parse_matrices(const Field& f, std::size_t dim, const std::string& text);

/// Extending-system files over a base algebra of dimension n:
///   gdim <n>
///   vdim <m>
///   left x g = c1,...,cn       (x ⇀ e_g; 1-based indices)
///   right x g = c1,...,cm
///   theta x y = c1,...,cn      (x < y)
///   vbracket x y = c1,...,cm   (x < y)
/// Omitted entries are zero.
ExtendingSystem parse_system(const Field& f, std::size_t n, const std::string& text);
std::string serialize_system(const ExtendingSystem& s);

/// "name" or "name:n" catalog specs, e.g. "gl:3", "heisenberg:2", "aff2".
LieAlgebra catalog_spec(const std::string& spec, const Field& f);

/// Named extensions g ⊆ h with g spanning the first coordinates:
///   heisenberg:n    h^{2n+1} inside h^{2n+3}
///   l:n             l(2n+1) inside l(2n+3)
///   aff2            k e1 inside aff(2)
///   sl2             k e3 inside sl(2)
///   t:n, t_alt:n, b:n   h^{2n+1} inside the twisted extension
///   fivedim_perfect the perfect algebra inside its derivation extension
struct ExtensionSpec {
  LieAlgebra h;
  Subspace sub;
};
ExtensionSpec extension_catalog(const std::string& spec, const Field& f);

}  // namespace galie

#endif
