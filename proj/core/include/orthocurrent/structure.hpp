#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orthocurrent/coeff_algebra.hpp"
#include "orthocurrent/liealg.hpp"

namespace orthocurrent {

using DiagonalEntries = std::array<FieldElement, 4>;

/// One named re-verification result.
struct Check {
  std::string name;
  bool ok = false;
};

bool all_ok(const std::vector<Check>& checks);

/// Comparison of M with [L(f|W), L(f|W)] (x) F[X]/(X^2 - D) for one W.
///
/// `change` has rows v1..v4: an orthogonal basis of V whose first three
/// rows span W. The explicit basis is built for the diagonal values in that
/// basis, transported back to the original coordinates, and h1..h3 are
/// divided by det(change) so that the coefficient algebra uses the original
/// D rather than D * det(change)^2.
struct TheoremTrial {
  Subspace w;
  Matrix change;
  DiagonalEntries orthogonal_diagonal;
  FieldElement change_det;
  std::size_t dim_lw = 0;
  std::size_t dim_lw_derived = 0;
  /// Coordinates in M of f1, f2, f3, h1, h2, h3 (h's rescaled as above).
  std::vector<Vector> basis_in_m;
  /// Structure constants of [L(f|W), L(f|W)] on its f1, f2, f3.
  StructureConstants w_table;
  StructureConstants m_table;
  StructureConstants tensor_table;
  bool equal = false;
};

struct TheoremReport {
  Field field;
  DiagonalEntries entries;
  FieldElement discriminant;
  std::size_t dim_l = 0;
  std::size_t dim_m = 0;
  bool basis_spans_m = false;
  /// W = span(e1, e2, e3); the table is the one printed with the theorem.
  TheoremTrial standard;
  /// A random 3-dimensional W with nondegenerate restriction.
  TheoremTrial random_w;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  bool equal = false;
};

/// Throws ZeroEntry, or NondegenerateWRequired if 32 random subspaces all
/// fail to carry a nondegenerate restriction.
TheoremReport verify_theorem(const Field& field, const DiagonalEntries& entries, std::uint64_t seed = 0);

/// One step of a simplicity argument.
struct InferenceStep {
  std::string rule;
  std::string statement;
};

/// Evidence that a 3-dimensional algebra over K is simple over a subfield.
struct SimplicityCertificate {
  Field extension;
  Field base;
  std::string embedding;
  StructureConstants table;
  /// Coordinates of [e2,e3], [e3,e1], [e1,e2]; they span K^3.
  std::vector<Vector> perfectness_witness;
  std::vector<InferenceStep> steps;
};

/// perfect over K => simple over K (dimension 3) => simple over the base
/// (a nonzero F-ideal I has K-span J = L, so L = [L, J] = [L, I] lies in I).
/// Throws NotPerfect when the algebra is not perfect; throws
/// DescriptorMismatch unless K is base[sqrt D] or F_p(u) over F_p(t) via t = u^p.
SimplicityCertificate certify_simple_via_descent(const LieAlgebra& over_k, const Field& base);
std::vector<Check> check_simplicity_certificate(const SimplicityCertificate& cert);

enum class CertificateCase { TwoSimpleIdeals, SemidirectNR, SimpleByDescent };

std::string_view case_name(CertificateCase c);

struct TwoSimpleIdeals {
  Subspace first;
  Subspace second;
};

struct SemidirectNR {
  Subspace n;
  Subspace r;
};

struct SimpleByDescent {
  /// [L(f|W), L(f|W)] on f1, f2, f3 over F.
  StructureConstants w_table;
  SimplicityCertificate descent;
};

/// Witnesses are subspaces of M in the coordinates of M's canonical basis,
/// i.e. the canonical basis of the derived algebra of the skew-adjoint
/// algebra of diag(a, b, c, d).
struct DecompositionCertificate {
  Field field;
  DiagonalEntries form;
  FieldElement discriminant;
  std::variant<TwoSimpleIdeals, SemidirectNR, SimpleByDescent> evidence;
  std::vector<Check> checks;

  CertificateCase which() const noexcept { return static_cast<CertificateCase>(evidence.index()); }
};

DecompositionCertificate classify(const Field& field, const DiagonalEntries& entries);

/// Re-verifies a certificate from scratch, rebuilding M from the form and
/// checking every witness with elementary operations.
std::vector<Check> check_certificate(const DecompositionCertificate& cert);

struct CounterexampleReport {
  unsigned p = 2;
  Field base;       // F_p(t)
  Field extension;  // F_p(u), t = u^p
  FieldElement s;   // t
  bool s_not_pth_power = false;
  std::size_t l_dim = 0;
  bool l_perfect = false;
  std::size_t p_dim_over_base = 0;
  std::size_t p_dim_over_extension = 0;
  std::size_t tensor_dim = 0;
  /// Abelian ideal span{f_i (x) (x - u)^{p-1}} of P (x) K.
  Subspace radical;
  bool radical_ideal = false;
  bool radical_abelian = false;
  std::size_t quotient_dim = 0;
  bool quotient_perfect = false;
  SimplicityCertificate p_simple;
  std::vector<Check> checks;
};

/// Throws UnsupportedPrime unless p is 2 or 3.
CounterexampleReport counterexample_demo(unsigned p = 2);

/// M = [L(f), L(f)] for a diagonal form, shared by the checker and the CLI.
struct OrthogonalAlgebra {
  BilinearForm form;
  LieAlgebra l;
  LieAlgebra m;
};

OrthogonalAlgebra build_orthogonal_algebra(const Field& field, const DiagonalEntries& entries);

/// Structure constants of M on f1..h3 for the standard W.
StructureConstants explicit_table(const OrthogonalAlgebra& algebra, const DiagonalEntries& entries);

}  // namespace orthocurrent
