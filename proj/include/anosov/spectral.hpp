#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anosov/endomorphism.hpp"
#include "anosov/int_polynomial.hpp"

namespace anosov {

enum class HyperbolicityClass { expanding, anosov_diffeomorphism, anosov_endomorphism, not_hyperbolic };

const char* to_string(HyperbolicityClass c);

/// Closed interval certified to contain one eigenvalue modulus.
struct ModulusInterval {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
};

struct SpectralData {
  IntPolynomial char_poly;
  std::vector<IntPolynomial> irreducible_factors;
  std::vector<ModulusInterval> eigenvalue_moduli;  // ascending
  int index = 0;                                   // moduli below 1
  bool hyperbolic = false;
  HyperbolicityClass cls = HyperbolicityClass::not_hyperbolic;
  std::vector<std::string> notes;
};

/// Hyperbolicity is certified exactly: no cyclotomic factor of the
/// characteristic polynomial, and no self-reciprocal irreducible factor
/// with a root numerically on the unit circle (tolerance 1e-9, reported
/// conservatively as not hyperbolic when it fires).
SpectralData classify(const ToralEndomorphism& f);

/// True iff no eigenvalue is a root of unity; decided by exact polynomial
/// gcds, never by orbit simulation.
bool transitivity_verdict(const ToralEndomorphism& f);

using LatticeBasis = std::vector<std::vector<Integer>>;

struct GeodesicCheck {
  bool holds = false;
  /// Basis of a proper invariant sublattice when the check fails:
  /// the saturated integer kernel of q(A) for an irreducible factor q.
  LatticeBasis witness;
};

/// Eigendirections project to dense geodesics exactly when the
/// characteristic polynomial is irreducible over the rationals.
/// Caller contract: f should be hyperbolic.
GeodesicCheck geodesic_density_check(const ToralEndomorphism& f);

enum class GeodesicCondition { holds, fails, out_of_scope };
enum class DensityPrediction { all_points, not_all_points, diffeomorphism_case, undecided };

const char* to_string(GeodesicCondition c);
const char* to_string(DensityPrediction p);

struct DensityVerdict {
  bool transitive = false;
  GeodesicCondition geodesic_condition = GeodesicCondition::out_of_scope;
  std::optional<LatticeBasis> reducibility_witness;
  DensityPrediction predicted_dense_preimages = DensityPrediction::undecided;
  std::vector<std::string> notes;
};

/// Full density prediction for backward orbits:
///  - degree 1: diffeomorphism_case (single pre-images, density question moot);
///  - all_points when transitive, degree > 1, hyperbolic, and either the
///    characteristic polynomial is irreducible or the matrix splits into
///    independent diagonal blocks that each satisfy those hypotheses;
///  - not_all_points when a proper invariant sublattice has a unimodular
///    induced quotient map: the backward orbit of the origin then stays
///    inside that subtorus, which certifies non-density at the origin;
///  - undecided otherwise. Never throws; unsupported algebra degrades to
///    undecided with a note.
DensityVerdict main_theorem_verdict(const ToralEndomorphism& f);

/// Connected components of the symmetrized nonzero pattern: the finest
/// block-diagonal structure visible without a change of basis. Components
/// are sorted by smallest member index.
std::vector<std::vector<std::size_t>> diagonal_blocks(const IntMatrix& a);

IntMatrix extract_block(const IntMatrix& a, const std::vector<std::size_t>& indices);

/// Basis of the saturated integer kernel lattice of m (empty when m is
/// nonsingular); columns sign-normalized so the first nonzero entry is > 0.
LatticeBasis kernel_lattice_basis(const IntMatrix& m);

}  // namespace anosov
