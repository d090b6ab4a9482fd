#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hqb/quantum.hpp"

namespace hqb {

/// The supplied index map does not respect the group multiplication.
struct NotAGroupEndomorphism : Error {
  using Error::Error;
};

/// A context carrying every formal parameter the catalog builders use
/// (a, b, lambda, p, q) over Q(zeta_order).
CtxPtr catalog_context(long order = 24);

/// zeta_n^k inside the ambient cyclotomic field; requires n | order.
Scalar nth_root(const CtxPtr& ctx, long n, long k);

/// 3-dimensional Hom-associative (not associative) algebra on x1,x2,x3:
/// x1 acts by a on x1,x2 and by b on x3; x2*x2 = a x2, x2*x3 = b x3,
/// x3*x2 = x3*x3 = 0; alpha = diag(a, a, b).  No designated unit.
HomAlgebra example_3dim(CtxPtr ctx, const Scalar& a, const Scalar& b);

/// One-parameter Hom-deformation of the 4-dimensional Sweedler Hopf algebra
/// on the basis (1, c, x, cx); lambda = 1 recovers the classical structure.
HomBialgebra sweedler_family(CtxPtr ctx, const Scalar& lambda);

/// Group Hom-bialgebra: mu(e_a, e_b) = e_{endo(ab)}, Delta(e_a) =
/// e_{endo(a)} (x) e_{endo(a)}, eps = 1, alpha induced by `endo`.
/// Throws NotAGroupEndomorphism unless endo respects the multiplication.
HomBialgebra group_hombialgebra(const FiniteGroup& g,
                                const std::vector<int>& endo, CtxPtr ctx);

/// The 4-dimensional quasi-bialgebra on (1, X, Y, XY) with X^2 = 1,
/// Y^2 = X, XY = YX, the sign-twisted coproduct on Y, counit (1,1,-1,-1),
/// and the self-inverse associator Phi = 1 - 2 P(x)P(x)P, P = (1-X)/2;
/// alpha = id.  Ships with its printed self-morphisms: alpha1 (passes),
/// alpha2/alpha3 as printed (fail the multiplicativity check by a factor
/// of 2) and rescaled by 1/sqrt(2) (pass).
struct DH2 {
  HQBialgebra structure;
  std::vector<std::pair<std::string, LinMap>> morphisms;
};
DH2 dh2(CtxPtr ctx);

/// Twist of dh2 by alpha1 (variant 1) or by the rescaled alpha2 (variant 2).
HQBialgebra dh2_hq(CtxPtr ctx, int variant);

/// The twisted quantum double D^w Z3 for the symbolic cocycle family.
QTHQBialgebra dwz3(CtxPtr ctx, const std::string& p_name = "p",
                   const std::string& q_name = "q", int r_choice = 1);

/// The diagonal self-morphisms f and g of D^w Z3 (g corrected; the printed
/// g is also shipped as "g_printed" and fails the multiplicativity check).
std::vector<std::pair<std::string, LinMap>> dwz3_morphisms(CtxPtr ctx);

/// Twist of D^w Z3 by f.  Only a HQ-bialgebra: f does not preserve R.
HQBialgebra dwz3_twisted(CtxPtr ctx);

// ---------------------------------------------------------------------------
// Printed-table fixtures
// ---------------------------------------------------------------------------

/// One printed-table cell compared against the generated structure constant.
/// Values are stored in raw coordinates; printed values given in the modified
/// basis (with the unit as the first basis vector) are converted first.
struct FixtureEntry {
  std::string table;     ///< "mu", "delta", or "unit"
  std::vector<int> key;  ///< basis indices: (i,j) for mu, (i) for delta
  TensorElement printed;
  TensorElement computed;
  bool matches = false;
  bool documented_diff = false;  ///< the print is known to disagree here
  std::string annotation;        ///< provenance note (diffs, adopted defaults)
};

struct FixtureReport {
  std::string name;
  std::string note;
  std::vector<FixtureEntry> entries;

  /// True when each cell matches exactly unless it is a documented diff,
  /// and every documented diff indeed still mismatches.
  bool as_documented() const;
  int diff_count() const;  ///< number of mismatching cells
};

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct ExpectedVerdict {
  std::string check;  ///< e.g. "hq", "qt", "bialgebra", "morphism:hq:f"
  bool pass = true;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  AnyStructure structure;
  std::vector<std::pair<std::string, LinMap>> morphisms;
  std::vector<ExpectedVerdict> expected;
  std::vector<FixtureReport> fixtures;
};

/// All named example structures with expected verdicts and fixtures.
std::vector<CatalogEntry> catalog(CtxPtr ctx);

const CatalogEntry* catalog_find(const std::vector<CatalogEntry>& entries,
                                 const std::string& name);

/// Runs the named check against the entry's structure.  Check names:
/// "hom_associativity", "unit", "coalgebra", "bialgebra", "hq", "qt", and
/// "morphism:<level>:<name>" (strict; level as in level_from_name).
bool evaluate_check(const CatalogEntry& entry, const std::string& check);

}  // namespace hqb
