#pragma once

// Structure bundles from Hom-algebra up to quasi-triangular HQ-bialgebra,
// plus the full axiom/morphism checker suite producing exact witness reports.
//
// Nothing is ever assumed about a structure: every axiom is a check that
// evaluates residuals with exact Scalar arithmetic and reports the first
// failing basis tuple (witness) together with a total failure count.

#include "hqb/tensor.hpp"

#include <variant>

namespace hqb {

struct MissingUnit : Error {
  MissingUnit() : Error("structure has no unit element") {}
};
struct MissingCounit : Error {
  MissingCounit() : Error("structure has no counit") {}
};
struct SearchSpaceTooLarge : Error {
  explicit SearchSpaceTooLarge(std::size_t slots, std::size_t bound)
      : Error("morphism search with " + std::to_string(slots) +
              " unknown slots exceeds the bound " + std::to_string(bound)) {}
};

/// (A, mu, alpha, eta): Hom-associative when (xy)alpha(z) = alpha(x)(yz).
struct HomAlgebra {
  CtxPtr ctx;
  SpacePtr space;
  MulMap mu;
  LinMap alpha;                      // A -> A
  std::optional<TensorElement> eta;  // the unit 1_A as an element (power 1)
};

/// (A, delta, alpha, eps): Hom-coassociative when (alpha(x)delta)delta =
/// (delta(x)alpha)delta.
struct HomCoalgebra {
  CtxPtr ctx;
  SpacePtr space;
  ComulMap delta;
  LinMap alpha;                 // A -> A (the coalgebra twist)
  std::optional<LinMap> eps;    // A -> K (target power 0)
};

/// Compatible Hom-algebra + Hom-coalgebra with separate twists (alpha for the
/// algebra side, beta for the coalgebra side; they usually coincide).
struct HomBialgebra {
  CtxPtr ctx;
  SpacePtr space;
  MulMap mu;
  TensorElement eta;
  ComulMap delta;
  LinMap eps;
  LinMap alpha;
  LinMap beta;
};

/// Hom-quasi-bialgebra: coassociativity holds only up to conjugation by the
/// invertible associator phi, which alpha^{x3} must fix.
struct HQBialgebra {
  CtxPtr ctx;
  SpacePtr space;
  MulMap mu;
  TensorElement eta;
  ComulMap delta;
  LinMap eps;
  LinMap alpha;
  TensorElement phi;                     // power 3
  std::optional<TensorElement> phi_inv;  // cached two-sided inverse
};

/// HQ-bialgebra with a quasi-triangular structure R.
struct QTHQBialgebra : HQBialgebra {
  TensorElement r;                     // power 2
  std::optional<TensorElement> r_inv;  // cached
};

using AnyStructure =
    std::variant<HomAlgebra, HomCoalgebra, HomBialgebra, HQBialgebra, QTHQBialgebra>;

/// Computes and caches phi/r inverses via invert_element (no-op when present).
void cache_inverses(HQBialgebra& h);
void cache_inverses(QTHQBialgebra& q);

HomAlgebra algebra_part(const HomBialgebra& b);
HomCoalgebra coalgebra_part(const HomBialgebra& b);
HomAlgebra algebra_part(const HQBialgebra& h);
HomCoalgebra coalgebra_part(const HQBialgebra& h);
/// The underlying Hom-bialgebra data of an HQ-bialgebra (beta = alpha).
HomBialgebra bialgebra_part(const HQBialgebra& h);

/// Uniform read-only view over AnyStructure; absent sections are null.
struct StructureView {
  CtxPtr ctx;
  SpacePtr space;
  const MulMap* mu = nullptr;
  const TensorElement* eta = nullptr;
  const ComulMap* delta = nullptr;
  const LinMap* eps = nullptr;
  const LinMap* alpha = nullptr;
  const LinMap* beta = nullptr;  // coalgebra twist when distinct from alpha
  const TensorElement* phi = nullptr;
  const TensorElement* phi_inv = nullptr;
  const TensorElement* r = nullptr;
  const TensorElement* r_inv = nullptr;
};
StructureView view_of(const AnyStructure& s);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct AxiomEntry {
  std::string axiom;
  bool pass = true;
  std::optional<std::vector<int>> witness;  // first failing basis tuple
  std::optional<TensorElement> residual;    // its nonzero residual
  long long fail_count = 0;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomEntry> entries;
  std::vector<std::string> notes;

  bool overall() const;
  const AxiomEntry* find(const std::string& axiom) const;
  void merge(const AxiomReport& other);
};

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

/// (e_i e_j) alpha(e_k) - alpha(e_i)(e_j e_k) over all basis triples.
AxiomReport check_hom_associativity(const HomAlgebra& a);

/// The Hom-associator (xy)alpha(z) - alpha(x)(yz) for arbitrary elements.
TensorElement associator(const HomAlgebra& a, const TensorElement& x,
                         const TensorElement& y, const TensorElement& z);

/// x·1 = alpha(x) = 1·x, plus the flagged extra condition alpha(1) = 1.
AxiomReport check_unit(const HomAlgebra& a);

/// alpha∘mu = mu∘alpha^{x2}.
AxiomReport check_multiplicative(const HomAlgebra& a);

/// alpha^{x2}∘delta = delta∘alpha.
AxiomReport check_comultiplicative(const HomCoalgebra& c);

/// (alpha(x)delta)∘delta = (delta(x)alpha)∘delta.
AxiomReport check_hom_coassociativity(const HomCoalgebra& c);

/// (eps(x)id)∘delta = alpha = (id(x)eps)∘delta.
AxiomReport check_counit(const HomCoalgebra& c);

/// delta(1)=1(x)1, delta(xy)=delta(x)delta(y), eps(1)=1, eps(xy)=eps(x)eps(y),
/// eps∘alpha=eps.
AxiomReport check_bialgebra_compat(const HomBialgebra& b);

/// Full Hom-bialgebra suite: algebra axioms (alpha), coalgebra axioms (beta),
/// and the compatibility identities.
AxiomReport check_hom_bialgebra(const HomBialgebra& b);

/// In unital multiplicative Hom-algebras with alpha(1)=1, the twist commutes
/// with each element: alpha(x)·x = x·alpha(x).  Checked per basis element.
AxiomReport check_alpha_product_commutation(const HomAlgebra& a);

/// The full HQ-bialgebra suite: unital Hom-algebra axioms, the coproduct and
/// counit algebra-morphism conditions, HQ1-HQ4, alpha-invariance and
/// invertibility of phi, and the HQ3 association-independence property.
AxiomReport check_hq(const HQBialgebra& h);

/// QT1-QT3 plus alpha-invariance and invertibility of R.  QT1 is evaluated
/// in the inverse-free form delta^{op}(x)·R = R·delta(x).
AxiomReport check_qt(const QTHQBialgebra& q);

/// Gauge preconditions: alpha^{x2}(F)=F, (eps(x)id)(F)=(id(x)eps)(F)=1_A,
/// and invertibility of F.
AxiomReport check_gauge(const HQBialgebra& h, const TensorElement& f);

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

enum class Level { Algebra, Coalgebra, Bialgebra, HQ, QTHQ };

Level level_of(const AnyStructure& s);
std::string level_name(Level level);
std::optional<Level> level_from_name(const std::string& name);

/// Checks the morphism conditions at the requested level; `weak` skips the
/// twist-intertwining condition f∘alpha = alpha'∘f.
AxiomReport check_morphism(Level level, bool weak, const LinMap& f,
                           const AnyStructure& a, const AnyStructure& b);

/// A sparsity template: fixed entries plus unknown scalar slots at given
/// (column, row) coordinates.
struct MorphismPattern {
  LinMap fixed;
  std::vector<std::pair<Key, Key>> slots;  // (input index, output index)
};

/// Exhaustive instantiation of the pattern's unknown slots from the candidate
/// set, returning every assignment that passes check_morphism(level, weak=false)
/// as a self-map of `a`.  Conditions are evaluated as soon as all columns they
/// involve are fully assigned, which prunes the search tree.
std::vector<LinMap> search_morphisms(const AnyStructure& a, Level level,
                                     const MorphismPattern& pattern,
                                     const std::vector<Scalar>& candidates,
                                     std::size_t max_slots = 6);

}  // namespace hqb
