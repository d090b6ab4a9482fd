#pragma once

// Structure-producing procedures: twisting at every level, finite-dimensional
// duality, convolution/antipode, primitives and the induced Hom-Lie bracket,
// opposite variants, and the gauge transformation.
//
// Every construction VERIFIES its preconditions with the checker suite and
// refuses to produce an unchecked structure; the failing report travels with
// the thrown error.

#include "hqb/structures.hpp"

namespace hqb {

/// Error carrying the axiom report that explains the refusal.
struct ReportedError : Error {
  AxiomReport report;
  ReportedError(const std::string& msg, AxiomReport rep);
};

struct NotAWeakMorphism : ReportedError {
  using ReportedError::ReportedError;
};
struct NotAMorphism : ReportedError {
  using ReportedError::ReportedError;
};
struct NotMultiplicative : ReportedError {
  using ReportedError::ReportedError;
};
struct GaugePreconditionFailed : ReportedError {
  using ReportedError::ReportedError;
};

// ---------------------------------------------------------------------------
// Twisting principles
// ---------------------------------------------------------------------------

/// (A, beta∘mu, beta∘alpha, eta); beta must be a weak algebra self-morphism.
HomAlgebra twist_algebra(const HomAlgebra& a, const LinMap& beta);

/// (A, delta∘beta, alpha∘beta, eps); beta must be a weak coalgebra self-morphism.
HomCoalgebra twist_coalgebra(const HomCoalgebra& c, const LinMap& beta);

/// (A, mu_beta, eta, delta_beta, eps, new twists); beta must be a (strong)
/// bialgebra self-morphism.
HomBialgebra twist_bialgebra(const HomBialgebra& b, const LinMap& beta);

/// (A, beta∘mu, eta, delta∘beta, eps, beta∘alpha, phi); beta must be an HQ
/// self-morphism (in particular beta^{x3}(phi) = phi).
HQBialgebra twist_hq(const HQBialgebra& h, const LinMap& beta);

/// Same with R carried along; beta must also satisfy beta^{x2}(R) = R.
QTHQBialgebra twist_qt(const QTHQBialgebra& q, const LinMap& beta);

/// (A, alpha^n∘mu, eta, delta∘alpha^n, eps, alpha^{n+1}, phi).  Requires alpha
/// multiplicative and alpha(1) = 1 (the latter is what makes the twisted
/// coproduct preserve the unit); equals twist_hq(h, alpha^n).
HQBialgebra iterate_alpha(const HQBialgebra& h, int n);

// ---------------------------------------------------------------------------
// Opposite variants
// ---------------------------------------------------------------------------

enum class OppositeKind { Op, Cop, OpCop };

/// op: mu -> mu∘tau, phi -> phi^{-1};  cop: delta -> tau∘delta,
/// phi -> phi^{-1} with legs reversed;  opcop: both, phi -> phi legs reversed.
HQBialgebra opposite_variant(const HQBialgebra& h, OppositeKind which);

// ---------------------------------------------------------------------------
// Finite-dimensional duality
// ---------------------------------------------------------------------------

/// A* with product (fg)(x) = sum f(x_1) g(x_2), twist alpha*, unit eps* when
/// the coalgebra is counital.
HomAlgebra dual_coalgebra_to_algebra(const HomCoalgebra& c);

/// A* with coproduct delta(f)(x(x)y) = f(xy), twist alpha*, counit f -> f(1)
/// when the algebra is unital.
HomCoalgebra dual_algebra_to_coalgebra(const HomAlgebra& a);

// ---------------------------------------------------------------------------
// Convolution, antipode, primitives, Hom-Lie
// ---------------------------------------------------------------------------

/// Hom(A,A) with f*g = mu∘(f(x)g)∘delta, unit eta∘eps and twist
/// gamma(f) = alpha∘f∘beta.
struct ConvolutionAlgebra {
  HomBialgebra base;

  LinMap star(const LinMap& f, const LinMap& g) const;
  LinMap unit() const;
  LinMap gamma(const LinMap& f) const;
};

LinMap convolution(const HomBialgebra& b, const LinMap& f, const LinMap& g);
LinMap convolution_unit(const HomBialgebra& b);

struct Antipode {
  LinMap s;
  bool unique = true;  // false when the solution space is positive-dimensional
};

/// Solves S*id = id*S = eta∘eps as one exact linear system in the dim^2
/// matrix entries of S; empty when no solution exists.
std::optional<Antipode> solve_antipode(const HomBialgebra& b);

struct Primitives {
  std::vector<TensorElement> basis;  // of {x : delta(x) = 1(x)x + x(x)1}
  AxiomReport report;  // eps(x) = 0; closure under alpha and the bracket
};

Primitives primitives(const HomBialgebra& b);

struct HomLie {
  MulMap bracket;  // [x,y] = xy - yx
  LinMap alpha;
  AxiomReport report;  // antisymmetry and the twisted Jacobi cyclic sum
};

/// Requires the algebra to be multiplicative.
HomLie hlie(const HomAlgebra& a);

// ---------------------------------------------------------------------------
// Gauge transformation
// ---------------------------------------------------------------------------

/// (A, mu, eta, delta_F, eps, alpha^3, phi_F) with
///   delta_F(x) = (F . delta(x)) . F^{-1}            (exactly this association)
///   phi_F = F_23 . ((a(x)d)(F) . (phi . ((d(x)a)(F^{-1}) . F_12^{-1})))
/// Preconditions (check_gauge) are verified first.
HQBialgebra gauge_transform(const HQBialgebra& h, const TensorElement& f);

/// Compares the printed associations of delta_F and phi_F against the
/// alternative ones; the entries pass when the association does not matter.
AxiomReport gauge_association_diagnostic(const HQBialgebra& h, const TensorElement& f);

}  // namespace hqb
