#pragma once

// Sparse linear algebra over tensor powers of one finite-dimensional space:
// elements of A^{(x)k}, linear maps between tensor powers, structure-constant
// multiplication/comultiplication, leg permutations/embeddings, and inversion
// in the componentwise product algebra on A^{(x)k}.
//
// Basis tuples are packed into 64-bit keys, one byte per leg with leg 1 in
// the most significant used byte, so numeric key order equals lexicographic
// tuple order.  This caps dim at 255 and the tensor power at 8 — far beyond
// what any of the verified structures need (dim <= 81, power <= 4).

#include "hqb/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hqb {

struct PowerMismatch : Error {
  explicit PowerMismatch(const std::string& what) : Error(what) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};
struct BadPermutation : Error {
  explicit BadPermutation(const std::string& what) : Error(what) {}
};
struct SlotConflict : Error {
  explicit SlotConflict(const std::string& what) : Error(what) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// The underlying finite-dimensional space with cosmetic basis labels.
struct Space {
  int dim = 0;
  std::vector<std::string> labels;

  static std::shared_ptr<const Space> create(std::vector<std::string> labels);
  static std::shared_ptr<const Space> create(int dim);  ///< labels "e0", "e1", ...
};
using SpacePtr = std::shared_ptr<const Space>;

using Key = std::uint64_t;

Key pack_key(const std::vector<int>& idx);
std::vector<int> unpack_key(Key k, int power);
/// Leg t (0-based) of a packed power-k key.
inline int key_leg(Key k, int power, int t) {
  return static_cast<int>((k >> (8 * (power - 1 - t))) & 0xff);
}
/// Concatenation of tuple keys: a's legs first, then b's.
inline Key concat_keys(Key a, Key b, int b_power) { return (a << (8 * b_power)) | b; }
/// All dim^power keys in lexicographic (= numeric) order.
std::vector<Key> all_keys(int dim, int power);

/// Sparse element of A^{(x)power}; power 0 is a pure scalar at key 0.
struct TensorElement {
  int power = 0;
  std::map<Key, Scalar> coords;  // invariant: stored coefficients are nonzero

  bool is_zero() const { return coords.empty(); }
  /// Accumulates; erases the slot if the sum vanishes.
  void add_term(Key k, const Scalar& v);
  Scalar coefficient(Key k) const;
};

TensorElement te_zero(int power);
TensorElement te_scalar(const Scalar& v);                       ///< power 0
TensorElement te_basis(int power, Key k, const CtxPtr& ctx);    ///< coefficient 1
TensorElement te_basis1(int i, const CtxPtr& ctx);              ///< e_i, power 1
TensorElement te_add(const TensorElement& a, const TensorElement& b);
TensorElement te_sub(const TensorElement& a, const TensorElement& b);
TensorElement te_neg(const TensorElement& a);
TensorElement te_scale(const Scalar& c, const TensorElement& a);
/// Tensor product of elements; powers add.
TensorElement te_kron(const TensorElement& a, const TensorElement& b);
bool te_equal(const TensorElement& a, const TensorElement& b);

/// Leg permutation: result leg t carries original leg sigma[t] (1-based,
/// as in the subscript convention: "v_{321}" puts original leg 3 first).
TensorElement perm_legs(const TensorElement& v, const std::vector<int>& sigma);

/// Places v's legs (in order) at the strictly increasing 1-based `slots`
/// inside A^{(x)k}; every other leg carries the algebra unit.
TensorElement embed_legs(const TensorElement& v, int k, const std::vector<int>& slots,
                         const TensorElement& unit);

/// Sparse linear map A^{(x)src} -> A^{(x)dst}, stored column-major.
struct LinMap {
  int src = 1, dst = 1;
  std::map<Key, std::map<Key, Scalar>> cols;  // cols[in][out] = coefficient

  void add_entry(Key in, Key out, const Scalar& v);
  Scalar entry(Key in, Key out) const;
};

/// Identity on A^{(x)power}, materialized on all dim^power columns.
LinMap lin_identity(const CtxPtr& ctx, int dim, int power);
TensorElement apply(const LinMap& f, const TensorElement& v);
/// Composition f after g (apply g first).
LinMap compose(const LinMap& f, const LinMap& g);
/// Tensor product of maps: (f(x)g)(u(x)v) = f(u)(x)g(v).
LinMap kron(const LinMap& f, const LinMap& g);
/// Leg-swap permutation tau_{ij} on A^{(x)k}, materialized for one dim.
LinMap tau(const CtxPtr& ctx, int dim, int k, int i, int j);
/// Transpose: columns and rows exchanged (the dual map on coordinates).
LinMap transpose(const LinMap& f);
bool lin_equal(const LinMap& f, const LinMap& g);

/// Multiplication structure constants: mu(e_i, e_j) = sum_k c[{i,j}][k] e_k.
struct MulMap {
  int dim = 0;
  std::map<std::pair<int, int>, std::map<int, Scalar>> c;

  void add(int i, int j, int k, const Scalar& v);
};

/// Comultiplication structure constants: delta(e_i) = sum d[i][{j,k}] e_j(x)e_k.
struct ComulMap {
  int dim = 0;
  std::map<int, std::map<Key, Scalar>> d;

  void add(int i, int j, int k, const Scalar& v);
};

TensorElement mul_basis(const MulMap& mu, int i, int j);       ///< power 1
TensorElement comul_basis(const ComulMap& delta, int i);       ///< power 2
/// Componentwise product on A^{(x)k}: (a1(x)...(x)ak)·(b1(x)...(x)bk)
/// = (a1 b1)(x)...(x)(ak bk), extended bilinearly.  Power 0 multiplies scalars.
TensorElement mul_on_power(const MulMap& mu, const TensorElement& u,
                           const TensorElement& v);
LinMap mu_linmap(const MulMap& mu);        ///< as a map A^{(x)2} -> A
LinMap delta_linmap(const ComulMap& delta);  ///< as a map A -> A^{(x)2}

struct InvertResult {
  TensorElement inverse;
  bool unique = true;
};

/// Two-sided inverse of v in the componentwise product algebra on A^{(x)k}:
/// solves v·w = w·v = unit^{(x)k} as one exact linear system.  Returns the
/// solution when one exists (flagging non-uniqueness), nothing otherwise.
std::optional<InvertResult> invert_element(const MulMap& mu, const TensorElement& unit,
                                           const TensorElement& v);

// ---------------------------------------------------------------------------
// Exact linear algebra over the Scalar field (shared by invert_element,
// solve_antipode, the primitive-subspace solver, and morphism searches).
// ---------------------------------------------------------------------------

struct SparseRow {
  std::map<int, Scalar> lhs;
  Scalar rhs;
};

struct LinearSolution {
  std::vector<Scalar> values;
  bool unique = true;
};

/// Gauss-Jordan elimination with exact Scalar arithmetic; pivot choice favors
/// syntactically small entries to limit symbolic growth.  Free unknowns are
/// set to zero.  Returns nothing when the system is inconsistent.
std::optional<LinearSolution> solve_linear_system(std::vector<SparseRow> rows,
                                                  int n_unknowns, const CtxPtr& ctx);

/// Basis of the solution space of the homogeneous system (rhs ignored).
std::vector<std::vector<Scalar>> nullspace_basis(std::vector<SparseRow> rows,
                                                 int n_unknowns, const CtxPtr& ctx);

}  // namespace hqb
