#pragma once

// Exact arithmetic in K = Frac(Q(zeta_N)[p1^{±1}, ..., pm^{±1}]):
// cyclotomic numbers with named formal Laurent parameters.
//
// A Scalar is a quotient num/den of multivariate Laurent polynomials whose
// coefficients live in Q(zeta_N) = Q[x]/Phi_N(x).  Monomial denominators are
// absorbed into the (Laurent) numerator, so in practice den == 1 unless a
// division by a genuine multi-term polynomial could not be carried out
// exactly.  Zero testing is a polynomial-zero test on the numerator; equality
// is decided by cross-multiplication.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqb {

using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;

/// Error hierarchy for the whole library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by the zero rational function") {}
};
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownParameter : Error {
  explicit UnknownParameter(const std::string& name)
      : Error("unknown parameter '" + name + "'") {}
};

/// Shared immutable context: the cyclotomic order N and the parameter names.
class ScalarContext {
public:
  /// Builds a context; computes Phi_N and the zeta-power reduction table.
  static std::shared_ptr<const ScalarContext> create(
      int cyclotomic_order, std::vector<std::string> parameter_names);

  int cyclotomic_order() const { return m_order; }
  int degree() const { return m_degree; }  ///< phi(N) = deg Phi_N
  const QPoly& cyclotomic_polynomial() const { return m_phi; }
  const std::vector<std::string>& parameter_names() const { return m_params; }
  std::size_t parameter_count() const { return m_params.size(); }
  /// Index of a parameter name, or -1 when absent.
  int parameter_index(const std::string& name) const;
  /// zeta^j reduced mod Phi_N, for 0 <= j <= 2*(degree-1).
  const std::vector<Rational>& zeta_power(int j) const { return m_powers.at(j); }

private:
  ScalarContext() = default;
  int m_order = 0;
  int m_degree = 0;
  QPoly m_phi;
  std::vector<std::string> m_params;
  std::vector<std::vector<Rational>> m_powers;
};

using CtxPtr = std::shared_ptr<const ScalarContext>;

/// The N-th cyclotomic polynomial via the Moebius product formula.
QPoly cyclotomic_polynomial(int n);

/// Element of Q(zeta_N): dense coordinates in the basis 1, zeta, ..., zeta^{phi(N)-1}.
struct Cyclo {
  std::vector<Rational> c;

  bool is_zero() const;
  bool operator==(const Cyclo& o) const { return c == o.c; }
};

Cyclo cyclo_zero(const ScalarContext& ctx);
Cyclo cyclo_one(const ScalarContext& ctx);
Cyclo cyclo_rational(const ScalarContext& ctx, const Rational& r);
Cyclo cyclo_root(const ScalarContext& ctx, long k);  ///< zeta_N^k
Cyclo cyclo_add(const Cyclo& a, const Cyclo& b);
Cyclo cyclo_sub(const Cyclo& a, const Cyclo& b);
Cyclo cyclo_neg(const Cyclo& a);
Cyclo cyclo_mul(const ScalarContext& ctx, const Cyclo& a, const Cyclo& b);
/// Inverse in the field Q(zeta_N); throws DivisionByZero on zero input.
Cyclo cyclo_inv(const ScalarContext& ctx, const Cyclo& a);

/// Exponent vector of a Laurent monomial; length = number of parameters.
using ExpVec = std::vector<int>;

/// Multivariate Laurent polynomial with Q(zeta_N) coefficients.
/// Invariant: stored coefficients are nonzero; the zero polynomial is empty.
struct Laurent {
  std::map<ExpVec, Cyclo> terms;

  bool is_zero() const { return terms.empty(); }
};

Laurent laurent_zero();
Laurent laurent_const(const Cyclo& c, std::size_t nparams);
Laurent laurent_monomial(const Cyclo& c, const ExpVec& e);
Laurent laurent_add(const Laurent& a, const Laurent& b);
Laurent laurent_sub(const Laurent& a, const Laurent& b);
Laurent laurent_neg(const Laurent& a);
Laurent laurent_mul(const ScalarContext& ctx, const Laurent& a, const Laurent& b);
/// Exact quotient a/b when it exists (b nonzero), otherwise nullopt.
std::optional<Laurent> laurent_exact_divide(const ScalarContext& ctx,
                                            const Laurent& a, const Laurent& b);

/// An element of K; immutable value type with operator arithmetic.
class Scalar {
public:
  Scalar() = default;  ///< context-free zero; usable with any context

  static Scalar zero(CtxPtr ctx);
  static Scalar one(CtxPtr ctx);
  static Scalar integer(CtxPtr ctx, long v);
  static Scalar rational(CtxPtr ctx, const Rational& r);
  static Scalar root(CtxPtr ctx, long k);  ///< zeta_N^k
  static Scalar parameter(CtxPtr ctx, const std::string& name);
  static Scalar from_cyclo(CtxPtr ctx, const Cyclo& c);

  bool is_zero() const { return m_num.is_zero(); }
  bool is_one() const;
  const CtxPtr& context() const { return m_ctx; }
  const Laurent& numerator() const { return m_num; }
  const Laurent& denominator() const { return m_den; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  ///< throws DivisionByZero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;     ///< throws DivisionByZero on zero
  Scalar pow(long k) const;   ///< integer power; negative k inverts first

  /// Number of Laurent terms in the numerator (complexity heuristic for pivoting).
  std::size_t term_count() const { return m_num.terms.size(); }
  bool has_trivial_denominator() const;

private:
  Scalar(CtxPtr ctx, Laurent num, Laurent den);
  void normalize();

  CtxPtr m_ctx;   // null only for the default-constructed zero
  Laurent m_num;  // zero iff the scalar is zero
  Laurent m_den;  // nonzero; the constant 1 when possible
};

/// Parses the scalar grammar: integers, 'z' (= zeta_N), parameter names,
/// '+', '-', '*', '/', '^' with integer exponents, and parentheses.
Scalar parse_scalar(CtxPtr ctx, const std::string& text);

/// Canonical rendering in the same grammar; parse(format(a)) == a.
std::string format_scalar(const Scalar& a);

}  // namespace hqb
