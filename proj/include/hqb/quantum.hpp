#pragma once

#include <string>
#include <vector>

#include "hqb/constructions.hpp"

namespace hqb {

/// The multiplication table fails the group laws.
struct InvalidGroup : Error {
  using Error::Error;
};

/// A cocycle precondition failed; `report` holds the failing checks.
struct InvalidCocycle : ReportedError {
  using ReportedError::ReportedError;
};

/// Finite group on elements 0..n-1 with 0 the identity element.
struct FiniteGroup {
  int n = 0;
  std::vector<std::vector<int>> table;  ///< table[a][b] = a*b
  std::vector<int> inv;                 ///< inv[a]*a = a*inv[a] = identity
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const { return inv[a]; }
  int conjugate(int x, int g) const {  ///< x g x^{-1}
    return mul(mul(x, g), inverse(x));
  }
  bool abelian() const;
};

/// Validates identity/inverse/associativity laws and fills the inverse table.
/// Throws InvalidGroup when the table is not a group with identity 0.
FiniteGroup make_group(std::vector<std::vector<int>> table,
                       std::vector<std::string> labels = {});

/// Z_n with element k representing x^k; labels "1", "x", "x2", ...
FiniteGroup cyclic_group(int n);

/// Normalized 3-cochain G^3 -> K^*, stored densely; entries default to 1.
/// Construction does not validate; run check_cocycle3 for the cocycle laws.
struct Cocycle3 {
  FiniteGroup group;
  CtxPtr ctx;
  std::vector<Scalar> values;  ///< index (x*n + y)*n + z

  const Scalar& value(int x, int y, int z) const {
    return values[(static_cast<size_t>(x) * group.n + y) * group.n + z];
  }
  void set(int x, int y, int z, Scalar v) {
    values[(static_cast<size_t>(x) * group.n + y) * group.n + z] =
        std::move(v);
  }
};

/// The cochain that is 1 everywhere.
Cocycle3 trivial_cocycle(const FiniteGroup& g, CtxPtr ctx);

/// Entries: cocycle_nonzero, cocycle_normalized (1 on identity arguments),
/// cocycle_identity (the 4-variable coboundary identity over all quadruples).
AxiomReport check_cocycle3(const Cocycle3& w);

/// theta(g,x,y) = w(g,x,y) w(x,y,(xy)^{-1}gxy) w(x,x^{-1}gx,y)^{-1}
Scalar theta(const Cocycle3& w, int g, int x, int y);

/// gamma(x,u,v) = w(u,v,x) w(x,x^{-1}ux,x^{-1}vx) w(u,x,x^{-1}vx)^{-1}
Scalar gamma_coeff(const Cocycle3& w, int x, int u, int v);

/// The 3-cocycle family on Z_3: w(x,x,x)=p, w(x,x,x^2)=q, w(x,x^2,x)=r^{-1}p^{-1},
/// w(x,x^2,x^2)=rq^{-1}, w(x^2,x,x)=r^{-1}pq^{-1}, w(x^2,x,x^2)=rp,
/// w(x^2,x^2,x)=qr^{-1}p^{-1}, w(x^2,x^2,x^2)=rp^{-1}, with r a cube root of
/// unity; entries with an identity argument are 1.
Cocycle3 z3_cocycle_values(CtxPtr ctx, const Scalar& p, const Scalar& q,
                           int r_choice);

/// Same family with p, q taken as named formal parameters of `ctx`.
Cocycle3 z3_cocycle(CtxPtr ctx, const std::string& p_name,
                    const std::string& q_name, int r_choice);

/// The twisted quantum double D^w G on basis e_g x (g, x in G), dimension n^2:
///   (e_g x)(e_h y) = [g = x h x^{-1}] theta(g,x,y) e_g(xy)
///   Delta(e_g x)   = sum_{uv=g} gamma(x,u,v) e_u x (x) e_v x
///   eps(e_g x)     = [g = 1],   1 = sum_g e_g 1,  alpha = id
///   Phi = sum w(x,y,z)^{-1} e_x 1 (x) e_y 1 (x) e_z 1,
///   R   = sum_{g,h} e_g 1 (x) e_h g.
/// Throws InvalidCocycle when w fails check_cocycle3, Error when w is not a
/// cochain on `g`.
QTHQBialgebra build_dw_double(const FiniteGroup& g, const Cocycle3& w);

}  // namespace hqb
