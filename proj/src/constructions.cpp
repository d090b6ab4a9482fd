#include "hqb/constructions.hpp"

#include <functional>
#include <utility>

namespace hqb {

namespace {

std::string first_failure(const AxiomReport& rep) {
  for (const auto& e : rep.entries)
    if (!e.pass) return e.axiom;
  return "";
}

std::string refusal(const std::string& what, const AxiomReport& rep) {
  std::string msg = what;
  std::string f = first_failure(rep);
  if (!f.empty()) msg += " (first failing condition: " + f + ")";
  return msg;
}

MulMap mul_from(int dim, const std::function<TensorElement(int, int)>& f) {
  MulMap m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      TensorElement t = f(i, j);
      for (const auto& [k, v] : t.coords) m.add(i, j, static_cast<int>(k), v);
    }
  return m;
}

ComulMap comul_from(int dim, const std::function<TensorElement(int)>& f) {
  ComulMap d;
  d.dim = dim;
  for (int i = 0; i < dim; ++i) {
    TensorElement t = f(i);
    for (const auto& [k, v] : t.coords) {
      std::vector<int> legs = unpack_key(k, 2);
      d.add(i, legs[0], legs[1], v);
    }
  }
  return d;
}

LinMap power_of(const LinMap& alpha, const CtxPtr& ctx, int dim, int n) {
  LinMap r = lin_identity(ctx, dim, 1);
  for (int t = 0; t < n; ++t) r = compose(alpha, r);
  return r;
}

}  // namespace

ReportedError::ReportedError(const std::string& msg, AxiomReport rep)
    : Error(msg), report(std::move(rep)) {}

// ---------------------------------------------------------------------------
// Twisting
// ---------------------------------------------------------------------------

HomAlgebra twist_algebra(const HomAlgebra& a, const LinMap& beta) {
  AxiomReport pre =
      check_morphism(Level::Algebra, true, beta, AnyStructure(a), AnyStructure(a));
  if (!pre.overall())
    throw NotAWeakMorphism(refusal("twist_algebra: beta is not a weak algebra "
                                   "self-morphism", pre), pre);
  HomAlgebra out;
  out.ctx = a.ctx;
  out.space = a.space;
  out.mu = mul_from(a.space->dim, [&](int i, int j) {
    return apply(beta, mul_basis(a.mu, i, j));
  });
  out.alpha = compose(beta, a.alpha);
  out.eta = a.eta;
  return out;
}

HomCoalgebra twist_coalgebra(const HomCoalgebra& c, const LinMap& beta) {
  AxiomReport pre =
      check_morphism(Level::Coalgebra, true, beta, AnyStructure(c), AnyStructure(c));
  if (!pre.overall())
    throw NotAWeakMorphism(refusal("twist_coalgebra: beta is not a weak coalgebra "
                                   "self-morphism", pre), pre);
  LinMap dl = delta_linmap(c.delta);
  HomCoalgebra out;
  out.ctx = c.ctx;
  out.space = c.space;
  out.delta = comul_from(c.space->dim, [&](int i) {
    return apply(dl, apply(beta, te_basis1(i, c.ctx)));
  });
  out.alpha = compose(c.alpha, beta);
  out.eps = c.eps;
  return out;
}

HomBialgebra twist_bialgebra(const HomBialgebra& b, const LinMap& beta) {
  AxiomReport pre =
      check_morphism(Level::Bialgebra, false, beta, AnyStructure(b), AnyStructure(b));
  if (!pre.overall())
    throw NotAMorphism(refusal("twist_bialgebra: beta is not a bialgebra "
                               "self-morphism", pre), pre);
  LinMap dl = delta_linmap(b.delta);
  HomBialgebra out;
  out.ctx = b.ctx;
  out.space = b.space;
  out.mu = mul_from(b.space->dim, [&](int i, int j) {
    return apply(beta, mul_basis(b.mu, i, j));
  });
  out.eta = b.eta;
  out.delta = comul_from(b.space->dim, [&](int i) {
    return apply(dl, apply(beta, te_basis1(i, b.ctx)));
  });
  out.eps = b.eps;
  out.alpha = compose(beta, b.alpha);
  out.beta = compose(b.beta, beta);
  return out;
}

HQBialgebra twist_hq(const HQBialgebra& h, const LinMap& beta) {
  AxiomReport pre =
      check_morphism(Level::HQ, false, beta, AnyStructure(h), AnyStructure(h));
  if (!pre.overall())
    throw NotAMorphism(refusal("twist_hq: beta is not an HQ self-morphism", pre), pre);
  LinMap dl = delta_linmap(h.delta);
  HQBialgebra out;
  out.ctx = h.ctx;
  out.space = h.space;
  out.mu = mul_from(h.space->dim, [&](int i, int j) {
    return apply(beta, mul_basis(h.mu, i, j));
  });
  out.eta = h.eta;
  out.delta = comul_from(h.space->dim, [&](int i) {
    return apply(dl, apply(beta, te_basis1(i, h.ctx)));
  });
  out.eps = h.eps;
  out.alpha = compose(beta, h.alpha);
  out.phi = h.phi;
  // phi^{-1} survives the twist: mu_beta(phi, w) = beta^{x3}(mu(phi, w)) and
  // beta fixes the unit.
  out.phi_inv = h.phi_inv;
  cache_inverses(out);
  return out;
}

QTHQBialgebra twist_qt(const QTHQBialgebra& q, const LinMap& beta) {
  AxiomReport pre =
      check_morphism(Level::QTHQ, false, beta, AnyStructure(q), AnyStructure(q));
  if (!pre.overall())
    throw NotAMorphism(
        refusal("twist_qt: beta is not a quasi-triangular HQ self-morphism", pre),
        pre);
  QTHQBialgebra out;
  static_cast<HQBialgebra&>(out) = twist_hq(static_cast<const HQBialgebra&>(q), beta);
  out.r = q.r;
  out.r_inv = q.r_inv;
  cache_inverses(out);
  return out;
}

HQBialgebra iterate_alpha(const HQBialgebra& h, int n) {
  if (n < 0) throw IndexOutOfRange("iterate_alpha: n must be nonnegative");
  HomAlgebra alg = algebra_part(h);
  AxiomReport pre = check_multiplicative(alg);
  {
    // delta(alpha^n(1)) must stay 1(x)1, so alpha(1) = 1 is required as well.
    AxiomReport unit_rep;
    AxiomEntry e;
    e.axiom = "unit_alpha";
    TensorElement res = te_sub(apply(h.alpha, h.eta), h.eta);
    if (!res.is_zero()) {
      e.pass = false;
      e.fail_count = 1;
      e.residual = res;
    }
    unit_rep.entries.push_back(e);
    pre.merge(unit_rep);
  }
  if (!pre.overall())
    throw NotMultiplicative(
        refusal("iterate_alpha: alpha is not multiplicative with alpha(1) = 1", pre),
        pre);

  LinMap an = power_of(h.alpha, h.ctx, h.space->dim, n);
  LinMap dl = delta_linmap(h.delta);
  HQBialgebra out;
  out.ctx = h.ctx;
  out.space = h.space;
  out.mu = mul_from(h.space->dim, [&](int i, int j) {
    return apply(an, mul_basis(h.mu, i, j));
  });
  out.eta = h.eta;
  out.delta = comul_from(h.space->dim, [&](int i) {
    return apply(dl, apply(an, te_basis1(i, h.ctx)));
  });
  out.eps = h.eps;
  out.alpha = compose(h.alpha, an);
  out.phi = h.phi;
  out.phi_inv = h.phi_inv;
  cache_inverses(out);
  return out;
}

// ---------------------------------------------------------------------------
// Opposite variants
// ---------------------------------------------------------------------------

HQBialgebra opposite_variant(const HQBialgebra& h, OppositeKind which) {
  HQBialgebra out = h;
  cache_inverses(out);
  if (!out.phi_inv)
    throw Error("opposite variant requires an invertible associator");
  TensorElement phi = h.phi;
  TensorElement phi_inv = *out.phi_inv;

  bool flip_mu = which == OppositeKind::Op || which == OppositeKind::OpCop;
  bool flip_delta = which == OppositeKind::Cop || which == OppositeKind::OpCop;

  if (flip_mu)
    out.mu = mul_from(h.space->dim,
                      [&](int i, int j) { return mul_basis(h.mu, j, i); });
  if (flip_delta)
    out.delta = comul_from(h.space->dim, [&](int i) {
      return perm_legs(comul_basis(h.delta, i), {2, 1});
    });

  switch (which) {
    case OppositeKind::Op:
      out.phi = phi_inv;
      out.phi_inv = phi;
      break;
    case OppositeKind::Cop:
      out.phi = perm_legs(phi_inv, {3, 2, 1});
      out.phi_inv = perm_legs(phi, {3, 2, 1});
      break;
    case OppositeKind::OpCop:
      out.phi = perm_legs(phi, {3, 2, 1});
      out.phi_inv = perm_legs(phi_inv, {3, 2, 1});
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

namespace {

SpacePtr dual_space(const SpacePtr& s) {
  std::vector<std::string> labels;
  labels.reserve(s->labels.size());
  for (const auto& l : s->labels) labels.push_back(l + "*");
  return Space::create(labels);
}

}  // namespace

HomAlgebra dual_coalgebra_to_algebra(const HomCoalgebra& c) {
  int dim = c.space->dim;
  HomAlgebra out;
  out.ctx = c.ctx;
  out.space = dual_space(c.space);
  out.mu.dim = dim;
  for (const auto& [k, col] : c.delta.d)
    for (const auto& [jk, v] : col) {
      std::vector<int> legs = unpack_key(jk, 2);
      out.mu.add(legs[0], legs[1], k, v);
    }
  out.alpha = transpose(c.alpha);
  if (c.eps) {
    TensorElement unit{1, {}};
    for (int k = 0; k < dim; ++k) unit.add_term(pack_key({k}), c.eps->entry(k, 0));
    out.eta = unit;
  }
  return out;
}

HomCoalgebra dual_algebra_to_coalgebra(const HomAlgebra& a) {
  int dim = a.space->dim;
  HomCoalgebra out;
  out.ctx = a.ctx;
  out.space = dual_space(a.space);
  out.delta.dim = dim;
  for (const auto& [ij, col] : a.mu.c)
    for (const auto& [k, v] : col) out.delta.add(k, ij.first, ij.second, v);
  out.alpha = transpose(a.alpha);
  if (a.eta) {
    LinMap eps;
    eps.src = 1;
    eps.dst = 0;
    for (const auto& [k, v] : a.eta->coords) eps.add_entry(k, 0, v);
    out.eps = eps;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Convolution / antipode / primitives / Hom-Lie
// ---------------------------------------------------------------------------

LinMap convolution(const HomBialgebra& b, const LinMap& f, const LinMap& g) {
  return compose(mu_linmap(b.mu), compose(kron(f, g), delta_linmap(b.delta)));
}

LinMap convolution_unit(const HomBialgebra& b) {
  LinMap u;
  u.src = u.dst = 1;
  for (int i = 0; i < b.space->dim; ++i) {
    Scalar e = b.eps.entry(pack_key({i}), 0);
    if (e.is_zero()) continue;
    for (const auto& [k, v] : b.eta.coords) u.add_entry(pack_key({i}), k, e * v);
  }
  return u;
}

LinMap ConvolutionAlgebra::star(const LinMap& f, const LinMap& g) const {
  return convolution(base, f, g);
}

LinMap ConvolutionAlgebra::unit() const { return convolution_unit(base); }

LinMap ConvolutionAlgebra::gamma(const LinMap& f) const {
  return compose(base.alpha, compose(f, base.beta));
}

std::optional<Antipode> solve_antipode(const HomBialgebra& b) {
  int dim = b.space->dim;
  const CtxPtr& ctx = b.ctx;
  auto idx = [dim](int in, int out) { return in * dim + out; };

  // (S*id)(e_k)_m = sum_{(k1,k2)} delta_coeff * s_{k1 j} * mu(e_j, e_k2)_m, and
  // symmetrically for id*S; both must equal eps(e_k) * eta_m.
  std::vector<SparseRow> rows;
  for (int side = 0; side < 2; ++side) {
    for (int k = 0; k < dim; ++k) {
      std::map<int, SparseRow> by_out;  // m -> row
      auto dcol = b.delta.d.find(k);
      if (dcol != b.delta.d.end()) {
        for (const auto& [k12, dv] : dcol->second) {
          std::vector<int> legs = unpack_key(k12, 2);
          int ks = side == 0 ? legs[0] : legs[1];  // the leg S acts on
          int ko = side == 0 ? legs[1] : legs[0];
          for (int j = 0; j < dim; ++j) {
            TensorElement prod =
                side == 0 ? mul_basis(b.mu, j, ko) : mul_basis(b.mu, ko, j);
            for (const auto& [m, mv] : prod.coords) {
              Scalar& cell = by_out[static_cast<int>(m)].lhs[idx(ks, j)];
              cell = cell + dv * mv;
            }
          }
        }
      }
      Scalar ek = b.eps.entry(pack_key({k}), 0);
      for (const auto& [m, v] : b.eta.coords)
        by_out[static_cast<int>(m)].rhs = ek * v;
      for (auto& [m, row] : by_out) {
        (void)m;
        rows.push_back(std::move(row));
      }
    }
  }

  auto sol = solve_linear_system(std::move(rows), dim * dim, ctx);
  if (!sol) return std::nullopt;
  Antipode result;
  result.unique = sol->unique;
  result.s.src = result.s.dst = 1;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Scalar& v = sol->values[idx(i, j)];
      if (!v.is_zero()) result.s.add_entry(pack_key({i}), pack_key({j}), v);
    }
  return result;
}

Primitives primitives(const HomBialgebra& b) {
  int dim = b.space->dim;
  const CtxPtr& ctx = b.ctx;

  // delta(x) - 1(x)x - x(x)1 = 0, coefficients of x in the basis as unknowns.
  std::vector<SparseRow> rows;
  for (Key jk : all_keys(dim, 2)) {
    std::vector<int> legs = unpack_key(jk, 2);
    SparseRow row;
    for (int i = 0; i < dim; ++i) {
      Scalar v = Scalar::zero(ctx);
      auto dcol = b.delta.d.find(i);
      if (dcol != b.delta.d.end()) {
        auto it = dcol->second.find(jk);
        if (it != dcol->second.end()) v = it->second;
      }
      if (i == legs[1]) v = v - b.eta.coefficient(pack_key({legs[0]}));
      if (i == legs[0]) v = v - b.eta.coefficient(pack_key({legs[1]}));
      if (!v.is_zero()) row.lhs[i] = v;
    }
    row.rhs = Scalar::zero(ctx);
    if (!row.lhs.empty()) rows.push_back(std::move(row));
  }

  Primitives out;
  for (const auto& vec : nullspace_basis(rows, dim, ctx)) {
    TensorElement x{1, {}};
    for (int i = 0; i < dim; ++i) x.add_term(pack_key({i}), vec[i]);
    out.basis.push_back(std::move(x));
  }

  LinMap dl = delta_linmap(b.delta);
  auto primitive_residual = [&](const TensorElement& x) {
    return te_sub(apply(dl, x), te_add(te_kron(b.eta, x), te_kron(x, b.eta)));
  };

  AxiomEntry eps_e{"primitive_counit", true, std::nullopt, std::nullopt, 0, ""};
  AxiomEntry alpha_e{"primitive_alpha_closure", true, std::nullopt, std::nullopt, 0,
                     ""};
  AxiomEntry br_e{"primitive_bracket_closure", true, std::nullopt, std::nullopt, 0,
                  ""};
  auto observe = [](AxiomEntry& e, std::vector<int> tuple, const TensorElement& res) {
    if (res.is_zero()) return;
    ++e.fail_count;
    if (e.pass) {
      e.pass = false;
      e.witness = std::move(tuple);
      e.residual = res;
    }
  };
  for (int t = 0; t < static_cast<int>(out.basis.size()); ++t) {
    const TensorElement& x = out.basis[t];
    observe(eps_e, {t}, apply(b.eps, x));
    observe(alpha_e, {t}, primitive_residual(apply(b.alpha, x)));
    for (int s = 0; s < static_cast<int>(out.basis.size()); ++s) {
      TensorElement br = te_sub(mul_on_power(b.mu, out.basis[s], x),
                                mul_on_power(b.mu, x, out.basis[s]));
      observe(br_e, {s, t}, primitive_residual(br));
    }
  }
  out.report.entries = {eps_e, alpha_e, br_e};
  return out;
}

HomLie hlie(const HomAlgebra& a) {
  AxiomReport pre = check_multiplicative(a);
  if (!pre.overall())
    throw NotMultiplicative(
        refusal("hlie: the algebra twist is not multiplicative", pre), pre);

  int dim = a.space->dim;
  HomLie out;
  out.alpha = a.alpha;
  out.bracket = mul_from(dim, [&](int i, int j) {
    return te_sub(mul_basis(a.mu, i, j), mul_basis(a.mu, j, i));
  });

  AxiomEntry anti{"hlie_antisymmetry", true, std::nullopt, std::nullopt, 0, ""};
  AxiomEntry jac{"hom_jacobi", true, std::nullopt, std::nullopt, 0, ""};
  auto observe = [](AxiomEntry& e, std::vector<int> tuple, const TensorElement& res) {
    if (res.is_zero()) return;
    ++e.fail_count;
    if (e.pass) {
      e.pass = false;
      e.witness = std::move(tuple);
      e.residual = res;
    }
  };
  std::vector<TensorElement> al(dim);
  for (int i = 0; i < dim; ++i) al[i] = apply(a.alpha, te_basis1(i, a.ctx));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      observe(anti, {i, j}, te_add(mul_basis(out.bracket, i, j),
                                   mul_basis(out.bracket, j, i)));
      for (int k = 0; k < dim; ++k) {
        TensorElement sum = mul_on_power(out.bracket, al[i],
                                         mul_basis(out.bracket, j, k));
        sum = te_add(sum, mul_on_power(out.bracket, al[j],
                                       mul_basis(out.bracket, k, i)));
        sum = te_add(sum, mul_on_power(out.bracket, al[k],
                                       mul_basis(out.bracket, i, j)));
        observe(jac, {i, j, k}, sum);
      }
    }
  out.report.entries = {anti, jac};
  return out;
}

// ---------------------------------------------------------------------------
// Gauge transformation
// ---------------------------------------------------------------------------

HQBialgebra gauge_transform(const HQBialgebra& h, const TensorElement& f) {
  AxiomReport pre = check_gauge(h, f);
  if (!pre.overall())
    throw GaugePreconditionFailed(
        refusal("gauge_transform: F is not a gauge transformation", pre), pre);
  auto finv = invert_element(h.mu, h.eta, f);
  // check_gauge passed, so the inverse exists.
  const TensorElement& fi = finv->inverse;

  LinMap dl = delta_linmap(h.delta);
  HQBialgebra out;
  out.ctx = h.ctx;
  out.space = h.space;
  out.mu = h.mu;
  out.eta = h.eta;
  out.eps = h.eps;
  out.delta = comul_from(h.space->dim, [&](int i) {
    return mul_on_power(h.mu, mul_on_power(h.mu, f, comul_basis(h.delta, i)), fi);
  });
  out.alpha = compose(h.alpha, compose(h.alpha, h.alpha));

  TensorElement f23 = te_kron(h.eta, f);
  TensorElement f12_inv = te_kron(fi, h.eta);
  TensorElement ad_f = apply(kron(h.alpha, dl), f);
  TensorElement da_fi = apply(kron(dl, h.alpha), fi);
  // phi_F = F_23 . ((a(x)d)(F) . (phi . ((d(x)a)(F^{-1}) . F_12^{-1})))
  TensorElement t = mul_on_power(h.mu, da_fi, f12_inv);
  t = mul_on_power(h.mu, h.phi, t);
  t = mul_on_power(h.mu, ad_f, t);
  out.phi = mul_on_power(h.mu, f23, t);
  cache_inverses(out);
  return out;
}

AxiomReport gauge_association_diagnostic(const HQBialgebra& h,
                                         const TensorElement& f) {
  AxiomReport pre = check_gauge(h, f);
  auto finv = invert_element(h.mu, h.eta, f);
  if (!finv)
    throw GaugePreconditionFailed(
        refusal("gauge diagnostic: F is not invertible", pre), pre);
  const TensorElement& fi = finv->inverse;

  AxiomReport rep;
  AxiomEntry d_assoc{"delta_f_association", true, std::nullopt, std::nullopt, 0,
                     "(F.delta(x)).F^{-1} versus F.(delta(x).F^{-1})"};
  for (int i = 0; i < h.space->dim; ++i) {
    TensorElement dx = comul_basis(h.delta, i);
    TensorElement left = mul_on_power(h.mu, mul_on_power(h.mu, f, dx), fi);
    TensorElement right = mul_on_power(h.mu, f, mul_on_power(h.mu, dx, fi));
    TensorElement res = te_sub(left, right);
    if (!res.is_zero()) {
      ++d_assoc.fail_count;
      if (d_assoc.pass) {
        d_assoc.pass = false;
        d_assoc.witness = std::vector<int>{i};
        d_assoc.residual = res;
      }
    }
  }
  rep.entries.push_back(d_assoc);

  LinMap dl = delta_linmap(h.delta);
  TensorElement f23 = te_kron(h.eta, f);
  TensorElement f12_inv = te_kron(fi, h.eta);
  TensorElement ad_f = apply(kron(h.alpha, dl), f);
  TensorElement da_fi = apply(kron(dl, h.alpha), fi);

  TensorElement printed = mul_on_power(h.mu, da_fi, f12_inv);
  printed = mul_on_power(h.mu, h.phi, printed);
  printed = mul_on_power(h.mu, ad_f, printed);
  printed = mul_on_power(h.mu, f23, printed);

  std::vector<const TensorElement*> factors = {&f23, &ad_f, &h.phi, &da_fi, &f12_inv};
  TensorElement left_fold = *factors.front();
  for (std::size_t t = 1; t < factors.size(); ++t)
    left_fold = mul_on_power(h.mu, left_fold, *factors[t]);
  TensorElement right_fold = *factors.back();
  for (std::size_t t = factors.size() - 1; t-- > 0;)
    right_fold = mul_on_power(h.mu, *factors[t], right_fold);

  AxiomEntry p_assoc{"phi_f_association", true, std::nullopt, std::nullopt, 0,
                     "printed nesting versus fully-left and fully-right folds"};
  for (const TensorElement* alt : {&left_fold, &right_fold}) {
    TensorElement res = te_sub(printed, *alt);
    if (!res.is_zero()) {
      ++p_assoc.fail_count;
      if (p_assoc.pass) {
        p_assoc.pass = false;
        p_assoc.residual = res;
      }
    }
  }
  rep.entries.push_back(p_assoc);
  return rep;
}

}  // namespace hqb
