#include "hqb/catalog.hpp"

#include <utility>

namespace hqb {

namespace {

LinMap diag_map(const std::vector<Scalar>& d) {
  LinMap m;
  m.src = 1;
  m.dst = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    m.add_entry(static_cast<Key>(i), static_cast<Key>(i), d[i]);
  return m;
}

LinMap counit_row(const std::vector<Scalar>& values) {
  LinMap eps;
  eps.src = 1;
  eps.dst = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    eps.add_entry(static_cast<Key>(i), 0, values[i]);
  return eps;
}

FixtureEntry cell(std::string table, std::vector<int> key, TensorElement printed,
                  TensorElement computed, bool documented_diff = false,
                  std::string annotation = {}) {
  FixtureEntry e;
  e.table = std::move(table);
  e.key = std::move(key);
  e.matches = te_equal(printed, computed);
  e.printed = std::move(printed);
  e.computed = std::move(computed);
  e.documented_diff = documented_diff;
  e.annotation = std::move(annotation);
  return e;
}

FixtureEntry mu_cell(const MulMap& mu, int i, int j, TensorElement printed,
                     bool documented_diff = false, std::string annotation = {}) {
  return cell("mu", {i, j}, std::move(printed), mul_basis(mu, i, j),
              documented_diff, std::move(annotation));
}

FixtureEntry delta_cell(const ComulMap& delta, int i, TensorElement printed,
                        bool documented_diff = false, std::string annotation = {}) {
  return cell("delta", {i}, std::move(printed), comul_basis(delta, i),
              documented_diff, std::move(annotation));
}

// zeta_8^3 and its conjugate zeta_8^5 (the coefficient pair of the printed
// alpha2/alpha3 self-maps), and sqrt(2) = zeta_8 + zeta_8^{-1}.
Scalar xi8(const CtxPtr& ctx) { return nth_root(ctx, 8, 3); }
Scalar xi8_conj(const CtxPtr& ctx) { return nth_root(ctx, 8, 5); }
Scalar sqrt2(const CtxPtr& ctx) {
  return nth_root(ctx, 8, 1) + nth_root(ctx, 8, 7);
}

// xi6 = zeta_6 (a cube root of -1): the twist eigenvalue family of the
// quantum-double self-maps; -xi6 = zeta_3^2 and xi6^2 = zeta_3.
Scalar xi6(const CtxPtr& ctx) { return nth_root(ctx, 6, 1); }

}  // namespace

CtxPtr catalog_context(long order) {
  return ScalarContext::create(static_cast<int>(order),
                               {"a", "b", "lambda", "p", "q"});
}

Scalar nth_root(const CtxPtr& ctx, long n, long k) {
  const long order = ctx->cyclotomic_order();
  if (n <= 0 || order % n != 0)
    throw Error("nth_root: the cyclotomic order " + std::to_string(order) +
                " is not divisible by " + std::to_string(n));
  const long kk = ((k % n) + n) % n;
  return Scalar::root(ctx, (order / n) * kk);
}

HomAlgebra example_3dim(CtxPtr ctx, const Scalar& a, const Scalar& b) {
  HomAlgebra alg;
  alg.ctx = ctx;
  alg.space = Space::create({"x1", "x2", "x3"});
  alg.mu.dim = 3;
  alg.mu.add(0, 0, 0, a);
  alg.mu.add(0, 1, 1, a);
  alg.mu.add(1, 0, 1, a);
  alg.mu.add(0, 2, 2, b);
  alg.mu.add(2, 0, 2, b);
  alg.mu.add(1, 1, 1, a);
  alg.mu.add(1, 2, 2, b);
  // x3*x2 = x3*x3 = 0
  alg.alpha = diag_map({a, a, b});
  return alg;  // no unit: x1 only acts as one when a = 1
}

HomBialgebra sweedler_family(CtxPtr ctx, const Scalar& lambda) {
  const Scalar one = Scalar::one(ctx);
  HomBialgebra bi;
  bi.ctx = ctx;
  bi.space = Space::create({"1", "c", "x", "cx"});
  bi.mu.dim = 4;
  bi.mu.add(0, 0, 0, one);
  bi.mu.add(0, 1, 1, one);
  bi.mu.add(0, 2, 2, lambda);
  bi.mu.add(0, 3, 3, lambda);
  bi.mu.add(1, 0, 1, one);
  bi.mu.add(1, 1, 0, one);
  bi.mu.add(1, 2, 3, lambda);
  bi.mu.add(1, 3, 2, lambda);
  bi.mu.add(2, 0, 2, lambda);
  bi.mu.add(2, 1, 3, -lambda);
  bi.mu.add(3, 0, 3, lambda);
  bi.mu.add(3, 1, 2, -lambda);
  // the remaining products (x and cx against x and cx) are zero
  bi.eta = te_basis1(0, ctx);
  bi.delta.dim = 4;
  bi.delta.add(0, 0, 0, one);
  bi.delta.add(1, 1, 1, one);
  bi.delta.add(2, 1, 2, lambda);
  bi.delta.add(2, 2, 0, lambda);
  bi.delta.add(3, 0, 3, lambda);
  bi.delta.add(3, 3, 1, lambda);
  bi.eps = counit_row({one, one, Scalar::zero(ctx), Scalar::zero(ctx)});
  bi.alpha = diag_map({one, one, lambda, lambda});
  bi.beta = bi.alpha;
  return bi;
}

HomBialgebra group_hombialgebra(const FiniteGroup& g,
                                const std::vector<int>& endo, CtxPtr ctx) {
  if (static_cast<int>(endo.size()) != g.n)
    throw NotAGroupEndomorphism("endomorphism table has " +
                                std::to_string(endo.size()) +
                                " entries for a group of order " +
                                std::to_string(g.n));
  for (int v : endo)
    if (v < 0 || v >= g.n)
      throw NotAGroupEndomorphism("endomorphism value " + std::to_string(v) +
                                  " is outside the group");
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (endo[g.mul(x, y)] != g.mul(endo[x], endo[y]))
        throw NotAGroupEndomorphism("map does not respect the product at (" +
                                    g.labels[x] + ", " + g.labels[y] + ")");
  const Scalar one = Scalar::one(ctx);
  HomBialgebra bi;
  bi.ctx = ctx;
  bi.space = Space::create(g.labels);
  bi.mu.dim = g.n;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) bi.mu.add(i, j, endo[g.mul(i, j)], one);
  bi.eta = te_basis1(0, ctx);
  bi.delta.dim = g.n;
  for (int i = 0; i < g.n; ++i) bi.delta.add(i, endo[i], endo[i], one);
  bi.eps = counit_row(std::vector<Scalar>(g.n, one));
  bi.alpha.src = 1;
  bi.alpha.dst = 1;
  for (int i = 0; i < g.n; ++i)
    bi.alpha.add_entry(static_cast<Key>(i), static_cast<Key>(endo[i]), one);
  bi.beta = bi.alpha;
  return bi;
}

DH2 dh2(CtxPtr ctx) {
  const Scalar one = Scalar::one(ctx);
  const Scalar half = Scalar::rational(ctx, Rational(1, 2));
  const Scalar mhalf = -half;

  DH2 out;
  HQBialgebra& h = out.structure;
  h.ctx = ctx;
  h.space = Space::create({"1", "X", "Y", "XY"});

  // Cyclic group of order 4 generated by Y, with X = Y^2:
  // basis index -> Y-power is the involution (0, 2, 1, 3).
  const int ypow[4] = {0, 2, 1, 3};
  h.mu.dim = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      h.mu.add(i, j, ypow[(ypow[i] + ypow[j]) % 4], one);
  h.eta = te_basis1(0, ctx);

  h.delta.dim = 4;
  h.delta.add(0, 0, 0, one);
  h.delta.add(1, 1, 1, one);
  // Delta(Y)  = -1/2 (Y(x)Y + XY(x)Y + Y(x)XY - XY(x)XY)
  h.delta.add(2, 2, 2, mhalf);
  h.delta.add(2, 3, 2, mhalf);
  h.delta.add(2, 2, 3, mhalf);
  h.delta.add(2, 3, 3, half);
  // Delta(XY) = Delta(X)Delta(Y) = -1/2 (XY(x)XY + Y(x)XY + XY(x)Y - Y(x)Y)
  h.delta.add(3, 3, 3, mhalf);
  h.delta.add(3, 2, 3, mhalf);
  h.delta.add(3, 3, 2, mhalf);
  h.delta.add(3, 2, 2, half);

  h.eps = counit_row({one, one, -one, -one});
  h.alpha = lin_identity(ctx, 4, 1);

  const TensorElement p_el =
      te_scale(half, te_sub(te_basis1(0, ctx), te_basis1(1, ctx)));
  const TensorElement ppp = te_kron(p_el, te_kron(p_el, p_el));
  const TensorElement unit3 = te_kron(h.eta, te_kron(h.eta, h.eta));
  h.phi = te_sub(unit3, te_scale(Scalar::integer(ctx, 2), ppp));
  h.phi_inv = h.phi;  // (1 - 2 P^{(x)3})^2 = 1 because P^2 = P

  const Scalar xi = xi8(ctx);
  const Scalar xib = xi8_conj(ctx);
  const Scalar scale = sqrt2(ctx).inverse();

  LinMap a1 = lin_identity(ctx, 2, 1);
  a1.add_entry(2, 3, one);
  a1.add_entry(3, 2, one);

  auto mixing = [&](const Scalar& c3_on_1, const Scalar& c3_on_x) {
    LinMap m = lin_identity(ctx, 2, 1);
    m.add_entry(2, 0, c3_on_1);
    m.add_entry(2, 1, c3_on_x);
    m.add_entry(3, 0, c3_on_x);
    m.add_entry(3, 1, c3_on_1);
    return m;
  };
  out.morphisms = {{"alpha1", a1},
                   {"alpha2_printed", mixing(xi, xib)},
                   {"alpha2_rescaled", mixing(xi * scale, xib * scale)},
                   {"alpha3_printed", mixing(xib, xi)},
                   {"alpha3_rescaled", mixing(xib * scale, xi * scale)}};
  return out;
}

HQBialgebra dh2_hq(CtxPtr ctx, int variant) {
  if (variant != 1 && variant != 2)
    throw Error("dh2_hq: variant must be 1 or 2, got " + std::to_string(variant));
  DH2 base = dh2(std::move(ctx));
  const std::string key = variant == 1 ? "alpha1" : "alpha2_rescaled";
  for (const auto& [name, map] : base.morphisms)
    if (name == key) return twist_hq(base.structure, map);
  throw Error("dh2_hq: morphism table is missing " + key);
}

QTHQBialgebra dwz3(CtxPtr ctx, const std::string& p_name,
                   const std::string& q_name, int r_choice) {
  const FiniteGroup z3 = cyclic_group(3);
  return build_dw_double(z3, z3_cocycle(std::move(ctx), p_name, q_name, r_choice));
}

std::vector<std::pair<std::string, LinMap>> dwz3_morphisms(CtxPtr ctx) {
  const Scalar one = Scalar::one(ctx);
  const Scalar mxi = -xi6(ctx);         // = zeta_3^2
  const Scalar xi_sq = nth_root(ctx, 3, 1);  // xi6^2 = zeta_3
  const Scalar imag = nth_root(ctx, 4, 1);
  LinMap f = diag_map({one, one, one, one, mxi, xi_sq, one, xi_sq, mxi});
  LinMap g = diag_map({one, one, one, one, xi_sq, mxi, one, mxi, xi_sq});
  // as printed, the last coefficient of g carries a stray factor i
  LinMap gp =
      diag_map({one, one, one, one, xi_sq, mxi, one, mxi, xi_sq * imag});
  return {{"f", f}, {"g", g}, {"g_printed", gp}};
}

HQBialgebra dwz3_twisted(CtxPtr ctx) {
  const QTHQBialgebra qd = dwz3(ctx);
  const LinMap f = dwz3_morphisms(ctx).front().second;
  // twist only the HQ part: f does not preserve R
  return twist_hq(static_cast<const HQBialgebra&>(qd), f);
}

bool FixtureReport::as_documented() const {
  for (const auto& e : entries)
    if (e.matches == e.documented_diff) return false;
  return true;
}

int FixtureReport::diff_count() const {
  int n = 0;
  for (const auto& e : entries)
    if (!e.matches) ++n;
  return n;
}

namespace {

// ---------------------------------------------------------------------------
// Fixture tables
// ---------------------------------------------------------------------------

FixtureReport sweedler_mu_fixture(const HomBialgebra& b, const Scalar& lambda) {
  const CtxPtr& ctx = b.ctx;
  auto t1 = [&](int i) { return te_basis1(i, ctx); };
  auto sc = [&](const Scalar& c, int i) { return te_scale(c, t1(i)); };
  const std::string dflt = "unspecified in the printed table; zero adopted";

  FixtureReport rep;
  rep.name = "sweedler_mu";
  rep.note = "basis (1, c, x, cx)";
  rep.entries = {
      mu_cell(b.mu, 0, 0, t1(0)),
      mu_cell(b.mu, 0, 1, t1(1)),
      mu_cell(b.mu, 0, 2, sc(lambda, 2)),
      mu_cell(b.mu, 0, 3, sc(lambda, 3)),
      mu_cell(b.mu, 1, 0, t1(1)),
      mu_cell(b.mu, 1, 1, t1(0)),
      mu_cell(b.mu, 1, 2, sc(lambda, 3)),
      mu_cell(b.mu, 1, 3, sc(lambda, 2)),
      mu_cell(b.mu, 2, 0, sc(lambda, 2)),
      mu_cell(b.mu, 2, 1, sc(-lambda, 3)),
      mu_cell(b.mu, 3, 0, sc(lambda, 3)),
      mu_cell(b.mu, 3, 1, sc(-lambda, 2)),
      mu_cell(b.mu, 2, 2, te_zero(1), false, dflt),
      mu_cell(b.mu, 2, 3, te_zero(1), false, dflt),
      mu_cell(b.mu, 3, 2, te_zero(1), false, dflt),
      mu_cell(b.mu, 3, 3, te_zero(1), false, dflt),
  };
  return rep;
}

std::vector<FixtureReport> dh2_hq_fixtures(const HQBialgebra& h, int variant) {
  const CtxPtr& ctx = h.ctx;
  const Scalar half = Scalar::rational(ctx, Rational(1, 2));
  auto t1 = [&](int i) { return te_basis1(i, ctx); };
  auto k2 = [&](int i, int j) { return te_kron(t1(i), t1(j)); };
  // -1/2 (e_i(x)e_i + e_j(x)e_i + e_i(x)e_j - e_j(x)e_j)
  auto sign_block = [&](int i, int j) {
    TensorElement v = te_add(k2(i, i), te_add(k2(j, i), k2(i, j)));
    return te_scale(-half, te_sub(v, k2(j, j)));
  };

  FixtureReport mu;
  FixtureReport dl;
  if (variant == 1) {
    mu.name = "dh2_hq1_mu";
    dl.name = "dh2_hq1_delta";
    const int printed[4][4] = {{0, 1, 3, 2}, {1, 0, 2, 3}, {3, 2, 1, 0}, {2, 3, 0, 1}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        mu.entries.push_back(mu_cell(h.mu, i, j, t1(printed[i][j])));
    dl.entries = {
        delta_cell(h.delta, 0, k2(0, 0)),
        delta_cell(h.delta, 1, k2(1, 1)),
        delta_cell(h.delta, 2, sign_block(3, 2)),
        delta_cell(h.delta, 3, sign_block(2, 3)),
    };
  } else {
    mu.name = "dh2_hq2_mu";
    dl.name = "dh2_hq2_delta";
    const Scalar xi = xi8(ctx);
    const Scalar xib = xi8_conj(ctx);
    const TensorElement mix_a = te_add(te_scale(xi, t1(0)), te_scale(xib, t1(1)));
    const TensorElement mix_b = te_add(te_scale(xib, t1(0)), te_scale(xi, t1(1)));
    const std::string norm =
        "printed from the unnormalized map; off by the factor 1/sqrt(2)";
    // 0 = e_1, 1 = e_2, 2 = the cell xi e_1 + conj(xi) e_2, 3 = its swap
    const int printed[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const int c = printed[i][j];
        const TensorElement v = c == 0   ? t1(0)
                                : c == 1 ? t1(1)
                                : c == 2 ? mix_a
                                         : mix_b;
        mu.entries.push_back(mu_cell(h.mu, i, j, v, c >= 2, c >= 2 ? norm : ""));
      }
    const TensorElement printed_coprod = te_sub(te_add(k2(0, 1), k2(1, 0)),
                                                te_add(k2(0, 0), k2(1, 1)));
    const std::string coprod_note =
        "printed coproduct matches neither the printed nor the rescaled map; "
        "twisting gives (xi e_1(x)e_1 + conj(xi) e_2(x)e_2)/sqrt(2) and its "
        "conjugate";
    dl.entries = {
        delta_cell(h.delta, 0, k2(0, 0)),
        delta_cell(h.delta, 1, k2(1, 1)),
        delta_cell(h.delta, 2, printed_coprod, true, coprod_note),
        delta_cell(h.delta, 3, printed_coprod, true, coprod_note),
    };
  }
  return {mu, dl};
}

// Printed tables for the twisted quantum double of Z3 use the modified basis
// (1, e_1x, e_1x^2, e_x1, e_xx, e_xx^2, e_{x^2}1, e_{x^2}x, e_{x^2}x^2) whose
// slot 0 is the unit sum_g e_g 1; raw slot 0 is e_1 1.
TensorElement dwz3_unit_vec(const CtxPtr& ctx) {
  return te_add(te_basis1(0, ctx), te_add(te_basis1(3, ctx), te_basis1(6, ctx)));
}

FixtureReport dwz3_unit_fixture(const QTHQBialgebra& d) {
  const CtxPtr& ctx = d.ctx;
  const TensorElement printed =
      te_add(te_basis1(0, ctx), te_add(te_basis1(1, ctx), te_basis1(2, ctx)));
  FixtureReport rep;
  rep.name = "dwz3_unit";
  rep.entries = {cell("unit", {}, printed, d.eta, true,
                      "printed as e_1 1 + e_1 x + e_1 x^2; the two-sided unit "
                      "of the product is sum_g e_g 1")};
  return rep;
}

std::vector<FixtureReport> dwz3_fixtures(const QTHQBialgebra& d, int r_choice) {
  const CtxPtr& ctx = d.ctx;
  const Scalar p = Scalar::parameter(ctx, "p");
  const Scalar r = nth_root(ctx, 3, r_choice);
  const Scalar rp_inv = (r * p).inverse();
  auto t1 = [&](int i) { return te_basis1(i, ctx); };
  auto sc = [&](const Scalar& c, int i) { return te_scale(c, t1(i)); };
  auto k2 = [&](const TensorElement& x, const TensorElement& y) {
    return te_kron(x, y);
  };
  const std::string note =
      "keys index the modified basis; slot 0 is the unit sum_g e_g 1";

  FixtureReport mu;
  mu.name = "dwz3_mu";
  mu.note = note;
  mu.entries = {
      mu_cell(d.mu, 1, 1, t1(2)),
      mu_cell(d.mu, 1, 2, t1(0)),
      mu_cell(d.mu, 2, 2, t1(1)),
      mu_cell(d.mu, 3, 3, t1(1), true,
              "printed as e_1 x; the product formula gives e_x 1 "
              "(transposed subscripts in print)"),
      mu_cell(d.mu, 3, 4, t1(4)),
      mu_cell(d.mu, 3, 5, t1(5)),
      mu_cell(d.mu, 4, 4, sc(p, 5)),
      mu_cell(d.mu, 4, 5, sc(rp_inv, 3), false,
              "omitted from the printed table; the formula value "
              "r^-1 p^-1 e_x 1 is adopted"),
      mu_cell(d.mu, 5, 5, sc(rp_inv * p.inverse(), 3), true,
              "printed as r^-1 p^-2 e_x 1; the product formula gives "
              "r^-1 p^-2 e_x x"),
      mu_cell(d.mu, 6, 6, t1(6)),
      mu_cell(d.mu, 6, 7, t1(7)),
      mu_cell(d.mu, 6, 8, t1(8)),
      mu_cell(d.mu, 7, 7, sc(p * p, 8)),
      mu_cell(d.mu, 7, 8, sc(r * p, 6)),
      mu_cell(d.mu, 8, 8, sc(r * p.inverse(), 7)),
  };

  const TensorElement u = dwz3_unit_vec(ctx);
  FixtureReport dl;
  dl.name = "dwz3_delta";
  dl.note = note;
  auto dmap = delta_linmap(d.delta);
  auto drow = [&](int i, TensorElement printed, bool diff = false,
                  std::string ann = {}) {
    const TensorElement computed =
        i == 0 ? apply(dmap, u) : comul_basis(d.delta, i);
    return cell("delta", {i}, std::move(printed), computed, diff, std::move(ann));
  };
  dl.entries = {
      drow(0, k2(u, u)),
      drow(1, te_add(k2(t1(1), t1(1)),
                     te_scale(rp_inv, te_add(k2(t1(7), t1(4)), k2(t1(4), t1(7)))))),
      drow(2, te_add(k2(t1(2), t1(2)),
                     te_scale(r * p, te_add(k2(t1(8), t1(5)), k2(t1(5), t1(8)))))),
      drow(3, te_add(k2(t1(0), t1(3)), te_add(k2(t1(3), t1(0)), k2(t1(6), t1(6))))),
      drow(4, te_add(k2(t1(1), t1(4)),
                     te_add(k2(t1(4), t1(1)),
                            te_scale(rp_inv * p.inverse(), k2(t1(7), t1(7)))))),
      drow(5, te_add(k2(t1(2), t1(5)),
                     te_add(k2(t1(5), t1(2)),
                            te_scale(r * p.inverse(), k2(t1(8), t1(8)))))),
      drow(6, te_add(k2(t1(0), t1(6)), te_add(k2(t1(6), t1(0)), k2(t1(3), t1(3))))),
      drow(7, te_add(k2(t1(1), t1(7)),
                     te_add(k2(t1(7), t1(1)), te_scale(p, k2(t1(4), t1(4)))))),
      drow(8, te_add(k2(t1(2), t1(8)),
                     te_add(k2(t1(8), t1(2)), te_scale(p * p, k2(t1(5), t1(5)))))),
  };
  return {mu, dl};
}

std::vector<FixtureReport> dwz3_twisted_fixtures(const HQBialgebra& d,
                                                 int r_choice) {
  const CtxPtr& ctx = d.ctx;
  const Scalar p = Scalar::parameter(ctx, "p");
  const Scalar r = nth_root(ctx, 3, r_choice);
  const Scalar rp_inv = (r * p).inverse();
  const Scalar xi = xi6(ctx);
  const Scalar xi_sq = xi * xi;
  const Scalar two = Scalar::integer(ctx, 2);
  auto t1 = [&](int i) { return te_basis1(i, ctx); };
  auto sc = [&](const Scalar& c, int i) { return te_scale(c, t1(i)); };
  auto k2 = [&](const TensorElement& x, const TensorElement& y) {
    return te_kron(x, y);
  };
  const std::string note =
      "keys index the modified basis; slot 0 is the unit sum_g e_g 1";
  const TensorElement u = dwz3_unit_vec(ctx);

  FixtureReport mu;
  mu.name = "dwz3_twisted_mu";
  mu.note = note;
  mu.entries = {
      mu_cell(d.mu, 1, 1, t1(2)),
      mu_cell(d.mu, 1, 2, te_sub(u, te_add(t1(3), t1(6)))),
      mu_cell(d.mu, 2, 2, t1(1)),
      mu_cell(d.mu, 3, 3, t1(3)),
      mu_cell(d.mu, 3, 4, sc(-xi, 4)),
      mu_cell(d.mu, 3, 5, sc(xi_sq, 4), true,
              "printed as xi^2 e_x x; twisting gives xi^2 e_x x^2"),
      mu_cell(d.mu, 4, 4, sc(xi_sq * p, 5)),
      mu_cell(d.mu, 4, 5, sc(rp_inv, 3)),
      mu_cell(d.mu, 5, 5, sc(-xi * rp_inv, 4), true,
              "printed coefficient -xi r^-1 p^-1; twisting gives "
              "-xi r^-1 p^-2"),
      mu_cell(d.mu, 6, 6, t1(6)),
      mu_cell(d.mu, 6, 7, sc(xi_sq, 7)),
      mu_cell(d.mu, 6, 8, sc(-xi, 8)),
      mu_cell(d.mu, 7, 7, sc(-xi * p * p, 8)),
      mu_cell(d.mu, 7, 8, sc(r * p, 8), true,
              "printed as r p e_{x^2} x^2; twisting gives r p e_{x^2} 1"),
      mu_cell(d.mu, 8, 8, sc(xi_sq * r * p.inverse(), 7)),
  };

  FixtureReport dl;
  dl.name = "dwz3_twisted_delta";
  dl.note = note;
  auto dmap = delta_linmap(d.delta);
  auto drow = [&](int i, TensorElement printed) {
    const TensorElement computed =
        i == 0 ? apply(dmap, u) : comul_basis(d.delta, i);
    return cell("delta", {i}, std::move(printed), computed);
  };
  // 1(x)e_i + e_i(x)1 - 2 e_i(x)e_i - e_j(x)e_i - e_i(x)e_j + e_j(x)e_j
  auto idem_row = [&](int i, int j) {
    TensorElement v = te_add(k2(u, t1(i)), k2(t1(i), u));
    v = te_sub(v, te_scale(two, k2(t1(i), t1(i))));
    v = te_sub(v, te_add(k2(t1(j), t1(i)), k2(t1(i), t1(j))));
    return te_add(v, k2(t1(j), t1(j)));
  };
  dl.entries = {
      drow(0, k2(u, u)),
      drow(1, te_add(k2(t1(1), t1(1)),
                     te_scale(rp_inv, te_add(k2(t1(7), t1(4)), k2(t1(4), t1(7)))))),
      drow(2, te_add(k2(t1(2), t1(2)),
                     te_scale(r * p, te_add(k2(t1(8), t1(5)), k2(t1(5), t1(8)))))),
      drow(3, idem_row(3, 6)),
      drow(4, te_scale(-xi, te_add(k2(t1(1), t1(4)),
                                   te_add(k2(t1(4), t1(1)),
                                          te_scale(rp_inv * p.inverse(),
                                                   k2(t1(7), t1(7))))))),
      drow(5, te_scale(xi_sq, te_add(k2(t1(2), t1(5)),
                                     te_add(k2(t1(5), t1(2)),
                                            te_scale(r * p.inverse(),
                                                     k2(t1(8), t1(8))))))),
      drow(6, idem_row(6, 3)),
      drow(7, te_scale(xi_sq, te_add(k2(t1(1), t1(7)),
                                     te_add(k2(t1(7), t1(1)),
                                            te_scale(p, k2(t1(4), t1(4))))))),
      drow(8, te_scale(-xi, te_add(k2(t1(2), t1(8)),
                                   te_add(k2(t1(8), t1(2)),
                                          te_scale(p * p, k2(t1(5), t1(5))))))),
  };
  return {mu, dl};
}

}  // namespace

std::vector<CatalogEntry> catalog(CtxPtr ctx) {
  const Scalar a = Scalar::parameter(ctx, "a");
  const Scalar b = Scalar::parameter(ctx, "b");
  const Scalar lambda = Scalar::parameter(ctx, "lambda");
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "example_3dim";
    e.description =
        "3-dimensional Hom-associative but non-associative algebra, "
        "twist diag(a, a, b), no unit";
    e.structure = example_3dim(ctx, a, b);
    e.expected = {{"hom_associativity", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "sweedler";
    e.description =
        "one-parameter Hom-deformation of the 4-dimensional Sweedler "
        "Hopf algebra (lambda = 1 is the classical structure)";
    HomBialgebra s = sweedler_family(ctx, lambda);
    e.fixtures = {sweedler_mu_fixture(s, lambda)};
    e.structure = std::move(s);
    e.expected = {{"bialgebra", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "group_z2_id";
    e.description = "group bialgebra of Z2 with the identity endomorphism";
    e.structure = group_hombialgebra(cyclic_group(2), {0, 1}, ctx);
    e.expected = {{"bialgebra", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "group_z3_square";
    e.description = "group Hom-bialgebra of Z3 twisted by the squaring map";
    e.structure = group_hombialgebra(cyclic_group(3), {0, 2, 1}, ctx);
    e.expected = {{"bialgebra", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "dh2";
    e.description =
        "4-dimensional quasi-bialgebra on (1, X, Y, XY) with "
        "Phi = 1 - 2 P(x)P(x)P and its five printed self-maps";
    DH2 d = dh2(ctx);
    e.structure = std::move(d.structure);
    e.morphisms = std::move(d.morphisms);
    e.expected = {{"hq", true},
                  {"morphism:hq:alpha1", true},
                  {"morphism:hq:alpha2_printed", false},
                  {"morphism:hq:alpha2_rescaled", true},
                  {"morphism:hq:alpha3_printed", false},
                  {"morphism:hq:alpha3_rescaled", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "dh2_hq1";
    e.description = "twist of dh2 by the basis swap alpha1";
    HQBialgebra h = dh2_hq(ctx, 1);
    e.fixtures = dh2_hq_fixtures(h, 1);
    e.structure = std::move(h);
    e.expected = {{"hq", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "dh2_hq2";
    e.description = "twist of dh2 by the rescaled mixing map alpha2";
    HQBialgebra h = dh2_hq(ctx, 2);
    e.fixtures = dh2_hq_fixtures(h, 2);
    e.structure = std::move(h);
    e.expected = {{"hq", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "dwz3";
    e.description =
        "twisted quantum double of Z3 for the symbolic cocycle family "
        "(parameters p, q; r = zeta_3)";
    QTHQBialgebra d = dwz3(ctx, "p", "q", 1);
    e.fixtures = dwz3_fixtures(d, 1);
    e.fixtures.push_back(dwz3_unit_fixture(d));
    e.structure = std::move(d);
    e.morphisms = dwz3_morphisms(ctx);
    e.expected = {{"hq", true},
                  {"qt", true},
                  {"morphism:hq:f", true},
                  {"morphism:hq:g", true},
                  {"morphism:hq:g_printed", false},
                  {"morphism:qthq:f", false}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "dwz3_twisted";
    e.description =
        "twist of the Z3 quantum double by its diagonal self-map f "
        "(non-associative; f drops the quasi-triangular structure)";
    HQBialgebra h = dwz3_twisted(ctx);
    e.fixtures = dwz3_twisted_fixtures(h, 1);
    e.structure = std::move(h);
    e.expected = {{"hq", true}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "dwz2_trivial";
    e.description = "quantum double of Z2 with the trivial cocycle";
    const FiniteGroup z2 = cyclic_group(2);
    e.structure = build_dw_double(z2, trivial_cocycle(z2, ctx));
    e.expected = {{"hq", true}, {"qt", true}};
    out.push_back(std::move(e));
  }
  return out;
}

const CatalogEntry* catalog_find(const std::vector<CatalogEntry>& entries,
                                 const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

template <typename F>
bool on_algebra_part(const AnyStructure& s, const std::string& check, F&& fn) {
  if (const auto* a = std::get_if<HomAlgebra>(&s)) return fn(*a);
  if (const auto* b = std::get_if<HomBialgebra>(&s)) return fn(algebra_part(*b));
  if (const auto* h = std::get_if<HQBialgebra>(&s)) return fn(algebra_part(*h));
  if (const auto* q = std::get_if<QTHQBialgebra>(&s)) return fn(algebra_part(*q));
  throw Error("check '" + check + "' needs an algebra part");
}

template <typename F>
bool on_coalgebra_part(const AnyStructure& s, const std::string& check, F&& fn) {
  if (const auto* c = std::get_if<HomCoalgebra>(&s)) return fn(*c);
  if (const auto* b = std::get_if<HomBialgebra>(&s)) return fn(coalgebra_part(*b));
  if (const auto* h = std::get_if<HQBialgebra>(&s)) return fn(coalgebra_part(*h));
  if (const auto* q = std::get_if<QTHQBialgebra>(&s)) return fn(coalgebra_part(*q));
  throw Error("check '" + check + "' needs a coalgebra part");
}

}  // namespace

bool evaluate_check(const CatalogEntry& entry, const std::string& check) {
  if (check.rfind("morphism:", 0) == 0) {
    const std::string rest = check.substr(9);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw Error("morphism checks are spelled morphism:<level>:<name>");
    const auto level = level_from_name(rest.substr(0, colon));
    if (!level)
      throw Error("unknown morphism level '" + rest.substr(0, colon) + "'");
    const std::string mname = rest.substr(colon + 1);
    for (const auto& [name, map] : entry.morphisms)
      if (name == mname)
        return check_morphism(*level, /*weak=*/false, map, entry.structure,
                              entry.structure)
            .overall();
    throw Error("catalog entry '" + entry.name + "' has no morphism '" +
                mname + "'");
  }
  const AnyStructure& s = entry.structure;
  if (check == "hom_associativity")
    return on_algebra_part(s, check, [](const HomAlgebra& a) {
      return check_hom_associativity(a).overall();
    });
  if (check == "unit")
    return on_algebra_part(
        s, check, [](const HomAlgebra& a) { return check_unit(a).overall(); });
  if (check == "coalgebra")
    return on_coalgebra_part(s, check, [](const HomCoalgebra& c) {
      AxiomReport rep = check_comultiplicative(c);
      rep.merge(check_hom_coassociativity(c));
      rep.merge(check_counit(c));
      return rep.overall();
    });
  if (check == "bialgebra") {
    if (const auto* b = std::get_if<HomBialgebra>(&s))
      return check_hom_bialgebra(*b).overall();
    throw Error("check 'bialgebra' applies to Hom-bialgebra entries only");
  }
  if (check == "hq") {
    if (const auto* h = std::get_if<HQBialgebra>(&s)) return check_hq(*h).overall();
    if (const auto* q = std::get_if<QTHQBialgebra>(&s))
      return check_hq(*q).overall();
    throw Error("check 'hq' applies to HQ-bialgebra entries only");
  }
  if (check == "qt") {
    if (const auto* q = std::get_if<QTHQBialgebra>(&s))
      return check_qt(*q).overall();
    throw Error("check 'qt' applies to quasi-triangular entries only");
  }
  throw Error("unknown check '" + check + "'");
}

}  // namespace hqb
