#include "hqb/quantum.hpp"

#include <utility>

namespace hqb {

namespace {

std::string failing_summary(const AxiomReport& rep) {
  for (const auto& e : rep.entries)
    if (!e.pass) return e.axiom;
  return "";
}

// Records the first failing tuple and counts the rest.
struct CocycleScan {
  AxiomEntry entry;

  explicit CocycleScan(std::string axiom) { entry.axiom = std::move(axiom); }

  void observe(std::initializer_list<int> tuple, const Scalar& residual) {
    if (residual.is_zero()) return;
    if (entry.pass) {
      entry.pass = false;
      entry.witness = std::vector<int>(tuple);
      entry.residual = te_scalar(residual);
    }
    ++entry.fail_count;
  }
};

}  // namespace

bool FiniteGroup::abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

FiniteGroup make_group(std::vector<std::vector<int>> table,
                       std::vector<std::string> labels) {
  FiniteGroup g;
  g.n = static_cast<int>(table.size());
  if (g.n <= 0) throw InvalidGroup("group must have at least the identity");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != g.n)
      throw InvalidGroup("multiplication table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= g.n)
        throw InvalidGroup("multiplication table entry out of range");
  g.table = std::move(table);

  for (int a = 0; a < g.n; ++a)
    if (g.table[0][a] != a || g.table[a][0] != a)
      throw InvalidGroup("element 0 is not a two-sided identity");

  g.inv.assign(g.n, -1);
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b)
      if (g.table[a][b] == 0 && g.table[b][a] == 0) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0)
      throw InvalidGroup("element " + std::to_string(a) +
                         " has no two-sided inverse");
  }

  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw InvalidGroup("multiplication table is not associative at (" +
                             std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")");

  if (labels.empty()) {
    for (int a = 0; a < g.n; ++a) g.labels.push_back("g" + std::to_string(a));
    g.labels[0] = "1";
  } else {
    if (static_cast<int>(labels.size()) != g.n)
      throw InvalidGroup("label count does not match group order");
    g.labels = std::move(labels);
  }
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidGroup("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));
  }
  return make_group(std::move(table), std::move(labels));
}

Cocycle3 trivial_cocycle(const FiniteGroup& g, CtxPtr ctx) {
  Cocycle3 w;
  w.group = g;
  w.ctx = ctx;
  w.values.assign(static_cast<size_t>(g.n) * g.n * g.n, Scalar::one(ctx));
  return w;
}

AxiomReport check_cocycle3(const Cocycle3& w) {
  AxiomReport rep;
  const FiniteGroup& g = w.group;
  const Scalar one = Scalar::one(w.ctx);

  CocycleScan nonzero("cocycle_nonzero");
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      for (int z = 0; z < g.n; ++z)
        if (w.value(x, y, z).is_zero())
          nonzero.observe({x, y, z}, one);  // unreachable target: 1 vs 0
  if (!nonzero.entry.pass)
    nonzero.entry.note =
        "zero entries are not invertible; the remaining checks were skipped";
  rep.entries.push_back(nonzero.entry);
  if (!nonzero.entry.pass) return rep;

  CocycleScan norm("cocycle_normalized");
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      for (int z = 0; z < g.n; ++z)
        if (x == 0 || y == 0 || z == 0)
          norm.observe({x, y, z}, w.value(x, y, z) - one);
  rep.entries.push_back(norm.entry);

  CocycleScan coc("cocycle_identity");
  for (int t = 0; t < g.n; ++t)
    for (int x = 0; x < g.n; ++x)
      for (int y = 0; y < g.n; ++y)
        for (int z = 0; z < g.n; ++z) {
          Scalar lhs = w.value(x, y, z) / w.value(g.mul(t, x), y, z) *
                       w.value(t, g.mul(x, y), z) /
                       w.value(t, x, g.mul(y, z)) * w.value(t, x, y);
          coc.observe({t, x, y, z}, lhs - one);
        }
  rep.entries.push_back(coc.entry);
  return rep;
}

Scalar theta(const Cocycle3& w, int g, int x, int y) {
  const FiniteGroup& G = w.group;
  int xy = G.mul(x, y);
  int c1 = G.conjugate(G.inverse(xy), g);  // (xy)^{-1} g (xy)
  int c2 = G.conjugate(G.inverse(x), g);   // x^{-1} g x
  return w.value(g, x, y) * w.value(x, y, c1) / w.value(x, c2, y);
}

Scalar gamma_coeff(const Cocycle3& w, int x, int u, int v) {
  const FiniteGroup& G = w.group;
  int cu = G.conjugate(G.inverse(x), u);  // x^{-1} u x
  int cv = G.conjugate(G.inverse(x), v);  // x^{-1} v x
  return w.value(u, v, x) * w.value(x, cu, cv) / w.value(u, x, cv);
}

Cocycle3 z3_cocycle_values(CtxPtr ctx, const Scalar& p, const Scalar& q,
                           int r_choice) {
  if (p.is_zero() || q.is_zero())
    throw Error("cocycle parameters must be nonzero");
  if (r_choice < 0 || r_choice > 2)
    throw Error("the cube root choice must be 0, 1, or 2");
  int order = ctx->cyclotomic_order();
  if (r_choice != 0 && order % 3 != 0)
    throw Error("a primitive cube root of unity needs a cyclotomic order "
                "divisible by 3 (have " + std::to_string(order) + ")");
  Scalar r = r_choice == 0 ? Scalar::one(ctx)
                           : Scalar::root(ctx, order / 3 * r_choice);
  Cocycle3 w = trivial_cocycle(cyclic_group(3), ctx);
  w.set(1, 1, 1, p);
  w.set(1, 1, 2, q);
  w.set(1, 2, 1, (r * p).inverse());
  w.set(1, 2, 2, r / q);
  w.set(2, 1, 1, p / (r * q));
  w.set(2, 1, 2, r * p);
  w.set(2, 2, 1, q / (r * p));
  w.set(2, 2, 2, r / p);
  return w;
}

Cocycle3 z3_cocycle(CtxPtr ctx, const std::string& p_name,
                    const std::string& q_name, int r_choice) {
  return z3_cocycle_values(ctx, Scalar::parameter(ctx, p_name),
                           Scalar::parameter(ctx, q_name), r_choice);
}

QTHQBialgebra build_dw_double(const FiniteGroup& g, const Cocycle3& w) {
  if (w.group.n != g.n || w.group.table != g.table)
    throw Error("the cocycle is defined on a different group");
  AxiomReport pre = check_cocycle3(w);
  if (!pre.overall())
    throw InvalidCocycle("the coefficient table is not a normalized 3-cocycle"
                         " (first failing condition: " +
                             failing_summary(pre) + ")",
                         pre);

  const int n = g.n;
  const int dim = n * n;
  CtxPtr ctx = w.ctx;
  auto at = [&](int grp, int x) { return grp * n + x; };

  QTHQBialgebra out;
  out.ctx = ctx;
  std::vector<std::string> labels;
  for (int grp = 0; grp < n; ++grp)
    for (int x = 0; x < n; ++x)
      labels.push_back("e_{" + g.labels[grp] + "}·" + g.labels[x]);
  out.space = Space::create(labels);

  out.mu.dim = dim;
  for (int grp = 0; grp < n; ++grp)
    for (int x = 0; x < n; ++x)
      for (int h = 0; h < n; ++h)
        for (int y = 0; y < n; ++y)
          if (grp == g.conjugate(x, h))
            out.mu.add(at(grp, x), at(h, y), at(grp, g.mul(x, y)),
                       theta(w, grp, x, y));

  out.eta = TensorElement{1, {}};
  for (int grp = 0; grp < n; ++grp)
    out.eta.add_term(pack_key({at(grp, 0)}), Scalar::one(ctx));

  out.delta.dim = dim;
  for (int grp = 0; grp < n; ++grp)
    for (int x = 0; x < n; ++x)
      for (int u = 0; u < n; ++u) {
        int v = g.mul(g.inverse(u), grp);  // uv = grp
        out.delta.add(at(grp, x), at(u, x), at(v, x),
                      gamma_coeff(w, x, u, v));
      }

  out.eps.src = 1;
  out.eps.dst = 0;
  for (int x = 0; x < n; ++x)
    out.eps.add_entry(pack_key({at(0, x)}), pack_key({}), Scalar::one(ctx));

  out.alpha = lin_identity(ctx, dim, 1);

  out.phi = TensorElement{3, {}};
  TensorElement phi_inv{3, {}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Key key = pack_key({at(x, 0), at(y, 0), at(z, 0)});
        out.phi.add_term(key, w.value(x, y, z).inverse());
        phi_inv.add_term(key, w.value(x, y, z));
      }
  out.phi_inv = std::move(phi_inv);

  out.r = TensorElement{2, {}};
  for (int grp = 0; grp < n; ++grp)
    for (int h = 0; h < n; ++h)
      out.r.add_term(pack_key({at(grp, 0), at(h, grp)}), Scalar::one(ctx));
  cache_inverses(out);
  return out;
}

}  // namespace hqb
