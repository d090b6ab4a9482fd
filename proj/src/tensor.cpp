#include "hqb/tensor.hpp"

#include <algorithm>

namespace hqb {

std::shared_ptr<const Space> Space::create(std::vector<std::string> labels) {
  auto sp = std::make_shared<Space>();
  sp->dim = static_cast<int>(labels.size());
  sp->labels = std::move(labels);
  for (std::size_t i = 0; i < sp->labels.size(); ++i)
    for (std::size_t j = i + 1; j < sp->labels.size(); ++j)
      if (sp->labels[i] == sp->labels[j])
        throw Error("duplicate basis label '" + sp->labels[i] + "'");
  return sp;
}

std::shared_ptr<const Space> Space::create(int dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  return create(std::move(labels));
}

Key pack_key(const std::vector<int>& idx) {
  if (idx.size() > 8) throw IndexOutOfRange("tensor power exceeds 8");
  Key k = 0;
  for (int v : idx) {
    if (v < 0 || v > 255) throw IndexOutOfRange("basis index out of byte range");
    k = (k << 8) | static_cast<Key>(v);
  }
  return k;
}

std::vector<int> unpack_key(Key k, int power) {
  std::vector<int> idx(power);
  for (int t = power - 1; t >= 0; --t) {
    idx[t] = static_cast<int>(k & 0xff);
    k >>= 8;
  }
  return idx;
}

std::vector<Key> all_keys(int dim, int power) {
  std::vector<Key> keys;
  std::size_t total = 1;
  for (int t = 0; t < power; ++t) total *= dim;
  keys.reserve(total);
  std::vector<int> idx(power, 0);
  for (;;) {
    keys.push_back(pack_key(idx));
    int t = power - 1;
    while (t >= 0 && ++idx[t] == dim) idx[t--] = 0;
    if (t < 0) break;
  }
  if (power == 0) keys = {0};
  return keys;
}

void TensorElement::add_term(Key k, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = coords.find(k);
  if (it == coords.end()) {
    coords.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) coords.erase(it);
  }
}

Scalar TensorElement::coefficient(Key k) const {
  auto it = coords.find(k);
  return it == coords.end() ? Scalar() : it->second;
}

TensorElement te_zero(int power) { return TensorElement{power, {}}; }

TensorElement te_scalar(const Scalar& v) {
  TensorElement r{0, {}};
  r.add_term(0, v);
  return r;
}

TensorElement te_basis(int power, Key k, const CtxPtr& ctx) {
  TensorElement r{power, {}};
  r.add_term(k, Scalar::one(ctx));
  return r;
}

TensorElement te_basis1(int i, const CtxPtr& ctx) {
  return te_basis(1, static_cast<Key>(i), ctx);
}

TensorElement te_add(const TensorElement& a, const TensorElement& b) {
  if (a.power != b.power) throw PowerMismatch("tensor addition: powers differ");
  TensorElement r = a;
  for (const auto& [k, v] : b.coords) r.add_term(k, v);
  return r;
}

TensorElement te_neg(const TensorElement& a) {
  TensorElement r = a;
  for (auto& [k, v] : r.coords) v = -v;
  return r;
}

TensorElement te_sub(const TensorElement& a, const TensorElement& b) {
  return te_add(a, te_neg(b));
}

TensorElement te_scale(const Scalar& c, const TensorElement& a) {
  TensorElement r{a.power, {}};
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.coords) r.add_term(k, c * v);
  return r;
}

TensorElement te_kron(const TensorElement& a, const TensorElement& b) {
  TensorElement r{a.power + b.power, {}};
  for (const auto& [ka, va] : a.coords)
    for (const auto& [kb, vb] : b.coords)
      r.add_term(concat_keys(ka, kb, b.power), va * vb);
  return r;
}

bool te_equal(const TensorElement& a, const TensorElement& b) {
  return te_sub(a, b).is_zero();
}

TensorElement perm_legs(const TensorElement& v, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != v.power)
    throw BadPermutation("permutation length does not match tensor power");
  std::vector<bool> seen(v.power, false);
  for (int s : sigma) {
    if (s < 1 || s > v.power || seen[s - 1])
      throw BadPermutation("not a bijection on {1..k}");
    seen[s - 1] = true;
  }
  TensorElement r{v.power, {}};
  for (const auto& [k, c] : v.coords) {
    std::vector<int> idx = unpack_key(k, v.power);
    std::vector<int> out(v.power);
    for (int t = 0; t < v.power; ++t) out[t] = idx[sigma[t] - 1];
    r.add_term(pack_key(out), c);
  }
  return r;
}

TensorElement embed_legs(const TensorElement& v, int k, const std::vector<int>& slots,
                         const TensorElement& unit) {
  if (static_cast<int>(slots.size()) != v.power)
    throw SlotConflict("slot count does not match tensor power");
  if (unit.power != 1) throw PowerMismatch("unit must have power 1");
  std::vector<bool> used(k, false);
  for (std::size_t s = 0; s + 1 < slots.size(); ++s)
    if (slots[s] >= slots[s + 1])
      throw SlotConflict("slots must be strictly increasing");
  std::vector<int> free_slots;
  for (int s : slots) {
    if (s < 1 || s > k) throw SlotConflict("slot out of range");
    used[s - 1] = true;
  }
  for (int t = 0; t < k; ++t)
    if (!used[t]) free_slots.push_back(t);

  TensorElement r{k, {}};
  // Iterate terms of v crossed with one unit term per free slot.
  std::vector<std::map<Key, Scalar>::const_iterator> its(free_slots.size(),
                                                         unit.coords.begin());
  if (!free_slots.empty() && unit.is_zero()) return r;
  for (const auto& [kv, cv] : v.coords) {
    std::vector<int> vidx = unpack_key(kv, v.power);
    for (auto& it : its) it = unit.coords.begin();
    for (;;) {
      std::vector<int> out(k, 0);
      Scalar coef = cv;
      for (int t = 0; t < v.power; ++t) out[slots[t] - 1] = vidx[t];
      for (std::size_t f = 0; f < free_slots.size(); ++f) {
        out[free_slots[f]] = static_cast<int>(its[f]->first);
        coef = coef * its[f]->second;
      }
      r.add_term(pack_key(out), coef);
      // advance the mixed-radix iterator over unit terms
      std::size_t f = free_slots.size();
      while (f > 0) {
        if (++its[f - 1] != unit.coords.end()) break;
        its[f - 1] = unit.coords.begin();
        --f;
      }
      if (f == 0) break;
    }
  }
  return r;
}

void LinMap::add_entry(Key in, Key out, const Scalar& v) {
  if (v.is_zero()) return;
  auto& col = cols[in];
  auto it = col.find(out);
  if (it == col.end()) {
    col.emplace(out, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) {
      col.erase(it);
      if (col.empty()) cols.erase(in);
    }
  }
}

Scalar LinMap::entry(Key in, Key out) const {
  auto c = cols.find(in);
  if (c == cols.end()) return Scalar();
  auto it = c->second.find(out);
  return it == c->second.end() ? Scalar() : it->second;
}

LinMap lin_identity(const CtxPtr& ctx, int dim, int power) {
  LinMap f;
  f.src = f.dst = power;
  Scalar one = Scalar::one(ctx);
  for (Key k : all_keys(dim, power)) f.add_entry(k, k, one);
  return f;
}

LinMap tau(const CtxPtr& ctx, int dim, int k, int i, int j) {
  if (!(1 <= i && i < j && j <= k))
    throw IndexOutOfRange("tau: indices must satisfy 1 <= i < j <= k");
  LinMap f;
  f.src = f.dst = k;
  Scalar one = Scalar::one(ctx);
  for (Key key : all_keys(dim, k)) {
    std::vector<int> idx = unpack_key(key, k);
    std::swap(idx[i - 1], idx[j - 1]);
    f.add_entry(key, pack_key(idx), one);
  }
  return f;
}

TensorElement apply(const LinMap& f, const TensorElement& v) {
  if (f.src != v.power) throw PowerMismatch("apply: map source power != element power");
  TensorElement r{f.dst, {}};
  for (const auto& [k, c] : v.coords) {
    auto col = f.cols.find(k);
    if (col == f.cols.end()) continue;
    for (const auto& [out, w] : col->second) r.add_term(out, c * w);
  }
  return r;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.dst != f.src) throw PowerMismatch("compose: inner powers differ");
  LinMap r;
  r.src = g.src;
  r.dst = f.dst;
  for (const auto& [in, mid_col] : g.cols) {
    for (const auto& [mid, c1] : mid_col) {
      auto fc = f.cols.find(mid);
      if (fc == f.cols.end()) continue;
      for (const auto& [out, c2] : fc->second) r.add_entry(in, out, c1 * c2);
    }
  }
  return r;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  LinMap r;
  r.src = f.src + g.src;
  r.dst = f.dst + g.dst;
  for (const auto& [inf, colf] : f.cols)
    for (const auto& [ing, colg] : g.cols) {
      Key in = concat_keys(inf, ing, g.src);
      for (const auto& [outf, cf] : colf)
        for (const auto& [outg, cg] : colg)
          r.add_entry(in, concat_keys(outf, outg, g.dst), cf * cg);
    }
  return r;
}

LinMap transpose(const LinMap& f) {
  LinMap r;
  r.src = f.dst;
  r.dst = f.src;
  for (const auto& [in, col] : f.cols)
    for (const auto& [out, c] : col) r.add_entry(out, in, c);
  return r;
}

bool lin_equal(const LinMap& f, const LinMap& g) {
  if (f.src != g.src || f.dst != g.dst) return false;
  auto covered = [](const LinMap& a, const LinMap& b) {
    for (const auto& [in, col] : a.cols)
      for (const auto& [out, c] : col)
        if (!(c == b.entry(in, out))) return false;
    return true;
  };
  return covered(f, g) && covered(g, f);
}

void MulMap::add(int i, int j, int k, const Scalar& v) {
  if (v.is_zero()) return;
  auto& cell = c[{i, j}];
  auto it = cell.find(k);
  if (it == cell.end()) {
    cell.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) {
      cell.erase(it);
      if (cell.empty()) c.erase({i, j});
    }
  }
}

void ComulMap::add(int i, int j, int k, const Scalar& v) {
  if (v.is_zero()) return;
  Key out = concat_keys(static_cast<Key>(j), static_cast<Key>(k), 1);
  auto& cell = d[i];
  auto it = cell.find(out);
  if (it == cell.end()) {
    cell.emplace(out, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) {
      cell.erase(it);
      if (cell.empty()) d.erase(i);
    }
  }
}

TensorElement mul_basis(const MulMap& mu, int i, int j) {
  TensorElement r{1, {}};
  auto it = mu.c.find({i, j});
  if (it == mu.c.end()) return r;
  for (const auto& [k, v] : it->second) r.add_term(static_cast<Key>(k), v);
  return r;
}

TensorElement comul_basis(const ComulMap& delta, int i) {
  TensorElement r{2, {}};
  auto it = delta.d.find(i);
  if (it == delta.d.end()) return r;
  r.coords = it->second;
  return r;
}

TensorElement mul_on_power(const MulMap& mu, const TensorElement& u,
                           const TensorElement& v) {
  if (u.power != v.power) throw PowerMismatch("componentwise product: powers differ");
  int k = u.power;
  TensorElement r{k, {}};
  for (const auto& [ku, cu] : u.coords) {
    for (const auto& [kv, cv] : v.coords) {
      // legwise product: running sparse map of partial tuples
      std::map<Key, Scalar> acc{{0, cu * cv}};
      for (int t = 0; t < k && !acc.empty(); ++t) {
        int i = key_leg(ku, k, t);
        int j = key_leg(kv, k, t);
        auto cell = mu.c.find({i, j});
        std::map<Key, Scalar> next;
        if (cell == mu.c.end()) {
          acc.clear();
          break;
        }
        for (const auto& [partial, pc] : acc)
          for (const auto& [b, bc] : cell->second) {
            Scalar w = pc * bc;
            if (w.is_zero()) continue;
            Key nk = (partial << 8) | static_cast<Key>(b);
            auto it = next.find(nk);
            if (it == next.end())
              next.emplace(nk, w);
            else {
              it->second += w;
              if (it->second.is_zero()) next.erase(it);
            }
          }
        acc = std::move(next);
      }
      for (const auto& [kk, cc] : acc) r.add_term(kk, cc);
    }
  }
  return r;
}

LinMap mu_linmap(const MulMap& mu) {
  LinMap f;
  f.src = 2;
  f.dst = 1;
  for (const auto& [ij, cell] : mu.c) {
    Key in = concat_keys(static_cast<Key>(ij.first), static_cast<Key>(ij.second), 1);
    for (const auto& [k, v] : cell) f.add_entry(in, static_cast<Key>(k), v);
  }
  return f;
}

LinMap delta_linmap(const ComulMap& delta) {
  LinMap f;
  f.src = 1;
  f.dst = 2;
  for (const auto& [i, cell] : delta.d)
    for (const auto& [jk, v] : cell) f.add_entry(static_cast<Key>(i), jk, v);
  return f;
}

std::optional<InvertResult> invert_element(const MulMap& mu, const TensorElement& unit,
                                           const TensorElement& v) {
  int k = v.power;
  int dim = mu.dim;
  if (k < 1) throw PowerMismatch("invert_element: power must be >= 1");
  CtxPtr ctx;
  for (const auto& [kk, c] : v.coords)
    if (c.context()) {
      ctx = c.context();
      break;
    }
  if (!ctx)
    for (const auto& [kk, c] : unit.coords)
      if (c.context()) ctx = c.context();
  if (!ctx) return std::nullopt;  // zero element over no context: no inverse

  TensorElement target = unit;
  for (int t = 1; t < k; ++t) target = te_kron(target, unit);

  std::vector<Key> keys = all_keys(dim, k);
  std::map<Key, int> col_of;
  for (std::size_t c = 0; c < keys.size(); ++c) col_of[keys[c]] = static_cast<int>(c);

  // Equations indexed by (side, output tuple).
  std::map<std::pair<int, Key>, SparseRow> eq;
  auto accumulate = [&](int side, Key w_key, const TensorElement& prod,
                        const Scalar& scale) {
    for (const auto& [out, c] : prod.coords) {
      eq[{side, out}].lhs[col_of[w_key]] += scale * c;
    }
  };
  for (Key w : keys) {
    TensorElement ew = te_basis(k, w, ctx);
    for (const auto& [kv, cv] : v.coords) {
      TensorElement evt = te_basis(k, kv, ctx);
      accumulate(0, w, mul_on_power(mu, evt, ew), cv);  // v * w
      accumulate(1, w, mul_on_power(mu, ew, evt), cv);  // w * v
    }
  }
  // Target coordinates (absent rows with nonzero target become inconsistent).
  for (const auto& [out, c] : target.coords) {
    eq[{0, out}].rhs = c;
    eq[{1, out}].rhs = c;
  }
  std::vector<SparseRow> rows;
  rows.reserve(eq.size());
  for (auto& [key, row] : eq) {
    // prune zero coefficients accumulated via +=
    for (auto it = row.lhs.begin(); it != row.lhs.end();)
      it = it->second.is_zero() ? row.lhs.erase(it) : std::next(it);
    rows.push_back(std::move(row));
  }
  auto sol = solve_linear_system(std::move(rows), static_cast<int>(keys.size()), ctx);
  if (!sol) return std::nullopt;
  TensorElement w{k, {}};
  for (std::size_t c = 0; c < keys.size(); ++c) w.add_term(keys[c], sol->values[c]);
  // Defensive re-check of both unit equations.
  if (!te_equal(mul_on_power(mu, v, w), target) ||
      !te_equal(mul_on_power(mu, w, v), target))
    return std::nullopt;
  return InvertResult{std::move(w), sol->unique};
}

// ---------------------------------------------------------------------------
// Exact linear solver
// ---------------------------------------------------------------------------

namespace {

/// Complexity estimate used for pivot choice: prefer trivial-denominator,
/// few-term scalars.
std::size_t pivot_cost(const Scalar& s) {
  return s.term_count() + (s.has_trivial_denominator() ? 0 : 100);
}

struct Eliminator {
  std::vector<SparseRow> rows;
  std::vector<int> pivot_col_of_row;  // -1 when the row is spent/empty
  std::map<int, int> row_of_pivot_col;

  void run(const CtxPtr& ctx) {
    (void)ctx;
    pivot_col_of_row.assign(rows.size(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      // choose this row's pivot among columns not yet pivoted
      int best_col = -1;
      std::size_t best_cost = 0;
      for (const auto& [c, val] : rows[r].lhs) {
        if (row_of_pivot_col.count(c)) continue;
        std::size_t cost = pivot_cost(val);
        if (best_col < 0 || cost < best_cost) {
          best_col = c;
          best_cost = cost;
        }
      }
      if (best_col < 0) continue;  // row already reduced to lhs == 0 (or spent)
      // normalize
      Scalar inv = rows[r].lhs[best_col].inverse();
      for (auto& [c, val] : rows[r].lhs) val = val * inv;
      rows[r].rhs = rows[r].rhs * inv;
      // eliminate from every other row
      for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
        if (r2 == r) continue;
        auto it = rows[r2].lhs.find(best_col);
        if (it == rows[r2].lhs.end()) continue;
        Scalar f = it->second;
        rows[r2].lhs.erase(it);
        for (const auto& [c, val] : rows[r].lhs) {
          if (c == best_col) continue;
          auto jt = rows[r2].lhs.find(c);
          if (jt == rows[r2].lhs.end()) {
            Scalar nv = -(f * val);
            if (!nv.is_zero()) rows[r2].lhs.emplace(c, nv);
          } else {
            jt->second -= f * val;
            if (jt->second.is_zero()) rows[r2].lhs.erase(jt);
          }
        }
        rows[r2].rhs -= f * rows[r].rhs;
      }
      pivot_col_of_row[r] = best_col;
      row_of_pivot_col[best_col] = static_cast<int>(r);
    }
  }

  bool consistent() const {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (pivot_col_of_row[r] < 0 && rows[r].lhs.empty() && !rows[r].rhs.is_zero())
        return false;
    // rows with nonempty lhs but no pivot cannot remain after Gauss-Jordan
    return true;
  }
};

}  // namespace

std::optional<LinearSolution> solve_linear_system(std::vector<SparseRow> rows,
                                                  int n_unknowns, const CtxPtr& ctx) {
  Eliminator e{std::move(rows), {}, {}};
  e.run(ctx);
  if (!e.consistent()) return std::nullopt;
  LinearSolution sol;
  sol.values.assign(n_unknowns, Scalar::zero(ctx));
  for (const auto& [col, row] : e.row_of_pivot_col) {
    // After Gauss-Jordan a pivot row may still reference free columns; free
    // unknowns are set to zero, so the pivot value is just the rhs.
    sol.values[col] = e.rows[row].rhs;
  }
  sol.unique = (static_cast<int>(e.row_of_pivot_col.size()) == n_unknowns);
  return sol;
}

std::vector<std::vector<Scalar>> nullspace_basis(std::vector<SparseRow> rows,
                                                 int n_unknowns, const CtxPtr& ctx) {
  for (auto& r : rows) r.rhs = Scalar::zero(ctx);
  Eliminator e{std::move(rows), {}, {}};
  e.run(ctx);
  std::vector<std::vector<Scalar>> basis;
  for (int c = 0; c < n_unknowns; ++c) {
    if (e.row_of_pivot_col.count(c)) continue;
    // free column c: vector with 1 there, pivots adjusted
    std::vector<Scalar> vec(n_unknowns, Scalar::zero(ctx));
    vec[c] = Scalar::one(ctx);
    for (const auto& [pc, pr] : e.row_of_pivot_col) {
      auto it = e.rows[pr].lhs.find(c);
      if (it != e.rows[pr].lhs.end()) vec[pc] = -it->second;
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace hqb
