#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hqb/tensor.hpp"

#include <random>

using namespace hqb;

namespace {

CtxPtr ctx() {
  static CtxPtr c = ScalarContext::create(24, {"p", "q"});
  return c;
}

Scalar sc(long v) { return Scalar::integer(ctx(), v); }

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  Scalar v = sc(num(rng));
  if (num(rng) > 1) v = v * Scalar::parameter(ctx(), "p");
  if (num(rng) > 2) v = v + Scalar::root(ctx(), 4);
  return v;
}

TensorElement random_element(std::mt19937& rng, int dim, int power, int nterms) {
  TensorElement v{power, {}};
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> idx(power);
    for (int& i : idx) i = pick(rng);
    v.add_term(pack_key(idx), random_scalar(rng));
  }
  return v;
}

LinMap random_map(std::mt19937& rng, int dim, int src, int dst, int nentries) {
  LinMap f;
  f.src = src;
  f.dst = dst;
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int t = 0; t < nentries; ++t) {
    std::vector<int> in(src), out(dst);
    for (int& i : in) i = pick(rng);
    for (int& i : out) i = pick(rng);
    f.add_entry(pack_key(in), pack_key(out), random_scalar(rng));
  }
  return f;
}

/// Dense oracle: a LinMap as a full matrix over enumerated keys.
using Dense = std::vector<std::vector<Scalar>>;

Dense to_dense(const LinMap& f, int dim) {
  std::vector<Key> ins = all_keys(dim, f.src), outs = all_keys(dim, f.dst);
  Dense m(outs.size(), std::vector<Scalar>(ins.size(), Scalar::zero(ctx())));
  for (std::size_t c = 0; c < ins.size(); ++c)
    for (std::size_t r = 0; r < outs.size(); ++r) {
      Scalar v = f.entry(ins[c], outs[r]);
      if (!v.is_zero()) m[r][c] = v;
    }
  return m;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r(a.size(), std::vector<Scalar>(b[0].size(), Scalar::zero(ctx())));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!a[i][k].is_zero())
        for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

bool dense_equal(const Dense& a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

}  // namespace

TEST_CASE("key packing is lexicographic") {
  std::vector<int> t1{1, 0, 2}, t2{1, 2, 0};
  CHECK(pack_key(t1) < pack_key(t2));
  CHECK(unpack_key(pack_key(t1), 3) == t1);
  CHECK(all_keys(3, 2).size() == 9);
  CHECK(all_keys(3, 0) == std::vector<Key>{0});
  CHECK(key_leg(pack_key(t2), 3, 1) == 2);
}

TEST_CASE("tensor element arithmetic") {
  TensorElement a = te_basis1(0, ctx());
  TensorElement b = te_basis1(1, ctx());
  TensorElement s = te_add(a, b);
  CHECK(s.coords.size() == 2);
  CHECK(te_sub(s, b).coords.size() == 1);
  CHECK(te_equal(te_sub(a, a), te_zero(1)));
  CHECK(te_scale(sc(0), s).is_zero());
  TensorElement ab = te_kron(a, b);
  CHECK(ab.power == 2);
  CHECK(ab.coefficient(pack_key({0, 1})) == sc(1));
}

TEST_CASE("perm_legs follows the subscript convention") {
  // v = x (x) y (x) z on distinct basis vectors; v_{321} = z (x) y (x) x
  TensorElement v{3, {}};
  v.add_term(pack_key({0, 1, 2}), sc(1));
  TensorElement rev = perm_legs(v, {3, 2, 1});
  CHECK(rev.coefficient(pack_key({2, 1, 0})) == sc(1));
  CHECK(te_equal(perm_legs(v, {1, 2, 3}), v));
  // result leg t carries original leg sigma(t): sigma = (2,3,1) puts
  // original leg 2 first.
  TensorElement c = perm_legs(v, {2, 3, 1});
  CHECK(c.coefficient(pack_key({1, 2, 0})) == sc(1));
  CHECK_THROWS_AS(perm_legs(v, {1, 1, 2}), BadPermutation);
  CHECK_THROWS_AS(perm_legs(v, {1, 2}), BadPermutation);

  std::mt19937 rng(7);
  for (int it = 0; it < 10; ++it) {
    TensorElement u = random_element(rng, 3, 3, 4);
    // applying sigma then its inverse restores the element
    TensorElement w = perm_legs(perm_legs(u, {2, 3, 1}), {3, 1, 2});
    CHECK(te_equal(w, u));
  }
}

TEST_CASE("embed_legs places legs and fills with the unit") {
  TensorElement unit = te_basis1(0, ctx());  // single-term unit
  TensorElement r{2, {}};
  r.add_term(pack_key({1, 2}), sc(5));
  TensorElement r12 = embed_legs(r, 3, {1, 2}, unit);
  CHECK(r12.coefficient(pack_key({1, 2, 0})) == sc(5));
  TensorElement r23 = embed_legs(r, 3, {2, 3}, unit);
  CHECK(r23.coefficient(pack_key({0, 1, 2})) == sc(5));
  TensorElement r13 = embed_legs(r, 3, {1, 3}, unit);
  CHECK(r13.coefficient(pack_key({1, 0, 2})) == sc(5));
  CHECK(te_equal(embed_legs(unit, 1, {1}, unit), unit));

  // multi-term unit (as in a quantum double where 1 = sum of idempotents)
  TensorElement msum{1, {}};
  msum.add_term(0, sc(1));
  msum.add_term(1, sc(1));
  msum.add_term(2, sc(1));
  TensorElement emb = embed_legs(r, 3, {1, 3}, msum);
  CHECK(emb.coords.size() == 3);
  CHECK(emb.coefficient(pack_key({1, 2, 2})) == sc(5));

  CHECK_THROWS_AS(embed_legs(r, 3, {2, 1}, unit), SlotConflict);
  CHECK_THROWS_AS(embed_legs(r, 3, {1, 4}, unit), SlotConflict);
}

TEST_CASE("apply/compose/kron agree with the dense oracle") {
  std::mt19937 rng(123);
  for (int it = 0; it < 12; ++it) {
    LinMap f = random_map(rng, 3, 1, 1, 5);
    LinMap g = random_map(rng, 3, 2, 1, 6);
    LinMap u = random_map(rng, 3, 1, 1, 4);
    LinMap v = random_map(rng, 3, 1, 2, 5);
    // compose vs dense
    LinMap fu = compose(f, u);
    CHECK(dense_equal(to_dense(fu, 3), dense_mul(to_dense(f, 3), to_dense(u, 3))));
    // apply(compose(f,g), w) = apply(f, apply(g, w))
    TensorElement w = random_element(rng, 3, 2, 4);
    CHECK(te_equal(apply(compose(f, g), w), apply(f, apply(g, w))));
    // (f(x)g)∘(u(x)v) = (f∘u)(x)(g∘v)
    LinMap lhs = compose(kron(f, g), kron(u, v));
    LinMap rhs = kron(compose(f, u), compose(g, v));
    CHECK(lin_equal(lhs, rhs));
    // kron acts factorwise on product elements
    TensorElement x = random_element(rng, 3, 1, 2);
    TensorElement y = random_element(rng, 3, 2, 3);
    CHECK(te_equal(apply(kron(f, g), te_kron(x, y)),
                   te_kron(apply(f, x), apply(g, y))));
  }
  LinMap id2 = lin_identity(ctx(), 3, 2);
  LinMap g = random_map(rng, 3, 2, 2, 5);
  CHECK(lin_equal(compose(g, id2), g));
  CHECK(lin_equal(compose(id2, g), g));
  CHECK(lin_equal(kron(lin_identity(ctx(), 3, 1), lin_identity(ctx(), 3, 1)), id2));
}

TEST_CASE("tau is the leg-swap permutation") {
  LinMap t12 = tau(ctx(), 3, 2, 1, 2);
  TensorElement xy{2, {}};
  xy.add_term(pack_key({0, 1}), sc(1));
  CHECK(te_equal(apply(t12, xy), [&] {
    TensorElement yx{2, {}};
    yx.add_term(pack_key({1, 0}), sc(1));
    return yx;
  }()));
  CHECK(lin_equal(compose(t12, t12), lin_identity(ctx(), 3, 2)));
  // tau(3,1,2)∘tau(3,2,3) is a 3-cycle: x(x)y(x)z -> z(x)x(x)y
  LinMap cyc = compose(tau(ctx(), 3, 3, 1, 2), tau(ctx(), 3, 3, 2, 3));
  TensorElement v{3, {}};
  v.add_term(pack_key({0, 1, 2}), sc(1));
  TensorElement cv = apply(cyc, v);
  CHECK(cv.coords.size() == 1);
  CHECK(cv.coefficient(pack_key({2, 0, 1})) == sc(1));
  CHECK(lin_equal(compose(cyc, compose(cyc, cyc)), lin_identity(ctx(), 3, 3)));
  CHECK_THROWS_AS(tau(ctx(), 3, 2, 2, 2), IndexOutOfRange);
}

namespace {

/// Small commutative test algebra on dim 3: e0 is a unit, e1*e1 = e2,
/// e1*e2 = e2*e1 = 0, e2*e2 = 0.
MulMap toy_mu() {
  MulMap mu;
  mu.dim = 3;
  for (int i = 0; i < 3; ++i) {
    mu.add(0, i, i, Scalar::one(ctx()));
    if (i != 0) mu.add(i, 0, i, Scalar::one(ctx()));
  }
  mu.add(1, 1, 2, Scalar::one(ctx()));
  return mu;
}

}  // namespace

TEST_CASE("mul_on_power is the componentwise product") {
  MulMap mu = toy_mu();
  TensorElement u{2, {}};
  u.add_term(pack_key({1, 0}), sc(2));
  TensorElement v{2, {}};
  v.add_term(pack_key({1, 1}), sc(3));
  TensorElement uv = mul_on_power(mu, u, v);
  // (e1(x)e0)·(e1(x)e1) = (e1 e1)(x)(e0 e1) = e2(x)e1, coefficient 6
  CHECK(uv.coords.size() == 1);
  CHECK(uv.coefficient(pack_key({2, 1})) == sc(6));

  std::mt19937 rng(99);
  for (int it = 0; it < 10; ++it) {
    TensorElement a = random_element(rng, 3, 2, 3);
    TensorElement b = random_element(rng, 3, 2, 3);
    TensorElement c = random_element(rng, 3, 2, 3);
    // bilinearity
    CHECK(te_equal(mul_on_power(mu, te_add(a, b), c),
                   te_add(mul_on_power(mu, a, c), mul_on_power(mu, b, c))));
    CHECK(te_equal(mul_on_power(mu, a, te_add(b, c)),
                   te_add(mul_on_power(mu, a, b), mul_on_power(mu, a, c))));
    // commutativity of the toy algebra lifts to tensor powers
    CHECK(te_equal(mul_on_power(mu, a, b), mul_on_power(mu, b, a)));
    // perm_legs is multiplicative: sigma(u·v) = sigma(u)·sigma(v)
    TensorElement a3 = random_element(rng, 3, 3, 3);
    TensorElement b3 = random_element(rng, 3, 3, 3);
    std::vector<int> sigma{2, 3, 1};
    CHECK(te_equal(perm_legs(mul_on_power(mu, a3, b3), sigma),
                   mul_on_power(mu, perm_legs(a3, sigma), perm_legs(b3, sigma))));
  }
  CHECK_THROWS_AS(mul_on_power(mu, random_element(rng, 3, 1, 2),
                               random_element(rng, 3, 2, 2)),
                  PowerMismatch);
}

TEST_CASE("mu/delta as linear maps") {
  MulMap mu = toy_mu();
  LinMap m = mu_linmap(mu);
  CHECK(m.src == 2);
  CHECK(m.dst == 1);
  TensorElement e11{2, {}};
  e11.add_term(pack_key({1, 1}), sc(1));
  CHECK(te_equal(apply(m, e11), te_basis1(2, ctx())));

  ComulMap d;
  d.dim = 3;
  d.add(0, 0, 0, Scalar::one(ctx()));
  d.add(1, 0, 1, Scalar::one(ctx()));
  d.add(1, 1, 0, Scalar::one(ctx()));
  LinMap dl = delta_linmap(d);
  CHECK(dl.src == 1);
  CHECK(dl.dst == 2);
  TensorElement de1 = apply(dl, te_basis1(1, ctx()));
  CHECK(de1.coords.size() == 2);
  CHECK(te_equal(de1, comul_basis(d, 1)));
}

TEST_CASE("invert_element solves both unit equations") {
  MulMap mu = toy_mu();
  TensorElement unit = te_basis1(0, ctx());

  SUBCASE("the unit tensor is self-inverse") {
    TensorElement one3 = te_kron(te_kron(unit, unit), unit);
    auto r = invert_element(mu, unit, one3);
    REQUIRE(r.has_value());
    CHECK(te_equal(r->inverse, one3));
    CHECK(r->unique);
  }

  SUBCASE("a diagonal-plus-nilpotent element inverts") {
    // v = 1 + e1: the inverse is 1 - e1 + e1^2 = 1 - e1 + e2
    TensorElement v = unit;
    v.add_term(1, sc(1));
    auto r = invert_element(mu, unit, v);
    REQUIRE(r.has_value());
    TensorElement expected = unit;
    expected.add_term(1, sc(-1));
    expected.add_term(2, sc(1));
    CHECK(te_equal(r->inverse, expected));
    CHECK(te_equal(mul_on_power(mu, v, r->inverse), unit));
    CHECK(te_equal(mul_on_power(mu, r->inverse, v), unit));
  }

  SUBCASE("nilpotent elements are not invertible") {
    TensorElement v{1, {}};
    v.add_term(1, sc(1));
    CHECK_FALSE(invert_element(mu, unit, v).has_value());
  }

  SUBCASE("non-unique inverses are flagged") {
    MulMap degenerate;
    degenerate.dim = 2;
    degenerate.add(0, 0, 0, Scalar::one(ctx()));  // everything else is zero
    TensorElement e0 = te_basis1(0, ctx());
    auto r = invert_element(degenerate, e0, e0);
    REQUIRE(r.has_value());
    CHECK_FALSE(r->unique);
    CHECK(te_equal(mul_on_power(degenerate, e0, r->inverse), e0));
  }
}

TEST_CASE("exact linear solver") {
  CtxPtr c = ctx();
  Scalar p = Scalar::parameter(c, "p");

  SUBCASE("unique symbolic solution") {
    // p*x + y = p^2 + 1 ; x - y = p - 1  =>  x = p... solve exactly:
    std::vector<SparseRow> rows(2);
    rows[0].lhs = {{0, p}, {1, Scalar::one(c)}};
    rows[0].rhs = p * p + Scalar::one(c);
    rows[1].lhs = {{0, Scalar::one(c)}, {1, -Scalar::one(c)}};
    rows[1].rhs = p - Scalar::one(c);
    auto sol = solve_linear_system(rows, 2, c);
    REQUIRE(sol.has_value());
    CHECK(sol->unique);
    CHECK(sol->values[0] == p);
    CHECK(sol->values[1] == Scalar::one(c));
  }

  SUBCASE("inconsistent system") {
    std::vector<SparseRow> rows(2);
    rows[0].lhs = {{0, Scalar::one(c)}};
    rows[0].rhs = Scalar::one(c);
    rows[1].lhs = {{0, Scalar::one(c)}};
    rows[1].rhs = Scalar::integer(c, 2);
    CHECK_FALSE(solve_linear_system(rows, 1, c).has_value());
  }

  SUBCASE("underdetermined system is flagged non-unique") {
    std::vector<SparseRow> rows(1);
    rows[0].lhs = {{0, Scalar::one(c)}, {1, Scalar::one(c)}};
    rows[0].rhs = Scalar::one(c);
    auto sol = solve_linear_system(rows, 2, c);
    REQUIRE(sol.has_value());
    CHECK_FALSE(sol->unique);
    CHECK(sol->values[0] + sol->values[1] == Scalar::one(c));
  }

  SUBCASE("nullspace of a rank-1 system on 3 unknowns") {
    std::vector<SparseRow> rows(1);
    rows[0].lhs = {{0, Scalar::one(c)}, {1, p}, {2, -p}};
    auto basis = nullspace_basis(rows, 3, c);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
      CHECK(v[0] + p * v[1] - p * v[2] == Scalar::zero(c));
    }
  }
}
