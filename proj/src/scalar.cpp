#include "hqb/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hqb {

namespace {

void poly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

/// Long division a = q*b + r; returns {q, r}.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  QPoly q;
  if (a.size() < b.size()) {
    poly_trim(a);
    return {q, a};
  }
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t s = a.size() - b.size() + 1; s-- > 0;) {
    std::size_t k = s + b.size() - 1;  // degree eliminated in this step
    if (a[k] == 0) continue;
    Rational f = a[k] / lead;
    q[s] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= f * b[j];
  }
  poly_trim(a);
  poly_trim(q);
  return {q, a};
}

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

QPoly x_power_minus_one(int k) {
  QPoly p(k + 1, Rational(0));
  p[0] = -1;
  p[k] = 1;
  return p;
}

}  // namespace

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic order must be >= 1");
  QPoly numerator{Rational(1)};
  QPoly denominator{Rational(1)};
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(d);
    if (mu == 1) numerator = poly_mul(numerator, x_power_minus_one(n / d));
    if (mu == -1) denominator = poly_mul(denominator, x_power_minus_one(n / d));
  }
  auto [q, r] = poly_divmod(numerator, denominator);
  if (!r.empty()) throw Error("internal: cyclotomic polynomial division not exact");
  return q;
}

std::shared_ptr<const ScalarContext> ScalarContext::create(
    int cyclotomic_order, std::vector<std::string> parameter_names) {
  auto check_name = [](const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0]))))
      return false;
    for (char ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
  };
  for (std::size_t i = 0; i < parameter_names.size(); ++i) {
    if (!check_name(parameter_names[i]) || parameter_names[i] == "z")
      throw Error("invalid parameter name '" + parameter_names[i] + "'");
    for (std::size_t j = i + 1; j < parameter_names.size(); ++j)
      if (parameter_names[i] == parameter_names[j])
        throw Error("duplicate parameter name '" + parameter_names[i] + "'");
  }
  auto ctx = std::shared_ptr<ScalarContext>(new ScalarContext());
  ctx->m_order = cyclotomic_order;
  ctx->m_phi = hqb::cyclotomic_polynomial(cyclotomic_order);
  ctx->m_degree = static_cast<int>(ctx->m_phi.size()) - 1;
  ctx->m_params = std::move(parameter_names);
  // Reduction table: zeta^j in the power basis, for j up to 2*(degree-1)
  // (the largest power a product of two reduced elements can reach).
  int deg = ctx->m_degree;
  std::vector<std::vector<Rational>>& tab = ctx->m_powers;
  tab.assign(std::max(2 * deg - 1, 1), std::vector<Rational>(deg, Rational(0)));
  for (int j = 0; j < deg && j < static_cast<int>(tab.size()); ++j) tab[j][j] = 1;
  for (int j = deg; j < static_cast<int>(tab.size()); ++j) {
    // zeta^j = zeta * zeta^{j-1}; shift then fold the overflow with
    // zeta^deg = -(phi - x^deg).
    const std::vector<Rational>& prev = tab[j - 1];
    std::vector<Rational> cur(deg, Rational(0));
    for (int i = 0; i + 1 < deg; ++i) cur[i + 1] = prev[i];
    Rational overflow = prev[deg - 1];
    if (overflow != 0)
      for (int i = 0; i < deg; ++i) cur[i] -= overflow * ctx->m_phi[i];
    tab[j] = std::move(cur);
  }
  return ctx;
}

int ScalarContext::parameter_index(const std::string& name) const {
  for (std::size_t i = 0; i < m_params.size(); ++i)
    if (m_params[i] == name) return static_cast<int>(i);
  return -1;
}

bool Cyclo::is_zero() const {
  for (const Rational& r : c)
    if (r != 0) return false;
  return true;
}

Cyclo cyclo_zero(const ScalarContext& ctx) {
  return Cyclo{std::vector<Rational>(ctx.degree(), Rational(0))};
}

Cyclo cyclo_one(const ScalarContext& ctx) {
  Cyclo r = cyclo_zero(ctx);
  r.c[0] = 1;
  return r;
}

Cyclo cyclo_rational(const ScalarContext& ctx, const Rational& v) {
  Cyclo r = cyclo_zero(ctx);
  r.c[0] = v;
  return r;
}

Cyclo cyclo_root(const ScalarContext& ctx, long k) {
  long n = ctx.cyclotomic_order();
  long j = ((k % n) + n) % n;
  if (ctx.degree() == 1) {
    // Q(zeta) = Q; zeta is the rational root of the linear Phi_N (N = 1 or 2).
    Rational zr = -ctx.cyclotomic_polynomial()[0];
    Cyclo r = cyclo_zero(ctx);
    Rational v = 1;
    for (long t = 0; t < j; ++t) v *= zr;
    r.c[0] = v;
    return r;
  }
  if (j < ctx.degree()) {
    Cyclo r = cyclo_zero(ctx);
    r.c[static_cast<std::size_t>(j)] = 1;
    return r;
  }
  Cyclo acc = cyclo_one(ctx);
  Cyclo z = cyclo_zero(ctx);
  z.c[1] = 1;
  for (long t = 0; t < j; ++t) acc = cyclo_mul(ctx, acc, z);
  return acc;
}

Cyclo cyclo_add(const Cyclo& a, const Cyclo& b) {
  Cyclo r = a;
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Cyclo cyclo_sub(const Cyclo& a, const Cyclo& b) {
  Cyclo r = a;
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Cyclo cyclo_neg(const Cyclo& a) {
  Cyclo r = a;
  for (Rational& v : r.c) v = -v;
  return r;
}

Cyclo cyclo_mul(const ScalarContext& ctx, const Cyclo& a, const Cyclo& b) {
  int deg = ctx.degree();
  std::vector<Rational> conv(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.c[j] == 0) continue;
      conv[i + j] += a.c[i] * b.c[j];
    }
  }
  Cyclo r = cyclo_zero(ctx);
  for (int k = 0; k < 2 * deg - 1; ++k) {
    if (conv[k] == 0) continue;
    const std::vector<Rational>& pw = ctx.zeta_power(k);
    for (int i = 0; i < deg; ++i) r.c[i] += conv[k] * pw[i];
  }
  return r;
}

Cyclo cyclo_inv(const ScalarContext& ctx, const Cyclo& a) {
  if (a.is_zero()) throw DivisionByZero();
  // Extended Euclid in Q[x] for gcd(a, Phi_N) = 1: u*a + v*Phi = 1.
  QPoly r0 = ctx.cyclotomic_polynomial();
  QPoly r1 = a.c;
  poly_trim(r1);
  QPoly s0{};              // coefficient of a in r0 (starts 0)
  QPoly s1{Rational(1)};   // coefficient of a in r1
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1);
    QPoly s2 = s0;
    QPoly qs = poly_mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error("internal: cyclotomic gcd not a unit");
  Rational scale = Rational(1) / r0[0];
  Cyclo out = cyclo_zero(ctx);
  // s0 may exceed the reduced degree; fold through the power table.
  for (std::size_t k = 0; k < s0.size(); ++k) {
    if (s0[k] == 0) continue;
    if (static_cast<int>(k) < ctx.degree()) {
      out.c[k] += s0[k] * scale;
    } else {
      const std::vector<Rational>& pw = ctx.zeta_power(static_cast<int>(k));
      for (int i = 0; i < ctx.degree(); ++i) out.c[i] += s0[k] * scale * pw[i];
    }
  }
  return out;
}

Laurent laurent_zero() { return Laurent{}; }

Laurent laurent_const(const Cyclo& c, std::size_t nparams) {
  Laurent r;
  if (!c.is_zero()) r.terms.emplace(ExpVec(nparams, 0), c);
  return r;
}

Laurent laurent_monomial(const Cyclo& c, const ExpVec& e) {
  Laurent r;
  if (!c.is_zero()) r.terms.emplace(e, c);
  return r;
}

Laurent laurent_add(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, c] : b.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
      r.terms.emplace(e, c);
    } else {
      it->second = cyclo_add(it->second, c);
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

Laurent laurent_neg(const Laurent& a) {
  Laurent r = a;
  for (auto& [e, c] : r.terms) c = cyclo_neg(c);
  return r;
}

Laurent laurent_sub(const Laurent& a, const Laurent& b) {
  return laurent_add(a, laurent_neg(b));
}

Laurent laurent_mul(const ScalarContext& ctx, const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      ExpVec e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Cyclo c = cyclo_mul(ctx, ca, cb);
      if (c.is_zero()) continue;
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        r.terms.emplace(std::move(e), std::move(c));
      } else {
        it->second = cyclo_add(it->second, c);
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  }
  return r;
}

namespace {

ExpVec componentwise_min(const Laurent& a) {
  ExpVec m = a.terms.begin()->first;
  for (const auto& [e, c] : a.terms)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Laurent shift(const Laurent& a, const ExpVec& by) {
  Laurent r;
  for (const auto& [e, c] : a.terms) {
    ExpVec e2 = e;
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] += by[i];
    r.terms.emplace(std::move(e2), c);
  }
  return r;
}

ExpVec negated(ExpVec e) {
  for (int& v : e) v = -v;
  return e;
}

}  // namespace

std::optional<Laurent> laurent_exact_divide(const ScalarContext& ctx,
                                            const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return laurent_zero();
  // Shift both operands into the polynomial cone (componentwise minimum
  // exponent 0); an exact Laurent quotient then forces a polynomial quotient.
  ExpVec amin = componentwise_min(a);
  ExpVec bmin = componentwise_min(b);
  Laurent num = shift(a, negated(amin));
  Laurent den = shift(b, negated(bmin));
  const auto lt_den = std::prev(den.terms.end());
  Cyclo lt_den_inv = cyclo_inv(ctx, lt_den->second);
  Laurent q;
  while (!num.is_zero()) {
    auto lt = std::prev(num.terms.end());
    ExpVec de = lt->first;
    bool divisible = true;
    for (std::size_t i = 0; i < de.size(); ++i) {
      de[i] -= lt_den->first[i];
      if (de[i] < 0) divisible = false;
    }
    if (!divisible) return std::nullopt;
    Cyclo qc = cyclo_mul(ctx, lt->second, lt_den_inv);
    Laurent t = laurent_monomial(qc, de);
    q = laurent_add(q, t);
    num = laurent_sub(num, laurent_mul(ctx, t, den));
  }
  ExpVec total = amin;
  for (std::size_t i = 0; i < total.size(); ++i) total[i] -= bmin[i];
  return shift(q, total);
}

Scalar::Scalar(CtxPtr ctx, Laurent num, Laurent den)
    : m_ctx(std::move(ctx)), m_num(std::move(num)), m_den(std::move(den)) {
  normalize();
}

void Scalar::normalize() {
  if (!m_ctx) throw Error("internal: scalar without context");
  if (m_den.is_zero()) throw DivisionByZero();
  std::size_t np = m_ctx->parameter_count();
  if (m_num.is_zero()) {
    m_den = laurent_const(cyclo_one(*m_ctx), np);
    return;
  }
  if (m_den.terms.size() == 1) {
    // Monomial denominator: absorb into the Laurent numerator.
    const auto& [e, c] = *m_den.terms.begin();
    Laurent inv = laurent_monomial(cyclo_inv(*m_ctx, c), negated(e));
    m_num = laurent_mul(*m_ctx, m_num, inv);
    m_den = laurent_const(cyclo_one(*m_ctx), np);
    return;
  }
  if (auto q = laurent_exact_divide(*m_ctx, m_num, m_den)) {
    m_num = std::move(*q);
    m_den = laurent_const(cyclo_one(*m_ctx), np);
    return;
  }
  // Canonical-ish form: clear the denominator's monomial content and make
  // its leading coefficient 1 (cross-multiplication equality handles the rest).
  ExpVec dmin = componentwise_min(m_den);
  bool nonzero_shift = false;
  for (int v : dmin) nonzero_shift |= (v != 0);
  if (nonzero_shift) {
    ExpVec neg = negated(dmin);
    m_den = shift(m_den, neg);
    m_num = shift(m_num, neg);
  }
  const Cyclo& lead = std::prev(m_den.terms.end())->second;
  if (!(lead == cyclo_one(*m_ctx))) {
    Laurent scale = laurent_const(cyclo_inv(*m_ctx, lead), np);
    m_num = laurent_mul(*m_ctx, m_num, scale);
    m_den = laurent_mul(*m_ctx, m_den, scale);
  }
}

Scalar Scalar::zero(CtxPtr ctx) {
  std::size_t np = ctx->parameter_count();
  Cyclo one = cyclo_one(*ctx);
  return Scalar(std::move(ctx), laurent_zero(), laurent_const(one, np));
}

Scalar Scalar::one(CtxPtr ctx) {
  std::size_t np = ctx->parameter_count();
  Cyclo one = cyclo_one(*ctx);
  return Scalar(std::move(ctx), laurent_const(one, np), laurent_const(one, np));
}

Scalar Scalar::integer(CtxPtr ctx, long v) { return rational(std::move(ctx), Rational(v)); }

Scalar Scalar::rational(CtxPtr ctx, const Rational& r) {
  std::size_t np = ctx->parameter_count();
  Cyclo one = cyclo_one(*ctx);
  return Scalar(std::move(ctx), laurent_const(cyclo_rational(*ctx, r), np),
                laurent_const(one, np));
}

Scalar Scalar::root(CtxPtr ctx, long k) {
  std::size_t np = ctx->parameter_count();
  Cyclo one = cyclo_one(*ctx);
  return Scalar(std::move(ctx), laurent_const(cyclo_root(*ctx, k), np),
                laurent_const(one, np));
}

Scalar Scalar::parameter(CtxPtr ctx, const std::string& name) {
  int idx = ctx->parameter_index(name);
  if (idx < 0) throw UnknownParameter(name);
  std::size_t np = ctx->parameter_count();
  ExpVec e(np, 0);
  e[static_cast<std::size_t>(idx)] = 1;
  Cyclo one = cyclo_one(*ctx);
  return Scalar(std::move(ctx), laurent_monomial(one, e), laurent_const(one, np));
}

Scalar Scalar::from_cyclo(CtxPtr ctx, const Cyclo& c) {
  std::size_t np = ctx->parameter_count();
  Cyclo one = cyclo_one(*ctx);
  return Scalar(std::move(ctx), laurent_const(c, np), laurent_const(one, np));
}

namespace {

CtxPtr common_context(const Scalar& a, const Scalar& b) {
  const CtxPtr& ca = a.context();
  const CtxPtr& cb = b.context();
  if (!ca) return cb;
  if (!cb) return ca;
  if (ca == cb) return ca;
  if (ca->cyclotomic_order() == cb->cyclotomic_order() &&
      ca->parameter_names() == cb->parameter_names())
    return ca;
  throw Error("scalar context mismatch");
}

}  // namespace

bool Scalar::is_one() const {
  if (!m_ctx) return false;
  return *this == Scalar::one(m_ctx);
}

Scalar Scalar::operator+(const Scalar& o) const {
  CtxPtr ctx = common_context(*this, o);
  if (!ctx) return Scalar();
  if (is_zero()) return o.m_ctx ? o : Scalar::zero(ctx);
  if (o.is_zero()) return m_ctx ? *this : Scalar::zero(ctx);
  Laurent n = laurent_add(laurent_mul(*ctx, m_num, o.m_den),
                          laurent_mul(*ctx, o.m_num, m_den));
  Laurent d = laurent_mul(*ctx, m_den, o.m_den);
  return Scalar(ctx, std::move(n), std::move(d));
}

Scalar Scalar::operator-() const {
  if (!m_ctx) return Scalar();
  return Scalar(m_ctx, laurent_neg(m_num), m_den);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  CtxPtr ctx = common_context(*this, o);
  if (!ctx) return Scalar();
  if (is_zero() || o.is_zero()) return Scalar::zero(ctx);
  return Scalar(ctx, laurent_mul(*ctx, m_num, o.m_num),
                laurent_mul(*ctx, m_den, o.m_den));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero();
  CtxPtr ctx = common_context(*this, o);
  if (is_zero()) return Scalar::zero(ctx);
  return Scalar(ctx, laurent_mul(*ctx, m_num, o.m_den),
                laurent_mul(*ctx, m_den, o.m_num));
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (is_zero() != o.is_zero()) return false;
  CtxPtr ctx = common_context(*this, o);
  Laurent lhs = laurent_mul(*ctx, m_num, o.m_den);
  Laurent rhs = laurent_mul(*ctx, o.m_num, m_den);
  return laurent_sub(lhs, rhs).is_zero();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(m_ctx, m_den, m_num);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (!m_ctx) {
    if (k == 0) throw Error("0^0 of a context-free zero");
    return Scalar();
  }
  Scalar result = Scalar::one(m_ctx);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool Scalar::has_trivial_denominator() const {
  if (!m_ctx) return true;
  if (m_den.terms.size() != 1) return false;
  const auto& [e, c] = *m_den.terms.begin();
  for (int v : e)
    if (v != 0) return false;
  return c == cyclo_one(*m_ctx);
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
public:
  ScalarParser(CtxPtr ctx, const std::string& text)
      : m_ctx(std::move(ctx)), m_text(text), m_pos(0) {}

  Scalar run() {
    Scalar v = parse_expr();
    skip_ws();
    if (m_pos != m_text.size()) throw ParseError("unexpected character", m_pos);
    return v;
  }

private:
  void skip_ws() {
    while (m_pos < m_text.size() &&
           std::isspace(static_cast<unsigned char>(m_text[m_pos])))
      ++m_pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return m_pos < m_text.size() && m_text[m_pos] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++m_pos;
      return true;
    }
    return false;
  }

  Scalar parse_expr() {
    Scalar v = parse_term();
    for (;;) {
      if (consume('+'))
        v = v + parse_term();
      else if (consume('-'))
        v = v - parse_term();
      else
        return v;
    }
  }

  Scalar parse_term() {
    Scalar v = parse_factor();
    for (;;) {
      if (consume('*')) {
        v = v * parse_factor();
      } else if (consume('/')) {
        std::size_t at = m_pos;
        Scalar d = parse_factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar parse_factor() {
    if (consume('-')) return -parse_factor();
    return parse_power();
  }

  Scalar parse_power() {
    Scalar base = parse_atom();
    if (consume('^')) return base.pow(parse_exponent());
    return base;
  }

  long parse_exponent() {
    skip_ws();
    bool neg = false;
    if (m_pos < m_text.size() && m_text[m_pos] == '-') {
      neg = true;
      ++m_pos;
    }
    if (m_pos >= m_text.size() ||
        !std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
      throw ParseError("expected integer exponent", m_pos);
    long v = 0;
    while (m_pos < m_text.size() &&
           std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
      v = v * 10 + (m_text[m_pos] - '0');
      ++m_pos;
    }
    return neg ? -v : v;
  }

  Scalar parse_atom() {
    skip_ws();
    if (m_pos >= m_text.size()) throw ParseError("unexpected end of input", m_pos);
    char c = m_text[m_pos];
    if (c == '(') {
      ++m_pos;
      Scalar v = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", m_pos);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (m_pos < m_text.size() &&
             std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
        digits.push_back(m_text[m_pos++]);
      return Scalar::rational(m_ctx, Rational(boost::multiprecision::cpp_int(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (m_pos < m_text.size() &&
             (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) ||
              m_text[m_pos] == '_'))
        name.push_back(m_text[m_pos++]);
      if (name == "z") return Scalar::root(m_ctx, 1);
      if (m_ctx->parameter_index(name) < 0) throw UnknownParameter(name);
      return Scalar::parameter(m_ctx, name);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", m_pos);
  }

  CtxPtr m_ctx;
  const std::string& m_text;
  std::size_t m_pos;
};

}  // namespace

Scalar parse_scalar(CtxPtr ctx, const std::string& text) {
  return ScalarParser(std::move(ctx), text).run();
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

namespace {

std::string format_rational(const Rational& r) {
  std::ostringstream ss;
  ss << r;
  return ss.str();
}

/// One z-power piece: "1/2*z^3", "z", "-z^5", "7".
std::string format_cyclo_piece(const Rational& r, std::size_t j) {
  if (j == 0) return format_rational(r);
  std::string zpart = (j == 1) ? "z" : "z^" + std::to_string(j);
  if (r == 1) return zpart;
  if (r == -1) return "-" + zpart;
  return format_rational(r) + "*" + zpart;
}

std::string join_signed(const std::vector<std::string>& pieces) {
  if (pieces.empty()) return "0";
  std::string out = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (!pieces[i].empty() && pieces[i][0] == '-')
      out += " - " + pieces[i].substr(1);
    else
      out += " + " + pieces[i];
  }
  return out;
}

std::string format_cyclo(const Cyclo& c) {
  std::vector<std::string> pieces;
  for (std::size_t j = 0; j < c.c.size(); ++j)
    if (c.c[j] != 0) pieces.push_back(format_cyclo_piece(c.c[j], j));
  return join_signed(pieces);
}

std::size_t cyclo_support(const Cyclo& c) {
  std::size_t n = 0;
  for (const Rational& r : c.c) n += (r != 0);
  return n;
}

std::string format_monomial(const ExpVec& e, const std::vector<std::string>& names) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (e[i] == 1)
      parts.push_back(names[i]);
    else
      parts.push_back(names[i] + "^" + std::to_string(e[i]));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

std::string format_laurent_term(const ScalarContext& ctx, const ExpVec& e,
                                const Cyclo& c) {
  std::string mono = format_monomial(e, ctx.parameter_names());
  if (mono.empty()) return format_cyclo(c);
  if (cyclo_support(c) > 1) return "(" + format_cyclo(c) + ")*" + mono;
  // Single z-power coefficient: splice the pieces.
  for (std::size_t j = 0; j < c.c.size(); ++j) {
    if (c.c[j] == 0) continue;
    std::string piece = format_cyclo_piece(c.c[j], j);
    if (piece == "1") return mono;
    if (piece == "-1") return "-" + mono;
    return piece + "*" + mono;
  }
  return "0";
}

std::string format_laurent(const ScalarContext& ctx, const Laurent& a) {
  std::vector<std::string> pieces;
  for (const auto& [e, c] : a.terms) pieces.push_back(format_laurent_term(ctx, e, c));
  return join_signed(pieces);
}

}  // namespace

std::string format_scalar(const Scalar& a) {
  if (!a.context()) return "0";
  const ScalarContext& ctx = *a.context();
  if (a.has_trivial_denominator()) return format_laurent(ctx, a.numerator());
  return "(" + format_laurent(ctx, a.numerator()) + ")/(" +
         format_laurent(ctx, a.denominator()) + ")";
}

}  // namespace hqb
