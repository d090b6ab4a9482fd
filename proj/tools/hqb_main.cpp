// hqb — exact axiom checker and structure constructor for finite-dimensional
// Hom-(quasi-)bialgebras over cyclotomic fields with formal Laurent parameters.
//
// Subcommands: check, twist, gauge, dual, antipode, catalog (list|build),
// dwdouble.  Exit codes are the machine contract: 0 = success / all checks
// pass, 1 = an axiom or precondition failure, 2 = input error.

#include "hqb/catalog.hpp"
#include "hqb/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace hqb;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Level dispatch
// ---------------------------------------------------------------------------

std::optional<Level> parse_level_flag(const std::string& name) {
  if (name == "auto") return std::nullopt;
  if (name == "qt") return Level::QTHQ;
  if (auto lv = level_from_name(name)) return lv;
  throw FileError("unknown level '" + name + "'");
}

HomAlgebra algebra_of(const AnyStructure& s) {
  if (const auto* a = std::get_if<HomAlgebra>(&s)) return *a;
  if (const auto* b = std::get_if<HomBialgebra>(&s)) return algebra_part(*b);
  if (const auto* h = std::get_if<HQBialgebra>(&s)) return algebra_part(*h);
  if (const auto* q = std::get_if<QTHQBialgebra>(&s)) return algebra_part(*q);
  throw FileError("this file kind carries no algebra sections");
}

HomCoalgebra coalgebra_of(const AnyStructure& s) {
  if (const auto* c = std::get_if<HomCoalgebra>(&s)) return *c;
  if (const auto* b = std::get_if<HomBialgebra>(&s)) return coalgebra_part(*b);
  if (const auto* h = std::get_if<HQBialgebra>(&s)) return coalgebra_part(*h);
  if (const auto* q = std::get_if<QTHQBialgebra>(&s)) return coalgebra_part(*q);
  throw FileError("this file kind carries no coalgebra sections");
}

/// The full checker battery for one structure at one level.
AxiomReport run_level_checks(const AnyStructure& s, Level want) {
  switch (want) {
    case Level::Algebra: {
      const HomAlgebra a = algebra_of(s);
      AxiomReport rep = check_hom_associativity(a);
      if (a.eta) rep.merge(check_unit(a));
      return rep;
    }
    case Level::Coalgebra: {
      const HomCoalgebra c = coalgebra_of(s);
      AxiomReport rep = check_hom_coassociativity(c);
      if (c.eps) rep.merge(check_counit(c));
      return rep;
    }
    case Level::Bialgebra: {
      if (const auto* b = std::get_if<HomBialgebra>(&s))
        return check_hom_bialgebra(*b);
      if (const auto* h = std::get_if<HQBialgebra>(&s))
        return check_hom_bialgebra(bialgebra_part(*h));
      if (const auto* q = std::get_if<QTHQBialgebra>(&s))
        return check_hom_bialgebra(bialgebra_part(*q));
      throw FileError("level bialgebra needs a file with both algebra and "
                      "coalgebra sections");
    }
    case Level::HQ: {
      if (const auto* h = std::get_if<HQBialgebra>(&s)) return check_hq(*h);
      if (const auto* q = std::get_if<QTHQBialgebra>(&s)) return check_hq(*q);
      throw FileError("level hq needs an hq_bialgebra or qt_hq_bialgebra file");
    }
    case Level::QTHQ: {
      const auto* q = std::get_if<QTHQBialgebra>(&s);
      if (!q) throw FileError("level qt needs a qt_hq_bialgebra file");
      AxiomReport rep = check_hq(*q);
      rep.merge(check_qt(*q));
      return rep;
    }
  }
  throw FileError("unhandled level");
}

// ---------------------------------------------------------------------------
// Human report rendering
// ---------------------------------------------------------------------------

std::string label_of(const SpacePtr& space, int i) {
  if (space && i >= 0 && i < space->dim) return space->labels[i];
  return "e" + std::to_string(i);
}

void print_entry(std::ostream& os, const AxiomEntry& e, const SpacePtr& space) {
  os << (e.pass ? "PASS  " : "FAIL  ") << e.axiom;
  if (!e.pass) {
    if (e.witness) {
      os << "  at (";
      for (std::size_t t = 0; t < e.witness->size(); ++t) {
        if (t) os << ", ";
        os << label_of(space, (*e.witness)[t]);
      }
      os << ")";
    }
    os << "  [" << e.fail_count << " failing tuple"
       << (e.fail_count == 1 ? "" : "s") << "]";
  }
  if (!e.note.empty()) os << "  -- " << e.note;
  os << "\n";
  if (!e.pass && e.residual)
    os << "      residual = " << format_element(*e.residual, space) << "\n";
}

void print_report(std::ostream& os, const AxiomReport& rep,
                  const SpacePtr& space, bool first_only) {
  bool shown = false;
  for (const AxiomEntry& e : rep.entries) {
    if (first_only && e.pass) continue;
    print_entry(os, e, space);
    shown = true;
    if (first_only) break;
  }
  if (first_only && !shown) os << "all axiom checks passed\n";
  for (const std::string& n : rep.notes) os << "note: " << n << "\n";
  os << "overall: " << (rep.overall() ? "PASS" : "FAIL") << "\n";
}

// ---------------------------------------------------------------------------
// Shared command plumbing
// ---------------------------------------------------------------------------

void require_compatible(const LoadedFile& a, const LoadedFile& b,
                        const char* what) {
  if (a.dim != b.dim)
    throw FileError(std::string(what) + ": dimension mismatch (" +
                    std::to_string(a.dim) + " vs " + std::to_string(b.dim) +
                    ")");
  if (a.ctx && b.ctx &&
      (a.ctx->cyclotomic_order() != b.ctx->cyclotomic_order() ||
       a.ctx->parameter_names() != b.ctx->parameter_names()))
    throw FileError(std::string(what) +
                    ": the files disagree on cyclotomic_order or parameters");
}

/// Re-checks a constructed structure at its own level, then writes it (plus a
/// report sidecar) or prints it.  Failing structures are only emitted under
/// --force; the exit code reports the check outcome either way.
int finish_construction(const AnyStructure& out, const std::string& out_path,
                        bool force, const char* what) {
  const Level lv = level_of(out);
  const AxiomReport rep = run_level_checks(out, lv);
  const SpacePtr space = view_of(out).space;
  if (!rep.overall()) {
    std::cout << what << ": the result fails its own checks at level "
              << level_name(lv) << "\n";
    print_report(std::cout, rep, space, false);
    if (!force) {
      std::cout << "refusing to emit the structure (use --force to override)\n";
      return 1;
    }
  }
  const json doc = structure_to_json(out);
  if (out_path.empty()) {
    std::cout << canonical_dump(doc);
  } else {
    write_json_file(out_path, doc);
    write_json_file(out_path + ".report.json", report_to_json(rep, space));
    std::cout << "wrote " << out_path << " ("
              << doc.at("kind").get<std::string>() << ", dim " << space->dim
              << "); report sidecar: " << out_path << ".report.json\n";
  }
  return rep.overall() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int run_check(const std::string& file, const std::string& level_flag,
              const std::string& report_mode, bool as_json,
              const std::string& out_path) {
  const LoadedFile lf = load_structure_file(file);
  AxiomReport rep;
  SpacePtr space;
  if (lf.kind == "group") {
    if (level_flag != "auto")
      throw FileError("--level does not apply to group files");
    AxiomEntry e;
    e.axiom = "group_laws";
    e.note = "identity, inverses and associativity are validated on load";
    rep.entries.push_back(std::move(e));
    space = Space::create(lf.group->labels);
  } else if (lf.kind == "cocycle") {
    if (level_flag != "auto")
      throw FileError("--level does not apply to cocycle files");
    rep = check_cocycle3(*lf.cocycle);
    space = Space::create(lf.cocycle->group.labels);
  } else if (lf.structure) {
    const Level want =
        parse_level_flag(level_flag).value_or(level_of(*lf.structure));
    rep = run_level_checks(*lf.structure, want);
    space = view_of(*lf.structure).space;
  } else {
    throw FileError("kind '" + lf.kind + "' cannot be checked standalone");
  }
  const json repj = report_to_json(rep, space);
  if (!out_path.empty()) write_json_file(out_path, repj);
  if (as_json)
    std::cout << canonical_dump(repj);
  else
    print_report(std::cout, rep, space, report_mode == "first");
  return rep.overall() ? 0 : 1;
}

/// True when every failing entry of the report is the named condition.
bool fails_only(const AxiomReport& rep, const std::string& axiom) {
  bool any = false;
  for (const AxiomEntry& e : rep.entries) {
    if (e.pass) continue;
    if (e.axiom != axiom) return false;
    any = true;
  }
  return any;
}

int run_twist(const std::string& file, const std::string& by,
              const std::string& level_flag, const std::string& out,
              bool force) {
  const LoadedFile lf = load_structure_file(file);
  if (!lf.structure)
    throw FileError("twist needs a structure file, got kind '" + lf.kind + "'");
  const LoadedFile mf = load_structure_file(by);
  if (mf.kind != "morphism")
    throw FileError("--by must name a morphism file, got kind '" + mf.kind +
                    "'");
  require_compatible(lf, mf, "twist");
  const LinMap& m = *mf.map;
  if (m.src != 1 || m.dst != 1)
    throw FileError("the twisting morphism must be a power-1 self-map");

  const AnyStructure& s = *lf.structure;
  const std::optional<Level> forced = parse_level_flag(level_flag);
  const Level want = forced.value_or(level_of(s));

  AnyStructure res;
  switch (want) {
    case Level::Algebra:
      res = twist_algebra(algebra_of(s), m);
      break;
    case Level::Coalgebra:
      res = twist_coalgebra(coalgebra_of(s), m);
      break;
    case Level::Bialgebra: {
      if (const auto* b = std::get_if<HomBialgebra>(&s))
        res = twist_bialgebra(*b, m);
      else if (const auto* h = std::get_if<HQBialgebra>(&s))
        res = twist_bialgebra(bialgebra_part(*h), m);
      else if (const auto* q = std::get_if<QTHQBialgebra>(&s))
        res = twist_bialgebra(bialgebra_part(*q), m);
      else
        throw FileError("level bialgebra needs algebra and coalgebra sections");
      break;
    }
    case Level::HQ: {
      if (const auto* h = std::get_if<HQBialgebra>(&s))
        res = twist_hq(*h, m);
      else if (const auto* q = std::get_if<QTHQBialgebra>(&s))
        res = twist_hq(static_cast<const HQBialgebra&>(*q), m);
      else
        throw FileError("level hq needs an hq_bialgebra or qt_hq_bialgebra file");
      break;
    }
    case Level::QTHQ: {
      const auto* q = std::get_if<QTHQBialgebra>(&s);
      if (!q) throw FileError("level qt needs a qt_hq_bialgebra file");
      if (forced) {
        res = twist_qt(*q, m);
        break;
      }
      // Default behavior: a morphism that preserves everything except R still
      // twists the underlying HQ-bialgebra; say so and drop R.
      try {
        res = twist_qt(*q, m);
      } catch (const NotAMorphism& e) {
        if (!fails_only(e.report, "morphism_r")) throw;
        std::cout << "note: the morphism does not preserve R; dropping the "
                     "quasi-triangular structure (output kind hq_bialgebra)\n";
        res = twist_hq(static_cast<const HQBialgebra&>(*q), m);
      }
      break;
    }
  }
  return finish_construction(res, out, force, "twist");
}

int run_gauge(const std::string& file, const std::string& f_path,
              const std::string& out, bool force) {
  const LoadedFile lf = load_structure_file(file);
  const HQBialgebra* h = nullptr;
  if (lf.structure) {
    if (const auto* q = std::get_if<QTHQBialgebra>(&*lf.structure)) h = q;
    if (const auto* p = std::get_if<HQBialgebra>(&*lf.structure)) h = p;
  }
  if (!h)
    throw FileError("gauge needs an hq_bialgebra or qt_hq_bialgebra file");
  const LoadedFile ef = load_structure_file(f_path);
  if (ef.kind != "element")
    throw FileError("--f must name an element file, got kind '" + ef.kind +
                    "'");
  require_compatible(lf, ef, "gauge");
  if (ef.element->power != 2)
    throw FileError("the gauge element must have tensor power 2");
  const HQBialgebra res = gauge_transform(*h, *ef.element);
  return finish_construction(AnyStructure(res), out, force, "gauge");
}

HomBialgebra dual_bialgebra(const HomBialgebra& b) {
  HomAlgebra da = dual_coalgebra_to_algebra(coalgebra_part(b));
  HomCoalgebra dc = dual_algebra_to_coalgebra(algebra_part(b));
  HomBialgebra out;
  out.ctx = b.ctx;
  out.space = da.space;
  out.mu = std::move(da.mu);
  out.eta = std::move(*da.eta);
  out.delta = std::move(dc.delta);
  out.eps = std::move(*dc.eps);
  out.alpha = std::move(da.alpha);
  out.beta = std::move(dc.alpha);
  return out;
}

int run_dual(const std::string& file, const std::string& out, bool force) {
  const LoadedFile lf = load_structure_file(file);
  AnyStructure res;
  if (lf.structure && std::holds_alternative<HomAlgebra>(*lf.structure))
    res = dual_algebra_to_coalgebra(std::get<HomAlgebra>(*lf.structure));
  else if (lf.structure && std::holds_alternative<HomCoalgebra>(*lf.structure))
    res = dual_coalgebra_to_algebra(std::get<HomCoalgebra>(*lf.structure));
  else if (lf.structure && std::holds_alternative<HomBialgebra>(*lf.structure))
    res = dual_bialgebra(std::get<HomBialgebra>(*lf.structure));
  else
    throw FileError(
        "dual supports hom_algebra, hom_coalgebra and hom_bialgebra files");
  return finish_construction(res, out, force, "dual");
}

int run_antipode(const std::string& file, const std::string& out_path) {
  const LoadedFile lf = load_structure_file(file);
  const HomBialgebra* b =
      lf.structure ? std::get_if<HomBialgebra>(&*lf.structure) : nullptr;
  if (!b) throw FileError("antipode needs a hom_bialgebra file");

  const auto res = solve_antipode(*b);
  if (!res) {
    std::cout << "no antipode: the convolution equations are inconsistent\n";
    return 1;
  }
  const int dim = b->space->dim;
  for (int j = 0; j < dim; ++j)
    std::cout << "S(" << label_of(b->space, j)
              << ") = " << format_element(apply(res->s, te_basis1(j, b->ctx)),
                                          b->space)
              << "\n";
  std::cout << (res->unique ? "unique"
                            : "not unique (free coefficients set to zero)")
            << "\n";

  const LinMap id = lin_identity(b->ctx, dim, 1);
  const LinMap e = convolution_unit(*b);
  const bool ok = lin_equal(convolution(*b, res->s, id), e) &&
                  lin_equal(convolution(*b, id, res->s), e);
  std::cout << (ok ? "validated: S*id = id*S = eta.eps"
                   : "INTERNAL ERROR: the solution fails the convolution "
                     "identities")
            << "\n";
  if (!out_path.empty()) {
    write_json_file(out_path, morphism_to_json(res->s, b->ctx, dim));
    std::cout << "wrote " << out_path << "\n";
  }
  return ok ? 0 : 1;
}

int run_catalog_list() {
  const CtxPtr ctx = catalog_context();
  for (const CatalogEntry& e : catalog(ctx)) {
    std::cout << e.name << "\n    " << e.description << "\n";
    if (!e.morphisms.empty()) {
      std::cout << "    morphisms:";
      for (const auto& [n, m] : e.morphisms) {
        (void)m;
        std::cout << " " << n;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

AnyStructure build_catalog_structure(const CtxPtr& ctx, const std::string& name,
                                     std::map<std::string, std::string> sets) {
  auto take = [&sets, &ctx](const char* key) -> std::optional<Scalar> {
    const auto it = sets.find(key);
    if (it == sets.end()) return std::nullopt;
    const Scalar v = parse_scalar(ctx, it->second);
    sets.erase(it);
    return v;
  };
  auto reject_leftovers = [&sets, &name]() {
    if (!sets.empty())
      throw FileError("catalog entry '" + name + "' does not accept --set " +
                      sets.begin()->first);
  };
  auto param = [&ctx](const char* n) { return Scalar::parameter(ctx, n); };

  if (name == "example_3dim") {
    const Scalar a = take("a").value_or(param("a"));
    const Scalar b = take("b").value_or(param("b"));
    reject_leftovers();
    return example_3dim(ctx, a, b);
  }
  if (name == "sweedler") {
    const Scalar l = take("lambda").value_or(param("lambda"));
    reject_leftovers();
    return sweedler_family(ctx, l);
  }
  if (name == "dwz3" || name == "dwz3_twisted") {
    int rc = 1;
    if (const auto it = sets.find("r_choice"); it != sets.end()) {
      const std::string& v = it->second;
      if (v.size() != 1 || v[0] < '0' || v[0] > '2')
        throw FileError("r_choice must be 0, 1 or 2, got '" + v + "'");
      rc = v[0] - '0';
      sets.erase(it);
    }
    const Scalar p = take("p").value_or(param("p"));
    const Scalar q = take("q").value_or(param("q"));
    reject_leftovers();
    QTHQBialgebra d =
        build_dw_double(cyclic_group(3), z3_cocycle_values(ctx, p, q, rc));
    if (name == "dwz3") return d;
    for (const auto& [n, m] : dwz3_morphisms(ctx))
      if (n == "f") return twist_hq(static_cast<const HQBialgebra&>(d), m);
    throw Error("dwz3 morphism family lacks f");  // unreachable
  }

  const auto entries = catalog(ctx);
  const CatalogEntry* e = catalog_find(entries, name);
  if (!e) throw FileError("unknown catalog entry '" + name + "'");
  if (!sets.empty())
    throw FileError("catalog entry '" + name + "' does not accept --set " +
                    sets.begin()->first);
  return e->structure;
}

int run_catalog_build(const std::string& name,
                      const std::vector<std::string>& set_args,
                      const std::string& morphism_name, const std::string& out,
                      bool force) {
  const CtxPtr ctx = catalog_context();
  std::map<std::string, std::string> sets;
  for (const std::string& kv : set_args) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw FileError("--set expects param=value, got '" + kv + "'");
    sets[kv.substr(0, eq)] = kv.substr(eq + 1);
  }

  if (!morphism_name.empty()) {
    if (!sets.empty())
      throw FileError("--set and --morphism cannot be combined");
    const auto entries = catalog(ctx);
    const CatalogEntry* e = catalog_find(entries, name);
    if (!e) throw FileError("unknown catalog entry '" + name + "'");
    for (const auto& [n, m] : e->morphisms) {
      if (n != morphism_name) continue;
      const json doc = morphism_to_json(m, ctx, view_of(e->structure).space->dim);
      if (out.empty()) {
        std::cout << canonical_dump(doc);
      } else {
        write_json_file(out, doc);
        std::cout << "wrote " << out << " (morphism " << morphism_name
                  << " of " << name << ")\n";
      }
      return 0;
    }
    throw FileError("catalog entry '" + name + "' has no morphism '" +
                    morphism_name + "'");
  }

  const AnyStructure s = build_catalog_structure(ctx, name, std::move(sets));
  return finish_construction(s, out, force, "catalog build");
}

FiniteGroup resolve_group(const std::string& spec) {
  if (spec.rfind("cyclic:", 0) == 0) {
    const std::string n = spec.substr(7);
    if (n.empty() || n.size() > 2 ||
        n.find_first_not_of("0123456789") != std::string::npos)
      throw FileError("--group cyclic:N needs N in [1, 15]");
    const long v = std::stol(n);
    if (v < 1 || v > 15)  // the double has dimension N^2 <= 255
      throw FileError("--group cyclic:N needs N in [1, 15]");
    return cyclic_group(static_cast<int>(v));
  }
  const LoadedFile gf = load_structure_file(spec);
  if (gf.kind != "group")
    throw FileError("--group file must have kind 'group', got '" + gf.kind +
                    "'");
  return *gf.group;
}

int run_dwdouble(const std::string& group_spec, const std::string& cocycle_path,
                 const std::string& out, bool force) {
  std::optional<FiniteGroup> g;
  if (!group_spec.empty()) g = resolve_group(group_spec);
  std::optional<Cocycle3> w;
  if (!cocycle_path.empty()) {
    LoadedFile cf = load_structure_file(cocycle_path);
    if (cf.kind != "cocycle")
      throw FileError("--cocycle must name a cocycle file, got kind '" +
                      cf.kind + "'");
    w = std::move(*cf.cocycle);
    if (g && (g->n != w->group.n || g->table != w->group.table))
      throw FileError(
          "--group disagrees with the group embedded in the cocycle file");
    g = w->group;
  }
  if (!g) throw FileError("dwdouble needs --group and/or --cocycle");
  if (!w)
    w = trivial_cocycle(
        *g, ScalarContext::create(static_cast<int>(default_cyclotomic_order()),
                                  {}));
  const QTHQBialgebra d = build_dw_double(*g, *w);
  return finish_construction(AnyStructure(d), out, force, "dwdouble");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hqb: exact checker and constructor for Hom-(quasi-)bialgebras\n"
      "Exit codes: 0 = all checks pass, 1 = axiom/precondition failure, "
      "2 = input error."};
  app.require_subcommand(1);

  // check
  auto* c_check = app.add_subcommand(
      "check", "Verify every axiom of a structure file at a chosen level");
  std::string check_file, check_level = "auto", check_mode = "full",
                          check_out;
  bool check_json = false;
  c_check->add_option("file", check_file, "structure file")->required();
  c_check->add_option("--level", check_level,
                      "auto|algebra|coalgebra|bialgebra|hq|qt (default auto)")
      ->check(CLI::IsMember(
          {"auto", "algebra", "coalgebra", "bialgebra", "hq", "qt", "qthq"}));
  c_check->add_option("--report", check_mode, "full|first (default full)")
      ->check(CLI::IsMember({"full", "first"}));
  c_check->add_flag("--json", check_json, "print the report as JSON");
  c_check->add_option("-o,--out", check_out, "also write the report here");

  // twist
  auto* c_twist = app.add_subcommand(
      "twist", "Twist a structure by a self-morphism (any level)");
  std::string twist_file, twist_by, twist_out, twist_level = "auto";
  bool twist_force = false;
  c_twist->add_option("file", twist_file, "structure file")->required();
  c_twist->add_option("--by", twist_by, "morphism file")->required();
  c_twist->add_option("--level", twist_level,
                      "twist at this level instead of the file's own")
      ->check(CLI::IsMember(
          {"auto", "algebra", "coalgebra", "bialgebra", "hq", "qt", "qthq"}));
  c_twist->add_option("-o,--out", twist_out, "output structure file");
  c_twist->add_flag("--force", twist_force,
                    "emit the result even if its re-check fails");

  // gauge
  auto* c_gauge = app.add_subcommand(
      "gauge", "Gauge-transform an HQ-bialgebra by an invertible F in A(x)A");
  std::string gauge_file, gauge_f, gauge_out;
  bool gauge_force = false;
  c_gauge->add_option("file", gauge_file, "hq/qt structure file")->required();
  c_gauge->add_option("--f", gauge_f, "element file (tensor power 2)")
      ->required();
  c_gauge->add_option("-o,--out", gauge_out, "output structure file");
  c_gauge->add_flag("--force", gauge_force,
                    "emit the result even if its re-check fails");

  // dual
  auto* c_dual = app.add_subcommand(
      "dual", "Finite-dimensional dual (algebra <-> coalgebra, bialgebra)");
  std::string dual_file, dual_out;
  bool dual_force = false;
  c_dual->add_option("file", dual_file, "structure file")->required();
  c_dual->add_option("-o,--out", dual_out, "output structure file");
  c_dual->add_flag("--force", dual_force,
                   "emit the result even if its re-check fails");

  // antipode
  auto* c_anti = app.add_subcommand(
      "antipode", "Solve S*id = id*S = eta.eps on a Hom-bialgebra");
  std::string anti_file, anti_out;
  c_anti->add_option("file", anti_file, "hom_bialgebra file")->required();
  c_anti->add_option("-o,--out", anti_out, "write S as a morphism file");

  // catalog
  auto* c_cat = app.add_subcommand(
      "catalog", "Built-in verified structures and their morphisms");
  c_cat->require_subcommand(1);
  auto* c_list = c_cat->add_subcommand("list", "List catalog entries");
  auto* c_build =
      c_cat->add_subcommand("build", "Export a catalog entry as a file");
  std::string cat_name, cat_morphism, cat_out;
  std::vector<std::string> cat_sets;
  bool cat_force = false;
  c_build->add_option("name", cat_name, "catalog entry name")->required();
  c_build->add_option("--set", cat_sets,
                      "specialize a parameter, e.g. --set r_choice=1 or "
                      "--set lambda=1");
  c_build->add_option("--morphism", cat_morphism,
                      "export this named morphism instead of the structure");
  c_build->add_option("-o,--out", cat_out, "output file");
  c_build->add_flag("--force", cat_force,
                    "emit the result even if its re-check fails");

  // dwdouble
  auto* c_dw = app.add_subcommand(
      "dwdouble",
      "Twisted quantum double D^w G from a group and a 3-cocycle");
  std::string dw_group, dw_cocycle, dw_out;
  bool dw_force = false;
  c_dw->add_option("--group", dw_group,
                   "group file, or cyclic:N for the cyclic group");
  c_dw->add_option("--cocycle", dw_cocycle,
                   "cocycle file (omitted: the trivial cocycle)");
  c_dw->add_option("-o,--out", dw_out, "output structure file");
  c_dw->add_flag("--force", dw_force,
                 "emit the result even if its re-check fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_check))
      return run_check(check_file, check_level, check_mode, check_json,
                       check_out);
    if (app.got_subcommand(c_twist))
      return run_twist(twist_file, twist_by, twist_level, twist_out,
                       twist_force);
    if (app.got_subcommand(c_gauge))
      return run_gauge(gauge_file, gauge_f, gauge_out, gauge_force);
    if (app.got_subcommand(c_dual))
      return run_dual(dual_file, dual_out, dual_force);
    if (app.got_subcommand(c_anti)) return run_antipode(anti_file, anti_out);
    if (app.got_subcommand(c_cat)) {
      if (c_cat->got_subcommand(c_list)) return run_catalog_list();
      if (c_cat->got_subcommand(c_build))
        return run_catalog_build(cat_name, cat_sets, cat_morphism, cat_out,
                                 cat_force);
    }
    if (app.got_subcommand(c_dw))
      return run_dwdouble(dw_group, dw_cocycle, dw_out, dw_force);
    std::cerr << "input error: no subcommand\n";
    return 2;
  } catch (const ReportedError& e) {
    std::cout << "error: " << e.what() << "\n";
    print_report(std::cout, e.report, nullptr, false);
    return 1;
  } catch (const FileError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
