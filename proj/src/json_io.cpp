#include "hqb/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hqb {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw FileError(path + ": " + msg);
}

std::string jp(const std::string& base, const std::string& key) {
  return base + "/" + key;
}

const json* find_member(const json& doc, const char* key) {
  auto it = doc.find(key);
  return it == doc.end() ? nullptr : &*it;
}

const json& need(const json& doc, const std::string& base, const char* key) {
  const json* m = find_member(doc, key);
  if (!m) fail(jp(base, key), "missing required member");
  return *m;
}

long as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& as_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

Scalar as_scalar(const json& j, const CtxPtr& ctx, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a scalar string");
  const std::string text = j.get<std::string>();
  try {
    return parse_scalar(ctx, text);
  } catch (const Error& e) {
    fail(path, "scalar '" + text + "' does not parse: " + e.what());
  }
}

/// "i,j,k" -> {i,j,k}, all in [0,dim); "" means the empty tuple (power 0).
std::vector<int> as_index_key(const std::string& key, int arity, int dim,
                              const std::string& path) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= key.size() && !key.empty()) {
    std::size_t comma = key.find(',', start);
    std::size_t end = (comma == std::string::npos) ? key.size() : comma;
    const std::string piece = key.substr(start, end - start);
    if (piece.empty() || piece.size() > 6 ||
        piece.find_first_not_of("0123456789") != std::string::npos)
      fail(path, "key '" + key + "' is not a comma-joined index tuple");
    out.push_back(static_cast<int>(std::stol(piece)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(out.size()) != arity)
    fail(path, "key '" + key + "' has " + std::to_string(out.size()) +
                   " indices; expected " + std::to_string(arity));
  for (int v : out)
    if (v < 0 || v >= dim)
      fail(path, "index " + std::to_string(v) + " out of range [0, " +
                     std::to_string(dim) + ")");
  return out;
}

std::string index_key(const std::vector<int>& idx) {
  std::string out;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(idx[t]);
  }
  return out;
}

// -- section parsers ---------------------------------------------------------

MulMap parse_mu(const json& sec, const CtxPtr& ctx, int dim,
                const std::string& base) {
  MulMap m;
  m.dim = dim;
  for (const auto& [key, cell] : as_object(sec, base).items()) {
    const std::string cpath = jp(base, key);
    const auto ij = as_index_key(key, 2, dim, cpath);
    for (const auto& [out_key, sval] : as_object(cell, cpath).items()) {
      const std::string spath = jp(cpath, out_key);
      const auto k = as_index_key(out_key, 1, dim, spath);
      m.add(ij[0], ij[1], k[0], as_scalar(sval, ctx, spath));
    }
  }
  return m;
}

ComulMap parse_delta(const json& sec, const CtxPtr& ctx, int dim,
                     const std::string& base) {
  ComulMap d;
  d.dim = dim;
  for (const auto& [key, cell] : as_object(sec, base).items()) {
    const std::string cpath = jp(base, key);
    const auto i = as_index_key(key, 1, dim, cpath);
    for (const auto& [out_key, sval] : as_object(cell, cpath).items()) {
      const std::string spath = jp(cpath, out_key);
      const auto jk = as_index_key(out_key, 2, dim, spath);
      d.add(i[0], jk[0], jk[1], as_scalar(sval, ctx, spath));
    }
  }
  return d;
}

LinMap parse_linmap(const json& sec, const CtxPtr& ctx, int dim, int src_power,
                    int dst_power, const std::string& base) {
  LinMap f;
  f.src = src_power;
  f.dst = dst_power;
  for (const auto& [key, cell] : as_object(sec, base).items()) {
    const std::string cpath = jp(base, key);
    const auto in = as_index_key(key, src_power, dim, cpath);
    for (const auto& [out_key, sval] : as_object(cell, cpath).items()) {
      const std::string spath = jp(cpath, out_key);
      const auto out = as_index_key(out_key, dst_power, dim, spath);
      f.add_entry(pack_key(in), pack_key(out), as_scalar(sval, ctx, spath));
    }
  }
  return f;
}

/// Flat row {"i": scalar} -> the counit as a map A -> K (target power 0).
LinMap parse_counit(const json& sec, const CtxPtr& ctx, int dim,
                    const std::string& base) {
  LinMap eps;
  eps.src = 1;
  eps.dst = 0;
  for (const auto& [key, sval] : as_object(sec, base).items()) {
    const std::string spath = jp(base, key);
    const auto i = as_index_key(key, 1, dim, spath);
    eps.add_entry(pack_key(i), 0, as_scalar(sval, ctx, spath));
  }
  return eps;
}

TensorElement parse_coords(const json& sec, const CtxPtr& ctx, int dim,
                           int power, const std::string& base) {
  TensorElement v = te_zero(power);
  for (const auto& [key, sval] : as_object(sec, base).items()) {
    const std::string spath = jp(base, key);
    const auto idx = as_index_key(key, power, dim, spath);
    v.add_term(pack_key(idx), as_scalar(sval, ctx, spath));
  }
  return v;
}

// -- header parsers ----------------------------------------------------------

CtxPtr parse_context(const json& doc) {
  long order = default_cyclotomic_order();
  if (const json* m = find_member(doc, "cyclotomic_order")) {
    order = as_integer(*m, "/cyclotomic_order");
    if (order < 1 || order > 10000)
      fail("/cyclotomic_order", "must be in [1, 10000]");
  }
  std::vector<std::string> params;
  if (const json* m = find_member(doc, "parameters")) {
    if (!m->is_array()) fail("/parameters", "expected an array of names");
    for (std::size_t t = 0; t < m->size(); ++t)
      params.push_back(
          as_string((*m)[t], "/parameters/" + std::to_string(t)));
  }
  return ScalarContext::create(static_cast<int>(order), std::move(params));
}

int parse_dim(const json& doc) {
  const long dim = as_integer(need(doc, "", "dim"), "/dim");
  if (dim < 1 || dim > 255) fail("/dim", "must be in [1, 255]");
  return static_cast<int>(dim);
}

SpacePtr parse_space(const json& doc, int dim) {
  const json* m = find_member(doc, "labels");
  if (!m) return Space::create(dim);
  if (!m->is_array() || static_cast<int>(m->size()) != dim)
    fail("/labels", "expected an array of dim strings");
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < m->size(); ++t)
    labels.push_back(as_string((*m)[t], "/labels/" + std::to_string(t)));
  return Space::create(std::move(labels));
}

int parse_power(const json& j, const std::string& path) {
  const long p = as_integer(j, path);
  if (p < 0 || p > 8) fail(path, "tensor power must be in [0, 8]");
  return static_cast<int>(p);
}

FiniteGroup parse_group(const json& doc, const std::string& base) {
  const json& table_j = need(doc, base, "table");
  if (!table_j.is_array()) fail(jp(base, "table"), "expected an array of rows");
  const int n = static_cast<int>(table_j.size());
  std::vector<std::vector<int>> table(n);
  for (int a = 0; a < n; ++a) {
    const std::string rpath = jp(base, "table") + "/" + std::to_string(a);
    const json& row = table_j[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(rpath, "expected a row of " + std::to_string(n) + " indices");
    for (int b = 0; b < n; ++b) {
      const long v = as_integer(row[b], rpath + "/" + std::to_string(b));
      if (v < 0 || v >= n)
        fail(rpath + "/" + std::to_string(b), "element index out of range");
      table[a].push_back(static_cast<int>(v));
    }
  }
  std::vector<std::string> labels;
  if (const json* m = find_member(doc, "labels")) {
    if (!m->is_array() || static_cast<int>(m->size()) != n)
      fail(jp(base, "labels"), "expected an array of " + std::to_string(n) +
                                   " strings");
    for (std::size_t t = 0; t < m->size(); ++t)
      labels.push_back(
          as_string((*m)[t], jp(base, "labels") + "/" + std::to_string(t)));
  }
  return make_group(std::move(table), std::move(labels));
}

// -- section serializers -----------------------------------------------------

json section_mu(const MulMap& m) {
  json out = json::object();
  for (const auto& [ij, row] : m.c) {
    json cell = json::object();
    for (const auto& [k, v] : row)
      if (!v.is_zero()) cell[std::to_string(k)] = format_scalar(v);
    if (!cell.empty()) out[index_key({ij.first, ij.second})] = std::move(cell);
  }
  return out;
}

json section_delta(const ComulMap& d) {
  json out = json::object();
  for (const auto& [i, row] : d.d) {
    json cell = json::object();
    for (const auto& [k, v] : row)
      if (!v.is_zero()) cell[index_key(unpack_key(k, 2))] = format_scalar(v);
    if (!cell.empty()) out[std::to_string(i)] = std::move(cell);
  }
  return out;
}

json section_linmap(const LinMap& f) {
  json out = json::object();
  for (const auto& [in, col] : f.cols) {
    json cell = json::object();
    for (const auto& [o, v] : col)
      if (!v.is_zero()) cell[index_key(unpack_key(o, f.dst))] = format_scalar(v);
    if (!cell.empty()) out[index_key(unpack_key(in, f.src))] = std::move(cell);
  }
  return out;
}

json section_counit(const LinMap& eps) {
  json out = json::object();
  for (const auto& [in, col] : eps.cols)
    for (const auto& [o, v] : col) {
      (void)o;
      if (!v.is_zero()) out[index_key(unpack_key(in, 1))] = format_scalar(v);
    }
  return out;
}

json section_coords(const TensorElement& v) {
  json out = json::object();
  for (const auto& [k, c] : v.coords)
    out[index_key(unpack_key(k, v.power))] = format_scalar(c);
  return out;
}

void write_header(json& doc, const char* kind, const CtxPtr& ctx, int dim,
                  const SpacePtr& space) {
  doc["kind"] = kind;
  doc["cyclotomic_order"] = ctx->cyclotomic_order();
  doc["parameters"] = ctx->parameter_names();
  doc["dim"] = dim;
  if (space) doc["labels"] = space->labels;
}

}  // namespace

long default_cyclotomic_order() {
  const char* env = std::getenv("HQB_CYCLOTOMIC_ORDER");
  if (!env || !*env) return 24;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1 || v > 10000)
    throw FileError(
        "HQB_CYCLOTOMIC_ORDER must be a positive integer, got '" +
        std::string(env) + "'");
  return v;
}

LoadedFile parse_structure_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("", "the document root must be an object");
  LoadedFile lf;
  lf.kind = as_string(need(doc, "", "kind"), "/kind");

  if (lf.kind == "group") {
    lf.group = parse_group(doc, "");
    lf.dim = lf.group->n;
    return lf;
  }

  lf.ctx = parse_context(doc);

  if (lf.kind == "cocycle") {
    const json& gj = need(doc, "", "group");
    if (!gj.is_object()) fail("/group", "expected an embedded group object");
    FiniteGroup g = parse_group(gj, "/group");
    Cocycle3 w = trivial_cocycle(g, lf.ctx);
    if (const json* values = find_member(doc, "values")) {
      for (const auto& [key, sval] : as_object(*values, "/values").items()) {
        const std::string spath = jp("/values", key);
        const auto xyz = as_index_key(key, 3, g.n, spath);
        w.set(xyz[0], xyz[1], xyz[2], as_scalar(sval, lf.ctx, spath));
      }
    }
    lf.dim = g.n;
    lf.group = std::move(g);
    lf.cocycle = std::move(w);
    return lf;
  }

  lf.dim = parse_dim(doc);
  const int dim = lf.dim;
  SpacePtr space = parse_space(doc, dim);
  const CtxPtr& ctx = lf.ctx;

  if (lf.kind == "morphism") {
    int src = 1, dst = 1;
    if (const json* m = find_member(doc, "src_power"))
      src = parse_power(*m, "/src_power");
    if (const json* m = find_member(doc, "dst_power"))
      dst = parse_power(*m, "/dst_power");
    lf.map = parse_linmap(need(doc, "", "map"), ctx, dim, src, dst, "/map");
    return lf;
  }

  if (lf.kind == "element") {
    const int power = parse_power(need(doc, "", "power"), "/power");
    lf.element = parse_coords(need(doc, "", "coords"), ctx, dim, power, "/coords");
    return lf;
  }

  if (lf.kind == "hom_algebra") {
    HomAlgebra a;
    a.ctx = ctx;
    a.space = space;
    a.mu = parse_mu(need(doc, "", "mu"), ctx, dim, "/mu");
    a.alpha = parse_linmap(need(doc, "", "alpha"), ctx, dim, 1, 1, "/alpha");
    if (const json* m = find_member(doc, "unit"))
      a.eta = parse_coords(*m, ctx, dim, 1, "/unit");
    lf.structure = std::move(a);
    return lf;
  }

  if (lf.kind == "hom_coalgebra") {
    HomCoalgebra c;
    c.ctx = ctx;
    c.space = space;
    c.delta = parse_delta(need(doc, "", "delta"), ctx, dim, "/delta");
    c.alpha = parse_linmap(need(doc, "", "alpha"), ctx, dim, 1, 1, "/alpha");
    if (const json* m = find_member(doc, "counit"))
      c.eps = parse_counit(*m, ctx, dim, "/counit");
    lf.structure = std::move(c);
    return lf;
  }

  if (lf.kind == "hom_bialgebra") {
    HomBialgebra b;
    b.ctx = ctx;
    b.space = space;
    b.mu = parse_mu(need(doc, "", "mu"), ctx, dim, "/mu");
    b.eta = parse_coords(need(doc, "", "unit"), ctx, dim, 1, "/unit");
    b.delta = parse_delta(need(doc, "", "delta"), ctx, dim, "/delta");
    b.eps = parse_counit(need(doc, "", "counit"), ctx, dim, "/counit");
    b.alpha = parse_linmap(need(doc, "", "alpha"), ctx, dim, 1, 1, "/alpha");
    if (const json* m = find_member(doc, "beta"))
      b.beta = parse_linmap(*m, ctx, dim, 1, 1, "/beta");
    else
      b.beta = b.alpha;
    lf.structure = std::move(b);
    return lf;
  }

  if (lf.kind == "hq_bialgebra" || lf.kind == "qt_hq_bialgebra") {
    QTHQBialgebra q;
    q.ctx = ctx;
    q.space = space;
    q.mu = parse_mu(need(doc, "", "mu"), ctx, dim, "/mu");
    q.eta = parse_coords(need(doc, "", "unit"), ctx, dim, 1, "/unit");
    q.delta = parse_delta(need(doc, "", "delta"), ctx, dim, "/delta");
    q.eps = parse_counit(need(doc, "", "counit"), ctx, dim, "/counit");
    q.alpha = parse_linmap(need(doc, "", "alpha"), ctx, dim, 1, 1, "/alpha");
    q.phi = parse_coords(need(doc, "", "phi"), ctx, dim, 3, "/phi");
    if (const json* m = find_member(doc, "phi_inv"))
      q.phi_inv = parse_coords(*m, ctx, dim, 3, "/phi_inv");
    if (lf.kind == "hq_bialgebra") {
      lf.structure = static_cast<HQBialgebra&&>(q);
    } else {
      q.r = parse_coords(need(doc, "", "r"), ctx, dim, 2, "/r");
      if (const json* m = find_member(doc, "r_inv"))
        q.r_inv = parse_coords(*m, ctx, dim, 2, "/r_inv");
      lf.structure = std::move(q);
    }
    return lf;
  }

  fail("/kind", "unknown kind '" + lf.kind + "'");
}

LoadedFile load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot read '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FileError(path + ": not valid JSON: " + e.what());
  }
  try {
    return parse_structure_json(doc);
  } catch (const FileError& e) {
    throw FileError(path + e.what());
  }
}

nlohmann::json structure_to_json(const AnyStructure& s) {
  const StructureView v = view_of(s);
  json doc = json::object();
  const int dim = v.space->dim;

  if (std::holds_alternative<HomAlgebra>(s)) {
    const auto& a = std::get<HomAlgebra>(s);
    write_header(doc, "hom_algebra", v.ctx, dim, v.space);
    doc["mu"] = section_mu(a.mu);
    doc["alpha"] = section_linmap(a.alpha);
    if (a.eta) doc["unit"] = section_coords(*a.eta);
    return doc;
  }
  if (std::holds_alternative<HomCoalgebra>(s)) {
    const auto& c = std::get<HomCoalgebra>(s);
    write_header(doc, "hom_coalgebra", v.ctx, dim, v.space);
    doc["delta"] = section_delta(c.delta);
    doc["alpha"] = section_linmap(c.alpha);
    if (c.eps) doc["counit"] = section_counit(*c.eps);
    return doc;
  }
  if (std::holds_alternative<HomBialgebra>(s)) {
    const auto& b = std::get<HomBialgebra>(s);
    write_header(doc, "hom_bialgebra", v.ctx, dim, v.space);
    doc["mu"] = section_mu(b.mu);
    doc["unit"] = section_coords(b.eta);
    doc["delta"] = section_delta(b.delta);
    doc["counit"] = section_counit(b.eps);
    doc["alpha"] = section_linmap(b.alpha);
    doc["beta"] = section_linmap(b.beta);
    return doc;
  }

  const HQBialgebra& h = std::holds_alternative<HQBialgebra>(s)
                             ? static_cast<const HQBialgebra&>(
                                   std::get<HQBialgebra>(s))
                             : static_cast<const HQBialgebra&>(
                                   std::get<QTHQBialgebra>(s));
  const bool qt = std::holds_alternative<QTHQBialgebra>(s);
  write_header(doc, qt ? "qt_hq_bialgebra" : "hq_bialgebra", v.ctx, dim,
               v.space);
  doc["mu"] = section_mu(h.mu);
  doc["unit"] = section_coords(h.eta);
  doc["delta"] = section_delta(h.delta);
  doc["counit"] = section_counit(h.eps);
  doc["alpha"] = section_linmap(h.alpha);
  doc["phi"] = section_coords(h.phi);
  if (h.phi_inv) doc["phi_inv"] = section_coords(*h.phi_inv);
  if (qt) {
    const auto& q = std::get<QTHQBialgebra>(s);
    doc["r"] = section_coords(q.r);
    if (q.r_inv) doc["r_inv"] = section_coords(*q.r_inv);
  }
  return doc;
}

nlohmann::json morphism_to_json(const LinMap& f, const CtxPtr& ctx, int dim) {
  json doc = json::object();
  doc["kind"] = "morphism";
  doc["cyclotomic_order"] = ctx->cyclotomic_order();
  doc["parameters"] = ctx->parameter_names();
  doc["dim"] = dim;
  doc["src_power"] = f.src;
  doc["dst_power"] = f.dst;
  doc["map"] = section_linmap(f);
  return doc;
}

nlohmann::json element_to_json(const TensorElement& v, const CtxPtr& ctx,
                               int dim) {
  json doc = json::object();
  doc["kind"] = "element";
  doc["cyclotomic_order"] = ctx->cyclotomic_order();
  doc["parameters"] = ctx->parameter_names();
  doc["dim"] = dim;
  doc["power"] = v.power;
  doc["coords"] = section_coords(v);
  return doc;
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  json doc = json::object();
  doc["kind"] = "group";
  doc["table"] = g.table;
  doc["labels"] = g.labels;
  return doc;
}

nlohmann::json cocycle_to_json(const Cocycle3& w) {
  json doc = json::object();
  doc["kind"] = "cocycle";
  doc["cyclotomic_order"] = w.ctx->cyclotomic_order();
  doc["parameters"] = w.ctx->parameter_names();
  json g = group_to_json(w.group);
  g.erase("kind");
  doc["group"] = std::move(g);
  json values = json::object();
  const int n = w.group.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Scalar& v = w.value(x, y, z);
        if (!v.is_one()) values[index_key({x, y, z})] = format_scalar(v);
      }
  doc["values"] = std::move(values);
  return doc;
}

nlohmann::json report_to_json(const AxiomReport& rep, const SpacePtr& space) {
  json doc = json::object();
  doc["overall"] = rep.overall();
  json entries = json::array();
  for (const AxiomEntry& e : rep.entries) {
    json je = json::object();
    je["axiom"] = e.axiom;
    je["status"] = e.pass ? "pass" : "fail";
    je["fail_count"] = e.fail_count;
    if (e.witness) {
      je["witness"] = *e.witness;
      json labels = json::array();
      for (int i : *e.witness) {
        if (space && i >= 0 && i < space->dim)
          labels.push_back(space->labels[i]);
        else
          labels.push_back("e" + std::to_string(i));
      }
      je["witness_labels"] = std::move(labels);
    }
    if (e.residual) {
      json res = json::object();
      res["power"] = e.residual->power;
      res["coords"] = section_coords(*e.residual);
      je["residual"] = std::move(res);
    }
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(std::move(je));
  }
  doc["entries"] = std::move(entries);
  doc["notes"] = rep.notes;
  return doc;
}

std::string format_element(const TensorElement& v, const SpacePtr& space) {
  if (v.coords.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v.coords) {
    if (!out.empty()) out += " + ";
    if (v.power == 0) {
      out += format_scalar(c);
      continue;
    }
    std::string basis;
    for (int i : unpack_key(k, v.power)) {
      if (!basis.empty()) basis += "(x)";
      basis += (space && i < space->dim) ? space->labels[i]
                                         : "e" + std::to_string(i);
    }
    if (c.is_one())
      out += basis;
    else
      out += "(" + format_scalar(c) + ") " + basis;
  }
  return out;
}

std::string canonical_dump(const nlohmann::json& doc) {
  return doc.dump(2) + "\n";
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << canonical_dump(doc);
  out.flush();
  if (!out) throw FileError("write to '" + path + "' failed");
}

}  // namespace hqb
