#pragma once

// JSON structure files and axiom-report files.
//
// One document describes one payload, discriminated by "kind": the five
// structure kinds ("hom_algebra", "hom_coalgebra", "hom_bialgebra",
// "hq_bialgebra", "qt_hq_bialgebra"), a linear self-map ("morphism"), a
// tensor element ("element"), a finite group ("group"), or a normalized
// 3-cochain ("cocycle").
//
// Scalars are strings in the scalar grammar.  Sparse sections are objects
// keyed by comma-joined basis indices ("i,j"); omitted entries are zero.
// Basis labels are cosmetic; indices are authoritative.  Serialization is
// canonical — object keys in lexicographic order, fixed indentation — so
// export -> import -> export is byte-identical.
//
// Files may omit "cyclotomic_order"; the default is the HQB_CYCLOTOMIC_ORDER
// environment variable when set, otherwise 24.

#include "hqb/quantum.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace hqb {

/// Malformed input document: missing or ill-typed members, out-of-range
/// indices, unparsable scalars.  The message names the JSON path ("/mu/1,2/3").
struct FileError : Error {
  using Error::Error;
};

/// HQB_CYCLOTOMIC_ORDER when set (must be a positive integer), else 24.
long default_cyclotomic_order();

/// Whatever payload a structure file carries.
struct LoadedFile {
  std::string kind;
  CtxPtr ctx;  // null for "group", which is scalar-free
  int dim = 0;

  std::optional<AnyStructure> structure;  // the five structure kinds
  std::optional<LinMap> map;              // "morphism"
  std::optional<TensorElement> element;   // "element"
  std::optional<FiniteGroup> group;       // "group"
  std::optional<Cocycle3> cocycle;        // "cocycle"
};

LoadedFile parse_structure_json(const nlohmann::json& doc);
LoadedFile load_structure_file(const std::string& path);

nlohmann::json structure_to_json(const AnyStructure& s);
nlohmann::json morphism_to_json(const LinMap& f, const CtxPtr& ctx, int dim);
nlohmann::json element_to_json(const TensorElement& v, const CtxPtr& ctx, int dim);
nlohmann::json group_to_json(const FiniteGroup& g);
nlohmann::json cocycle_to_json(const Cocycle3& w);

/// ReportFile: {"overall": bool, "entries": [{axiom, status, fail_count,
/// witness, witness_labels, residual, note}], "notes": [...]}.  Witness
/// indices are rendered through `space` labels when a space is given.
nlohmann::json report_to_json(const AxiomReport& rep, const SpacePtr& space);

/// Human rendering of a tensor element, e.g. "(a-b) x1(x)x3 + 2 x2(x)x2".
std::string format_element(const TensorElement& v, const SpacePtr& space);

/// Canonical serialization: sorted keys, 2-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& doc);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace hqb
