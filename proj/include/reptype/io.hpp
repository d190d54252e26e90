#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reptype/dyadic.hpp"
#include "reptype/eqposet.hpp"
#include "reptype/graphs.hpp"
#include "reptype/quivers.hpp"
#include "reptype/relation.hpp"

namespace reptype {

// Malformed JSON; the message carries line and column.
struct ParseError : InputError {
  using InputError::InputError;
};
// Well-formed JSON that does not match a document schema; the message starts
// with the offending field path.
struct SchemaError : InputError {
  using InputError::InputError;
};

enum class DocKind { Relation, Poset, EqPoset, Dyadic, Graph, Quiver };
std::string to_string(DocKind k);
std::optional<DocKind> parse_doc_kind(const std::string& s);

struct Document {
  DocKind kind = DocKind::Relation;
  std::variant<Relation, Poset, EquivPoset, DyadicSet, LabeledGraph, MarkedQuiver> value;
};

// "kind" is required unless the caller supplies a fallback for bare module
// schemas; an explicit "kind" always wins.
Document parse_document(const std::string& text, std::optional<DocKind> fallback = {});
Document read_document(const std::string& path, std::optional<DocKind> fallback = {});
// Canonical JSON, one line. parse_document(render(d)) renders identically.
std::string render(const Document& d);

// ---- command reports

enum ExitCode { kExitOk = 0, kExitVerdict = 1, kExitInput = 2, kExitCap = 3 };

struct Flags {
  std::optional<int> cap;  // unset: each kernel's default
  EdgeOrder edge_order = EdgeOrder::Containment;
  ConditionAScope condA_scope = ConditionAScope::AllEdges;
  bool decimal = false;  // long decimal annotations
  bool witness = false;  // print witnesses and per-vertex data
};

struct Report {
  std::string text;  // newline terminated
  int exit_code = kExitOk;
};

// Exact value with a decimal annotation when it is not an integer.
std::string format_value(const Rat& r, bool long_decimal = false);
std::string format_value(const ExtRat& r, bool long_decimal = false);
std::string format_value(const WeightSum& w, bool long_decimal = false);

// Runs body and maps InputError to exit 2 and cap overruns to exit 3.
Report guarded(const std::function<Report()>& body);

Report cmd_norm(const Document& d, const Flags& fl);
Report cmd_p(const Document& d, const Flags& fl);
Report cmd_faithful(const Document& d, const Flags& fl);
Report cmd_rho(const std::vector<std::string>& args, const Flags& fl);
Report cmd_mu(const std::vector<std::string>& args, const Flags& fl);

enum class GraphMode { Integral, Coxeter };
Report cmd_classify(const Document& d, const Flags& fl, GraphMode mode = GraphMode::Integral);
Report cmd_catalog(CatalogList list, int max_l, const Flags& fl);
Report cmd_verify_conjecture1(int max_n, const Flags& fl);
// Critical subposets of a poset, or criticality of a dyadic set.
Report cmd_critical_scan(const Document& d, const Flags& fl);
// Every valid dyadic set on n points: how many are critical, and whether
// their biequivalences are transitive.
Report cmd_critical_scan_dyadic(int n, const Flags& fl);
Report cmd_oracle_norm(const Document& d, int depth, const Flags& fl);

}  // namespace reptype
