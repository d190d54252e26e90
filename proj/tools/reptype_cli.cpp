#include <CLI11.hpp>
#include <iostream>

#include "reptype/io.hpp"

using namespace reptype;

namespace {

CatalogList parse_list(const std::string& s) {
  if (s == "I") return CatalogList::I;
  if (s == "II") return CatalogList::II;
  if (s == "III") return CatalogList::III;
  return CatalogList::IV;
}

Document load(const std::string& path, std::optional<DocKind> fallback, std::vector<DocKind> allowed) {
  Document d = read_document(path, fallback);
  if (std::find(allowed.begin(), allowed.end(), d.kind) == allowed.end())
    throw SchemaError("kind: this command does not accept " + to_string(d.kind) + " documents");
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact norms of relations, separating functions and representation types"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags fl;
  std::string edge_order = "containment", condA = "all";
  int cap = 0;
  app.add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--edge-order", edge_order, "edge order on dyadic sets")
      ->check(CLI::IsMember({"literal", "containment"}));
  app.add_option("--condA-scope", condA, "edges checked by condition A")
      ->check(CLI::IsMember({"all", "long"}));
  app.add_flag("--decimal", fl.decimal, "long decimal annotations");
  app.add_flag("--witness", fl.witness, "print witnesses");

  std::string file;
  std::vector<std::string> numbers;

  auto* norm_cmd = app.add_subcommand("norm", "exact norm of a relation or poset");
  norm_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* p_cmd = app.add_subcommand("p", "P = 1 / norm");
  p_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* faithful_cmd = app.add_subcommand("faithful", "P-faithfulness");
  faithful_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* rho_cmd = app.add_subcommand("rho", "rho(n1) + rho(n2) + ...");
  rho_cmd->add_option("n", numbers)->required();
  auto* mu_cmd = app.add_subcommand("mu", "mu(n1, n2, n3)");
  mu_cmd->add_option("n", numbers)->required()->expected(3);

  std::string kind_text, mode = "integral";
  auto* classify_cmd = app.add_subcommand("classify", "representation type");
  classify_cmd->add_option("kind", kind_text)
      ->required()
      ->check(CLI::IsMember({"poset", "eqposet", "dyadic", "graph", "quiver"}));
  classify_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--mode", mode, "graph labels")->check(CLI::IsMember({"integral", "coxeter"}));

  std::string list = "I";
  int max_l = 12;
  auto* catalog_cmd = app.add_subcommand("catalog", "named graphs of a list");
  catalog_cmd->add_option("list", list)->required()->check(CLI::IsMember({"I", "II", "III", "IV"}));
  catalog_cmd->add_option("--max-l", max_l, "largest family parameter");

  int max_n = 6;
  auto* conj_cmd = app.add_subcommand("verify-conjecture1",
                                      "connected P-faithful posets are chains or uniform wattles");
  conj_cmd->add_option("--max-n", max_n, "largest poset size");

  int dyadic_n = 0;
  auto* scan_cmd = app.add_subcommand("critical-scan", "critical subposets or critical dyadic sets");
  scan_cmd->add_option("file", file)->check(CLI::ExistingFile);
  scan_cmd->add_option("--dyadic-n", dyadic_n, "scan every dyadic set on this many points");

  std::string oracle_what;
  int depth = 12;
  auto* oracle_cmd = app.add_subcommand("oracle", "floating-point cross-checks");
  oracle_cmd->add_option("what", oracle_what)->required()->check(CLI::IsMember({"norm"}));
  oracle_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--depth", depth, "refinement depth")->check(CLI::Range(1, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (cap > 0) fl.cap = cap;
  fl.edge_order = edge_order == "literal" ? EdgeOrder::Literal : EdgeOrder::Containment;
  fl.condA_scope = condA == "long" ? ConditionAScope::LongEdges : ConditionAScope::AllEdges;

  const std::vector<DocKind> relational{DocKind::Relation, DocKind::Poset};
  Report rep = guarded([&]() -> Report {
    if (*norm_cmd) return cmd_norm(load(file, DocKind::Relation, relational), fl);
    if (*p_cmd) return cmd_p(load(file, DocKind::Relation, relational), fl);
    if (*faithful_cmd) return cmd_faithful(load(file, DocKind::Relation, relational), fl);
    if (*rho_cmd) return cmd_rho(numbers, fl);
    if (*mu_cmd) return cmd_mu(numbers, fl);
    if (*classify_cmd) {
      DocKind k = *parse_doc_kind(kind_text);
      return cmd_classify(load(file, k, {k}), fl,
                          mode == "coxeter" ? GraphMode::Coxeter : GraphMode::Integral);
    }
    if (*catalog_cmd) return cmd_catalog(parse_list(list), max_l, fl);
    if (*conj_cmd) return cmd_verify_conjecture1(max_n, fl);
    if (*scan_cmd) {
      if (dyadic_n > 0) return cmd_critical_scan_dyadic(dyadic_n, fl);
      if (file.empty()) throw InputError("critical-scan needs a file or --dyadic-n");
      return cmd_critical_scan(load(file, std::nullopt, {DocKind::Poset, DocKind::Dyadic}), fl);
    }
    return cmd_oracle_norm(load(file, DocKind::Relation, relational), depth, fl);
  });

  (rep.exit_code == kExitInput || rep.exit_code == kExitCap ? std::cerr : std::cout) << rep.text;
  return rep.exit_code;
}
