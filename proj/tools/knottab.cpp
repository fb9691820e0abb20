#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "knottab/census.hpp"
#include "knottab/checks.hpp"
#include "knottab/classify.hpp"
#include "knottab/closedform.hpp"
#include "knottab/diagram.hpp"
#include "knottab/girth.hpp"
#include "knottab/oracle.hpp"

#ifndef KNOTTAB_DATA_DIR
#define KNOTTAB_DATA_DIR "fixtures"
#endif

namespace {

using namespace knottab;
using nlohmann::json;

constexpr int kExitOk = 0, kExitVerify = 1, kExitUsage = 2;

struct Options {
  std::string method = "closed";
  std::string format = "text";
  int max = 6;
  int girth = 2;
  bool even = false, positive = false, mirror_ok = false, over_budget = false;
  int budget = kStateSumCap;
  int jobs = 1;
  std::string data_dir = KNOTTAB_DATA_DIR;
  std::string out;
};

std::optional<LaurentPoly> closed_conway(const Rep& r) {
  if (const auto* g = std::get_if<Girth1Rep>(&r)) return nabla(g->p);
  if (const auto* g = std::get_if<Girth2Rep>(&r)) return conway_double_twist(g->p, g->q);
  const auto& g = std::get<Girth3Rep>(r);
  bool even_pos = true;
  for (Label x : labels_of(r)) even_pos = even_pos && x > 0 && x % 2 == 0;
  if (even_pos) return conway_girth3_even(g);
  return std::nullopt;
}

std::string eval_one(const Rep& r, const std::string& what, Method m, int budget) {
  if (what == "conway") {
    if (m == Method::closed) {
      if (auto c = closed_conway(r)) return c->str();
      throw usage_error("no closed-form Conway polynomial for " + to_string(r) + "; use --method oracle");
    }
    const PDCode pd = pd_from_rep(r);
    if (components(pd) != 1) throw usage_error("the Conway oracle handles knots only");
    return conway_fox(pd, budget).str();
  }
  const RepInvariants inv = rep_invariants(r, m, budget);
  if (what == "bracket") return inv.bracket.str();
  if (what == "jones") return inv.jones.str();
  if (what == "span") return std::to_string(inv.span);
  throw usage_error("unknown invariant " + what);
}

int cmd_eval(const Options& o, const std::string& rep_text, const std::string& what) {
  const Rep r = parse_rep(rep_text);
  if (o.method != "both") {
    const std::string v = eval_one(r, what, o.method == "oracle" ? Method::oracle : Method::closed, o.budget);
    if (o.format == "json")
      std::cout << json{{"rep", to_string(r)}, {"invariant", what}, {"method", o.method}, {"value", v}}.dump() << '\n';
    else
      std::cout << v << '\n';
    return kExitOk;
  }
  const std::string c = eval_one(r, what, Method::closed, o.budget);
  const std::string x = eval_one(r, what, Method::oracle, o.budget);
  const bool agree = c == x;
  if (o.format == "json") {
    std::cout << json{{"rep", to_string(r)}, {"invariant", what}, {"closed", c}, {"oracle", x}, {"agree", agree}}.dump()
              << '\n';
  } else {
    std::cout << "closed: " << c << "\noracle: " << x << '\n' << (agree ? "AGREE" : "DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitVerify;
}

int cmd_compare(const Options& o, const std::string& a, const std::string& b) {
  const Verdict v = compare(parse_rep(a), parse_rep(b), o.mirror_ok, o.budget);
  if (o.format == "json") {
    std::cout << to_json(v).dump() << '\n';
  } else {
    std::cout << to_string(v.tag);
    if (v.evidence) std::cout << "\nevidence: " << v.evidence->str();
    if (!v.witness.empty()) std::cout << "\nwitness: " << v.witness;
    std::cout << '\n';
  }
  return kExitOk;
}

// A PD file, or a representation whose template diagram is used.
PDCode load_input(const std::string& s) {
  if (std::filesystem::exists(s)) return load_pd(s);
  return pd_from_rep(parse_rep(s));
}

int cmd_girth(const Options& o, const std::string& input, bool with_rep) {
  const PDCode pd = load_input(input);
  const int cap = std::max(o.budget == kStateSumCap ? kGirthCrossingCap : o.budget, 0);
  const GirthResult g = diagram_girth(pd, cap);
  const auto rep = rep_from_decomposition(g.witness);
  if (o.format == "json") {
    json j{{"crossings", pd.crossings.size()},
           {"girth", g.girth},
           {"trees_examined", g.trees_examined},
           {"witness", to_json(g.witness)}};
    if (with_rep) j["tree_pair"] = to_json(tree_pair_of(g.witness));
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "crossings: " << pd.crossings.size() << "\ngirth: " << g.girth
            << "\ntrees examined: " << g.trees_examined << "\nshading: " << g.witness.shading << "\ntree edges:";
  for (int e : g.witness.tree_edges) std::cout << ' ' << e;
  std::cout << "\nboundary:";
  for (const auto& b : g.witness.blocks) std::cout << ' ' << b.kind << '(' << b.label << ')';
  std::cout << '\n';
  if (with_rep) {
    if (rep)
      std::cout << "rep: " << to_string(*rep) << '\n';
    else
      std::cout << "tree pair: " << to_json(tree_pair_of(g.witness)).dump() << '\n';
  }
  return kExitOk;
}

int cmd_census(const Options& o) {
  EnumFilters f{o.even, o.positive, o.over_budget};
  const auto reps = enumerate(o.girth, o.max, f);
  const Method m = o.method == "oracle" ? Method::oracle : Method::closed;
  const CensusResult c = dedup_census(reps, m, o.budget, o.jobs, o.mirror_ok);
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot write " + o.out);
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  if (o.format == "csv")
    write_csv(os, c);
  else if (o.format == "json")
    write_jsonl(os, c);
  else
    for (const auto& row : c.rows)
      os << to_string(row.rep) << "  class " << row.class_id << "  " << row.verdict << '\n';
  std::cerr << reps.size() << " representations, " << c.num_classes << " classes, " << c.collisions.size()
            << " collisions\n";
  return kExitOk;
}

int cmd_verify_table(const Options& o, int max_crossings) {
  const auto dir = std::filesystem::path(o.data_dir);
  const TableReport r = verify_table(load_table((dir / "table.json").string()), (dir / "rolfsen").string(), max_crossings);
  if (o.format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    for (const auto& e : r.entries) {
      std::cout << e.status << ' ' << e.name << ' ' << e.rep;
      if (!e.detail.empty()) std::cout << "  " << e.detail;
      std::cout << '\n';
    }
    std::cout << r.passed << " pass, " << r.failed << " fail, " << r.skipped << " skipped, " << r.absent << " absent\n";
  }
  return r.failed ? kExitVerify : kExitOk;
}

int cmd_selftest() {
  CheckOptions opts;  // table half excluded; verify-table covers it
  int failed = 0;
  for (const auto& c : all_checks()) {
    CheckResult r;
    try {
      r = c.run(opts);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.title << ": " << r.detail << std::endl;
    failed += !r.pass;
  }
  return failed ? kExitVerify : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot tables from planar tree pairs"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--method", o.method, "closed, oracle or both")->check(CLI::IsMember({"closed", "oracle", "both"}));
    s->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--budget-crossings", o.budget, "largest diagram handed to an oracle");
  };

  std::string rep1, rep2, what, input;
  int table_max = 99;

  auto* eval = app.add_subcommand("eval", "evaluate an invariant of a representation");
  eval->add_option("rep", rep1, "e.g. \"(2,8)\" or \"[2 2 2/2 2 2]\"")->required();
  eval->add_option("invariant", what, "conway, bracket, jones or span")
      ->required()
      ->check(CLI::IsMember({"conway", "bracket", "jones", "span"}));
  add_common(eval);

  auto* cmp = app.add_subcommand("compare", "try to distinguish two representations");
  cmp->add_option("rep1", rep1)->required();
  cmp->add_option("rep2", rep2)->required();
  cmp->add_flag("--mirror-ok", o.mirror_ok, "treat mirror images as equal");
  add_common(cmp);

  auto* girth = app.add_subcommand("girth", "girth of a diagram (PD file or representation)");
  girth->add_option("input", input)->required();
  add_common(girth);
  auto* decomp = app.add_subcommand("decompose", "girth witness and its representation");
  decomp->add_option("input", input)->required();
  add_common(decomp);

  auto* census = app.add_subcommand("census", "enumerate and deduplicate representations");
  census->add_option("--girth", o.girth)->check(CLI::IsMember({2, 3}));
  census->add_option("--max", o.max, "largest absolute label");
  census->add_flag("--even", o.even);
  census->add_flag("--positive", o.positive);
  census->add_flag("--mirror-ok", o.mirror_ok);
  census->add_flag("--allow-over-budget", o.over_budget);
  census->add_option("--jobs", o.jobs);
  census->add_option("--out", o.out, "output file");
  add_common(census);

  auto* table = app.add_subcommand("verify-table", "check the published table against reference diagrams");
  table->add_option("--data-dir", o.data_dir, "directory with table.json and rolfsen/");
  table->add_option("--max", table_max, "largest crossing number checked");
  add_common(table);

  auto* self = app.add_subcommand("selftest", "closed forms against oracles on the standard grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*eval) return cmd_eval(o, rep1, what);
    if (*cmp) return cmd_compare(o, rep1, rep2);
    if (*girth) return cmd_girth(o, input, false);
    if (*decomp) return cmd_girth(o, input, true);
    if (*census) return cmd_census(o);
    if (*table) return cmd_verify_table(o, table_max);
    if (*self) return cmd_selftest();
  } catch (const std::invalid_argument& e) {
    // usage_error, parse_error and invalid_pd all land here
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitUsage;
}
