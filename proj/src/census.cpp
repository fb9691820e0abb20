#include "knottab/census.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <thread>

#include "knottab/diagram.hpp"
#include "knottab/oracle.hpp"

namespace knottab {

namespace {

std::vector<Label> label_range(int max_abs, const EnumFilters& f) {
  std::vector<Label> out;
  for (Label x = f.positive_only ? 1 : -max_abs; x <= max_abs; ++x)
    if (!f.even_only || x % 2 == 0) out.push_back(x);
  return out;
}

// Same polynomial up to +-A^k.
bool unit_equal(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return x == y;
  LaurentPoly ys = y.shifted(x.extremes().min_exp - y.extremes().min_exp);
  return ys == x || -ys == x;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\" ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<Rep> enumerate(int girth, int max_abs_label, const EnumFilters& f) {
  if (girth != 2 && girth != 3) throw usage_error("census supports girth 2 and 3");
  const int cap = girth == 2 ? 12 : 6;
  if (max_abs_label < 0) throw usage_error("label bound must be nonnegative");
  if (max_abs_label > cap && !f.allow_over_budget)
    throw usage_error("label bound " + std::to_string(max_abs_label) + " exceeds the girth-" + std::to_string(girth) +
                      " budget of " + std::to_string(cap));
  const auto labels = label_range(max_abs_label, f);
  std::set<Rep> seen;
  auto add = [&](const Rep& r) {
    Canonical c = canonicalize(r);
    if (!c.degenerate) seen.insert(c.rep);
  };
  if (girth == 2) {
    for (Label p : labels)
      for (Label q : labels) add(Girth2Rep{p, q});
  } else {
    for (Label p : labels)
      for (Label q : labels)
        for (Label r : labels)
          for (Label a : labels)
            for (Label b : labels)
              for (Label c : labels) add(Girth3Rep{{p, q, r}, {a, b, c}});
  }
  return {seen.begin(), seen.end()};
}

CensusResult dedup_census(const std::vector<Rep>& reps, Method m, int budget_crossings, int jobs, bool mirror_ok) {
  CensusResult out;
  out.rows.resize(reps.size());
  jobs = std::clamp(jobs, 1, 64);
  std::vector<std::string> errors(jobs);
  {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < reps.size(); i += jobs) {
            out.rows[i].rep = reps[i];
            out.rows[i].inv = rep_invariants(reps[i], m, budget_crossings);
          }
        } catch (const std::exception& e) {
          errors[j] = e.what();
        }
      });
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error("census failed: " + e);

  // Classes keyed by (components, conway, jones); links key on the bracket
  // up to a unit since their Jones depends on orientations.
  std::map<std::string, int> class_of;
  std::vector<std::vector<int>> members;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const auto& inv = out.rows[i].inv;
    std::string key = std::to_string(inv.components) + "|" + (inv.conway ? inv.conway->str() : "-") + "|";
    if (inv.components == 1) {
      key += inv.jones.str();
    } else {
      auto ex = inv.bracket.extremes();
      LaurentPoly b = inv.bracket.shifted(-ex.min_exp);
      if (b.coeff(0) < 0) b = -b;
      key += b.str();
    }
    auto [it, fresh] = class_of.emplace(key, static_cast<int>(members.size()));
    if (fresh) members.emplace_back();
    members[it->second].push_back(static_cast<int>(i));
    out.rows[i].class_id = it->second;
  }
  out.num_classes = static_cast<int>(members.size());
  for (const auto& cls : members) {
    if (cls.size() < 2) {
      out.rows[cls[0]].verdict = "unique";
      continue;
    }
    out.collisions.push_back(cls);
    out.rows[cls[0]].verdict = "class-representative";
    for (std::size_t k = 1; k < cls.size(); ++k)
      out.rows[cls[k]].verdict =
          to_string(compare(out.rows[cls[0]].rep, out.rows[cls[k]].rep, mirror_ok, budget_crossings).tag);
  }
  return out;
}

void write_csv(std::ostream& os, const CensusResult& c) {
  os << "rep,girth,components,conway,jones,span,class_id,verdict\n";
  for (const auto& r : c.rows) {
    os << csv_field(to_string(r.rep)) << ',' << girth_of(r.rep) << ',' << r.inv.components << ','
       << csv_field(r.inv.conway ? r.inv.conway->str() : "") << ',' << csv_field(r.inv.jones.str()) << ','
       << r.inv.span << ',' << r.class_id << ',' << r.verdict << '\n';
  }
}

void write_jsonl(std::ostream& os, const CensusResult& c) {
  for (const auto& r : c.rows) {
    nlohmann::json j{{"rep", to_string(r.rep)},
                     {"girth", girth_of(r.rep)},
                     {"components", r.inv.components},
                     {"conway", r.inv.conway ? nlohmann::json(r.inv.conway->str()) : nlohmann::json(nullptr)},
                     {"bracket", r.inv.bracket.str()},
                     {"jones", r.inv.jones.str()},
                     {"span", r.inv.span},
                     {"source", r.inv.source},
                     {"class_id", r.class_id},
                     {"verdict", r.verdict}};
    os << j.dump() << '\n';
  }
}

std::vector<TableFixture> load_table(const std::string& table_json) {
  std::ifstream in(table_json);
  if (!in) throw std::runtime_error("cannot open " + table_json);
  const auto j = nlohmann::json::parse(in);
  static const std::regex name_re(R"((\d+)(?:\^(\d+))?_(\d+))");
  std::vector<TableFixture> out;
  for (const auto& e : j) {
    TableFixture f;
    f.name = e.at("name").get<std::string>();
    if (!e.at("rep").is_null()) f.rep = e.at("rep").get<std::string>();
    std::smatch m;
    if (!std::regex_match(f.name, m, name_re)) throw std::invalid_argument("unrecognized knot name " + f.name);
    f.crossings = std::stoi(m[1]);
    f.components = m[2].matched ? std::stoi(m[2]) : 1;
    out.push_back(std::move(f));
  }
  return out;
}

TableReport verify_table(const std::vector<TableFixture>& table, const std::string& fixture_dir, int max_crossings) {
  TableReport rep;
  for (const auto& f : table) {
    TableEntryResult e{f.name, f.rep.value_or("?"), "", ""};
    if (!f.rep) {
      e.status = "ABSENT";
      e.detail = "no representation listed";
      ++rep.absent;
      rep.entries.push_back(std::move(e));
      continue;
    }
    const std::string path = (std::filesystem::path(fixture_dir) / (f.name + ".pd.json")).string();
    if (f.crossings > max_crossings || !std::filesystem::exists(path)) {
      e.status = "SKIP";
      e.detail = f.crossings > max_crossings ? "above crossing limit" : "missing fixture " + path;
      ++rep.skipped;
      rep.entries.push_back(std::move(e));
      continue;
    }
    const PDCode ref = load_pd(path);
    const PDCode mine = pd_from_rep(parse_rep(*f.rep));
    const int cref = components(ref), cmine = components(mine);
    bool ok = false;
    if (cref != f.components) throw std::runtime_error("fixture " + path + " has the wrong component count");
    if (cmine != cref) {
      e.detail = "components " + std::to_string(cmine) + " vs " + std::to_string(cref);
    } else if (cref == 1) {
      LaurentPoly jr = jones_oracle(ref), jm = jones_oracle(mine);
      ok = jm == jr || jm == jr.invert_variable();
      if (!ok) e.detail = "jones " + jm.str() + " vs reference " + jr.str();
    } else {
      LaurentPoly br = bracket_oracle(ref), bm = bracket_oracle(mine);
      ok = unit_equal(bm, br) || unit_equal(bm, br.invert_variable());
      if (!ok) e.detail = "bracket " + bm.str() + " vs reference " + br.str();
    }
    e.status = ok ? "PASS" : "FAIL";
    ++(ok ? rep.passed : rep.failed);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

nlohmann::json to_json(const TableReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"name", e.name}, {"rep", e.rep}, {"status", e.status}, {"detail", e.detail}});
  return {{"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}, {"absent", r.absent}, {"entries", entries}};
}

}  // namespace knottab
