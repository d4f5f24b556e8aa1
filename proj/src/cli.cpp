#include "so2m/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "so2m/chevalley.hpp"
#include "so2m/cycles.hpp"

namespace so2m::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structured value for JSON plus its rendering for csv and text.
struct Cell {
  Json value;
  std::string text;
};

Cell cell(int v) { return {v, std::to_string(v)}; }
Cell cell(bool v) { return {v, v ? "yes" : "no"}; }
Cell cell(const std::string& v) { return {v, v}; }

Cell cell(const HodgePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [deg, c] : p.terms()) terms.push_back({deg.first, deg.second, c});
  return {terms, p.to_string()};
}

Cell cell(const std::vector<std::string>& v) {
  std::string text;
  for (const auto& s : v) text += (text.empty() ? "" : " ") + s;
  return {Json(v), text.empty() ? "-" : text};
}

Cell cell(const std::vector<Root>& roots) {
  Json arr = Json::array();
  std::string text;
  for (const auto& r : roots) {
    arr.push_back(r.coords);
    text += (text.empty() ? "" : " ") + to_string(r);
  }
  return {arr, text.empty() ? "empty" : text};
}

Cell cell_vector(const std::vector<int>& v) { return {Json(v), to_string(Root(v))}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_table(const Table& t, const RunConfig& cfg, const LieContext& ctx, std::ostream& out) {
  switch (cfg.format) {
    case Format::Json: {
      Json doc;
      doc["m"] = ctx.m;
      doc["family"] = to_string(ctx.family);
      Json rows = Json::array();
      for (const auto& r : t.rows) {
        Json obj = Json::object();
        for (std::size_t k = 0; k < t.columns.size(); ++k) obj[t.columns[k]] = r[k].value;
        rows.push_back(obj);
      }
      doc["rows"] = rows;
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::Csv: {
      for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "," : "") << csv_field(t.columns[k]);
      out << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << csv_field(r[k].text);
        out << "\n";
      }
      return;
    }
    case Format::Text: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t k = 0; k < t.columns.size(); ++k) width[k] = t.columns[k].size();
      for (const auto& r : t.rows)
        for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].text.size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t k = 0; k < cells.size(); ++k) {
          s += k ? " | " : "";
          s += cells[k] + std::string(k + 1 < cells.size() ? width[k] - cells[k].size() : 0, ' ');
        }
        out << s << "\n";
      };
      out << "m = " << ctx.m << ", family " << to_string(ctx.family) << "\n";
      line(t.columns);
      std::size_t total = 0;
      for (auto w : width) total += w;
      out << std::string(total + 3 * (width.size() - 1), '-') << "\n";
      for (const auto& r : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : r) cells.push_back(c.text);
        line(cells);
      }
      return;
    }
  }
}

// ---- verification suites ----

std::vector<Variant> variants_for(const LieContext& ctx) {
  std::vector<Variant> v{Variant::T0};
  if (ctx.family == Family::D && ctx.m >= 4) v.push_back(Variant::T0Prime);
  return v;
}

Report suite_chevalley(const LieContext& ctx) {
  Report rep("chevalley");
  for (auto v : variants_for(ctx)) {
    try {
      rep.merge(verify_chevalley(build_chevalley(build_root_system(ctx, v))));
    } catch (const ChevalleyError& e) {
      rep.expect(false, to_string(v) + ": " + e.what());
    }
  }
  return rep;
}

Report suite_real_basis(const LieContext& ctx) {
  Report rep("real-basis");
  rep.merge(verify_real_basis(ctx, build_real_basis(ctx, RealBasisLabel::B)));
  if (ctx.family == Family::D && ctx.m >= 4) rep.merge(verify_real_basis(ctx, build_real_basis(ctx, RealBasisLabel::BPrime)));
  return rep;
}

Report suite_involutions(const LieContext& ctx) {
  Report rep("involutions");
  for (const auto& s0 : catalog(ctx.m))
    for (const auto& s : {s0, with_theta(s0)}) {
      rep.merge(verify_involution(s));
      auto parity = almost_double_parity(vogan_data(s));
      rep.expect(parity.even, s.name + ": odd mark sum over O");
    }
  return rep;
}

Report suite_orientation(const LieContext& ctx) {
  Report rep("orientation");
  for (const auto& s : catalog(ctx.m)) {
    auto comps = k_sigma_components(s);
    for (const auto& c : comps.reps) {
      const int d = det_ad_on_p0(s, c);
      rep.expect(d == 1 || d == -1, s.name + ": determinant of " + c.label + " is not +-1");
    }
    rep.expect(orientation_preserving(s) == orientation_preserving(with_theta(s)),
               s.name + ": orientation differs between sigma and sigma theta");
  }
  return rep;
}

Report suite_aq(const LieContext& ctx, std::optional<int> bound) {
  Report rep("aq");
  auto classes = bound ? enumerate_parabolics(ctx.m, *bound) : enumerate_parabolics(ctx.m);
  for (const auto& q : classes) {
    const std::string id = to_string(Root(q.defining_vector));
    try {
      table_row_pattern(q);
      rep.expect(true, "");
    } catch (const UnmatchedPattern& e) {
      rep.expect(false, id + ": " + e.what());
    }
    auto y = compact_dual_hodge(levi_hermitian_factor(q));
    rep.expect(y == levi_coset_hodge(q), id + ": compact dual disagrees with the Weyl coset polynomial");
    rep.expect(y.is_palindromic_in_xt(), id + ": compact dual polynomial is not palindromic");
    int levi_noncompact = 0;
    for (const auto& a : q.levi_roots) levi_noncompact += !a.is_compact;
    rep.expect(2 * q.r_total() + levi_noncompact == 2 * ctx.m, id + ": noncompact root count");
  }
  return rep;
}

Report suite_cycles(const LieContext& ctx) {
  Report rep("cycles");
  auto rs = build_root_system(ctx, Variant::T0);
  auto trivial = make_parabolic(rs, std::vector<int>(ctx.l, 0));
  for (const auto& rec : dimension_table(ctx.m)) {
    rep.expect(rec.d_sigma + rec.d_sigma_theta == 2 * ctx.m, rec.name() + ": d(sigma) + d(sigma theta) != 2m");
    if (rec.holomorphy == Holomorphy::Holomorphic)
      rep.expect(rec.d_sigma % 2 == 0, rec.name() + ": holomorphic cycle of odd dimension");
    rep.expect(!no_aq_component(rec, trivial), rec.name() + ": trivial class excluded");
  }
  return rep;
}

using Suite = std::function<Report(const LieContext&, const RunConfig&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all{
      {"chevalley", [](const LieContext& c, const RunConfig&) { return suite_chevalley(c); }},
      {"real-basis", [](const LieContext& c, const RunConfig&) { return suite_real_basis(c); }},
      {"compact-form", [](const LieContext& c, const RunConfig&) { return verify_compact_form(c); }},
      {"lie-structure", [](const LieContext& c, const RunConfig&) { return verify_lie_structure(c); }},
      {"involutions", [](const LieContext& c, const RunConfig&) { return suite_involutions(c); }},
      {"orientation", [](const LieContext& c, const RunConfig&) { return suite_orientation(c); }},
      {"aq", [](const LieContext& c, const RunConfig& cfg) { return suite_aq(c, cfg.bound); }},
      {"cycles", [](const LieContext& c, const RunConfig&) { return suite_cycles(c); }},
  };
  return all;
}

// ---- table builders ----

Table verify_table(const LieContext& ctx, const RunConfig& cfg, std::ostream& err, bool& failed) {
  Table t{{"suite", "ok", "checks", "failures"}, {}};
  std::vector<std::string> wanted = cfg.suites;
  if (wanted.empty()) wanted = suite_names();
  for (const auto& name : wanted) {
    auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& s) { return s.first == name; });
    if (it == suites().end()) throw UsageError("unknown suite '" + name + "'");
    Report rep(name);
    try {
      rep = it->second(ctx, cfg);
      rep.name = name;
    } catch (const std::exception& e) {
      rep.expect(false, std::string("exception: ") + e.what());
    }
    if (!rep.ok) {
      failed = true;
      for (const auto& f : rep.failures) err << name << ": " << f << "\n";
    }
    t.rows.push_back({cell(name), cell(rep.ok), cell(rep.checks), cell(rep.failures)});
  }
  return t;
}

Table involution_table(const LieContext& ctx) {
  Table t{{"involution", "variant", "vogan_sigma", "vogan_sigma_theta", "mark_sum", "holomorphy", "dim_g0_fixed",
           "dim_k0_fixed", "dim_p0_fixed"},
          {}};
  for (const auto& s : catalog(ctx.m)) {
    auto vd = vogan_data(s);
    auto fs = fixed_subalgebra(s);
    t.rows.push_back({cell(s.name), cell(to_string(s.variant)), cell(vd.describe()),
                      cell(vogan_data(with_theta(s)).describe()), cell(almost_double_parity(vd).mark_sum),
                      cell(to_string(holomorphy_class(s))), cell(fs.g0_fixed_dim), cell(fs.k0_fixed_dim),
                      cell(fs.p0_fixed_dim)});
  }
  return t;
}

Table dimension_rows(const LieContext& ctx) {
  Table t{{"involution", "d_sigma", "d_sigma_theta"}, {}};
  for (const auto& rec : dimension_table(ctx.m))
    t.rows.push_back({cell(rec.name()), cell(rec.d_sigma), cell(rec.d_sigma_theta)});
  return t;
}

Table orientation_table(const LieContext& ctx) {
  Table t{{"involution", "component", "determinant", "verdict", "in_scope"}, {}};
  auto scope = theorem_scope(ctx.m);
  for (const auto& s : catalog(ctx.m)) {
    auto comps = k_sigma_components(s);
    const bool in_scope =
        std::any_of(scope.begin(), scope.end(), [&](const Involution& x) { return x.name == s.name; });
    const std::string verdict = orientation_preserving(s) ? "preserving" : "reversing";
    for (const auto& c : comps.reps) {
      const std::string label = comps.holomorphic_shortcut ? c.label + " (holomorphic)" : c.label;
      t.rows.push_back({cell(s.name), cell(label), cell(det_ad_on_p0(s, c)), cell(verdict), cell(in_scope)});
    }
  }
  return t;
}

Table aq_table(const LieContext& ctx, std::optional<int> bound) {
  Table t{{"defining_vector", "u_cap_p_minus", "u_cap_p_plus", "r_plus", "r_minus", "s_dim", "compact_dual",
           "polynomial", "pattern"},
          {}};
  auto classes = bound ? enumerate_parabolics(ctx.m, *bound) : enumerate_parabolics(ctx.m);
  for (const auto& q : classes)
    t.rows.push_back({cell_vector(q.defining_vector), cell(q.delta_u_p_minus), cell(q.delta_u_p_plus), cell(q.r_plus),
                      cell(q.r_minus), cell(q.s_dim), cell(levi_hermitian_factor(q).to_string()),
                      cell(hodge_polynomial(q)), cell(table_row_pattern(q).to_string())});
  return t;
}

Table cycles_table(const LieContext& ctx, std::optional<int> bound) {
  Table t{{"u_cap_p_minus", "u_cap_p_plus", "polynomial", "no_aq_component"}, {}};
  for (const auto& e : no_component_column(ctx.m, bound))
    t.rows.push_back({cell(describe_minus(e.parabolic)), cell(describe_plus(e.parabolic)), cell(e.polynomial),
                      cell(e.no_component)});
  return t;
}

Table automorphic_table(const LieContext& ctx, std::optional<int> bound) {
  Table t{{"witness", "u_cap_p_minus", "u_cap_p_plus", "polynomial"}, {}};
  if (ctx.m < 3) return t;  // no claim is made for m = 2
  for (const auto& c : automorphic_candidates(ctx.m, bound))
    t.rows.push_back({cell(c.witness), cell(describe_minus(c.parabolic)), cell(describe_plus(c.parabolic)),
                      cell(hodge_polynomial(c.parabolic))});
  return t;
}

void validate(const RunConfig& cfg, const LieContext& ctx) {
  if (cfg.table && cfg.command != Command::Tables) throw UsageError("--table only applies to the tables command");
  if (cfg.command == Command::Tables) {
    if (!cfg.table) throw UsageError("tables needs --table 1..5");
    const int t = *cfg.table;
    if (t < 1 || t > 5) throw UsageError("table must be 1..5, got " + std::to_string(t));
    const bool odd = ctx.family == Family::B;
    if ((t == 1 || t == 4) && !odd) throw UsageError("table " + std::to_string(t) + " needs odd m");
    if ((t == 2 || t == 5) && odd) throw UsageError("table " + std::to_string(t) + " needs even m");
  }
  if (cfg.bound && *cfg.bound < ctx.l + 1) throw UsageError("--bound must be at least l + 1 = " + std::to_string(ctx.l + 1));
  if (!cfg.suites.empty() && cfg.command != Command::Verify) throw UsageError("--suite only applies to verify");
}

}  // namespace

std::optional<Command> parse_command(const std::string& s) {
  static const std::vector<std::pair<std::string, Command>> names{
      {"verify", Command::Verify},          {"tables", Command::Tables}, {"involutions", Command::Involutions},
      {"orientation", Command::Orientation}, {"aq", Command::Aq},         {"cycles", Command::Cycles},
      {"automorphic", Command::Automorphic}};
  for (const auto& [n, c] : names)
    if (n == s) return c;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Tables: return "tables";
    case Command::Involutions: return "involutions";
    case Command::Orientation: return "orientation";
    case Command::Aq: return "aq";
    case Command::Cycles: return "cycles";
    case Command::Automorphic: return "automorphic";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.first);
    return n;
  }();
  return names;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.m < 2) {
    err << "error: m must be at least 2\n";
    return kUsage;
  }
  const LieContext ctx = build_context(cfg.m);
  bool failed = false;
  Table table;
  try {
    validate(cfg, ctx);
    switch (cfg.command) {
      case Command::Verify: table = verify_table(ctx, cfg, err, failed); break;
      case Command::Tables:
        switch (*cfg.table) {
          case 1:
          case 2: table = involution_table(ctx); break;
          case 3: table = dimension_rows(ctx); break;
          default: table = cycles_table(ctx, cfg.bound); break;
        }
        break;
      case Command::Involutions: table = involution_table(ctx); break;
      case Command::Orientation: table = orientation_table(ctx); break;
      case Command::Aq: table = aq_table(ctx, cfg.bound); break;
      case Command::Cycles: table = cycles_table(ctx, cfg.bound); break;
      case Command::Automorphic: table = automorphic_table(ctx, cfg.bound); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }

  if (cfg.output.empty()) {
    write_table(table, cfg, ctx, out);
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output << "\n";
      return kUsage;
    }
    write_table(table, cfg, ctx, file);
  }
  return failed ? kVerificationFailed : kOk;
}

}  // namespace so2m::cli
