#include "qsheaf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qsheaf/calculus.hpp"
#include "qsheaf/parse.hpp"
#include "qsheaf/regularity.hpp"
#include "qsheaf/splitting.hpp"

namespace qsheaf {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Options {
  std::string command;
  std::string file;
  std::string expr_text;
  std::string window;
  std::string format = "text";
  std::string spinor;
  std::uint64_t seed = 1;
  bool lines = false;
  int c1 = 0;
};

Window parse_window(const std::string& s) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw CLI::ValidationError("--window", "expected a:b");
  try {
    Window w{std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    if (w.hi < w.lo) throw CLI::ValidationError("--window", "empty window");
    return w;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--window", "expected integers a:b");
  }
}

json cell_json(const Cell& c) {
  json j{{"i", c.i}, {"t", c.t}, {"lo", c.value.lo}, {"hi", c.value.hi}, {"exact", c.value.is_exact()}};
  if (c.label) j["spinor"] = to_string(*c.label);
  return j;
}

json table_cells(const CohomTable& t) {
  json cells = json::array();
  for (int s = t.window().lo; s <= t.window().hi; ++s) {
    for (int i = 0; i <= t.n(); ++i) cells.push_back(cell_json({i, s, std::nullopt, t.at(i, s)}));
  }
  return cells;
}

void print_text_table(std::ostream& out, const CohomTable& t) {
  std::size_t width = 3;
  for (int s = t.window().lo; s <= t.window().hi; ++s) {
    width = std::max(width, std::to_string(s).size());
    for (int i = 0; i <= t.n(); ++i) width = std::max(width, t.at(i, s).to_string().size());
  }
  auto pad = [&](const std::string& x) { return std::string(width + 1 - x.size(), ' ') + x; };
  std::string head = "     t";
  for (int s = t.window().lo; s <= t.window().hi; ++s) head += pad(std::to_string(s));
  out << head << "\n";
  for (int i = t.n(); i >= 0; --i) {
    std::string row = "h^" + std::to_string(i);
    row += std::string(6 - std::min<std::size_t>(6, row.size()), ' ');
    for (int s = t.window().lo; s <= t.window().hi; ++s) row += pad(t.at(i, s).to_string());
    out << row << "\n";
  }
}

void print_csv_table(std::ostream& out, const CohomTable& t) {
  out << "i,t,lo,hi\n";
  for (int s = t.window().lo; s <= t.window().hi; ++s) {
    for (int i = 0; i <= t.n(); ++i) out << i << "," << s << "," << t.at(i, s).lo << "," << t.at(i, s).hi << "\n";
  }
}

json reg_json(const RegReport& r) {
  json w = json::array();
  for (const auto& c : r.witnesses) w.push_back(cell_json(c));
  json j{{"value", r.value.to_string()}, {"witnesses", w}};
  if (!r.ambiguous_cells.empty()) j["ambiguous_cells"] = r.ambiguous_cells;
  return j;
}

json split_json(const SplitReport& r) {
  json j{{"kind", to_string(r.kind)}, {"window", {r.window.lo, r.window.hi}}};
  json dec = json::array();
  for (const auto& g : r.decomposition) dec.push_back(g.to_string());
  if (r.kind == VerdictKind::Split) j["decomposition"] = dec;
  if (r.witness) j["witness"] = cell_json(*r.witness);
  if (!r.ambiguous.empty()) {
    json a = json::array();
    for (const auto& c : r.ambiguous) a.push_back(cell_json(c));
    j["ambiguous"] = a;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string split_text(const SplitReport& r) {
  std::string s = to_string(r.kind);
  if (r.kind == VerdictKind::Split) {
    s += " {";
    for (std::size_t k = 0; k < r.decomposition.size(); ++k) s += (k ? ", " : "") + r.decomposition[k].to_string();
    s += "}";
  }
  if (r.witness) s += " at (" + std::to_string(r.witness->i) + ", " + std::to_string(r.witness->t) + "): " + r.witness->to_string();
  if (!r.ambiguous.empty()) s += " (" + std::to_string(r.ambiguous.size()) + " interval cells)";
  if (!r.note.empty()) s += " [" + r.note + "]";
  s += "\nwindow [" + std::to_string(r.window.lo) + ", " + std::to_string(r.window.hi) + "]";
  return s;
}

std::string read_input(const Options& o, std::istream& in) {
  if (!o.expr_text.empty()) return o.expr_text;
  if (!o.file.empty() && o.file != "-") {
    std::ifstream f(o.file);
    if (!f) throw std::runtime_error("cannot open " + o.file);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const Options& o, Format fmt, std::ostream& out, const SheafExpr& e, const CohomTable& tab,
         const json& verdict, const std::string& text_verdict, int code) {
  switch (fmt) {
    case Format::Json: {
      json j{{"quadric", e.quadric().n()},
             {"expression", e.to_string()},
             {"cells", table_cells(tab)},
             {"window", {tab.window().lo, tab.window().hi}},
             {"verdict", verdict}};
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      print_csv_table(out, tab);
      if (!text_verdict.empty()) {
        std::istringstream lines(text_verdict);
        for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
      }
      break;
    case Format::Text:
      if (o.command == "table") {
        out << e.to_string() << "\n";
        print_text_table(out, tab);
      } else {
        out << text_verdict << "\n";
      }
      break;
  }
  return code;
}

int run_command(const Options& o, std::istream& in, std::ostream& out) {
  const Format fmt = o.format == "json" ? Format::Json : o.format == "csv" ? Format::Csv : Format::Text;
  if (o.command == "verify-paper") {
    const auto items = verify_paper(o.seed);
    bool all = true;
    json arr = json::array();
    for (const auto& it : items) {
      all = all && it.pass;
      arr.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
      if (fmt == Format::Text) out << (it.pass ? "PASS " : "FAIL ") << it.name << "  (" << it.detail << ")\n";
      if (fmt == Format::Csv) out << (it.pass ? "pass" : "fail") << ",\"" << it.name << "\"\n";
    }
    if (fmt == Format::Json) out << json{{"seed", o.seed}, {"items", arr}, {"verdict", all ? "pass" : "fail"}}.dump(2) << "\n";
    return all ? exit_code::kOk : exit_code::kUsage;
  }

  const SheafExpr e = parse(read_input(o, in));
  SheafCalculus calc;
  const Window w = o.window.empty() ? SheafCalculus::safe_window(e) : parse_window(o.window);
  CohomTable tab = calc.table(e, w);
  if (o.command == "table") {
    if (!o.spinor.empty()) {
      std::optional<SpinorLabel> label;
      for (auto b : e.quadric().labels()) {
        if (to_string(b) == o.spinor) label = b;
      }
      if (!label) throw StructuralError("spinor " + o.spinor + " is not defined on Q" + std::to_string(e.quadric().n()));
      tab = calc.twisted_table(e, *label, w);
    }
    return emit(o, fmt, out, e, tab, nullptr, "", exit_code::kOk);
  }
  if (o.command == "qreg" || o.command == "reg") {
    const auto r = o.command == "qreg" ? qreg(calc, e) : cm_reg(calc, e);
    std::string text = (o.command == "qreg" ? "Qreg = " : "Reg = ") + r.value.to_string();
    for (const auto& c : r.witnesses) text += "\n  fails at m-1: " + c.to_string();
    for (const auto& c : r.ambiguous_cells) text += "\n  undecided: " + c;
    return emit(o, fmt, out, e, tab, reg_json(r), text,
                r.value.kind == RegKind::Ambiguous ? exit_code::kAmbiguous : exit_code::kOk);
  }
  if (o.command == "sandwich") {
    const auto s = check_sandwich(calc, e);
    json v{{"qreg", s.qreg.to_string()}, {"reg", s.reg.to_string()}, {"holds", s.holds},
           {"lower_tight", s.lower_tight}, {"upper_tight", s.upper_tight}};
    std::string text = "Qreg = " + s.qreg.to_string() + ", Reg = " + s.reg.to_string() +
                       (s.holds ? ", Qreg <= Reg <= Qreg+1 holds" : ", inequality FAILS");
    if (s.lower_tight) text += " (lower bound tight)";
    if (s.upper_tight) text += " (upper bound tight)";
    const bool amb = s.qreg.kind == RegKind::Ambiguous || s.reg.kind == RegKind::Ambiguous;
    return emit(o, fmt, out, e, tab, v, text, amb ? exit_code::kAmbiguous : exit_code::kOk);
  }
  SplitReport r;
  if (o.command == "split-check") {
    r = o.lines ? line_split_check(calc, e) : eg_check(calc, e);
  } else if (o.command == "knorrer") {
    r = knorrer_check(calc, e);
  } else if (o.command == "rank2") {
    r = rank2_check(calc, e, o.c1);
  } else {
    throw CLI::ValidationError("command", "unknown command " + o.command);
  }
  return emit(o, fmt, out, e, tab, split_json(r), split_text(r),
              r.kind == VerdictKind::Ambiguous ? exit_code::kAmbiguous : exit_code::kOk);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology tables, regularity and splitting verdicts for sheaves on quadrics", "qsheaf"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool takes_expr) {
    if (takes_expr) {
      sub->add_option("file", o.file, "expression file (.qsheaf); '-' or omitted reads stdin");
      sub->add_option("-e,--expr", o.expr_text, "expression text, e.g. 'Q4: quot(O, S1 + S2)'");
      sub->add_option("--window", o.window, "twist window a:b (default: safe window)");
    }
    sub->add_option("--format", o.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--seed", o.seed, "seed for randomized suites");
  };
  add_common(app.add_subcommand("table", "cohomology table"), true);
  app.get_subcommand("table")->add_option("--spinor", o.spinor, "tabulate F (x) S, S1 or S2 instead");
  add_common(app.add_subcommand("qreg", "Qregularity"), true);
  add_common(app.add_subcommand("reg", "Castelnuovo-Mumford regularity of the extension by zero"), true);
  add_common(app.add_subcommand("sandwich", "check Qreg <= Reg <= Qreg + 1"), true);
  auto* split = app.add_subcommand("split-check", "splitting criterion with partial vanishing");
  add_common(split, true);
  split->add_flag("--lines", o.lines, "also require H^{n-1}_*(E x S) = 0 (direct sum of lines)");
  add_common(app.add_subcommand("knorrer", "ACM splitting into lines and spinors"), true);
  auto* r2 = app.add_subcommand("rank2", "rank 2 criterion");
  add_common(r2, true);
  r2->add_option("--c1", o.c1, "first Chern class")->required();
  add_common(app.add_subcommand("verify-paper", "fixed regression suite"), false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }
  for (auto* sub : app.get_subcommands()) o.command = sub->get_name();

  try {
    return run_command(o, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParse;
  } catch (const AmbiguityError& e) {
    err << "ambiguous: " << e.what() << "\n";
    for (const auto& c : e.cells()) err << "  " << c << "\n";
    return exit_code::kAmbiguous;
  } catch (const InconsistencyError& e) {
    err << "inconsistent: " << e.what() << "\n";
    return exit_code::kInconsistent;
  } catch (const CLI::Error& e) {
    err << "usage: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
}

}  // namespace qsheaf
