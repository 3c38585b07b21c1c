#include "nilfibre/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "nilfibre/census.hpp"
#include "nilfibre/invariant.hpp"
#include "nilfibre/render.hpp"
#include "nilfibre/verify.hpp"

namespace nilfibre {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string set_text(const Multiset& m) {
  std::string out = "{";
  for (std::size_t x = 0; x < m.size(); ++x) out += (x ? "," : "") + std::to_string(m[x]);
  return out + "}";
}

std::string roots_text(const RootSet& roots) {
  std::string out;
  for (const Root& r : roots) {
    if (!out.empty()) out += ' ';
    out += to_text(Variable::coord(r.i, r.j));
  }
  return out.empty() ? "(none)" : out;
}

int parse_column(const std::string& text) {
  std::string t = text;
  if (!t.empty() && (t[0] == 'C' || t[0] == 'c')) t.erase(0, 1);
  try {
    std::size_t used = 0;
    const int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("malformed column '" + text + "'");
  }
}

NeighbouringPair find_pair(const Composition& comp, const std::string& spec) {
  const auto dash = spec.find('-');
  if (dash == std::string::npos) throw UsageError("pair must look like C2-C3, got '" + spec + "'");
  const int a = parse_column(spec.substr(0, dash));
  const int b = parse_column(spec.substr(dash + 1));
  for (const auto& p : neighbouring_pairs(comp))
    if (p.left == a && p.right == b) return p;
  throw UsageError("(C" + std::to_string(a) + ",C" + std::to_string(b) + ") is not a neighbouring pair");
}

struct ScriptStep {
  std::optional<std::string> pair, source, stop;
};

std::vector<ScriptStep> parse_script(const std::vector<std::string>& tokens) {
  std::vector<ScriptStep> steps;
  for (const auto& raw : tokens) {
    std::istringstream words(raw);
    std::string token;
    while (words >> token) {
      ScriptStep step;
      std::stringstream fields(token);
      std::string field;
      while (std::getline(fields, field, ';')) {
        if (field.empty()) continue;
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw UsageError("script field '" + field + "' lacks '='");
        const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "pair")
          step.pair = value;
        else if (key == "source")
          step.source = value;
        else if (key == "stop")
          step.stop = value;
        else
          throw UsageError("unknown script field '" + key + "'");
      }
      steps.push_back(step);
    }
  }
  return steps;
}

Composition parse_comp(const std::string& text) {
  try {
    return Composition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct Options {
  std::string composition;
  bool json = false;
  long limit = 1000000;
  std::uint64_t seed = OrbitOptions{}.seed;
  int trials = OrbitOptions{}.trials;
  std::string pair;
  std::vector<std::string> script;
};

OrbitOptions orbit_options(const Options& o) {
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  OrbitOptions out;
  out.seed = o.seed;
  out.trials = o.trials;
  return out;
}

int cmd_tableau(const Options& o, std::ostream& out) {
  const Composition comp = parse_comp(o.composition);
  const ColoredTableau t = init(StandardTableau(comp));
  if (o.json)
    out << dump(to_json(t));
  else
    out << render_tableau(t);
  return 0;
}

int cmd_pairs(const Options& o, std::ostream& out) {
  const Composition comp = parse_comp(o.composition);
  const auto pairs = neighbouring_pairs(comp);
  const StandardTableau t(comp);
  if (o.json) {
    Json list = Json::array();
    for (const auto& p : pairs)
      list.push_back(Json{{"left", p.left},
                          {"right", p.right},
                          {"height", p.height},
                          {"left_rectangle", left_rectangle_entries(t, p)}});
    out << dump(Json{{"composition", comp.parts()}, {"g", pairs.size()}, {"pairs", list}});
    return 0;
  }
  out << "g = " << pairs.size() << '\n';
  for (const auto& p : pairs) {
    out << label(p) << " s=" << p.height << " lR entries:";
    for (int v : left_rectangle_entries(t, p)) out << ' ' << v;
    out << '\n';
  }
  return 0;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const Composition comp = parse_comp(o.composition);
  const StandardTableau t(comp);
  const RootSet basis = m_basis(comp);
  std::vector<NeighbouringPair> pairs;
  if (!o.pair.empty())
    pairs.push_back(find_pair(comp, o.pair));
  else
    pairs = neighbouring_pairs(comp);
  Json list = Json::array();
  for (const auto& p : pairs) {
    const BSInvariant inv = bs_invariant(t, p, basis);
    if (o.json) {
      list.push_back(Json{{"pair", Json{{"left", p.left}, {"right", p.right}, {"height", p.height}}},
                          {"degree", inv.degree},
                          {"c_power", inv.c_power},
                          {"text", to_text(inv.poly)},
                          {"poly", to_json(inv.poly)}});
    } else {
      out << "I^" << p.height << "_{C" << p.left << ",C" << p.right << "} = " << to_text(inv.poly)
          << "  [degree " << inv.degree << "]\n";
    }
  }
  if (o.json) out << dump(list);
  return 0;
}

int cmd_implement(const Options& o, std::ostream& out) {
  const Composition comp = parse_comp(o.composition);
  const auto pairs = neighbouring_pairs(comp);
  const auto steps = parse_script(o.script);
  if (steps.empty()) throw UsageError("implement needs at least one script token");

  ImplementationTrace trace;
  trace.stages.push_back(init(StandardTableau(comp)));
  std::vector<NeighbouringPair> remaining = pairs;
  for (const auto& step : steps) {
    const ColoredTableau& cur = trace.stages.back();
    NeighbouringPair p;
    if (step.pair) {
      p = find_pair(comp, *step.pair);
      if (std::find(remaining.begin(), remaining.end(), p) == remaining.end())
        throw UsageError(label(p) + " is already implemented");
    } else {
      if (remaining.size() != 1) throw UsageError("pair omitted but " + std::to_string(remaining.size()) + " pairs remain");
      p = remaining.front();
    }
    std::vector<ImplementationChoice> legal;
    try {
      legal = enumerate_choices(cur, p);
    } catch (const NotImplementable& e) {
      throw UsageError(e.what());
    }
    std::vector<ImplementationChoice> matching;
    for (const auto& ch : legal) {
      if (step.source && ch.source_col != parse_column(*step.source)) continue;
      if (step.stop && ch.shift_stop != parse_column(*step.stop)) continue;
      matching.push_back(ch);
    }
    if (matching.empty()) throw UsageError("no legal choice matches the script for " + label(p));
    if (matching.size() > 1)
      throw UsageError(std::to_string(matching.size()) + " legal choices match the script for " + label(p) +
                       "; give source and stop");
    ImplementationChoice ch = matching.front();
    ch.pair_index = static_cast<int>(trace.choices.size());
    trace.stages.push_back(implement_pair(cur, p, ch));
    trace.order.push_back(p);
    trace.choices.push_back(ch);
    remaining.erase(std::find(remaining.begin(), remaining.end(), p));
  }

  if (o.json) {
    Json stages = Json::array();
    for (const auto& s : trace.stages)
      stages.push_back(Json{{"tableau", to_json(s)},
                            {"red", red_multiset(s)},
                            {"excluded", to_json(excluded_roots(s))}});
    out << dump(Json{{"composition", comp.parts()}, {"steps", to_json(trace)}, {"stages", stages}});
    return 0;
  }
  for (std::size_t x = 0; x < trace.stages.size(); ++x) {
    const auto& s = trace.stages[x];
    out << "stage " << x + 1;
    if (x > 0) out << "  " << choice_script(trace.order[x - 1], trace.choices[x - 1]);
    out << '\n' << render_tableau(s);
    out << "red " << set_text(red_multiset(s)) << "  excluded " << roots_text(excluded_roots(s)) << "\n\n";
  }
  return 0;
}

void print_census(const Census& c, std::ostream& out, bool with_codim) {
  out << "composition " << to_string(c.composition) << "  g=" << c.g << "  dim m=" << c.dim_m << '\n';
  out << "states " << c.states << "  complete traces " << c.complete_traces << "  dead ends " << c.dead_ends
      << "  complete tableaux " << c.complete_tableaux << '\n';
  for (std::size_t x = 0; x < c.records.size(); ++x) {
    const auto& r = c.records[x];
    out << "component " << x + 1 << ": red " << set_text(r.red);
    if (with_codim) out << "  codim " << r.codim;
    out << '\n' << "  excluded " << roots_text(r.excluded) << '\n' << "  witness";
    for (std::size_t s = 0; s < r.witness.choices.size(); ++s)
      out << ' ' << choice_script(r.witness.order[s], r.witness.choices[s]);
    out << '\n';
  }
  out << "global red " << set_text(c.global_red) << '\n';
  for (const auto& f : c.findings) out << "finding: " << f << '\n';
}

int cmd_census(const Options& o, std::ostream& out, bool with_codim) {
  const Composition comp = parse_comp(o.composition);
  EnumerationOptions eo;
  eo.limit = o.limit;
  eo.compute_codim = with_codim;
  eo.orbit = orbit_options(o);
  Census c;
  try {
    c = enumerate_components(comp, eo);
  } catch (const GuardExceeded& e) {
    throw UsageError(std::string("enumeration guard: ") + e.what() + " (raise --limit)");
  }
  if (o.json)
    out << dump(to_json(c));
  else
    print_census(c, out, with_codim);
  if (with_codim)
    for (const auto& r : c.records)
      if (r.codim != c.g) return 1;
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Composition comp = parse_comp(o.composition);
  VerifyOptions vo;
  vo.limit = o.limit;
  vo.orbit = orbit_options(o);
  VerificationSummary s;
  try {
    s = verify_composition(comp, vo);
  } catch (const GuardExceeded& e) {
    throw UsageError(std::string("enumeration guard: ") + e.what() + " (raise --limit)");
  }
  if (o.json) {
    out << dump(to_json(s));
  } else {
    out << "composition " << to_string(comp) << "  states " << s.states << "  complete tableaux "
        << s.final_states << '\n';
    for (const auto& c : s.checks) {
      out << (c.skipped ? "SKIP" : c.report.ok() ? "PASS" : "FAIL") << ' ' << c.name << " ("
          << c.report.checked << " checked)\n";
      for (std::size_t x = 0; x < c.report.failures.size() && x < 5; ++x)
        out << "  " << c.report.failures[x] << '\n';
    }
    for (const auto& f : s.findings) out << "finding: " << f << '\n';
  }
  return s.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilfibre components of parabolic nilradicals via reverse tableaux"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("composition", o.composition, "comma-separated column heights, e.g. 1,2,2,1")->required();
    sub->add_flag("--json", o.json, "emit JSON");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit, "enumeration guard");
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "rank oracle seed");
    sub->add_option("--trials", o.trials, "rank oracle trials");
  };

  auto* tableau = app.add_subcommand("tableau", "standard tableau");
  add_common(tableau);
  auto* pairs = app.add_subcommand("pairs", "neighbouring pairs and left rectangles");
  add_common(pairs);
  auto* invariant = app.add_subcommand("invariant", "semi-invariant of each neighbouring pair");
  add_common(invariant);
  invariant->add_option("--pair", o.pair, "single pair, e.g. C2-C3");
  auto* implement = app.add_subcommand("implement", "run a choice script and print every stage");
  add_common(implement);
  implement->add_option("script", o.script, "tokens pair=Ca-Cb;source=Cx;stop=Cy")->required();
  auto* enumerate = app.add_subcommand("enumerate", "all complete reverse tableaux grouped by Red Set");
  add_common(enumerate);
  add_search(enumerate);
  auto* verify = app.add_subcommand("verify", "full property suite");
  add_common(verify);
  add_search(verify);
  add_oracle(verify);
  auto* census = app.add_subcommand("census", "component census with codimensions");
  add_common(census);
  add_search(census);
  add_oracle(census);

  std::vector<std::string> argv_store{"nilfibre"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tableau->parsed()) return cmd_tableau(o, out);
    if (pairs->parsed()) return cmd_pairs(o, out);
    if (invariant->parsed()) return cmd_invariant(o, out);
    if (implement->parsed()) return cmd_implement(o, out);
    if (enumerate->parsed()) return cmd_census(o, out, false);
    if (verify->parsed()) return cmd_verify(o, out);
    if (census->parsed()) return cmd_census(o, out, true);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace nilfibre
