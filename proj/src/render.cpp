#include "nilfibre/render.hpp"

#include <algorithm>

namespace nilfibre {

namespace {

std::string cell_text(const Cell& c) {
  const std::string v = std::to_string(c.value);
  return c.color == Color::Red ? "[" + v + "]" : v;
}

Json pair_json(const NeighbouringPair& p) {
  return Json{{"left", p.left}, {"right", p.right}, {"height", p.height}};
}

}  // namespace

std::string render_tableau(const ColoredTableau& t) {
  std::vector<std::size_t> width(t.num_columns(), 1);
  for (int col = 1; col <= t.num_columns(); ++col)
    for (const Cell& c : t.column(col)) width[col - 1] = std::max(width[col - 1], cell_text(c).size());
  std::string out;
  for (int row = 1; row <= t.max_height(); ++row) {
    std::string line;
    for (int col = 1; col <= t.num_columns(); ++col) {
      if (col > 1) line += ' ';
      auto cell = t.at({col, row});
      const std::string text = cell ? cell_text(*cell) : "";
      line += std::string(width[col - 1] - text.size(), ' ') + text;
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

std::string choice_script(const NeighbouringPair& p, const ImplementationChoice& ch) {
  return "pair=C" + std::to_string(p.left) + "-C" + std::to_string(p.right) + ";source=C" +
         std::to_string(ch.source_col) + ";stop=C" + std::to_string(ch.shift_stop);
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json vars = Json::array();
    for (const Factor& f : m.factors()) {
      if (f.var.is_deform()) continue;
      vars.push_back(Json::array({Json::array({f.var.i, f.var.j}), f.exp}));
    }
    const int ce = m.exponent(Variable::deform());
    if (ce > 0) vars.push_back(Json::array({"c", ce}));
    terms.push_back(Json{{"coeff", c.get_str()}, {"vars", vars}});
  }
  return terms;
}

Json to_json(const ColoredTableau& t) {
  Json boxes = Json::array();
  for (int col = 1; col <= t.num_columns(); ++col)
    for (int row = 1; row <= t.height(col); ++row) {
      const Cell& c = t.column(col)[row - 1];
      boxes.push_back(Json{{"col", col},
                           {"row", row},
                           {"value", c.value},
                           {"color", c.color == Color::Red ? "red" : "black"}});
    }
  return Json{{"composition", t.origin().parts()}, {"boxes", boxes}};
}

Json to_json(const RootSet& roots) {
  Json out = Json::array();
  for (const Root& r : roots) out.push_back(Json::array({r.i, r.j}));
  return out;
}

Json to_json(const ImplementationTrace& trace) {
  Json steps = Json::array();
  for (std::size_t x = 0; x < trace.choices.size(); ++x) {
    const auto& ch = trace.choices[x];
    steps.push_back(Json{{"pair", pair_json(trace.order[x])},
                         {"source", ch.source_col},
                         {"landing", ch.landing_col},
                         {"stop", ch.shift_stop},
                         {"script", choice_script(trace.order[x], ch)}});
  }
  return steps;
}

Json to_json(const Census& census) {
  Json comps = Json::array();
  for (const auto& r : census.records) {
    Json alt = Json::array();
    for (const auto& x : r.other_excluded) alt.push_back(to_json(x));
    comps.push_back(Json{{"red", r.red},
                         {"excluded", to_json(r.excluded)},
                         {"codim", r.codim < 0 ? Json(nullptr) : Json(r.codim)},
                         {"witness", to_json(r.witness)},
                         {"other_excluded", alt}});
  }
  return Json{{"composition", census.composition.parts()},
              {"g", census.g},
              {"dim_m", census.dim_m},
              {"components", comps},
              {"global_red", census.global_red},
              {"findings", census.findings},
              {"counts",
               Json{{"states", census.states},
                    {"complete_traces", census.complete_traces},
                    {"dead_ends", census.dead_ends},
                    {"complete_tableaux", census.complete_tableaux}}}};
}

Json to_json(const VerificationSummary& summary) {
  Json checks = Json::array();
  for (const auto& c : summary.checks)
    checks.push_back(Json{{"name", c.name},
                          {"checked", c.report.checked},
                          {"skipped", c.skipped},
                          {"failures", c.report.failures}});
  return Json{{"composition", summary.composition.parts()},
              {"ok", summary.ok()},
              {"states", summary.states},
              {"final_states", summary.final_states},
              {"checks", checks},
              {"findings", summary.findings}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nilfibre
