#include "report.hpp"

#include <json.hpp>

namespace knotcert {

namespace {

using nlohmann::json;

json witnesses_json(const std::vector<GoodnessWitness>& ws) {
  json arr = json::array();
  for (const auto& w : ws)
    arr.push_back(json{{"cell", w.cell}, {"colour", to_string(w.colour)}, {"crossing", w.crossing}});
  return arr;
}

}  // namespace

std::string certificate_json(const Certificate& c) {
  json j{{"input", c.input_pd},
         {"n", c.n},
         {"classical", c.classical},
         {"knot", c.knot},
         {"good", c.good},
         {"chi", c.chi},
         {"span", c.span ? json(*c.span) : json(nullptr)},
         {"bound", c.bound},
         {"verdict", to_string(c.verdict)},
         {"theorem", c.criterion},
         {"witnesses", witnesses_json(c.witnesses)}};
  return j.dump();
}

std::string atom_report_json(const Atom& a) {
  json j{{"V", a.vertices},
         {"E", a.edges},
         {"F_black", a.f_black},
         {"F_white", a.f_white},
         {"chi", a.chi},
         {"orientable", a.orientable},
         {"genus", a.genus},
         {"good", a.goodness.good},
         {"witnesses", witnesses_json(a.goodness.witnesses)}};
  return j.dump();
}

std::string span_report_json(const SpanReport& r) {
  json j{{"bound", r.bound}, {"chi", r.chi}, {"equality", r.equality}, {"n", r.n}, {"span", r.span}};
  return j.dump();
}

std::string bracket_report_json(const SpanReport& r, const LaurentPoly& p) {
  json j{{"bound", r.bound},
         {"chi", r.chi},
         {"equality", r.equality},
         {"n", r.n},
         {"polynomial", p.to_string()},
         {"span", r.span}};
  return j.dump();
}

std::string move_sites_json(const MoveSites& m) {
  json j{{"r1_decreasing", m.r1_decreasing},
         {"r2_decreasing", m.r2_decreasing},
         {"r3_applicable", m.r3_applicable}};
  return j.dump();
}

std::string cabling_report_json(const CablingReport& r) {
  json j{{"m", r.m},
         {"n", r.n},
         {"chi", r.chi},
         {"applicable", r.applicable},
         {"vertices", r.vertices},
         {"edges", r.edges},
         {"cells", r.cell_count},
         {"chi_m", r.chi_m},
         {"counts_ok", r.counts_ok},
         {"predicted_span", r.predicted_span},
         {"measured_span", r.measured_span ? json(*r.measured_span) : json(nullptr)},
         {"identity_ok", r.identity_ok},
         {"span_ok", r.span_ok}};
  return j.dump();
}

std::string info_json(const Diagram& d) {
  json j{{"n", d.crossing_count()},
         {"components", d.component_count()},
         {"knot", d.is_knot()},
         {"classical", d.is_classical()},
         {"writhe", d.writhe()}};
  return j.dump();
}

}  // namespace knotcert
