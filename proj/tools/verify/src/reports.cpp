#include "turan_verify/reports.hpp"

#include "turan/io.hpp"
#include "turan/rational.hpp"

namespace turan::verify {

using nlohmann::json;

json elements_json(ElementSet s) { return s.elements(); }

json search_json(const SearchReport& report) {
  json witnesses = json::array();
  for (const Matroid& w : report.witnesses) witnesses.push_back(to_json(w));
  return {
      {"n", report.n},
      {"r", report.r},
      {"s", report.s},
      {"t", report.t},
      {"max_bases", report.max_bases},
      {"nodes_explored", report.nodes_explored},
      {"pruned_daisy", report.pruned_daisy},
      {"pruned_bound", report.pruned_bound},
      {"exhaustive", report.exhaustive},
      {"witnesses", std::move(witnesses)},
  };
}

json binary_search_json(const BinarySearchReport& report) {
  json out = search_json(report.report);
  out.erase("s");
  out.erase("t");
  out.erase("pruned_daisy");
  out.erase("pruned_bound");
  out["size"] = report.report.n;
  out.erase("n");
  json bb = nullptr;
  if (report.bose_burton_c) {
    bb = {{"c", *report.bose_burton_c}, {"bases", report.bose_burton_bases}, {"attains", report.bose_burton_attains}};
  }
  out["bose_burton"] = std::move(bb);
  return out;
}

json lagrangian_json(const LagrangianResult& result, int digits) {
  json out = {
      {"value", result.value},
      {"argmax", result.argmax},
      {"iterations", result.iterations},
      {"restarts_used", result.restarts_used},
      {"converged", result.converged},
      {"monotone", result.monotone},
      {"certified", result.certified},
  };
  if (result.bound_t) out["bound_t"] = *result.bound_t;
  if (result.exact_bound) {
    out["bound"] = to_string(*result.exact_bound);
    out["bound_decimal"] = to_decimal(*result.exact_bound, digits);
    out["gap"] = *result.bound - result.value;
  }
  return out;
}

json decomposition_json(const Rank3Decomposition& d) {
  json lines = json::array();
  for (ElementSet l : d.lines) lines.push_back(elements_json(l));
  json checks = json::array();
  for (const CertificateCheck& c : d.certificate) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {
      {"m", d.m},
      {"parity", d.parity == Parity::odd ? "odd" : "even"},
      {"k", d.k},
      {"lines", std::move(lines)},
      {"y", elements_json(d.y)},
      {"thresholds", d.thresholds},
      {"threshold_offset", d.threshold_offset},
      {"certificate", std::move(checks)},
  };
}

json classification_json(const U35Classification& c) {
  if (c.kind == U35Classification::Kind::no_u25_minor) return {{"kind", "no_u25_minor"}};
  return {{"kind", "two_lines"}, {"first", elements_json(c.first)}, {"second", elements_json(c.second)}};
}

json minor_json(int s, int t, const std::optional<MinorWitness>& w) {
  json out = {{"s", s}, {"t", t}, {"present", w.has_value()}};
  if (w) out["witness"] = {{"contracted", elements_json(w->contracted)}, {"selected", elements_json(w->selected)}};
  return out;
}

json restriction_json(int s, int t, const std::optional<ElementSet>& set) {
  json out = {{"s", s}, {"t", t}, {"present", set.has_value()}};
  if (set) out["witness"] = elements_json(*set);
  return out;
}

}  // namespace turan::verify
