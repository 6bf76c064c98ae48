#include "report.hpp"

#include "grw/ideals.hpp"
#include "cli.hpp"

namespace grw::cli {

Json report_skeleton(const std::string& command) {
  Json j;
  j["schema"] = "grw-report";
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["ring"] = nullptr;
  j["grading"] = nullptr;
  j["ideals"] = Json::array();
  j["classifications"] = Json::array();
  j["properties"] = Json::array();
  j["witnesses"] = Json::array();
  return j;
}

Json element_json(const GradedRing& gr, Elem a) {
  Json j;
  j["index"] = a;
  j["name"] = gr.ring().name(a);
  return j;
}

Json ideal_json(const GradedRing& gr, const IdealSubset& p) {
  Json j;
  j["side"] = to_string(p.side());
  j["size"] = p.size();
  j["graded"] = p.graded();
  const auto gens = p.graded() ? homogeneous_generators(gr, p) : p.additive_generators();
  j["generators"] = Json::array();
  for (Elem g : gens) j["generators"].push_back(element_json(gr, g));
  return j;
}

Json ring_json(const std::string& expression, const GradedRing& gr) {
  const auto& r = gr.ring();
  Json j;
  j["expression"] = expression;
  j["order"] = r.order();
  j["commutative"] = r.is_commutative();
  j["unity"] = r.unity() ? element_json(gr, *r.unity()) : Json(nullptr);
  return j;
}

Json grading_json(const std::string& selector, const GradedRing& gr) {
  Json j;
  j["selector"] = selector.empty() ? "natural" : selector;
  j["group_order"] = gr.group().order();
  j["identity"] = gr.group().identity();
  j["components"] = Json::array();
  for (Elem g = 0; g < gr.group().order(); ++g) {
    Json c;
    c["degree"] = g;
    c["degree_name"] = gr.group().name(g);
    c["size"] = gr.component(g).count();
    c["generators"] = Json::array();
    for (Elem a : gr.component_generators(g)) c["generators"].push_back(element_json(gr, a));
    j["components"].push_back(std::move(c));
  }
  return j;
}

Json finding_json(const Finding& f) {
  Json j;
  j["ring"] = f.ring;
  j["ideals"] = Json::array();
  for (const auto& i : f.ideals) {
    Json gens = Json::array();
    for (std::size_t k = 0; k < i.gens.size(); ++k) {
      Json e;
      e["index"] = i.gens[k];
      e["name"] = k < i.names.size() ? i.names[k] : "";
      gens.push_back(std::move(e));
    }
    Json ij;
    ij["generators"] = std::move(gens);
    j["ideals"].push_back(std::move(ij));
  }
  j["elements"] = Json::array();
  for (std::size_t k = 0; k < f.elements.size(); ++k) {
    Json e;
    e["index"] = f.elements[k];
    e["name"] = k < f.element_names.size() ? f.element_names[k] : "";
    j["elements"].push_back(std::move(e));
  }
  j["degree"] = f.degree ? Json(*f.degree) : Json(nullptr);
  j["detail"] = f.detail;
  j["verified"] = f.verified;
  return j;
}

Json skip_json(const Skip& s) {
  Json j;
  j["ring"] = s.ring;
  j["reason"] = s.reason;
  return j;
}

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::True: return "TRUE";
    case Truth::False: return "FALSE";
    case Truth::Skipped: return "SKIPPED";
  }
  return "?";
}

}  // namespace grw::cli
