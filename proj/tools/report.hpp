#pragma once

// JSON fragments shared by the commands. Elements are always written as
// {"index", "name"} so reports stay machine-diffable and human-readable.

#include <string>

#include <json.hpp>

#include "grw/classify.hpp"
#include "grw/theorems.hpp"

namespace grw::cli {

using Json = nlohmann::ordered_json;

// Skeleton with every top-level section present.
Json report_skeleton(const std::string& command);

Json element_json(const GradedRing& gr, Elem a);
Json ideal_json(const GradedRing& gr, const IdealSubset& p);
Json ring_json(const std::string& expression, const GradedRing& gr);
Json grading_json(const std::string& selector, const GradedRing& gr);
Json finding_json(const Finding& f);
Json skip_json(const Skip& s);

const char* truth_name(Truth t);

}  // namespace grw::cli
