#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hopf {

// One regenerated example. `kind` selects how `payload` renders to text:
// "element", "tensor", or "text" (payload is already a string).
struct WorkedExample {
    std::string name;
    std::string title;
    std::string kind;
    nlohmann::json payload;
};

std::vector<WorkedExample> worked_examples();

std::string render_value(const WorkedExample& e);
// One "name = value" line per example, in a fixed order.
std::string render_report(const std::vector<WorkedExample>& examples);

nlohmann::json report_to_json(const std::vector<WorkedExample>& examples);
std::vector<WorkedExample> report_from_json(const nlohmann::json& j);

struct GoldenMismatch {
    std::string name;
    std::string expected;
    std::string actual;
};

// Compares each example against <dir>/<name>.txt (trailing newline ignored).
// A missing file counts as a mismatch with an empty expectation.
std::vector<GoldenMismatch> compare_with_golden(const std::vector<WorkedExample>& examples,
                                                const std::string& dir);

// Directory of the bundled golden files.
std::string default_golden_dir();

}  // namespace hopf
