#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sharygin/theorems.hpp"

namespace sharygin {

/// Line-oriented scenario format; see docs/FORMAT.md for the grammar.
/// Parse errors throw Error("ParseError", ...) with line and column.
Scenario load_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);

/// Objects are written sorted by id, numbers at full round-trip precision,
/// so load -> save -> load is the identity on the object graph.
void save_scenario(const Scenario& s, std::ostream& out);
void save_scenario_file(const Scenario& s, const std::string& path);

/// Machine-readable batch report (schema in docs/FORMAT.md).
std::string reports_to_json(const std::string& suite, const std::vector<Report>& reports);

/// Fixed 12-significant-digit display formatting (trailing zeros trimmed).
std::string fmt12(double v);

} // namespace sharygin
