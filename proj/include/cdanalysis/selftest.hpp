#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace cd::selftest {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double runtime_sec = 0.0;  // excluded from the deterministic rendering
    nlohmann::json detail;
};

/// Runs acceptance criteria 1..9.
std::vector<CriterionResult> run_all();

/// Deterministic JSON-lines rendering (no timings).
std::string render_json_lines(const std::vector<CriterionResult>& results);

/// Runs everything including the determinism criterion (the full pipeline is
/// executed twice and the renderings byte-compared). JSON lines go to out,
/// a human-readable table with runtimes to err. Returns the number of
/// failed criteria.
int run_and_report(std::ostream& out, std::ostream& err);

} // namespace cd::selftest
