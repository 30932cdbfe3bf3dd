#pragma once

#include "qvt/cartan.hpp"
#include "qvt/freealg.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <vector>

namespace qvt::cli {

inline constexpr const char* kVersion = "0.1.0";

// Bad flags, unreadable files, malformed JSON: exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json element_to_json(const FreeElem& x);
FreeElem element_from_json(const Cartan& c, const nlohmann::json& j);
// Accepts one element, an array of elements, or {"elements": [...]}.
std::vector<FreeElem> elements_from_json(const Cartan& c, const nlohmann::json& j);
Matrix omega_from_json(const nlohmann::json& j);

// Runs one job. The report goes to out, diagnostics to err; returns 0, 1 or 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qvt::cli
