#pragma once

#include "t3kit/census.hpp"
#include "t3kit/workspace.hpp"

#include <string>
#include <vector>

namespace t3kit {

enum class OutputMode { Table, Structured };

// Reals are always printed with 12 significant digits; integers exactly.
std::string format_real(double x);

// '#'-prefixed header lines naming the adopted conventions; prepended to
// every table-mode report so results are self-describing.
std::string conventions_banner();

std::string render_census_report(const std::string& form_name, const ToricContactForm& form,
                                 const OrbitCensus& census,
                                 const std::vector<DegreeZeroGenerator>& generators,
                                 OutputMode mode);

} // namespace t3kit
