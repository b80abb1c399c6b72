#pragma once

#include "tropical/containment.hpp"
#include "tropical/oracle.hpp"

#include <string>

namespace tropical {

// JSON documents emitted by the command line tool. Keys appear in a fixed
// order and rationals are strings, so the bytes depend only on the input.

std::string report_json(const ContainmentReport &report);
std::string newton_json(const NewtonPolyhedron &p);
std::string oracle_json(const OracleVerdict &verdict);

} // namespace tropical
