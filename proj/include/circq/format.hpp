#pragma once

#include "circq/vector3.hpp"

#include <string>

namespace circq {

/// Shortest decimal that round-trips to the same double. Negative zero
/// prints as "0".
std::string format_number(double value);

/// "x,y,z" with each component formatted by format_number.
std::string format_vector(const Vector3& v);

} // namespace circq
