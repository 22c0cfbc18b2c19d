#include "circq/format.hpp"

#include <array>
#include <charconv>

namespace circq {

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

std::string format_vector(const Vector3& v) {
    return format_number(v.x) + "," + format_number(v.y) + "," + format_number(v.z);
}

} // namespace circq
