#include "circq/core.hpp"
#include "circq/format.hpp"

#include <algorithm>
#include <cmath>

namespace circq {

void ToleranceConfig::validate() const {
    auto ok = [](double e) { return std::isfinite(e) && e > 0.0 && e < 1e-3; };
    if (!ok(eps_null) || !ok(eps_angle)) {
        throw GeometryError(ErrorCode::InvalidTolerance,
                            "tolerances must lie in (0, 1e-3), got eps_null=" +
                                format_number(eps_null) + " eps_angle=" + format_number(eps_angle));
    }
}

bool CirculantMetric::is_positive_definite(double a, double b) noexcept {
    return std::isfinite(a) && std::isfinite(b) && a > 0.0 && a - b > 0.0 && a + 2.0 * b > 0.0;
}

CirculantMetric::CirculantMetric(double a, double b) : a_(a), b_(b) {
    if (!is_positive_definite(a, b)) {
        throw GeometryError(ErrorCode::InvalidMetric,
                            "circ(a,b,b) is not positive definite for a=" + format_number(a) +
                                " b=" + format_number(b) + " (need a>0, a-b>0, a+2b>0)");
    }
}

std::string_view to_string(CausalCharacter c) noexcept {
    switch (c) {
        case CausalCharacter::Spacelike: return "spacelike";
        case CausalCharacter::Null: return "null";
        case CausalCharacter::Timelike: return "timelike";
    }
    return "unknown";
}

// circ(a,b,b) = (a-b) I + b J, so g(u,v) = (a-b) u.v + b (sum u)(sum v).
double g_inner(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept {
    return (m.a() - m.b()) * u.dot(v) + m.b() * (u.sum() * v.sum());
}

double g_norm(const CirculantMetric& m, const Vector3& u) noexcept {
    return std::sqrt(std::max(0.0, g_inner(m, u, u)));
}

double cos_phi(const CirculantMetric& m, const Vector3& u, const ToleranceConfig& tol) {
    const double guu = g_inner(m, u, u);
    if (guu == 0.0 || u.is_zero()) {
        throw GeometryError(ErrorCode::ZeroVector, "angle between u and qu needs u != 0");
    }
    const double c = g_inner(m, u, q_apply(u)) / guu;
    if (!(c >= -0.5 - tol.eps_angle && c <= 1.0 + tol.eps_angle)) {
        throw GeometryError(ErrorCode::InvariantViolation,
                            "cos(u, qu) = " + format_number(c) + " outside [-1/2, 1]");
    }
    return c;
}

double phi_from_cos(double c) noexcept {
    return std::acos(std::clamp(c, -0.5, 1.0));
}

double f_inner(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept {
    return g_inner(m, u, q_apply(v)) + g_inner(m, q_apply(u), v);
}

CausalCharacter causal_character(const CirculantMetric& m, const Vector3& u,
                                 const ToleranceConfig& tol) {
    const double guu = g_inner(m, u, u);
    if (u.is_zero() || guu == 0.0) {
        throw GeometryError(ErrorCode::ZeroVector, "causal character is undefined for u = 0");
    }
    const double fuu = f_inner(m, u, u);
    const double band = tol.eps_null * 2.0 * guu;
    if (std::fabs(fuu) <= band) return CausalCharacter::Null;
    return fuu > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

} // namespace circq
