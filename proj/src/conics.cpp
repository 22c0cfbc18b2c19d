#include "circq/conics.hpp"
#include "circq/format.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace circq {

namespace {

constexpr double kDegenerateCos = -1.0 / 3.0;

double effective_cos(double c) { return std::max(c, -0.5); }

double sin_from_cos(double c) { return std::sqrt((1.0 - c) * (1.0 + c)); }

bool is_zero_r2(double r2, const ToleranceConfig& tol) { return std::fabs(r2) <= tol.eps_null; }

} // namespace

void ConicSpec::validate(const ToleranceConfig& tol) const {
    if (!std::isfinite(cos_phi) || !std::isfinite(r2)) {
        throw GeometryError(ErrorCode::DomainError, "cos_phi and r2 must be finite");
    }
    if (cos_phi < -0.5 - tol.eps_angle) {
        throw GeometryError(ErrorCode::DomainError,
                            "cos(phi) = " + format_number(cos_phi) + " < -1/2: phi exceeds 2pi/3");
    }
    if (cos_phi > std::cos(kPhiMin)) {
        throw GeometryError(ErrorCode::DomainError,
                            "cos(phi) = " + format_number(cos_phi) + ": phi below 1e-6 rad");
    }
}

ConicSpec ConicSpec::from_phi(double phi, double r2, const ToleranceConfig& tol) {
    constexpr double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
    if (!std::isfinite(phi) || phi < kPhiMin || phi > two_thirds_pi + tol.eps_angle) {
        throw GeometryError(ErrorCode::DomainError,
                            "phi = " + format_number(phi) + " rad outside [1e-6, 2pi/3]");
    }
    ConicSpec spec{std::cos(phi), r2};
    spec.validate(tol);
    return spec;
}

std::string_view to_string(ConicKind k) noexcept {
    switch (k) {
        case ConicKind::Hyperbola: return "hyperbola";
        case ConicKind::DegenerateIntersectingLines: return "intersecting-lines";
        case ConicKind::NoRealPoints: return "no-real-points";
        case ConicKind::SingleLine: return "single-line";
        case ConicKind::ParallelLines: return "parallel-lines";
        case ConicKind::Ellipse: return "ellipse";
        case ConicKind::Point: return "point";
        case ConicKind::Circle: return "circle";
    }
    return "unknown";
}

PlaneFValues plane_f_values(double cos_phi, const ToleranceConfig& tol) {
    ConicSpec{cos_phi, 0.0}.validate(tol);
    const double c = effective_cos(cos_phi);
    const double s = sin_from_cos(c);
    return {2.0 * c, (1.0 + c - 2.0 * c * c) / s, -2.0 * c * c / (1.0 + c)};
}

ConicCoefficients conic_coefficients(const ConicSpec& spec, const ToleranceConfig& tol) {
    spec.validate(tol);
    const double c = effective_cos(spec.cos_phi);
    const double s = sin_from_cos(c);
    return {c, (1.0 - c) * (1.0 + 2.0 * c) / s, -c * c / (1.0 + c), spec.r2 / 2.0};
}

double discriminant(const ConicSpec& spec, const ToleranceConfig& tol) {
    const ConicCoefficients k = conic_coefficients(spec, tol);
    return k.B * k.B - 4.0 * k.A * k.C;
}

double discriminant_printed_form(double cos_phi) noexcept {
    return (1.0 + 3.0 * cos_phi) / (1.0 - cos_phi);
}

namespace {

void append_term(std::string& out, double coeff, std::string_view monomial) {
    if (coeff == 0.0) return;
    if (coeff < 0.0) {
        out += '-';
    } else if (!out.empty()) {
        out += '+';
    }
    const double mag = std::fabs(coeff);
    if (mag != 1.0) out += format_number(mag);
    out += monomial;
}

} // namespace

std::string format_conic_equation(const ConicCoefficients& k) {
    std::string lhs;
    append_term(lhs, k.A, "x^2");
    append_term(lhs, k.B, "xy");
    append_term(lhs, k.C, "y^2");
    if (lhs.empty()) lhs = "0";
    return lhs + " = " + format_number(k.rhs);
}

ConicClass classify_conic(const ConicSpec& spec, const ToleranceConfig& tol) {
    const ConicCoefficients k = conic_coefficients(spec, tol);
    const double c = spec.cos_phi;
    const double r2 = spec.r2;
    const bool r2_zero = is_zero_r2(r2, tol);

    // phi = 2pi/3: the form collapses to -(x^2 + y^2)/2 = r2/2.
    if (std::fabs(c + 0.5) <= tol.eps_angle) {
        const std::string eq = "x^2+y^2 = " + format_number(r2_zero ? 0.0 : -r2);
        if (r2_zero) return {ConicKind::Point, eq};
        if (r2 > 0.0) return {ConicKind::NoRealPoints, eq};
        ConicClass out{ConicKind::Circle, eq};
        out.circle_radius = std::sqrt(-r2);
        return out;
    }

    // phi = arccos(-1/3): -6 times the form is (sqrt(2) x - y)^2 = -3 r2.
    if (std::fabs(c - kDegenerateCos) <= tol.eps_angle) {
        if (r2_zero) return {ConicKind::SingleLine, "y = sqrt(2)x"};
        if (r2 > 0.0) return {ConicKind::NoRealPoints, "(sqrt(2)x-y)^2 = " + format_number(-3.0 * r2)};
        const double offset = std::sqrt(-3.0 * r2);
        ConicClass out{ConicKind::ParallelLines, "sqrt(2)x-y = +-" + format_number(offset)};
        out.line_offset = offset;
        return out;
    }

    if (c > kDegenerateCos) {
        if (r2_zero) {
            return {ConicKind::DegenerateIntersectingLines, format_conic_equation({k.A, k.B, k.C, 0.0}), true};
        }
        return {ConicKind::Hyperbola, format_conic_equation(k)};
    }

    // Interior of (arccos(-1/3), 2pi/3): A = c < 0 and D < 0, so the form is negative definite.
    if (r2_zero) return {ConicKind::Point, format_conic_equation({k.A, k.B, k.C, 0.0}), true};
    if (r2 > 0.0) return {ConicKind::NoRealPoints, format_conic_equation(k), true};
    return {ConicKind::Ellipse, format_conic_equation(k)};
}

double degenerate_expansion_check(const ConicSpec& spec, std::span<const SamplePoint> points,
                                  const ToleranceConfig& tol) {
    if (std::fabs(spec.cos_phi - kDegenerateCos) > tol.eps_angle) {
        throw GeometryError(ErrorCode::DomainError, "expansion check needs cos(phi) = -1/3");
    }
    const ConicCoefficients k = conic_coefficients(spec, tol);
    double worst = 0.0;
    for (const auto& p : points) {
        const double lhs = -6.0 * (k.evaluate(p.x, p.y) - k.rhs);
        const double line = std::numbers::sqrt2 * p.x - p.y;
        const double rhs = line * line + 3.0 * spec.r2;
        worst = std::max(worst, std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs)));
    }
    return worst;
}

double degenerate_expansion_check(const ConicSpec& spec, int n, const ToleranceConfig& tol) {
    if (n < 2) {
        throw GeometryError(ErrorCode::BadSampleCounts, "expansion grid needs n >= 2");
    }
    std::vector<SamplePoint> grid;
    grid.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            grid.push_back({-2.0 + 4.0 * i / (n - 1), -2.0 + 4.0 * j / (n - 1)});
        }
    }
    return degenerate_expansion_check(spec, grid, tol);
}

} // namespace circq
