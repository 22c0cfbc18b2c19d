#pragma once

#include "circq/core.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace circq {

/// Smallest accepted angle between u and qu, in radians.
inline constexpr double kPhiMin = 1e-6;

/// f-circle f(v, v) = r2 in the plane span{u, qu}, given by cos(phi).
struct ConicSpec {
    double cos_phi;
    double r2;

    /// Throws DomainError unless phi lies in [kPhiMin, 2pi/3]. Values of
    /// cos_phi below -1/2 by at most eps_angle are accepted as phi = 2pi/3.
    void validate(const ToleranceConfig& tol = {}) const;

    /// Builds a spec from an angle; same domain as validate().
    static ConicSpec from_phi(double phi, double r2, const ToleranceConfig& tol = {});
};

/// f(u,u), f(u,w), f(w,w) on the orthonormal frame (u, w) of the plane.
struct PlaneFValues {
    double f_uu;
    double f_uw;
    double f_ww;
};

/// A x^2 + B xy + C y^2 = rhs in the (u, w) coordinates.
struct ConicCoefficients {
    double A;
    double B;
    double C;
    double rhs;

    double evaluate(double x, double y) const { return A * x * x + B * x * y + C * y * y; }
};

enum class ConicKind {
    Hyperbola,
    DegenerateIntersectingLines,
    NoRealPoints,
    SingleLine,
    ParallelLines,
    Ellipse,
    Point,
    Circle,
};

std::string_view to_string(ConicKind k) noexcept;

struct ConicClass {
    ConicKind kind;
    /// Canonical equation of the curve, e.g. "xy = 0.5" or "x^2+y^2 = 1".
    std::string equation;
    /// True when the case is settled by standard conic theory rather than
    /// the closed-form results (D > 0 with r2 = 0, interior D < 0 with r2 >= 0).
    bool extension = false;
    std::optional<double> circle_radius = std::nullopt;
    /// |offset| of the parallel lines sqrt(2) x - y = +-offset.
    std::optional<double> line_offset = std::nullopt;
};

PlaneFValues plane_f_values(double cos_phi, const ToleranceConfig& tol = {});

ConicCoefficients conic_coefficients(const ConicSpec& spec, const ToleranceConfig& tol = {});

/// B^2 - 4AC of the conic form; equals (1 + 3c) / (1 + c).
double discriminant(const ConicSpec& spec, const ToleranceConfig& tol = {});

/// The alternative closed form (1 + 3c) / (1 - c). Same sign as
/// discriminant() on (0, 2pi/3]; reported next to it, never used to classify.
double discriminant_printed_form(double cos_phi) noexcept;

ConicClass classify_conic(const ConicSpec& spec, const ToleranceConfig& tol = {});

/// Human-readable form of A x^2 + B xy + C y^2 = rhs with zero terms dropped.
std::string format_conic_equation(const ConicCoefficients& k);

struct SamplePoint {
    double x;
    double y;
};

/// Largest relative deviation between -6 (A x^2 + B xy + C y^2 - r2/2) and
/// (sqrt(2) x - y)^2 + 3 r2 over `points`. Needs cos_phi = -1/3.
double degenerate_expansion_check(const ConicSpec& spec, std::span<const SamplePoint> points,
                                  const ToleranceConfig& tol = {});

/// Same check on an n x n grid over [-2, 2]^2.
double degenerate_expansion_check(const ConicSpec& spec, int n = 11, const ToleranceConfig& tol = {});

} // namespace circq
