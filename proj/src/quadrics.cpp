#include "circq/quadrics.hpp"
#include "circq/format.hpp"

#include <cmath>
#include <numbers>

namespace circq {

std::string_view to_string(QuadricClass c) noexcept {
    switch (c) {
        case QuadricClass::Cone: return "cone";
        case QuadricClass::TwoSheets: return "two-sheets";
        case QuadricClass::OneSheet: return "one-sheet";
    }
    return "unknown";
}

const RotationMatrix& RotationMatrix::principal_axes() {
    static const RotationMatrix instance = [] {
        const double s2 = 1.0 / std::sqrt(2.0);
        const double s6 = 1.0 / std::sqrt(6.0);
        const double s3 = 1.0 / std::sqrt(3.0);
        // Columns: (1,0,-1)/sqrt2, (-1,2,-1)/sqrt6, (1,1,1)/sqrt3.
        return RotationMatrix(Matrix{{
            {s2, -s6, s3},
            {0.0, 2.0 * s6, s3},
            {-s2, -s6, s3},
        }});
    }();
    return instance;
}

Vector3 RotationMatrix::apply(const Vector3& v) const noexcept {
    return {r_[0][0] * v.x + r_[0][1] * v.y + r_[0][2] * v.z,
            r_[1][0] * v.x + r_[1][1] * v.y + r_[1][2] * v.z,
            r_[2][0] * v.x + r_[2][1] * v.y + r_[2][2] * v.z};
}

Vector3 RotationMatrix::apply_transpose(const Vector3& v) const noexcept {
    return {r_[0][0] * v.x + r_[1][0] * v.y + r_[2][0] * v.z,
            r_[0][1] * v.x + r_[1][1] * v.y + r_[2][1] * v.z,
            r_[0][2] * v.x + r_[1][2] * v.y + r_[2][2] * v.z};
}

Vector3 to_primed(const Vector3& v) noexcept {
    return RotationMatrix::principal_axes().apply_transpose(v);
}

Vector3 from_primed(const Vector3& vp) noexcept {
    return RotationMatrix::principal_axes().apply(vp);
}

QuadricClass classify_quadric(const QuadricSpec& spec, const ToleranceConfig& tol) {
    if (!std::isfinite(spec.r2)) {
        throw GeometryError(ErrorCode::NonFinite, "r2 must be finite");
    }
    if (std::fabs(spec.r2) <= tol.eps_null) return QuadricClass::Cone;
    return spec.r2 > 0.0 ? QuadricClass::TwoSheets : QuadricClass::OneSheet;
}

CausalCharacter radius_vector_character(const QuadricSpec& spec, const ToleranceConfig& tol) {
    switch (classify_quadric(spec, tol)) {
        case QuadricClass::Cone: return CausalCharacter::Null;
        case QuadricClass::TwoSheets: return CausalCharacter::Spacelike;
        case QuadricClass::OneSheet: return CausalCharacter::Timelike;
    }
    return CausalCharacter::Null;
}

std::string primed_equation(const QuadricSpec& spec, const ToleranceConfig& tol) {
    const double rhs = classify_quadric(spec, tol) == QuadricClass::Cone ? 0.0 : -spec.r2;
    return "x'^2+y'^2-2z'^2 = " + format_number(rhs);
}

CircleIntersection cone_sphere_intersection() noexcept {
    // Subtracting the cone from the sphere leaves 3 z'^2 = 1; then x'^2+y'^2 = 2 z'^2.
    const double z = 1.0 / std::sqrt(3.0);
    return {2.0 / 3.0, {z, -z}};
}

std::array<Vector3, 3> basis_heads_primed() noexcept {
    return {to_primed({1.0, 0.0, 0.0}), to_primed({0.0, 1.0, 0.0}), to_primed({0.0, 0.0, 1.0})};
}

Vector3 quadric_point(QuadricClass cls, double a, double s, double theta, Branch branch) {
    const double sign = branch == Branch::Upper ? 1.0 : -1.0;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    switch (cls) {
        case QuadricClass::Cone:
            return {s * ct, s * st, sign * s / std::numbers::sqrt2};
        case QuadricClass::TwoSheets: {
            const double rho = a * std::sinh(s);
            return {rho * ct, rho * st, sign * a / std::numbers::sqrt2 * std::cosh(s)};
        }
        case QuadricClass::OneSheet: {
            const double rho = a * std::cosh(s);
            return {rho * ct, rho * st, a / std::numbers::sqrt2 * std::sinh(s)};
        }
    }
    return {};
}

std::vector<Vector3> sample_quadric(const QuadricSpec& spec, const MeshOptions& opts,
                                    const ToleranceConfig& tol) {
    if (opts.n_s < 2 || opts.n_theta < 3) {
        throw GeometryError(ErrorCode::BadSampleCounts, "need n_s >= 2 and n_theta >= 3");
    }
    const QuadricClass cls = classify_quadric(spec, tol);
    const double a = std::sqrt(std::fabs(spec.r2));
    const double t_max = opts.t_max.value_or(2.0 * std::fmax(1.0, a));
    if (!(std::isfinite(t_max) && t_max > 0.0)) {
        throw GeometryError(ErrorCode::DomainError, "t_max must be positive and finite");
    }

    // Parameter interval chosen so the radial extent reaches t_max.
    double s_lo = 0.0;
    double s_hi = t_max;
    if (cls == QuadricClass::TwoSheets) {
        s_hi = std::asinh(t_max / a);
    } else if (cls == QuadricClass::OneSheet) {
        s_hi = std::acosh(std::fmax(t_max / a, 1.0));
        s_lo = -s_hi;
    }

    const bool two_branches = cls != QuadricClass::OneSheet;
    std::vector<Vector3> out;
    out.reserve(static_cast<std::size_t>(opts.n_s) * opts.n_theta * (two_branches ? 2 : 1));
    for (Branch branch : {Branch::Upper, Branch::Lower}) {
        if (branch == Branch::Lower && !two_branches) break;
        for (int i = 0; i < opts.n_s; ++i) {
            const double s = s_lo + (s_hi - s_lo) * i / (opts.n_s - 1);
            for (int j = 0; j < opts.n_theta; ++j) {
                const double theta = 2.0 * std::numbers::pi * j / opts.n_theta;
                out.push_back(quadric_point(cls, a, s, theta, branch));
            }
        }
    }
    return out;
}

} // namespace circq
