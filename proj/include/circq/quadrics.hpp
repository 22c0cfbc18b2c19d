#pragma once

#include "circq/core.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circq {

/// f-sphere f(v, v) = r2 centred at the origin. r2 may take any sign.
struct QuadricSpec {
    double r2 = 0.0;
};

/// Surface class of x'^2 + y'^2 - 2 z'^2 = -r2.
enum class QuadricClass { Cone, TwoSheets, OneSheet };

std::string_view to_string(QuadricClass c) noexcept;

/// Orthogonal change of coordinates (x,y,z)^T = R (x',y',z')^T.
///
/// The third column is the q-fixed axis (1,1,1)/sqrt(3); on it the form
/// 2(xy + yz + zx) takes the value +2, on the first two columns -1.
class RotationMatrix {
public:
    using Matrix = std::array<std::array<double, 3>, 3>;

    static const RotationMatrix& principal_axes();

    double operator()(std::size_t row, std::size_t col) const { return r_[row][col]; }
    const Matrix& entries() const noexcept { return r_; }

    Vector3 apply(const Vector3& v) const noexcept;
    Vector3 apply_transpose(const Vector3& v) const noexcept;

private:
    explicit RotationMatrix(const Matrix& r) : r_(r) {}
    Matrix r_;
};

struct CircleIntersection {
    double radius_sq;                     // value of x'^2 + y'^2
    std::pair<double, double> z_planes;   // (+z', -z')
};

/// 2(xy + xz + yz): f(v, v) for v given in a g-orthonormal q-basis.
constexpr double sphere_form_value(const Vector3& v) {
    return 2.0 * (v.x * v.y + v.x * v.z + v.y * v.z);
}

Vector3 to_primed(const Vector3& v) noexcept;
Vector3 from_primed(const Vector3& vp) noexcept;

/// -(x'^2 + y'^2 - 2z'^2); equals sphere_form_value(from_primed(vp)).
constexpr double primed_form_value(const Vector3& vp) {
    return -(vp.x * vp.x + vp.y * vp.y - 2.0 * vp.z * vp.z);
}

QuadricClass classify_quadric(const QuadricSpec& spec, const ToleranceConfig& tol = {});

/// Character of every radius vector ending on the surface.
CausalCharacter radius_vector_character(const QuadricSpec& spec, const ToleranceConfig& tol = {});

/// Right-hand side in the form printed as `x'^2+y'^2-2z'^2 = <value>`.
std::string primed_equation(const QuadricSpec& spec, const ToleranceConfig& tol = {});

/// Intersection of the null cone with the unit sphere, in primed coordinates.
CircleIntersection cone_sphere_intersection() noexcept;

/// Heads of the orthonormal q-basis vectors e1, e2, e3 in primed coordinates.
std::array<Vector3, 3> basis_heads_primed() noexcept;

struct MeshOptions {
    int n_s = 32;
    int n_theta = 64;
    /// Radial extent; defaults to 2 max(1, sqrt|r2|).
    std::optional<double> t_max;
};

enum class Branch { Upper, Lower };

/// One point of the canonical parametrization of the surface class with
/// scale a = sqrt|r2| (a is ignored for the cone, where `s` is the radius t).
Vector3 quadric_point(QuadricClass cls, double a, double s, double theta, Branch branch = Branch::Upper);

/// Grid of surface points, s-major. Two-branch surfaces (cone, two sheets)
/// emit the whole upper branch first, then the lower one.
std::vector<Vector3> sample_quadric(const QuadricSpec& spec, const MeshOptions& opts = {},
                                    const ToleranceConfig& tol = {});

} // namespace circq
