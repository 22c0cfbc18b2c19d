#pragma once

#include "circq/errors.hpp"
#include "circq/vector3.hpp"

#include <string_view>

namespace circq {

/// Comparison tolerances for boundary tests.
///
/// `eps_null` is the relative band around cos(phi) = 0 inside which a vector
/// counts as null; it also bounds |r^2| for the degenerate quadric/conic cases.
/// `eps_angle` is the width used for every other boundary comparison in
/// cos-space (phi = 0, arccos(-1/3), 2pi/3).
struct ToleranceConfig {
    double eps_null = 1e-9;
    double eps_angle = 1e-9;

    /// Throws InvalidTolerance unless both values lie in (0, 1e-3).
    void validate() const;
};

/// Positive definite circulant metric g = circ(a, b, b).
///
/// Only the two distinct entries are stored. The eigenvalues are a + 2b
/// (eigenvector (1,1,1)) and a - b (twice, on the plane orthogonal to it).
class CirculantMetric {
public:
    /// Throws InvalidMetric unless a > 0, a - b > 0 and a + 2b > 0.
    CirculantMetric(double a, double b);

    static bool is_positive_definite(double a, double b) noexcept;

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    double axial_eigenvalue() const noexcept { return a_ + 2.0 * b_; }
    double planar_eigenvalue() const noexcept { return a_ - b_; }

    static CirculantMetric identity() { return {1.0, 0.0}; }

private:
    double a_;
    double b_;
};

enum class CausalCharacter { Spacelike, Null, Timelike };

std::string_view to_string(CausalCharacter c) noexcept;

/// The structure q: (x, y, z) -> (y, z, x). q^3 is the identity.
constexpr Vector3 q_apply(const Vector3& u) { return {u.y, u.z, u.x}; }

/// q applied twice: (x, y, z) -> (z, x, y).
constexpr Vector3 q2_apply(const Vector3& u) { return q_apply(q_apply(u)); }

double g_inner(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept;
double g_norm(const CirculantMetric& m, const Vector3& u) noexcept;

/// cos of the angle between u and qu, g(u, qu) / g(u, u).
///
/// The value is always in [-1/2, 1]. A result outside that range by more
/// than `tol.eps_angle` raises InvariantViolation; smaller excursions are
/// returned unclamped, use `phi_from_cos` to get an angle.
double cos_phi(const CirculantMetric& m, const Vector3& u, const ToleranceConfig& tol = {});

/// arccos of `c` clamped into [-1/2, 1].
double phi_from_cos(double c) noexcept;

/// Associated metric f(u, v) = g(u, qv) + g(qu, v).
double f_inner(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept;

CausalCharacter causal_character(const CirculantMetric& m, const Vector3& u,
                                 const ToleranceConfig& tol = {});

} // namespace circq
