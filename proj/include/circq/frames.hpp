#pragma once

#include "circq/core.hpp"

#include <array>

namespace circq {

/// A basis {u, qu, q^2 u} of the tangent space.
struct QBasis {
    Vector3 u;
    Vector3 qu;
    Vector3 q2u;

    /// Builds the triple from its first vector.
    static QBasis from(const Vector3& u) { return {u, q_apply(u), q2_apply(u)}; }

    std::array<Vector3, 3> vectors() const { return {u, qu, q2u}; }
};

/// Orthonormal frame of the 2-plane span{u, qu}: u and its companion w.
struct PlaneFrame {
    Vector3 u;   // g-unit
    Vector3 w;   // g-unit, g-orthogonal to u
    double phi;  // angle between u and qu, in (0, 2pi/3]
};

/// True when the angle between u and qu lies strictly inside (0, 2pi/3),
/// which is exactly when u, qu, q^2 u are linearly independent.
bool is_q_basis(const CirculantMetric& m, const Vector3& u, const ToleranceConfig& tol = {});

/// Deterministic g-orthonormal q-basis.
///
/// Takes u0 = n + beta e with n = (1,1,1)/sqrt(3), e = (1,-1,0)/sqrt(2) and
/// beta = sqrt(2 (a+2b) / (a-b)), which is the positive root of
/// g(u0, q u0) = 0 within that family, then normalizes u0 under g.
/// Every other orthonormal q-basis is a g-rotation of this one about n.
QBasis orthonormal_q_basis(const CirculantMetric& m);

/// Largest entrywise deviation of the g-Gram matrix of the basis from I.
double gram_residual(const CirculantMetric& m, const QBasis& basis) noexcept;

/// Companion vector w = (qu - u cos phi) / sin phi of a g-normalized u.
///
/// Throws DegenerateAngle when cos phi >= 1 - eps_angle (u and qu parallel,
/// so span{u, qu} is not a plane) and ZeroVector for u = 0.
PlaneFrame companion_w(const CirculantMetric& m, const Vector3& u, const ToleranceConfig& tol = {});

} // namespace circq
