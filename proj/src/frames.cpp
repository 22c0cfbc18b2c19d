#include "circq/frames.hpp"

#include <algorithm>
#include <cmath>

namespace circq {

bool is_q_basis(const CirculantMetric& m, const Vector3& u, const ToleranceConfig& tol) {
    const double c = cos_phi(m, u, tol);
    return c > -0.5 + tol.eps_angle && c < 1.0 - tol.eps_angle;
}

QBasis orthonormal_q_basis(const CirculantMetric& m) {
    // The constructor already enforces this; a default-constructed copy could not.
    if (!CirculantMetric::is_positive_definite(m.a(), m.b())) {
        throw GeometryError(ErrorCode::InvalidMetric, "orthonormal q-basis needs a positive definite metric");
    }
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Vector3 n{inv_sqrt3, inv_sqrt3, inv_sqrt3};
    const Vector3 e{inv_sqrt2, -inv_sqrt2, 0.0};

    const double beta = std::sqrt(2.0 * m.axial_eigenvalue() / m.planar_eigenvalue());
    const Vector3 u0 = n + beta * e;
    return QBasis::from(u0 / g_norm(m, u0));
}

double gram_residual(const CirculantMetric& m, const QBasis& basis) noexcept {
    const auto vs = basis.vectors();
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const double target = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::fabs(g_inner(m, vs[i], vs[j]) - target));
        }
    }
    return worst;
}

PlaneFrame companion_w(const CirculantMetric& m, const Vector3& u, const ToleranceConfig& tol) {
    if (u.is_zero()) {
        throw GeometryError(ErrorCode::ZeroVector, "companion vector needs u != 0");
    }
    const Vector3 unit = u / g_norm(m, u);
    const double c = cos_phi(m, unit, tol);
    if (c >= 1.0 - tol.eps_angle) {
        throw GeometryError(ErrorCode::DegenerateAngle, "u and qu are parallel; span{u, qu} is a line");
    }
    // qu - u cos(phi) written as (qu - u) + (1 - cos(phi)) u: both terms are
    // O(sin phi) and carry full relative precision as phi -> 0. Its g-norm is
    // sin(phi).
    const Vector3 qu = q_apply(unit);
    const Vector3 step = qu - unit;
    const double one_minus_c = -g_inner(m, unit, step) / g_inner(m, unit, unit);
    const Vector3 along = step + unit * one_minus_c;
    return {unit, along / g_norm(m, along), phi_from_cos(c)};
}

} // namespace circq
