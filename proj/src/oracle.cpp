#include "circq/oracle.hpp"
#include "circq/conics.hpp"
#include "circq/format.hpp"
#include "circq/frames.hpp"
#include "circq/quadrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace circq::oracle {

std::uint64_t SeedStream::mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SeedStream::next_u64() {
    ++counter_;
    return mix64(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double SeedStream::next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

SeedStream SeedStream::split(std::uint64_t stream_id) const {
    return SeedStream(mix64(seed_ ^ mix64(stream_id)));
}

double dense_g_inner(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept {
    const double a = m.a();
    const double b = m.b();
    const double g[3][3] = {{a, b, b}, {b, a, b}, {b, b, a}};
    const double uu[3] = {u.x, u.y, u.z};
    const double vv[3] = {v.x, v.y, v.z};
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            total += g[i][j] * uu[i] * vv[j];
        }
    }
    return total;
}

double dense_g_magnitude(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept {
    const double uu[3] = {u.x, u.y, u.z};
    const double vv[3] = {v.x, v.y, v.z};
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            total += std::fabs((i == j ? m.a() : m.b()) * uu[i] * vv[j]);
        }
    }
    return total;
}

Vector3 random_vector(SeedStream& rng) {
    for (;;) {
        const Vector3 v{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        if (std::sqrt(v.dot(v)) >= 1e-3) return v;
    }
}

CirculantMetric random_metric(SeedStream& rng) {
    for (;;) {
        const double a = rng.uniform(0.5, 5.0);
        const double b = rng.uniform(-0.5 * a, a);
        if (CirculantMetric::is_positive_definite(a, b)) return {a, b};
    }
}

Vector3 vector_with_cos_phi(const CirculantMetric& m, double c, double psi) {
    if (!(c >= -0.5 && c <= 1.0)) {
        throw GeometryError(ErrorCode::DomainError, "cos(phi) must lie in [-1/2, 1]");
    }
    // Axial share p of g(u,u) = 1 gives cos(phi) = p - (1 - p)/2, since q turns
    // the plane orthogonal to (1,1,1) by 120 degrees.
    const double p = (2.0 * c + 1.0) / 3.0;
    const double axial = std::sqrt(p / m.axial_eigenvalue());
    const double planar = std::sqrt((1.0 - p) / m.planar_eigenvalue());
    const double s3 = 1.0 / std::sqrt(3.0);
    const Vector3 n{s3, s3, s3};
    const Vector3 e1{1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2, 0.0};
    const Vector3 e2{1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)};
    return axial * n + planar * (std::cos(psi) * e1 + std::sin(psi) * e2);
}

namespace {

/// Accumulates the max residual of one invariant.
class Tracker {
public:
    Tracker(std::string suite, std::string invariant, std::uint64_t seed, double tolerance)
        : report_{std::move(suite), std::move(invariant), seed, 0, 0.0, tolerance, true} {}

    void observe(double residual) {
        ++report_.trials;
        // A NaN residual sticks and fails the invariant.
        if (std::isnan(residual) || residual > report_.max_residual) report_.max_residual = residual;
    }

    OracleReport finish() {
        report_.pass = report_.trials > 0 && report_.max_residual <= report_.tolerance;
        return report_;
    }

private:
    OracleReport report_;
};

double rel(double got, double expected) { return std::fabs(got - expected) / (1.0 + std::fabs(expected)); }

/// phi_k = kPhiMin + k (2pi/3 - kPhiMin) / n for k = 1..n.
std::vector<double> phi_grid(std::size_t n, bool include_end) {
    const double hi = 2.0 * std::numbers::pi / 3.0;
    std::vector<double> out;
    const std::size_t last = include_end ? n : n - 1;
    for (std::size_t k = 1; k <= last; ++k) {
        out.push_back(kPhiMin + (hi - kPhiMin) * static_cast<double>(k) / static_cast<double>(n));
    }
    return out;
}

void run_core(std::uint64_t seed, std::size_t trials, std::vector<OracleReport>& out) {
    SeedStream rng = SeedStream(seed).split(1);
    Tracker isometry("core", "isometry_g(qu,qv)=g(u,v)", seed, 1e-12);
    Tracker dense("core", "g_inner_vs_dense_oracle", seed, 1e-13);
    Tracker ai("core", "f(u,u)=2g(u,qu)", seed, 1e-12);
    Tracker bi("core", "f(u,qu)=g(u,u)+g(u,qu)", seed, 1e-12);
    Tracker sym("core", "f_symmetric_and_q_invariant", seed, 1e-12);
    Tracker range("core", "cos_phi_in_[-1/2,1]", seed, 1e-12);
    Tracker fcos("core", "f(u,u)=2|u|^2cos_phi", seed, 1e-12);
    Tracker keep("core", "q_preserves_character", seed, 0.0);
    Tracker cube("core", "q^3=id", seed, 0.0);

    const ToleranceConfig tol;
    for (std::size_t t = 0; t < trials; ++t) {
        const CirculantMetric m = random_metric(rng);
        const Vector3 u = random_vector(rng);
        const Vector3 v = random_vector(rng);
        const Vector3 qu = q_apply(u);
        const Vector3 qv = q_apply(v);

        const double guv = g_inner(m, u, v);
        isometry.observe(rel(g_inner(m, qu, qv), guv));
        dense.observe(std::fabs(guv - dense_g_inner(m, u, v)) / (1.0 + dense_g_magnitude(m, u, v)));

        const double guu = g_inner(m, u, u);
        const double guqu = g_inner(m, u, qu);
        const double fuu = f_inner(m, u, u);
        ai.observe(rel(fuu, 2.0 * guqu));
        bi.observe(rel(f_inner(m, u, qu), guu + guqu));

        const double fuv = f_inner(m, u, v);
        sym.observe(std::max(rel(f_inner(m, v, u), fuv), rel(f_inner(m, qu, qv), fuv)));

        const double c = cos_phi(m, u);
        range.observe(std::max({0.0, -0.5 - c, c - 1.0}));
        fcos.observe(rel(fuu, 2.0 * guu * c));

        if (std::fabs(c) > tol.eps_null) {
            const CausalCharacter base = causal_character(m, u, tol);
            const bool same = causal_character(m, qu, tol) == base && causal_character(m, q2_apply(u), tol) == base;
            keep.observe(same ? 0.0 : 1.0);
        }
        cube.observe(q_apply(q_apply(q_apply(u))) == u ? 0.0 : 1.0);
    }
    for (Tracker* tr : {&isometry, &dense, &ai, &bi, &sym, &range, &fcos, &keep, &cube}) {
        out.push_back(tr->finish());
    }
}

void run_frames(std::uint64_t seed, std::size_t trials, std::vector<OracleReport>& out) {
    SeedStream rng = SeedStream(seed).split(2);
    Tracker gram("frames", "orthonormal_q_basis_gram=I", seed, 1e-10);
    Tracker null_basis("frames", "q_basis_vectors_null", seed, 1e-10);
    Tracker beta("frames", "beta_squared_positive", seed, 0.0);
    Tracker ortho("frames", "companion_w_orthonormal", seed, 1e-12);
    Tracker scale("frames", "companion_w_scale_invariant", seed, 1e-12);

    const ToleranceConfig tol;
    for (std::size_t t = 0; t < trials; ++t) {
        const CirculantMetric m = random_metric(rng);
        beta.observe(2.0 * m.axial_eigenvalue() / m.planar_eigenvalue() > 0.0 ? 0.0 : 1.0);

        const QBasis basis = orthonormal_q_basis(m);
        gram.observe(gram_residual(m, basis));
        for (const Vector3& e : basis.vectors()) {
            const bool is_null = causal_character(m, e, tol) == CausalCharacter::Null;
            null_basis.observe(is_null ? std::fabs(cos_phi(m, e)) : 1.0);
        }
    }

    const std::vector<double> grid = phi_grid(200, false);
    for (double phi : grid) {
        const CirculantMetric m = random_metric(rng);
        const Vector3 u = vector_with_cos_phi(m, std::cos(phi), rng.uniform(0.0, 2.0 * std::numbers::pi));
        const PlaneFrame frame = companion_w(m, u, tol);
        ortho.observe(std::max(std::fabs(g_inner(m, frame.u, frame.w)), std::fabs(g_inner(m, frame.w, frame.w) - 1.0)));

        const double k = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
        const PlaneFrame scaled = companion_w(m, u * k, tol);
        scale.observe(g_norm(m, scaled.w - frame.w));
    }
    for (Tracker* tr : {&gram, &null_basis, &beta, &ortho, &scale}) out.push_back(tr->finish());
}

void run_quadrics(std::uint64_t seed, std::size_t trials, std::vector<OracleReport>& out) {
    SeedStream rng = SeedStream(seed).split(3);
    Tracker orth("quadrics", "rotation_RtR=I", seed, 1e-15);
    Tracker det("quadrics", "rotation_det=1", seed, 1e-15);
    Tracker congruence("quadrics", "Rt(J-I)R=diag(-1,-1,2)", seed, 1e-14);
    Tracker transport("quadrics", "form_transport", seed, 1e-12);
    Tracker consistency("quadrics", "f_inner_identity_metric=sphere_form", seed, 1e-12);
    Tracker circles("quadrics", "cone_sphere_circles", seed, 1e-12);
    Tracker mesh("quadrics", "mesh_vertices_on_surface", seed, 1e-9);

    const auto& r = RotationMatrix::principal_axes();
    const double form[3][3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const double diag[3] = {-1.0, -1.0, 2.0};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double rtr = 0.0;
            double cong = 0.0;
            for (int k = 0; k < 3; ++k) {
                rtr += r(k, i) * r(k, j);
                for (int l = 0; l < 3; ++l) cong += r(k, i) * form[k][l] * r(l, j);
            }
            orth.observe(std::fabs(rtr - (i == j ? 1.0 : 0.0)));
            congruence.observe(std::fabs(cong - (i == j ? diag[i] : 0.0)));
        }
    }
    const double d = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
                     r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                     r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
    det.observe(std::fabs(d - 1.0));

    const CirculantMetric identity = CirculantMetric::identity();
    for (std::size_t t = 0; t < trials; ++t) {
        const Vector3 v = random_vector(rng);
        const double value = sphere_form_value(v);
        transport.observe(rel(primed_form_value(to_primed(v)), value));
        consistency.observe(rel(f_inner(identity, v, v), value));
    }

    const CircleIntersection ring = cone_sphere_intersection();
    circles.observe(std::fabs(ring.radius_sq - 2.0 / 3.0));
    circles.observe(std::fabs(ring.z_planes.first - 1.0 / std::sqrt(3.0)));
    circles.observe(std::fabs(ring.z_planes.second + 1.0 / std::sqrt(3.0)));
    for (const Vector3& h : basis_heads_primed()) {
        circles.observe(std::fabs(h.x * h.x + h.y * h.y - 2.0 * h.z * h.z));
        circles.observe(std::fabs(h.x * h.x + h.y * h.y + h.z * h.z - 1.0));
        circles.observe(std::fabs(h.z - ring.z_planes.first));
    }

    const std::size_t surfaces = std::max<std::size_t>(3, trials / 100);
    for (std::size_t t = 0; t < surfaces; ++t) {
        const double r2 = t == 0 ? 0.0 : rng.uniform(-5.0, 5.0);
        for (const Vector3& p : sample_quadric({r2}, {8, 12, std::nullopt})) {
            mesh.observe(std::fabs(p.x * p.x + p.y * p.y - 2.0 * p.z * p.z + r2) / (1.0 + std::fabs(r2)));
        }
    }
    for (Tracker* tr : {&orth, &det, &congruence, &transport, &consistency, &circles, &mesh}) {
        out.push_back(tr->finish());
    }
}

ConicKind expected_kind(double c, double r2) {
    // Decision table over the interior of each region.
    const int sign = r2 > 0.0 ? 1 : (r2 < 0.0 ? -1 : 0);
    if (c > -1.0 / 3.0) return sign == 0 ? ConicKind::DegenerateIntersectingLines : ConicKind::Hyperbola;
    if (sign > 0) return ConicKind::NoRealPoints;
    return sign == 0 ? ConicKind::Point : ConicKind::Ellipse;
}

void run_conics(std::uint64_t seed, std::size_t trials, std::vector<OracleReport>& out) {
    SeedStream rng = SeedStream(seed).split(4);
    Tracker coeff("conics", "f_values=2*coefficients", seed, 1e-12);
    Tracker closed("conics", "discriminant=(1+3c)/(1+c)", seed, 1e-10);
    Tracker sign("conics", "discriminant_sign=printed_form_sign", seed, 0.0);
    Tracker expansion("conics", "degenerate_expansion", seed, 1e-12);
    Tracker circle("conics", "circle_realization", seed, 1e-12);
    Tracker table("conics", "classification_table", seed, 0.0);

    for (double phi : phi_grid(1000, true)) {
        const double c = std::cos(phi);
        const ConicSpec spec{c, 1.0};
        const PlaneFValues fv = plane_f_values(c);
        const ConicCoefficients k = conic_coefficients(spec);
        coeff.observe(std::max({std::fabs(fv.f_uu - 2.0 * k.A), std::fabs(2.0 * fv.f_uw - 2.0 * k.B),
                                std::fabs(fv.f_ww - 2.0 * k.C)}));
        const double dsc = discriminant(spec);
        const double cc = std::max(c, -0.5);
        closed.observe(std::fabs(dsc - (1.0 + 3.0 * cc) / (1.0 + cc)));
        if (phi < 2.0 * std::numbers::pi / 3.0) {
            const bool agree = std::signbit(dsc) == std::signbit(discriminant_printed_form(c)) ||
                               (dsc == 0.0 && discriminant_printed_form(c) == 0.0);
            sign.observe(agree ? 0.0 : 1.0);
        }
    }

    for (double r2 : {1.0, 0.0, -1.0}) {
        expansion.observe(degenerate_expansion_check({-1.0 / 3.0, r2}, 11));
    }

    const ConicCoefficients round = conic_coefficients({-0.5, -1.0});
    for (std::size_t t = 0; t < trials; ++t) {
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double x = std::cos(angle);
        const double y = std::sin(angle);
        circle.observe(std::fabs(round.evaluate(x, y) - round.rhs));

        // Stay clear of the region boundaries; the boundaries themselves are unit-tested.
        double c = rng.uniform(-0.5, std::cos(1e-3));
        if (std::fabs(c + 1.0 / 3.0) < 1e-6 || c < -0.5 + 1e-6) c = 0.25;
        const double r2 = std::fabs(rng.uniform(-1.0, 1.0)) < 0.1 ? 0.0 : rng.uniform(-5.0, 5.0);
        const double r2_used = std::fabs(r2) < 1e-6 ? 0.0 : r2;
        table.observe(classify_conic({c, r2_used}).kind == expected_kind(c, r2_used) ? 0.0 : 1.0);
    }
    for (Tracker* tr : {&coeff, &closed, &sign, &expansion, &circle, &table}) out.push_back(tr->finish());
}

} // namespace

std::vector<OracleReport> run_suite(std::uint64_t seed, std::size_t trials) {
    if (trials == 0) {
        throw GeometryError(ErrorCode::DomainError, "run_suite needs at least one trial");
    }
    std::vector<OracleReport> out;
    run_core(seed, trials, out);
    run_frames(seed, trials, out);
    run_quadrics(seed, trials, out);
    run_conics(seed, trials, out);
    return out;
}

bool all_pass(const std::vector<OracleReport>& reports) noexcept {
    return std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.pass; });
}

std::string render_reports(const std::vector<OracleReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "suite=" << r.suite << " invariant=" << r.invariant << " seed=" << r.seed
           << " trials=" << r.trials << " max_residual=" << format_number(r.max_residual)
           << " tolerance=" << format_number(r.tolerance) << " pass=" << (r.pass ? "true" : "false") << '\n';
    }
    os << "overall=" << (all_pass(reports) ? "pass" : "fail") << '\n';
    return os.str();
}

} // namespace circq::oracle
