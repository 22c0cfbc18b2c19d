#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circq/oracle.hpp"
#include "circq/quadrics.hpp"

#include <cmath>

using namespace circq;

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS6 = std::sqrt(6.0);

void check_vec(const Vector3& got, const Vector3& want, double tol) {
    CHECK(std::fabs(got.x - want.x) <= tol);
    CHECK(std::fabs(got.y - want.y) <= tol);
    CHECK(std::fabs(got.z - want.z) <= tol);
}

double surface_residual(const Vector3& p, double r2) {
    return std::fabs(p.x * p.x + p.y * p.y - 2 * p.z * p.z + r2) / (1 + std::fabs(r2));
}

} // namespace

TEST_CASE("sphere form in orthonormal q-basis coordinates") {
    CHECK(sphere_form_value({1, 1, 1}) == 6.0);
    CHECK(sphere_form_value({1, 0, 0}) == 0.0);
    CHECK(sphere_form_value({1 / kS2, 0, -1 / kS2}) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(f_inner(CirculantMetric::identity(), {1 / kS2, 0, -1 / kS2}, {1 / kS2, 0, -1 / kS2}) ==
          doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("rotation to principal axes") {
    check_vec(to_primed({1, 0, 0}), {1 / kS2, -1 / kS6, 1 / kS3}, 1e-16);
    check_vec(from_primed({0, 0, kS3}), {1, 1, 1}, 4e-16);

    const auto& r = RotationMatrix::principal_axes();
    const double j_minus_i[3][3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const double expected[3] = {-1, -1, 2};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double rtr = 0;
            double cong = 0;
            for (int k = 0; k < 3; ++k) {
                rtr += r(k, i) * r(k, j);
                for (int l = 0; l < 3; ++l) cong += r(k, i) * j_minus_i[k][l] * r(l, j);
            }
            CHECK(std::fabs(rtr - (i == j ? 1.0 : 0.0)) <= 1e-15);
            CHECK(std::fabs(cong - (i == j ? expected[i] : 0.0)) <= 1e-14);
        }
    }
    const double det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
                       r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                       r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
    CHECK(std::fabs(det - 1.0) <= 1e-15);
}

TEST_CASE("primed form transports the sphere form") {
    CHECK(primed_form_value({0, 0, 1}) == 2.0);
    CHECK(sphere_form_value(from_primed({0, 0, 1})) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(primed_form_value({1, 0, 0}) == -1.0);
    CHECK(primed_form_value({1, 1, 1}) == 0.0);

    oracle::SeedStream rng(99);
    for (int i = 0; i < 1000; ++i) {
        const Vector3 v = oracle::random_vector(rng);
        const double value = sphere_form_value(v);
        CHECK(std::fabs(primed_form_value(to_primed(v)) - value) <= 1e-12 * (1 + std::fabs(value)));
        check_vec(to_primed(from_primed(v)), v, 1e-14);
        CHECK(std::fabs(f_inner(CirculantMetric::identity(), v, v) - value) <= 1e-12 * (1 + std::fabs(value)));
    }
}

TEST_CASE("quadric classification and equations") {
    CHECK(classify_quadric({0}) == QuadricClass::Cone);
    CHECK(classify_quadric({2}) == QuadricClass::TwoSheets);
    CHECK(classify_quadric({-1}) == QuadricClass::OneSheet);
    CHECK(classify_quadric({5e-10}) == QuadricClass::Cone);
    CHECK(classify_quadric({-5e-10}) == QuadricClass::Cone);
    CHECK(classify_quadric({2e-9}) == QuadricClass::TwoSheets);

    CHECK(primed_equation({0}) == "x'^2+y'^2-2z'^2 = 0");
    CHECK(primed_equation({2}) == "x'^2+y'^2-2z'^2 = -2");
    CHECK(primed_equation({-1}) == "x'^2+y'^2-2z'^2 = 1");
    CHECK(primed_equation({-0.0}) == "x'^2+y'^2-2z'^2 = 0");

    CHECK(radius_vector_character({0}) == CausalCharacter::Null);
    CHECK(radius_vector_character({2}) == CausalCharacter::Spacelike);
    CHECK(radius_vector_character({-1}) == CausalCharacter::Timelike);

    CHECK_THROWS_AS(classify_quadric({INFINITY}), GeometryError);
}

TEST_CASE("radius vectors of sampled points have the surface's character") {
    // For the identity metric the standard basis is an orthonormal q-basis,
    // so unprimed coordinates are tangent-vector components.
    const CirculantMetric id = CirculantMetric::identity();
    for (double r2 : {2.0, -1.0, 0.0}) {
        const auto pts = sample_quadric({r2}, {5, 7, std::nullopt});
        for (const auto& p : pts) {
            const Vector3 v = from_primed(p);
            if (v.max_abs() < 1e-12) continue;  // cone apex
            CHECK(std::fabs(f_inner(id, v, v) - r2) <= 1e-9 * (1 + std::fabs(r2)) * (1 + v.dot(v)));
            if (r2 != 0.0) CHECK(causal_character(id, v) == radius_vector_character({r2}));
        }
    }
}

TEST_CASE("cone meets the unit sphere in two circles") {
    const CircleIntersection ring = cone_sphere_intersection();
    CHECK(std::fabs(ring.radius_sq - 2.0 / 3.0) <= 1e-15);
    CHECK(std::fabs(ring.z_planes.first - 1 / kS3) <= 1e-15);
    CHECK(std::fabs(ring.z_planes.second + 1 / kS3) <= 1e-15);

    const auto heads = basis_heads_primed();
    check_vec(heads[0], {1 / kS2, -1 / kS6, 1 / kS3}, 1e-16);
    check_vec(heads[1], {0, 2 / kS6, 1 / kS3}, 1e-16);
    check_vec(heads[2], {-1 / kS2, -1 / kS6, 1 / kS3}, 1e-16);
    for (const auto& h : heads) {
        CHECK(std::fabs(h.x * h.x + h.y * h.y - 2.0 / 3.0) <= 1e-12);
        CHECK(std::fabs(h.z - 1 / kS3) <= 1e-12);
        CHECK(std::fabs(h.x * h.x + h.y * h.y - 2 * h.z * h.z) <= 1e-12);
        CHECK(std::fabs(h.dot(h) - 1.0) <= 1e-12);
    }
}

TEST_CASE("canonical parametrizations") {
    check_vec(quadric_point(QuadricClass::OneSheet, 1.0, 0.0, 0.0), {1, 0, 0}, 0.0);
    for (double theta : {0.0, 1.0, 4.0}) {
        const Vector3 up = quadric_point(QuadricClass::TwoSheets, kS2, 0.0, theta, Branch::Upper);
        const Vector3 dn = quadric_point(QuadricClass::TwoSheets, kS2, 0.0, theta, Branch::Lower);
        CHECK(std::fabs(up.z - 1.0) <= 1e-15);
        CHECK(std::fabs(dn.z + 1.0) <= 1e-15);
        CHECK(std::fabs(up.x) + std::fabs(up.y) == 0.0);
    }
    check_vec(quadric_point(QuadricClass::Cone, 0, 2.0, 0.0, Branch::Lower), {2, 0, -kS2}, 1e-15);
}

TEST_CASE("sampled meshes lie on their surface in a fixed order") {
    for (double r2 : {0.0, 2.0, -1.0, 1e-3, -37.5, 1e4}) {
        const auto pts = sample_quadric({r2});
        const bool two = classify_quadric({r2}) != QuadricClass::OneSheet;
        CHECK(pts.size() == (two ? 2u : 1u) * 32u * 64u);
        for (const auto& p : pts) CHECK(surface_residual(p, r2) <= 1e-9);
    }

    const auto cone = sample_quadric({0.0}, {3, 4, 1.0});
    REQUIRE(cone.size() == 24);
    // Apex row duplicated on both branches, upper branch first.
    check_vec(cone[0], {0, 0, 0}, 0.0);
    check_vec(cone[12], {0, 0, 0}, 0.0);
    CHECK(cone[8].z > 0.0);
    CHECK(cone[20].z < 0.0);
    check_vec(cone[8], {1, 0, 1 / kS2}, 1e-15);

    const auto one = sample_quadric({-1.0}, {3, 4, std::nullopt});
    REQUIRE(one.size() == 12);
    check_vec(one[4], {1, 0, 0}, 1e-15);  // s = 0, theta = 0
    CHECK(one[0].z < 0.0);
    CHECK(one[8].z > 0.0);

    // Radial extent reaches t_max.
    const auto two = sample_quadric({2.0}, {4, 3, 5.0});
    CHECK(std::hypot(two[9].x, two[9].y) == doctest::Approx(5.0));
}

TEST_CASE("sample counts are validated") {
    CHECK_THROWS_AS(sample_quadric({1.0}, {1, 8, std::nullopt}), GeometryError);
    CHECK_THROWS_AS(sample_quadric({1.0}, {4, 2, std::nullopt}), GeometryError);
    CHECK_THROWS_AS(sample_quadric({1.0}, {4, 8, -1.0}), GeometryError);
    try {
        sample_quadric({1.0}, {0, 0, std::nullopt});
    } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::BadSampleCounts);
    }
}
