#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circq/oracle.hpp"

#include <cmath>
#include <string>

using namespace circq;
using namespace circq::oracle;

TEST_CASE("SeedStream reproduces the SplitMix64 reference stream") {
    SeedStream zero(0);
    CHECK(zero.next_u64() == 0xE220A8397B1DCDAFULL);
    CHECK(zero.next_u64() == 0x6E789E6AA1B965F4ULL);
    CHECK(zero.next_u64() == 0x06C45D188009454FULL);
    CHECK(zero.position() == 3);

    SeedStream s42(42);
    CHECK(s42.next_u64() == 0xBDD732262FEB6E95ULL);
    CHECK(s42.split(1).seed() == 0xC2A6EEBDF3976AD0ULL);
}

TEST_CASE("same seed gives the same sequence") {
    SeedStream a(123), b(123), c(124);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        differs |= x != c.next_u64();
    }
    CHECK(differs);

    SeedStream u(5);
    for (int i = 0; i < 10000; ++i) {
        const double x = u.next_unit();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("dense oracle") {
    const CirculantMetric m(2, 1);
    CHECK(dense_g_inner(m, {1, 0, 0}, {0, 1, 0}) == 1.0);
    CHECK(dense_g_inner(m, {1, 1, 1}, {1, 1, 1}) == 12.0);
    SeedStream rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto u = random_vector(rng);
        const auto v = random_vector(rng);
        CHECK(dense_g_inner(CirculantMetric::identity(), u, v) == doctest::Approx(u.dot(v)).epsilon(1e-14));
    }
}

TEST_CASE("generators respect their ranges") {
    SeedStream rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const auto m = random_metric(rng);
        CHECK(m.a() >= 0.5);
        CHECK(m.a() <= 5.0);
        CHECK(m.a() - m.b() > 0.0);
        CHECK(m.a() + 2 * m.b() > 0.0);
    }
    for (int i = 0; i < 10000; ++i) {
        const auto v = random_vector(rng);
        CHECK(v.max_abs() <= 10.0);
        CHECK(std::sqrt(v.dot(v)) >= 1e-3);
        const double c = cos_phi(CirculantMetric::identity(), v);
        CHECK(c >= -0.5 - 1e-12);
        CHECK(c <= 1.0 + 1e-12);
    }
}

TEST_CASE("vector_with_cos_phi hits the requested angle") {
    SeedStream rng(77);
    for (int i = 0; i < 500; ++i) {
        const auto m = random_metric(rng);
        const double c = rng.uniform(-0.5, 1.0);
        const Vector3 u = vector_with_cos_phi(m, c, rng.uniform(0, 6.3));
        CHECK(std::fabs(dense_g_inner(m, u, u) - 1.0) <= 1e-12);
        CHECK(std::fabs(dense_g_inner(m, u, q_apply(u)) - c) <= 1e-12);
    }
    CHECK_THROWS_AS(vector_with_cos_phi(CirculantMetric::identity(), -0.6), GeometryError);
}

TEST_CASE("run_suite passes and is deterministic") {
    const auto reports = run_suite(42, 1000);
    CHECK(all_pass(reports));
    for (const auto& r : reports) {
        INFO(r.suite << "/" << r.invariant << " residual " << r.max_residual);
        CHECK(r.pass);
        CHECK(r.trials > 0);
        CHECK(r.seed == 42);
    }

    auto find = [&](const std::string& name) {
        for (const auto& r : reports) {
            if (r.invariant == name) return r;
        }
        FAIL("missing invariant " << name);
        return reports.front();
    };
    CHECK(find("isometry_g(qu,qv)=g(u,v)").max_residual <= 1e-12);
    CHECK(find("isometry_g(qu,qv)=g(u,v)").trials == 1000);
    CHECK(find("discriminant=(1+3c)/(1+c)").max_residual <= 1e-10);

    CHECK(render_reports(reports) == render_reports(run_suite(42, 1000)));
    CHECK(render_reports(reports) != render_reports(run_suite(43, 1000)));
    CHECK(render_reports(reports).ends_with("overall=pass\n"));
}

TEST_CASE("run_suite passes for other seeds") {
    for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 0xFFFFFFFFFFFFFFFFULL}) {
        const auto reports = run_suite(seed, 300);
        for (const auto& r : reports) {
            INFO(seed << " " << r.suite << "/" << r.invariant << " residual " << r.max_residual);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS(run_suite(1, 0), GeometryError);
}

TEST_CASE("a failing residual is reported as a failure") {
    OracleReport bad{"s", "i", 1, 3, 2e-12, 1e-12, false};
    CHECK_FALSE(all_pass({bad}));
    CHECK(render_reports({bad}).find("pass=false") != std::string::npos);
    CHECK(render_reports({bad}).ends_with("overall=fail\n"));
}
