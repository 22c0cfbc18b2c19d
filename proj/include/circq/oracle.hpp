#pragma once

#include "circq/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace circq::oracle {

/// Counter-based SplitMix64 stream.
///
/// Draw k (0-based) of a stream with key `seed` is
///   mix64(seed + (k + 1) * 0x9E3779B97F4A7C15)
/// where mix64 is the SplitMix64 finalizer (shift-xor-multiply with
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB). Doubles take the top 53 bits.
/// split(id) derives an independent stream keyed by mix64(seed ^ mix64(id)).
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();
    /// Uniform in the open interval (0, 1).
    double next_unit();
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    SeedStream split(std::uint64_t stream_id) const;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t position() const noexcept { return counter_; }

    static std::uint64_t mix64(std::uint64_t z) noexcept;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// g(u, v) by materializing circ(a, b, b) and summing all nine terms.
double dense_g_inner(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept;

/// Sum of |g_ij u_i v_j|: the rounding scale of any evaluation of g(u, v).
double dense_g_magnitude(const CirculantMetric& m, const Vector3& u, const Vector3& v) noexcept;

/// Components uniform in [-10, 10]; redraws vectors with Euclidean norm below 1e-3.
Vector3 random_vector(SeedStream& rng);

/// a uniform in [0.5, 5], b uniform in the open interval (-a/2, a).
CirculantMetric random_metric(SeedStream& rng);

/// g-unit vector whose angle with qu has cosine `c`, for c in [-1/2, 1].
/// `psi` rotates the planar component about (1,1,1).
Vector3 vector_with_cos_phi(const CirculantMetric& m, double c, double psi = 0.0);

struct OracleReport {
    std::string suite;
    std::string invariant;
    std::uint64_t seed;
    std::size_t trials;
    double max_residual;
    double tolerance;
    bool pass;
};

/// Runs every invariant family in a fixed order: core, frames, quadrics, conics.
std::vector<OracleReport> run_suite(std::uint64_t seed, std::size_t trials);

bool all_pass(const std::vector<OracleReport>& reports) noexcept;

/// One line per report, then `overall=pass|fail`.
std::string render_reports(const std::vector<OracleReport>& reports);

} // namespace circq::oracle
