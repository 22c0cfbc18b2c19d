#include "circq/cli.hpp"
#include "circq/conics.hpp"
#include "circq/format.hpp"
#include "circq/frames.hpp"
#include "circq/oracle.hpp"
#include "circq/quadrics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace circq::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view field) {
    std::string_view s = trim(field);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("not a number: '" + std::string(trim(field)) + "'");
    }
    if (!std::isfinite(value)) {
        throw InputError("not a finite number: '" + std::string(trim(field)) + "'");
    }
    return value;
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(',', start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

CirculantMetric parse_metric(const std::string& text) {
    const auto ab = parse_reals(text, 2);
    return {ab[0], ab[1]};
}

ToleranceConfig tolerance_from(std::optional<double> eps) {
    ToleranceConfig tol;
    if (eps) tol.eps_null = *eps;
    tol.validate();
    return tol;
}

} // namespace

std::vector<double> parse_reals(std::string_view text, std::size_t count) {
    const auto parts = split_commas(text);
    if (parts.size() != count) {
        throw InputError("expected " + std::to_string(count) + " comma-separated numbers, got '" +
                         std::string(text) + "'");
    }
    std::vector<double> out;
    out.reserve(count);
    for (auto p : parts) out.push_back(parse_real(p));
    return out;
}

std::vector<Vector3> parse_vector_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::vector<Vector3> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (!have_header) {
            if (body != "x,y,z") {
                throw InputError("expected header 'x,y,z', got '" + std::string(body) + "'", line_no);
            }
            have_header = true;
            continue;
        }
        if (body.empty()) continue;
        try {
            const auto v = parse_reals(body, 3);
            rows.push_back({v[0], v[1], v[2]});
        } catch (const InputError& e) {
            throw InputError(e.what(), line_no);
        }
    }
    if (!have_header) throw InputError("missing header 'x,y,z'", 1);
    return rows;
}

std::vector<BatchRow> classify_rows(const CirculantMetric& m, const std::vector<Vector3>& vectors,
                                    const ToleranceConfig& tol) {
    std::vector<BatchRow> rows;
    rows.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        BatchRow row{i, vectors[i], std::nullopt, std::nullopt, "error:zero-vector"};
        if (!vectors[i].is_zero()) {
            const double c = cos_phi(m, vectors[i], tol);
            row.cos_phi = c;
            row.phi_rad = phi_from_cos(c);
            row.character = std::string(to_string(causal_character(m, vectors[i], tol)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_batch_report(const CirculantMetric& m, const ToleranceConfig& tol,
                                const std::vector<BatchRow>& rows) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["metric"] = {{"a", m.a()}, {"b", m.b()}};
    doc["tolerance"] = {{"eps_null", tol.eps_null}, {"eps_angle", tol.eps_angle}};
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["index"] = r.index;
        j["x"] = r.vector.x;
        j["y"] = r.vector.y;
        j["z"] = r.vector.z;
        j["cos_phi"] = r.cos_phi ? ordered_json(*r.cos_phi) : ordered_json(nullptr);
        j["phi_rad"] = r.phi_rad ? ordered_json(*r.phi_rad) : ordered_json(nullptr);
        j["character"] = r.character;
        arr.push_back(std::move(j));
    }
    doc["rows"] = std::move(arr);
    return doc.dump(2) + "\n";
}

namespace {

int cmd_classify(const std::string& metric, const std::string& vector, std::optional<double> eps,
                 std::ostream& out) {
    const CirculantMetric m = parse_metric(metric);
    const auto xyz = parse_reals(vector, 3);
    const Vector3 u{xyz[0], xyz[1], xyz[2]};
    const ToleranceConfig tol = tolerance_from(eps);
    const double c = cos_phi(m, u, tol);
    out << "character=" << to_string(causal_character(m, u, tol)) << " cos_phi=" << format_number(c)
        << " phi_rad=" << format_number(phi_from_cos(c)) << " f_uu=" << format_number(f_inner(m, u, u)) << '\n';
    return kExitOk;
}

int cmd_classify_batch(const std::string& metric, const std::string& input, const std::string& output,
                       std::optional<double> eps, std::ostream& out) {
    const CirculantMetric m = parse_metric(metric);
    const ToleranceConfig tol = tolerance_from(eps);
    std::ifstream in(input, std::ios::binary);
    if (!in) throw InputError("cannot open input file '" + input + "'");
    const auto rows = classify_rows(m, parse_vector_csv(in), tol);
    std::ofstream os(output, std::ios::binary | std::ios::trunc);
    if (!os) throw InputError("cannot open output file '" + output + "'");
    os << render_batch_report(m, tol, rows);
    if (!os.flush()) throw InputError("failed writing '" + output + "'");
    out << "rows=" << rows.size() << " output=" << output << '\n';
    return kExitOk;
}

int cmd_qbasis(const std::string& metric, std::ostream& out) {
    const CirculantMetric m = parse_metric(metric);
    const QBasis basis = orthonormal_q_basis(m);
    const double residual = gram_residual(m, basis);
    out << "u=" << format_vector(basis.u) << '\n'
        << "qu=" << format_vector(basis.qu) << '\n'
        << "q2u=" << format_vector(basis.q2u) << '\n'
        << "gram_residual=" << format_number(residual) << '\n';
    return residual <= 1e-10 ? kExitOk : kExitCheckFailed;
}

int cmd_quadric(double r2, const std::optional<std::string>& mesh_path, const std::optional<std::string>& samples,
                std::optional<double> t_max, std::ostream& out) {
    if (!std::isfinite(r2)) throw InputError("--r2 must be finite");
    const QuadricSpec spec{r2};
    out << "class=" << to_string(classify_quadric(spec)) << '\n'
        << "equation=" << primed_equation(spec) << '\n'
        << "character=" << to_string(radius_vector_character(spec)) << '\n';
    if (!mesh_path) {
        if (samples || t_max) throw InputError("--samples and --t-max need --mesh");
        return kExitOk;
    }
    MeshOptions opts;
    if (samples) {
        const auto counts = parse_reals(*samples, 2);
        for (double c : counts) {
            if (c != std::floor(c) || c < 0.0 || c > 1e6) throw InputError("--samples needs two counts NS,NT");
        }
        opts.n_s = static_cast<int>(counts[0]);
        opts.n_theta = static_cast<int>(counts[1]);
    }
    opts.t_max = t_max;
    const auto vertices = sample_quadric(spec, opts);
    std::ofstream os(*mesh_path, std::ios::binary | std::ios::trunc);
    if (!os) throw InputError("cannot open mesh file '" + *mesh_path + "'");
    for (const auto& v : vertices) {
        os << "v " << format_number(v.x) << ' ' << format_number(v.y) << ' ' << format_number(v.z) << '\n';
    }
    if (!os.flush()) throw InputError("failed writing '" + *mesh_path + "'");
    out << "vertices=" << vertices.size() << '\n';
    return kExitOk;
}

int cmd_conic(std::optional<double> phi, std::optional<double> cos_value, double r2, std::optional<double> eps,
              std::ostream& out) {
    const ToleranceConfig tol = tolerance_from(eps);
    const ConicSpec spec = phi ? ConicSpec::from_phi(*phi, r2, tol) : ConicSpec{*cos_value, r2};
    spec.validate(tol);
    const ConicCoefficients k = conic_coefficients(spec, tol);
    const ConicClass cls = classify_conic(spec, tol);
    out << "cos_phi=" << format_number(spec.cos_phi) << '\n'
        << "phi_rad=" << format_number(phi_from_cos(spec.cos_phi)) << '\n'
        << "A=" << format_number(k.A) << '\n'
        << "B=" << format_number(k.B) << '\n'
        << "C=" << format_number(k.C) << '\n'
        << "rhs=" << format_number(k.rhs) << '\n'
        << "discriminant=" << format_number(discriminant(spec, tol)) << '\n'
        << "discriminant_printed=" << format_number(discriminant_printed_form(std::max(spec.cos_phi, -0.5))) << '\n'
        << "class=" << to_string(cls.kind) << '\n'
        << "equation=" << cls.equation << '\n';
    if (cls.circle_radius) out << "radius=" << format_number(*cls.circle_radius) << '\n';
    if (cls.line_offset) out << "line_offset=" << format_number(*cls.line_offset) << '\n';
    out << "extension=" << (cls.extension ? "true" : "false") << '\n';
    return kExitOk;
}

int cmd_intersect(std::ostream& out) {
    const CircleIntersection ring = cone_sphere_intersection();
    const auto heads = basis_heads_primed();
    out << "equation=x'^2+y'^2 = 2/3, z' = ±1/sqrt(3)\n"
        << "radius_sq=" << format_number(ring.radius_sq) << '\n'
        << "z_plus=" << format_number(ring.z_planes.first) << '\n'
        << "z_minus=" << format_number(ring.z_planes.second) << '\n'
        << "head_u=" << format_vector(heads[0]) << '\n'
        << "head_qu=" << format_vector(heads[1]) << '\n'
        << "head_q2u=" << format_vector(heads[2]) << '\n';
    return kExitOk;
}

int cmd_verify(std::uint64_t seed, std::size_t trials, std::ostream& out) {
    if (trials < 1) throw InputError("--trials must be at least 1");
    const auto reports = oracle::run_suite(seed, trials);
    out << oracle::render_reports(reports);
    return oracle::all_pass(reports) ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Circulant-structure geometry kernel: causal classification, f-spheres and f-circles", "circq"};
    app.require_subcommand(1);

    std::string metric;
    std::string vector;
    std::string input;
    std::string output;
    std::optional<double> eps;

    auto* classify = app.add_subcommand("classify", "Causal character of one vector");
    classify->add_option("--metric", metric, "Metric entries A,B of circ(A,B,B)")->required();
    classify->add_option("--vector", vector, "Vector X,Y,Z")->required();
    classify->add_option("--eps", eps, "Relative null band (default 1e-9)");

    auto* batch = app.add_subcommand("classify-batch", "Classify every row of an x,y,z CSV file");
    batch->add_option("--metric", metric, "Metric entries A,B of circ(A,B,B)")->required();
    batch->add_option("--input", input, "CSV file with header x,y,z")->required();
    batch->add_option("--output", output, "JSON report path")->required();
    batch->add_option("--eps", eps, "Relative null band (default 1e-9)");

    auto* qbasis = app.add_subcommand("qbasis", "Orthonormal q-basis of a metric");
    qbasis->add_option("--metric", metric, "Metric entries A,B of circ(A,B,B)")->required();

    double r2 = 0.0;
    std::optional<std::string> mesh_path;
    std::optional<std::string> samples;
    std::optional<double> t_max;
    auto* quadric = app.add_subcommand("quadric", "Surface traced by the f-sphere f(v,v) = r2");
    quadric->add_option("--r2", r2, "Sphere constant r^2 (any sign)")->required();
    quadric->add_option("--mesh", mesh_path, "Write OBJ-style vertex list to this file");
    quadric->add_option("--samples", samples, "Grid size NS,NT (default 32,64)");
    quadric->add_option("--t-max", t_max, "Radial extent of the mesh");

    std::optional<double> phi;
    std::optional<double> cos_value;
    double conic_r2 = 0.0;
    auto* conic = app.add_subcommand("conic", "Curve traced by the f-circle f(v,v) = r2 in span{u, qu}");
    auto* phi_opt = conic->add_option("--phi", phi, "Angle between u and qu, radians");
    auto* cos_opt = conic->add_option("--cos-phi", cos_value, "cos of the angle between u and qu");
    phi_opt->excludes(cos_opt);
    conic->add_option("--r2", conic_r2, "Circle constant r^2 (any sign)")->required();
    conic->add_option("--eps", eps, "Relative null band (default 1e-9)");

    auto* intersect = app.add_subcommand("intersect", "Circles where the null cone meets the unit sphere");

    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    auto* verify = app.add_subcommand("verify", "Run the seeded invariant suite");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--trials", trials, "Trials per invariant family");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(metric, vector, eps, out);
        if (batch->parsed()) return cmd_classify_batch(metric, input, output, eps, out);
        if (qbasis->parsed()) return cmd_qbasis(metric, out);
        if (quadric->parsed()) return cmd_quadric(r2, mesh_path, samples, t_max, out);
        if (conic->parsed()) {
            if (!phi && !cos_value) throw InputError("conic needs --phi or --cos-phi");
            return cmd_conic(phi, cos_value, conic_r2, eps, out);
        }
        if (intersect->parsed()) return cmd_intersect(out);
        if (verify->parsed()) return cmd_verify(seed, trials, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::InvariantViolation ? kExitCheckFailed : kExitUsage;
    }
    return kExitUsage;
}

} // namespace circq::cli
