// Command-line front end: verification runs, area tables, batch processing,
// Monte-Carlo oracle runs, the symbolic coefficient table, and figure output.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or domain error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricircle/tricircle.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tricircle;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

void require_legs(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0)
        throw DomainError("legs must be positive");
}

ordered_json report_json(const RightTriangle& tri, double theta_deg,
                         const VerificationReport& rep) {
    ordered_json doc;
    doc["tool_version"] = kVersion;
    doc["triangle"] = {{"a", tri.a}, {"b", tri.b}, {"c", tri.c}, {"theta_deg", theta_deg}};
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance}});
    doc["checks"] = checks;
    ordered_json estimates;
    for (const OracleEstimate& e : rep.estimates)
        estimates[std::string(region_name(e.region))] = {{"mean", e.mean},
                                                         {"std_error", e.std_error}};
    doc["oracle"] = {{"seed", rep.seed}, {"samples", rep.samples}, {"estimates", estimates}};
    doc["overall_pass"] = rep.all_pass();
    doc["notes"] = rep.notes;
    return doc;
}

int cmd_verify(double a, double b, std::uint64_t samples, std::uint64_t seed, double tol,
               const std::string& report_path) {
    require_legs(a, b);
    const RightTriangle tri = build_triangle(a, b);
    const ConstructionScene scene = construct_scene(tri);
    VerifyConfig config;
    config.samples = samples;
    config.seed = seed;
    config.tol_analytic = tol;
    const VerificationReport rep = verify_all(tri, config);

    std::printf("triangle  a=%s b=%s c=%s theta=%s\n", fixed6(tri.a).c_str(),
                fixed6(tri.b).c_str(), fixed6(tri.c).c_str(),
                fixed6(scene.theta_deg).c_str());
    for (const CheckResult& c : rep.checks)
        std::printf("  [%s] %-32s residual %s  tol %s\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), sci6(c.residual).c_str(), sci6(c.tolerance).c_str());
    for (const std::string& n : rep.notes) std::printf("  note: %s\n", n.c_str());
    std::printf("overall: %s (seed=%llu, samples=%llu)\n",
                rep.all_pass() ? "PASS" : "FAIL",
                static_cast<unsigned long long>(rep.seed),
                static_cast<unsigned long long>(rep.samples));

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::ios_base::failure("cannot open " + report_path);
        out << report_json(tri, scene.theta_deg, rep).dump(2) << "\n";
        if (!out.good()) throw std::ios_base::failure("write failed: " + report_path);
    }
    return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

int cmd_areas(double a, double b, const std::string& format) {
    require_legs(a, b);
    const RightTriangle tri = build_triangle(a, b);
    if (format == "json") {
        ordered_json doc;
        for (RegionId id : kAllRegionIds)
            doc[std::string(region_name(id))] = region_area(id, tri);
        std::printf("%s\n", doc.dump(2).c_str());
        return kExitOk;
    }
    for (RegionId id : kAllRegionIds) {
        const std::string value = fixed6(region_area(id, tri));
        if (format == "csv")
            std::printf("%s,%s\n", std::string(region_name(id)).c_str(), value.c_str());
        else
            std::printf("%-8s %12s\n", std::string(region_name(id)).c_str(), value.c_str());
    }
    return kExitOk;
}

int cmd_batch(const std::string& input_path, const std::string& output_path,
              std::uint64_t samples, std::uint64_t seed) {
    std::ifstream in(input_path);
    if (!in) throw std::ios_base::failure("cannot open " + input_path);
    const BatchParseResult parsed = parse_batch(in);
    for (const std::string& msg : parsed.messages)
        std::fprintf(stderr, "warning: %s\n", msg.c_str());
    if (parsed.warnings > 0)
        std::fprintf(stderr, "warning: skipped %zu row(s)\n", parsed.warnings);

    std::ofstream out(output_path);
    if (!out) throw std::ios_base::failure("cannot open " + output_path);
    out << "a,b,c,theta_deg,RA,RB,RC,RD,RE,RF,residual,pass\n";
    VerifyConfig config;
    config.samples = samples;
    config.seed = seed;
    for (const BatchRow& row : parsed.rows) {
        const RightTriangle tri = build_triangle(row.a, row.b);
        const ConstructionScene scene = construct_scene(tri);
        const VerificationReport rep = verify_all(tri, config);
        out << fixed6(tri.a) << "," << fixed6(tri.b) << "," << fixed6(tri.c) << ","
            << fixed6(scene.theta_deg);
        for (RegionId id : kSegmentIds) out << "," << fixed6(region_area(id, tri));
        out << "," << sci6(pythagoras_residual(tri.a, tri.b, tri.c)) << ","
            << (rep.all_pass() ? 1 : 0) << "\n";
    }
    if (!out.good()) throw std::ios_base::failure("write failed: " + output_path);
    return kExitOk;
}

int cmd_render(double a, double b, int figure, const std::string& out_path, int width,
               int decimals) {
    require_legs(a, b);
    RenderOptions opts;
    opts.width_px = width;
    opts.decimals = decimals;
    const std::string svg = render_figure(construct_scene(a, b), figure, opts);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + out_path);
    out << svg;
    if (!out.good()) throw std::ios_base::failure("write failed: " + out_path);
    return kExitOk;
}

int cmd_oracle(double a, double b, const std::string& region, std::uint64_t samples,
               std::uint64_t seed) {
    require_legs(a, b);
    RegionId id{};
    bool found = false;
    for (RegionId candidate : kChordRegionIds)
        if (region_name(candidate) == region) {
            id = candidate;
            found = true;
        }
    if (!found) throw DomainError("unknown region '" + region + "'");
    const ConstructionScene scene = construct_scene(a, b);
    const OracleEstimate est = mc_region_area(region_spec(id, scene), samples, seed);
    std::printf("region    %s\n", region.c_str());
    std::printf("samples   %llu\n", static_cast<unsigned long long>(est.samples));
    std::printf("seed      %llu\n", static_cast<unsigned long long>(est.seed));
    std::printf("mean      %s\n", fixed6(est.mean).c_str());
    std::printf("std_error %s\n", fixed6(est.std_error).c_str());
    std::printf("closed    %s\n", fixed6(region_area(id, scene.tri)).c_str());
    return kExitOk;
}

int cmd_ledger() {
    const auto print_row = [](const std::string& label, const SymbolicArea& e) {
        std::printf("%-14s", label.c_str());
        for (BasisTerm t : kBasisTerms) std::printf(" %6s", rational_str(e[t]).c_str());
        std::printf("\n");
    };
    std::printf("%-14s", "region");
    for (BasisTerm t : kBasisTerms)
        std::printf(" %6s", std::string(basis_name(t)).c_str());
    std::printf("\n");
    for (RegionId id : kAllRegionIds)
        print_row(std::string(region_name(id)), region_symbolic(id));
    print_row("DECOMPOSITION", decomposition_ledger());
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"Circle-segment decomposition verifier for right triangles"};
    app.require_subcommand(1);

    std::vector<double> legs;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string report_path, format = "table", input_path, output_path, region;
    int figure = 1, width = 800, decimals = 6;

    CLI::App* verify = app.add_subcommand("verify", "run every verification route");
    verify->add_option("--legs", legs, "triangle legs a b")->required()->expected(2);
    verify->add_option("--samples", samples, "Monte-Carlo samples");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--tol", tol, "analytic tolerance");
    verify->add_option("--report", report_path, "write JSON report here");

    CLI::App* areas = app.add_subcommand("areas", "print the region area table");
    areas->add_option("--legs", legs, "triangle legs a b")->required()->expected(2);
    areas->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* batch = app.add_subcommand("batch", "verify a CSV corpus");
    batch->add_option("--input", input_path, "input CSV (header a,b)")->required();
    batch->add_option("--output", output_path, "output CSV")->required();
    batch->add_option("--samples", samples, "Monte-Carlo samples per row");
    batch->add_option("--seed", seed, "PRNG seed");

    CLI::App* render = app.add_subcommand("render", "write one construction figure as SVG");
    render->add_option("--legs", legs, "triangle legs a b")->required()->expected(2);
    render->add_option("--figure", figure, "figure id 1..9")->required();
    render->add_option("--out", output_path, "output SVG path")->required();
    render->add_option("--width", width, "image width in px");
    render->add_option("--decimals", decimals, "coordinate decimals");

    CLI::App* oracle = app.add_subcommand("oracle", "Monte-Carlo estimate of one region");
    oracle->add_option("--legs", legs, "triangle legs a b")->required()->expected(2);
    oracle->add_option("--region", region, "RA..RF, SA, SB, or SC")->required();
    oracle->add_option("--samples", samples, "Monte-Carlo samples");
    oracle->add_option("--seed", seed, "PRNG seed");

    app.add_subcommand("ledger", "print the symbolic coefficient table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return kExitOk;
        }
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(legs[0], legs[1], samples, seed, tol, report_path);
        if (areas->parsed()) return cmd_areas(legs[0], legs[1], format);
        if (batch->parsed()) return cmd_batch(input_path, output_path, samples, seed);
        if (render->parsed())
            return cmd_render(legs[0], legs[1], figure, output_path, width, decimals);
        if (oracle->parsed()) return cmd_oracle(legs[0], legs[1], region, samples, seed);
        return cmd_ledger();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
