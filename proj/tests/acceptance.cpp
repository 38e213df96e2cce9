// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "exhauster/cli.hpp"
#include "exhauster/document.hpp"
#include "exhauster/reduction.hpp"
#include "oracle.hpp"

using namespace exh;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s %2d %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
}

std::string fixture(const char* name) { return std::string(EXH_FIXTURES) + "/" + name; }

std::string fmt(double v) { return format_real(v); }

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<std::string> labels(const Exhauster& ex) {
    std::vector<std::string> out;
    for (const auto& b : ex.bodies()) out.push_back(b.label());
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1() {
    const std::vector<Point2> pts{{1, 1}, {2, 1}, {2, 2}, {1, 2}};
    const auto t0 = std::chrono::steady_clock::now();
    const auto curve = support_curve(ConvexBody::polygon(pts));
    const double rho = curve(0.0);
    const double dt = seconds_since(t0);
    const bool ok = std::abs(rho - 2.0) <= 1e-12 && dt < 1e-3;
    report(1, ok, "Example 1 support evaluation", "rho(0)=" + fmt(rho) + ", " + fixed(dt * 1e6, 1) + " us");
}

void criterion2() {
    const auto curve = support_curve(load_exhauster(fixture("square.json"))[0]);
    const auto bp = curve.breakpoints();
    const double stated[] = {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4};
    bool pieces = curve.size() == 4;
    bool angles = bp.size() == 4;
    for (std::size_t k = 0; angles && k < 4; ++k) angles = std::abs(bp[k] - stated[k]) <= 1e-9;
    bool edges = true;
    for (double t : {0.0, kPi / 2, kPi, 3 * kPi / 2}) edges = edges && std::abs(curve(t) - 1.0) <= 1e-9;
    std::string got;
    for (double b : bp) got += (got.empty() ? "" : ",") + fmt(b / kPi) + "pi";
    report(2, pieces && angles && edges, "square support curve: 4 pieces, breakpoints at odd multiples of pi/4, rho=1 on edges",
           "pieces=" + std::to_string(curve.size()) + ", breakpoints={" + got + "}, edge values " +
               (edges ? "ok" : "wrong"));
}

void criterion3() {
    const auto ex = load_exhauster(fixture("counterexample.json"));
    const double h = evaluate_h(ex, {1, 1});
    const auto cut = intersect_polygons(ex[0], ex[1]);
    const double hc = cut ? support_value(*cut, Point2{1, 1}) : NAN;
    const bool ok = std::abs(h - 6.0) <= 1e-9 && std::abs(hc - 5.5) <= 1e-9;
    report(3, ok, "intersection counterexample", "h(1,1)=" + fmt(h) + ", H(C1 cap C2,(1,1))=" + fmt(hc));
}

void criterion4() {
    const auto ex = load_exhauster(fixture("example2.json"));
    const bool strict = check_strict_dominance(ex, 0);
    const auto r = reduce(ex);
    std::vector<std::string> removed;
    for (const auto& rm : r.log) removed.push_back(rm.label);
    const bool ok = strict && removed == std::vector<std::string>{"C0"} &&
                    labels(r.reduced) == std::vector<std::string>{"C1", "C2", "C3", "C4"};
    report(4, ok, "Example 2: reduce removes exactly C0, keeps {C1,C2,C3,C4}; C0 strictly dominated",
           std::string("strict(C0)=") + (strict ? "true" : "false") + ", removed=" + join(removed) +
               ", kept=" + join(labels(r.reduced)));
}

void criterion5() {
    const auto ex = load_exhauster(fixture("example3.json"));
    const double t1 = kPi - std::atan(0.5), t2 = kTwoPi - std::atan(2.0);

    // Grid oracle: sign changes of rho_C1 - rho_C2 on 1e6 points.
    constexpr std::size_t n = 1000000;
    const auto grid = oracle::support_grid(ex, n);
    std::vector<double> crossings;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = (k + 1) % n;
        const double a = grid[1][k] - grid[2][k], b = grid[1][j] - grid[2][j];
        if ((a < 0) != (b < 0)) crossings.push_back(kTwoPi * (k + 0.5) / n);
    }
    const bool oracle_ok = crossings.size() == 2 && std::abs(crossings[0] - t1) <= 1e-5 &&
                           std::abs(crossings[1] - t2) <= 1e-5;

    const auto r = reduce(ex);
    bool cert_ok = false;
    std::string got;
    if (r.log.size() == 1 && r.log[0].label == "C0") {
        const auto& part = r.log[0].certificate.partition;
        std::vector<double> cuts;
        for (std::size_t k = 1; k < part.size(); ++k) cuts.push_back(part[k].arc.start());
        for (double c : cuts) got += (got.empty() ? "" : ",") + fmt(c);
        cert_ok = cuts.size() == 2 && std::abs(cuts[0] - t1) <= 1e-6 && std::abs(cuts[1] - t2) <= 1e-6;
    }
    const bool kept = labels(r.reduced) == std::vector<std::string>{"C1", "C2"};
    report(5, oracle_ok && cert_ok && kept, "Example 3: reduce -> {C1,C2}, partition angles pi-atan(1/2), 2pi-atan(2)",
           "kept=" + join(labels(r.reduced)) + ", certificate cuts={" + got + "}, grid crossings " +
               (oracle_ok ? "agree" : "disagree"));
}

void criterion6() {
    const std::string path = fixture("example4.json");
    std::ostringstream out, err;
    const int code = run_command({"minimal", path}, out, err);

    const auto ex = load_exhauster(path);
    const auto report6 = check_minimal(ex);
    // Quarter q (starting at q*pi/2) belongs to: C2, C3, C4, C1.
    const std::size_t owner_of_quarter[] = {1, 2, 3, 0};
    bool arcs_ok = report6.bodies.size() == 4;
    double total = 0.0;
    for (std::size_t q = 0; arcs_ok && q < 4; ++q) {
        const auto& c = report6.bodies[owner_of_quarter[q]].contact;
        arcs_ok = c && std::abs(c->length() - kPi / 2) <= 1e-6 &&
                  std::abs(std::remainder(c->start() - q * kPi / 2, kTwoPi)) <= 1e-6;
        if (c) total += c->length();
    }
    const bool tiles = std::abs(total - kTwoPi) <= 4e-6;
    const auto r = reduce(ex);
    const bool identity = r.log.empty() && labels(r.reduced) == labels(ex);
    report(6, code == 0 && arcs_ok && tiles && identity, "Example 4: minimal, quarter contact arcs C2,C3,C4,C1, reduce is identity",
           "minimal exit=" + std::to_string(code) + ", arcs " + (arcs_ok ? "ok" : "wrong") + ", total=" + fmt(total) +
               ", reduce " + (identity ? "identity" : "changed"));
}

void criterion7() {
    const auto ex = load_exhauster(fixture("example5_16.json"));
    bool curves_ok = ex.size() == 16;
    for (std::size_t k = 0; curves_ok && k < 16; ++k) {
        const double alpha = kTwoPi * k / 16;
        const auto curve = support_curve(ex[k]);
        for (int s = 0; s < 1000 && curves_ok; ++s) {
            const double t = kTwoPi * s / 1000;
            curves_ok = std::abs(curve(t) - (std::cos(t - alpha) + 1.0)) <= 1e-12;
        }
        const auto zeros = sinusoid_intersections(curve.pieces()[0].sinusoid, {0, 0, 0});
        curves_ok = curves_ok && !zeros.identical && zeros.angles.size() == 1;
    }
    std::size_t retained = 0;
    for (std::size_t k = 0; k < ex.size(); ++k) retained += retention_certificate(ex, k).has_value();
    report(7, curves_ok && retained == 16, "Example 5: 16 tangent discs, one zero each, every disc retained",
           "curves " + std::string(curves_ok ? "ok" : "wrong") + ", retained " + std::to_string(retained) + "/16");
}

void criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    std::size_t checks = 0, disagreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto ex = oracle::random_exhauster(rng, 2, 6, 8);
        const auto grid = oracle::support_grid(ex, 100000);
        for (std::size_t i = 0; i < ex.size(); ++i) {
            const bool exact = std::holds_alternative<DiscardCertificate>(is_discardable(ex, i, 1e-9));
            const bool sampled = oracle::grid_gap(grid, i) <= 1e-9 + 1e-7;
            ++checks;
            disagreements += exact != sampled;
        }
    }
    const double dt = seconds_since(t0);
    report(8, disagreements == 0 && dt < 60.0, "oracle equivalence on 200 random exhausters",
           std::to_string(disagreements) + " disagreements in " + std::to_string(checks) + " checks, " + fixed(dt, 2) + " s");
}

void criterion9() {
    std::vector<Exhauster> families;
    for (const char* f : {"counterexample.json", "example2.json", "example3.json", "example4.json", "square.json",
                          "example5_16.json"}) {
        families.push_back(load_exhauster(fixture(f)));
    }
    const std::size_t n_fixtures = families.size();
    std::mt19937_64 rng(99);
    for (int k = 0; k < 20; ++k) families.push_back(oracle::random_exhauster(rng, 2, 6, 8));

    std::uniform_real_distribution<double> ang(0, kTwoPi);
    double worst = 0.0;
    bool idempotent = true;
    for (std::size_t f = 0; f < families.size(); ++f) {
        const auto r = reduce(families[f]);
        for (int k = 0; k < 10000; ++k) {
            const auto u = Direction(ang(rng)).unit();
            worst = std::max(worst, std::abs(evaluate_h(r.reduced, u) - evaluate_h(families[f], u)));
        }
        if (f < n_fixtures) idempotent = idempotent && reduce(r.reduced).log.empty();
    }
    report(9, worst <= 1e-8 && idempotent, "reduce preserves h and is idempotent on fixtures",
           "max |h_reduced - h| = " + fmt(worst) + ", idempotent " + (idempotent ? "yes" : "no"));
}

void criterion10() {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> coord(-5, 5), lam(0, 100);
    double worst = 0.0;  // ratio to the allowed bound
    for (int k = 0; k < 1000; ++k) {
        const auto ex = oracle::random_exhauster(rng, 1, 6, 8);
        const Point2 g{coord(rng), coord(rng)};
        const double l = k % 10 == 0 ? 0.0 : lam(rng);
        const double lhs = std::abs(evaluate_h(ex, {l * g.x, l * g.y}) - l * evaluate_h(ex, g));
        worst = std::max(worst, lhs / (1e-9 * (1 + l * std::hypot(g.x, g.y))));
    }
    report(10, worst <= 1.0, "positive homogeneity on 1000 triples", "worst error/bound = " + fmt(worst));
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
        criterion10();
    } catch (const std::exception& e) {
        std::printf("FAIL    aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
