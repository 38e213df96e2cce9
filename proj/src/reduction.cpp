#include "exhauster/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exhauster/error.hpp"

namespace exh {

namespace {

constexpr std::size_t kVerifyDirections = 10000;
// Evaluation noise allowed when re-checking a certificate; contact arcs end
// exactly where the gap reaches tol.
constexpr double kCheckSlack = 1e-12;

struct Rest {
    Envelope envelope;
    std::vector<std::size_t> index;  // rest position -> exhauster index
};

Rest rest_envelope(const std::vector<SupportCurve>& curves, std::size_t i, double tol) {
    std::vector<SupportCurve> others;
    std::vector<std::size_t> index;
    for (std::size_t j = 0; j < curves.size(); ++j) {
        if (j == i) continue;
        others.push_back(curves[j]);
        index.push_back(j);
    }
    return {lower_envelope(others, tol), std::move(index)};
}

bool holds(const std::vector<std::size_t>& set, std::size_t v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

// Reads a [0, 2pi] partition off the rest-envelope pieces. A witness is kept
// across pieces for as long as it keeps attaining the rest envelope.
std::vector<WitnessInterval> partition_from(const Exhauster& ex, const Rest& rest) {
    struct Span {
        double lo, hi;
        std::size_t piece;
    };
    std::vector<Span> spans;
    const auto& pieces = rest.envelope.curve().pieces();
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const Arc& a = pieces[k].arc;
        if (a.is_full()) {
            spans.push_back({0.0, kTwoPi, k});
        } else if (a.wraps()) {
            spans.push_back({a.start(), kTwoPi, k});
            spans.push_back({0.0, a.start() + a.length() - kTwoPi, k});
        } else {
            spans.push_back({a.start(), a.start() + a.length(), k});
        }
    }
    std::sort(spans.begin(), spans.end(), [](const Span& l, const Span& r) { return l.lo < r.lo; });

    std::vector<WitnessInterval> out;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t witness = 0;  // rest position
    bool open = false;
    for (const auto& s : spans) {
        if (s.hi - s.lo <= 0.0) continue;
        const auto& att = rest.envelope.attaining(s.piece);
        if (open && holds(att, witness)) {
            hi = s.hi;
            continue;
        }
        if (open) {
            const std::size_t w = rest.index[witness];
            out.push_back({Arc(lo, hi - lo), w, ex[w].label()});
        }
        lo = open ? hi : 0.0;
        hi = s.hi;
        witness = rest.envelope.winner(s.piece);
        open = true;
    }
    const std::size_t w = rest.index[witness];
    out.push_back({Arc(lo, kTwoPi - lo), w, ex[w].label()});
    return out;
}

// Longest arc where body i attains h and is somewhere strictly below the rest.
std::optional<RetentionCertificate> retention_from(const SupportCurve& own, const Rest& rest, std::size_t i,
                                                   double tol) {
    const SupportCurve& others = rest.envelope.curve();
    std::optional<RetentionCertificate> best;
    for (const Arc& contact : superlevel_arcs(others, own, -tol)) {
        const Extremum peak = max_difference(others, own, contact);
        if (!(peak.value > tol)) continue;
        if (best && best->contact.length() >= contact.length()) continue;
        const double margin = -max_difference(own, others, contact).value;
        best = RetentionCertificate{i, contact, margin, peak.theta, peak.value};
    }
    return best;
}

DiscardCertificate superset_certificate(const Exhauster& ex, const std::vector<SupportCurve>& curves,
                                        std::size_t outer, std::size_t inner) {
    const double gap = max_difference(curves[inner], curves[outer]).value;
    return {outer, DiscardMode::single_superset, {{Arc::full(0.0), inner, ex[inner].label()}}, gap};
}

}  // namespace

const char* to_string(DiscardMode mode) {
    switch (mode) {
        case DiscardMode::strict_dominance: return "strict-dominance";
        case DiscardMode::single_superset: return "single-superset";
        case DiscardMode::partition: return "partition";
    }
    return "?";
}

double evaluate_h(const Exhauster& ex, const Point2& g) {
    if (g.x == 0.0 && g.y == 0.0) return 0.0;
    double h = std::numeric_limits<double>::infinity();
    for (const auto& body : ex.bodies()) h = std::min(h, support_value(body, g));
    return h;
}

std::vector<SupportCurve> support_curves(const Exhauster& ex) {
    std::vector<SupportCurve> out;
    out.reserve(ex.size());
    for (const auto& body : ex.bodies()) out.push_back(support_curve(body));
    return out;
}

DiscardResult is_discardable(const Exhauster& ex, std::size_t i, double tol) {
    ex.at(i);
    if (ex.size() < 2) throw CannotDiscardLastError();
    const auto curves = support_curves(ex);
    const Rest rest = rest_envelope(curves, i, tol);
    const Extremum worst = max_difference(rest.envelope.curve(), curves[i]);

    if (worst.value <= tol) {
        auto partition = partition_from(ex, rest);
        DiscardMode mode = DiscardMode::partition;
        if (worst.value < -tol) {
            mode = DiscardMode::strict_dominance;
        } else if (partition.size() == 1) {
            mode = DiscardMode::single_superset;
        }
        return DiscardCertificate{i, mode, std::move(partition), worst.value};
    }
    if (auto cert = retention_from(curves[i], rest, i, tol)) return *cert;
    // The strict region is too thin for the arc solver to resolve; report the worst point.
    const Arc pinpoint(worst.theta - 1e-12, 2e-12);
    return RetentionCertificate{i, pinpoint, -tol, worst.theta, worst.value};
}

bool check_strict_dominance(const Exhauster& ex, std::size_t i, double tol) {
    ex.at(i);
    if (ex.size() < 2) return false;
    const auto curves = support_curves(ex);
    const Envelope env = lower_envelope(curves, tol);
    // min(rho_i - rho) = -max(rho - rho_i)
    return -max_difference(env.curve(), curves[i]).value > tol;
}

std::optional<std::size_t> find_dominating_subset(const Exhauster& ex, std::size_t i, double tol) {
    const auto& outer = ex.at(i);
    for (std::size_t j = 0; j < ex.size(); ++j) {
        if (j != i && contains(outer, ex[j], tol)) return j;
    }
    return std::nullopt;
}

std::optional<DiscardCertificate> partition_certificate(const Exhauster& ex, std::size_t i, double tol) {
    auto r = is_discardable(ex, i, tol);
    if (auto* cert = std::get_if<DiscardCertificate>(&r)) return std::move(*cert);
    return std::nullopt;
}

std::optional<RetentionCertificate> retention_certificate(const Exhauster& ex, std::size_t i, double tol,
                                                          double delta_min) {
    const auto& body = ex.at(i);
    for (std::size_t j = 0; j < ex.size(); ++j) {
        if (j != i && contains(body, ex[j], tol) && !contains(ex[j], body, tol)) throw SubsetPresentError(i, j);
    }
    if (ex.size() == 1) {
        const double inf = std::numeric_limits<double>::infinity();
        return RetentionCertificate{i, Arc::full(0.0), inf, 0.0, inf};
    }
    const auto curves = support_curves(ex);
    auto cert = retention_from(curves[i], rest_envelope(curves, i, tol), i, tol);
    if (cert && cert->contact.length() >= delta_min) return cert;
    return std::nullopt;
}

MinimalityReport check_minimal(const Exhauster& ex, double tol, double delta_min) {
    MinimalityReport report;
    const auto curves = support_curves(ex);
    const std::size_t n = ex.size();

    std::vector<std::optional<std::size_t>> subset_of(n);
    for (std::size_t outer = 0; outer < n; ++outer) {
        for (std::size_t inner = 0; inner < n; ++inner) {
            if (inner == outer) continue;
            if (max_difference(curves[inner], curves[outer]).value <= tol) {
                report.containment_violations.emplace_back(inner, outer);
                if (!subset_of[outer]) subset_of[outer] = inner;
            }
        }
    }

    bool all_kept = true;
    for (std::size_t i = 0; i < n; ++i) {
        BodyStatus status{i, std::nullopt, std::nullopt};
        if (subset_of[i]) {
            status.discard = superset_certificate(ex, curves, i, *subset_of[i]);
        } else if (n == 1) {
            status.contact = Arc::full(0.0);
        } else {
            auto r = is_discardable(ex, i, tol);
            if (auto* cert = std::get_if<DiscardCertificate>(&r)) {
                status.discard = std::move(*cert);
            } else {
                const auto& keep = std::get<RetentionCertificate>(r);
                if (keep.contact.length() >= delta_min) status.contact = keep.contact;
            }
        }
        all_kept = all_kept && status.contact.has_value();
        report.bodies.push_back(std::move(status));
    }
    report.minimal = all_kept && report.containment_violations.empty();
    return report;
}

ReductionResult reduce(const Exhauster& ex, double tol, double delta_min) {
    Exhauster current = ex;
    std::vector<std::size_t> original(ex.size());
    for (std::size_t i = 0; i < original.size(); ++i) original[i] = i;
    std::vector<Removal> log;

    auto remove = [&](std::size_t i, DiscardCertificate cert) {
        log.push_back({current[i].label(), original[i], std::move(cert)});
        current = current.without(i);
        original.erase(original.begin() + static_cast<std::ptrdiff_t>(i));
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < current.size() && current.size() > 1; ++i) {
            if (auto j = find_dominating_subset(current, i, tol)) {
                remove(i, superset_certificate(current, support_curves(current), i, *j));
                changed = true;
                break;
            }
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < current.size() && current.size() > 1; ++i) {
            auto r = is_discardable(current, i, tol);
            if (auto* cert = std::get_if<DiscardCertificate>(&r)) {
                remove(i, std::move(*cert));
                changed = true;
                break;
            }
        }
    }

    double deviation = 0.0;
    for (std::size_t k = 0; k < kVerifyDirections; ++k) {
        const Direction d(kTwoPi * static_cast<double>(k) / kVerifyDirections);
        deviation = std::max(deviation, std::abs(evaluate_h(current, d.unit()) - evaluate_h(ex, d.unit())));
    }
    auto report = check_minimal(current, tol, delta_min);
    return {std::move(current), std::move(log), deviation, std::move(report)};
}

bool validate(const Exhauster& ex, const DiscardCertificate& cert, double tol) {
    if (cert.body >= ex.size() || cert.partition.empty()) return false;
    const auto curves = support_curves(ex);
    double cursor = 0.0;
    for (const auto& iv : cert.partition) {
        if (iv.witness >= ex.size() || iv.witness == cert.body) return false;
        if (std::abs(iv.arc.start() - normalize_angle(cursor)) > 1e-9) return false;
        cursor += iv.arc.length();
        if (max_difference(curves[iv.witness], curves[cert.body], iv.arc).value > tol + kCheckSlack) return false;
    }
    return std::abs(cursor - kTwoPi) <= 1e-9;
}

bool validate(const Exhauster& ex, const RetentionCertificate& cert, double tol) {
    if (cert.body >= ex.size()) return false;
    if (ex.size() == 1) return true;
    const auto curves = support_curves(ex);
    const Rest rest = rest_envelope(curves, cert.body, tol);
    const SupportCurve& others = rest.envelope.curve();
    const SupportCurve& own = curves[cert.body];
    if (max_difference(own, others, cert.contact).value > tol + kCheckSlack) return false;
    if (!cert.contact.contains_closed(cert.witness_theta, 1e-12)) return false;
    return others(cert.witness_theta) - own(cert.witness_theta) > tol;
}

}  // namespace exh
