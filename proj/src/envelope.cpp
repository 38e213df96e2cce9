#include "exhauster/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exhauster/error.hpp"

namespace exh {

namespace {

// Roots closer than this to an arc end are treated as the end itself.
constexpr double kSplitEps = 1e-12;

struct Segment {
    double start;  // unwrapped, in [0, 4pi)
    double length;
    bool included;
};

// Collapses a circular run of segments into maximal arcs of included ones.
std::vector<Arc> merge_runs(const std::vector<Segment>& segs) {
    std::vector<Arc> out;
    if (segs.empty()) return out;
    if (std::all_of(segs.begin(), segs.end(), [](const Segment& s) { return s.included; })) {
        out.push_back(Arc::full(segs.front().start));
        return out;
    }
    std::vector<std::pair<double, double>> runs;  // start, length
    bool open = false;
    for (const auto& s : segs) {
        if (s.included) {
            if (open) {
                runs.back().second += s.length;
            } else {
                runs.emplace_back(s.start, s.length);
                open = true;
            }
        } else {
            open = false;
        }
    }
    if (runs.size() > 1 && segs.front().included && segs.back().included) {
        runs.back().second += runs.front().second;
        runs.erase(runs.begin());
    }
    for (const auto& [start, len] : runs) {
        if (len > 0.0) out.emplace_back(start, len);
    }
    return out;
}

// Offsets in (0, length) where the sinusoids cross, sorted.
std::vector<double> crossing_offsets(const Arc& arc, const Sinusoid& s1, const Sinusoid& s2) {
    std::vector<double> out;
    const auto hits = sinusoid_intersections(s1, s2);
    for (double r : hits.angles) {
        const double off = ccw_distance(arc.start(), r);
        if (off > kSplitEps && off < arc.length() - kSplitEps) out.push_back(off);
    }
    return out;
}

// Splits an arc at the given offsets (any order, may repeat).
std::vector<Arc> split_arc(const Arc& arc, std::vector<double> offsets) {
    std::sort(offsets.begin(), offsets.end());
    std::vector<Arc> out;
    double prev = 0.0;
    for (double off : offsets) {
        if (off - prev > kSplitEps && arc.length() - off > kSplitEps) {
            out.emplace_back(arc.start() + prev, off - prev);
            prev = off;
        }
    }
    out.emplace_back(arc.start() + prev, arc.length() - prev);
    return out;
}

std::vector<double> joint_breakpoints(const SupportCurve& f, const SupportCurve& g) {
    auto bp = f.breakpoints();
    const auto gb = g.breakpoints();
    bp.insert(bp.end(), gb.begin(), gb.end());
    return bp;
}

}  // namespace

IntersectionResult sinusoid_intersections(const Sinusoid& s1, const Sinusoid& s2) {
    const Sinusoid d = s1 - s2;
    const double rhs = -d.c;  // d.a cos + d.b sin = c2 - c1
    const double r = d.amplitude();
    IntersectionResult out;
    if (r < kTangencyTol) {
        out.identical = std::abs(rhs) < kTangencyTol;
        return out;
    }
    const double psi = d.phase();
    if (std::abs(r - std::abs(rhs)) <= kTangencyTol) {
        out.angles.push_back(normalize_angle((rhs > 0.0 ? 0.5 : -0.5) * kPi - psi));
        return out;
    }
    if (r < std::abs(rhs)) return out;
    const double s = std::asin(rhs / r);
    out.angles.push_back(normalize_angle(s - psi));
    out.angles.push_back(normalize_angle(kPi - s - psi));
    std::sort(out.angles.begin(), out.angles.end());
    return out;
}

Extremum difference_max(const Sinusoid& s1, const Sinusoid& s2, const Arc& arc) {
    const Sinusoid d = s1 - s2;
    Extremum best{d(arc.start()), arc.start()};
    auto consider = [&](double theta) {
        const double v = d(theta);
        if (v > best.value) best = {v, normalize_angle(theta)};
    };
    if (d.amplitude() >= kTangencyTol) {
        const double critical = normalize_angle(0.5 * kPi - d.phase());
        if (arc.contains_closed(critical)) consider(critical);
    }
    consider(arc.start() + arc.length());
    return best;
}

std::vector<Arc> dominance_arcs(const Sinusoid& s1, const Sinusoid& s2) {
    const SupportCurve f({{Arc::full(), s2, 0}});
    const SupportCurve g({{Arc::full(), s1, 0}});
    return superlevel_arcs(f, g, -kDefaultTol);
}

std::vector<Arc> elementary_arcs(std::vector<double> breakpoints) {
    for (auto& b : breakpoints) b = normalize_angle(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> uniq;
    for (double b : breakpoints) {
        if (uniq.empty() || b - uniq.back() > kSplitEps) uniq.push_back(b);
    }
    // 2pi - eps and 0 are the same breakpoint.
    while (uniq.size() > 1 && kTwoPi - uniq.back() + uniq.front() <= kSplitEps) uniq.pop_back();

    std::vector<Arc> out;
    if (uniq.empty()) {
        out.push_back(Arc::full(0.0));
        return out;
    }
    if (uniq.size() == 1) {
        out.push_back(Arc::full(uniq.front()));
        return out;
    }
    for (std::size_t i = 0; i + 1 < uniq.size(); ++i) out.emplace_back(uniq[i], uniq[i + 1] - uniq[i]);
    out.emplace_back(uniq.back(), kTwoPi - uniq.back() + uniq.front());
    return out;
}

Extremum max_difference(const SupportCurve& f, const SupportCurve& g, const Arc& arc) {
    std::vector<double> offsets;
    for (double b : joint_breakpoints(f, g)) {
        const double off = ccw_distance(arc.start(), b);
        if (off > 0.0 && off < arc.length()) offsets.push_back(off);
    }
    Extremum best{-std::numeric_limits<double>::infinity(), arc.start()};
    for (const Arc& sub : split_arc(arc, std::move(offsets))) {
        const double mid = sub.midpoint();
        const auto e = difference_max(f.pieces()[f.locate(mid)].sinusoid, g.pieces()[g.locate(mid)].sinusoid, sub);
        if (e.value > best.value) best = e;
    }
    return best;
}

Extremum max_difference(const SupportCurve& f, const SupportCurve& g) {
    return max_difference(f, g, Arc::full(0.0));
}

std::vector<Arc> superlevel_arcs(const SupportCurve& f, const SupportCurve& g, double level) {
    std::vector<Segment> segs;
    const Sinusoid threshold{0.0, 0.0, level};
    for (const Arc& e : elementary_arcs(joint_breakpoints(f, g))) {
        const double mid = e.midpoint();
        const Sinusoid d = f.pieces()[f.locate(mid)].sinusoid - g.pieces()[g.locate(mid)].sinusoid;
        for (const Arc& sub : split_arc(e, crossing_offsets(e, d, threshold))) {
            segs.push_back({sub.start() < e.start() ? sub.start() + kTwoPi : sub.start(), sub.length(),
                            d(sub.midpoint()) >= level});
        }
    }
    return merge_runs(segs);
}

Envelope::Envelope(SupportCurve curve, std::vector<std::vector<std::size_t>> attaining)
    : curve_(std::move(curve)), attaining_(std::move(attaining)) {
    if (attaining_.size() != curve_.size()) throw ValidationError("envelope: attaining sets do not match pieces");
}

std::vector<Arc> Envelope::contact_arcs(std::size_t body) const {
    std::vector<Segment> segs;
    for (std::size_t k = 0; k < curve_.size(); ++k) {
        const auto& arc = curve_.pieces()[k].arc;
        const auto& att = attaining_[k];
        segs.push_back({arc.start(), arc.length(), std::find(att.begin(), att.end(), body) != att.end()});
    }
    return merge_runs(segs);
}

Envelope lower_envelope(std::span<const SupportCurve> curves, double tol) {
    if (curves.empty()) throw ValidationError("lower_envelope needs at least one curve");
    const std::size_t n = curves.size();

    std::vector<double> bps;
    for (const auto& c : curves) {
        const auto b = c.breakpoints();
        bps.insert(bps.end(), b.begin(), b.end());
    }

    struct Raw {
        Arc arc;
        Sinusoid sinusoid;
        std::size_t winner;
        std::vector<std::size_t> attaining;
    };
    std::vector<Raw> raw;
    std::vector<Sinusoid> active(n);
    std::vector<double> values(n);

    for (const Arc& e : elementary_arcs(std::move(bps))) {
        const double mid = e.midpoint();
        for (std::size_t j = 0; j < n; ++j) active[j] = curves[j].pieces()[curves[j].locate(mid)].sinusoid;

        std::vector<double> offsets;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = j + 1; l < n; ++l) {
                if (active[j] == active[l]) continue;
                const auto hits = crossing_offsets(e, active[j], active[l]);
                offsets.insert(offsets.end(), hits.begin(), hits.end());
            }
        }
        for (const Arc& sub : split_arc(e, std::move(offsets))) {
            const double m = sub.midpoint();
            std::size_t winner = 0;
            for (std::size_t j = 0; j < n; ++j) {
                values[j] = active[j](m);
                if (values[j] < values[winner]) winner = j;
            }
            std::vector<std::size_t> att;
            for (std::size_t j = 0; j < n; ++j) {
                if (values[j] <= values[winner] + tol) att.push_back(j);
            }
            raw.push_back({sub, active[winner], winner, std::move(att)});
        }
    }

    // Merge neighbours that agree on both the winning sinusoid and the attaining set.
    auto same = [](const Raw& l, const Raw& r) { return l.sinusoid == r.sinusoid && l.attaining == r.attaining; };
    std::vector<Raw> merged;
    for (auto& r : raw) {
        if (!merged.empty() && same(merged.back(), r)) {
            auto& m = merged.back();
            m.arc = Arc(m.arc.start(), m.arc.length() + r.arc.length());
        } else {
            merged.push_back(std::move(r));
        }
    }
    if (merged.size() > 1 && same(merged.back(), merged.front())) {
        auto& last = merged.back();
        last.arc = Arc(last.arc.start(), last.arc.length() + merged.front().arc.length());
        merged.erase(merged.begin());
    }
    if (merged.size() == 1) merged.front().arc = Arc::full(merged.front().arc.start());
    // SupportCurve sorts its pieces by start; keep the attaining sets aligned.
    std::sort(merged.begin(), merged.end(), [](const Raw& l, const Raw& r) { return l.arc.start() < r.arc.start(); });

    std::vector<CurvePiece> pieces;
    std::vector<std::vector<std::size_t>> attaining;
    pieces.reserve(merged.size());
    attaining.reserve(merged.size());
    for (auto& m : merged) {
        pieces.push_back({m.arc, m.sinusoid, static_cast<int>(m.winner)});
        attaining.push_back(std::move(m.attaining));
    }
    return Envelope(SupportCurve(std::move(pieces)), std::move(attaining));
}

}  // namespace exh
