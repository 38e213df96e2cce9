#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exhauster/angle.hpp"
#include "exhauster/envelope.hpp"
#include "exhauster/geometry.hpp"
#include "exhauster/support.hpp"

namespace exh {

enum class DiscardMode { strict_dominance, single_superset, partition };

const char* to_string(DiscardMode mode);

struct WitnessInterval {
    Arc arc;
    std::size_t witness;  // body index in the exhauster the certificate was computed for
    std::string witness_label;
};

/// Proof that a body can be removed: on each interval B_j of a partition of
/// [0, 2pi] some other body C_j satisfies rho_{C_j} <= rho_{C0} + tol.
/// Intervals are listed in order starting at 0 and ending at 2pi.
struct DiscardCertificate {
    std::size_t body;
    DiscardMode mode;
    std::vector<WitnessInterval> partition;
    // max over the circle of rho_rest - rho_body (<= tol).
    double worst_gap;
};

/// Proof that a body cannot be removed: on `contact` the body attains the
/// envelope (rho_body <= rho_rest + tol) and at `witness_theta` it is strictly
/// below every other body, by `witness_gap` > tol.
struct RetentionCertificate {
    std::size_t body;
    Arc contact;
    // min over the contact arc of rho_rest - rho_body (>= -tol).
    double margin;
    double witness_theta;
    double witness_gap;
};

using DiscardResult = std::variant<DiscardCertificate, RetentionCertificate>;

struct BodyStatus {
    std::size_t body;
    std::optional<Arc> contact;                   // kept
    std::optional<DiscardCertificate> discard;    // removable
};

struct MinimalityReport {
    std::vector<BodyStatus> bodies;
    // (inner, outer) index pairs with inner ⊆ outer.
    std::vector<std::pair<std::size_t, std::size_t>> containment_violations;
    bool minimal = false;
};

struct Removal {
    std::string label;
    std::size_t original_index;
    DiscardCertificate certificate;
};

struct ReductionResult {
    Exhauster reduced;
    std::vector<Removal> log;
    // max |h_reduced - h_original| over a 1e4-direction grid.
    double max_deviation;
    MinimalityReport report;
};

// h(g) = min over bodies of H(C, g).
double evaluate_h(const Exhauster& ex, const Point2& g);

std::vector<SupportCurve> support_curves(const Exhauster& ex);

/// Body i is discardable iff rho_rest <= rho_i + tol on the whole circle,
/// where rho_rest is the envelope of the other bodies.
/// Throws CannotDiscardLastError for a single-body exhauster.
DiscardResult is_discardable(const Exhauster& ex, std::size_t i, double tol = kDefaultTol);

// rho_i exceeds the full envelope by more than tol everywhere.
bool check_strict_dominance(const Exhauster& ex, std::size_t i, double tol = kDefaultTol);

// Lowest j != i with C_j ⊆ C_i.
std::optional<std::size_t> find_dominating_subset(const Exhauster& ex, std::size_t i, double tol = kDefaultTol);

std::optional<DiscardCertificate> partition_certificate(const Exhauster& ex, std::size_t i, double tol = kDefaultTol);

/// Contact arc of length >= delta_min on which body i alone realizes h.
/// Throws SubsetPresentError if another member is a proper subset of body i.
std::optional<RetentionCertificate> retention_certificate(const Exhauster& ex, std::size_t i,
                                                          double tol = kDefaultTol,
                                                          double delta_min = kDefaultDeltaMin);

MinimalityReport check_minimal(const Exhauster& ex, double tol = kDefaultTol, double delta_min = kDefaultDeltaMin);

/// Greedy reduction: supersets first, then repeated discard scans in
/// ascending index order against the current family.
ReductionResult reduce(const Exhauster& ex, double tol = kDefaultTol, double delta_min = kDefaultDeltaMin);

// Re-checks every interval with exact differences.
bool validate(const Exhauster& ex, const DiscardCertificate& cert, double tol = kDefaultTol);
bool validate(const Exhauster& ex, const RetentionCertificate& cert, double tol = kDefaultTol);

}  // namespace exh
