#pragma once

#include <string>
#include <string_view>
#include <vector>

// Published numbers for the worked examples, embedded so that reproduction
// needs no data files. Items the solver contradicts are tagged as known
// discrepancies: they are reported with both numbers and never fail a run.
namespace wisealice::golden {

enum class Status { ExpectedMatch, KnownDiscrepancy };

struct GoldenItem {
    std::string key;
    Status status = Status::ExpectedMatch;
    std::vector<double> published;
    double tolerance = 0.0;
    std::string description;
};

struct GoldenRecord {
    std::string id;
    std::string title;
    std::vector<double> payoffs;   // a, b, c, d
    std::vector<double> thetas;    // theta_A, theta_B; empty for the classical record
    std::vector<GoldenItem> items;
};

/// Known example ids, in report order.
const std::vector<std::string>& example_ids();
/// Throws InputError for an unknown id.
const GoldenRecord& record(std::string_view id);

enum class Verdict { Match, Mismatch, KnownDiscrepancy };
std::string_view verdict_name(Verdict v);

struct ItemResult {
    GoldenItem item;
    std::vector<double> computed;
    bool within_tolerance = false;
    Verdict verdict = Verdict::Mismatch;
    std::string note;
};

struct Reproduction {
    const GoldenRecord* record = nullptr;
    std::vector<ItemResult> items;

    /// True iff every expected-match item is within tolerance.
    bool passed() const;
    std::string text() const;
};

Reproduction reproduce(std::string_view id);

/// Notes for known discrepancies when (payoffs, thetas) coincide with one of
/// the published quantum examples; empty otherwise.
std::vector<std::string> discrepancy_notes(const std::vector<double>& payoffs,
                                           const std::vector<double>& thetas);

} // namespace wisealice::golden
