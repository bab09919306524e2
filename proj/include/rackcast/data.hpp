#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rackcast {

/// One row of the knitwear sales schema: article and calendar identity,
/// promo flag, prices, regional weather, and the sold quantity.
struct SalesRecord {
    long long gan = 0;
    int year = 0;
    int month = 0;   // 1..12
    int week_no = 0; // opaque convention, see FeatureSpec
    bool promo_available = false;
    std::string range_id;
    std::string item_id;
    std::string fit_id;
    std::string listing_ind;
    std::string division;
    double avg_sell_price = 0.0;
    double original_price = 0.0;
    double min_temp = 0.0;
    double max_temp = 0.0;
    double hrs_sunshine = 0.0;
    double hrs_rainfall = 0.0;
    double hrs_snowfall = 0.0;
    double hrs_precipitation = 0.0;
    long long sales_qty = 0;

    bool operator==(const SalesRecord&) const = default;
};

struct Dataset {
    std::vector<SalesRecord> records;
    std::string provenance;

    bool operator==(const Dataset& o) const { return records == o.records; }
};

/// A quarantined input row: the raw text plus the reason it was rejected.
struct RejectedRow {
    std::size_t line_no = 0; // 1-based, header is line 1
    std::string raw;
    std::string reason;
};

/// Result of a parse: valid records plus the quarantine.
/// Conservation: rows_in == dataset.records.size() + rejects.size().
struct ParseResult {
    Dataset dataset;
    std::vector<RejectedRow> rejects;
    std::size_t rows_in = 0;
};

struct SyntheticConfig {
    std::uint64_t seed = 42;
    int n_items = 10;
    int n_weeks = 52;
    std::vector<std::string> divisions{"Central", "North", "South"};
    double intermittent_fraction = 0.2;
    double regime_mix = 0.5; // fraction of items linear in price; rest nonlinear in weather

    bool operator==(const SyntheticConfig&) const = default;
};

/// Parse a CSV file against the fixed sales schema. Header row mandatory;
/// header names matched case-insensitively, accepting both the original
/// spellings ("Divison", "HrsPercipitation") and corrected ones. Rows that
/// fail to parse or violate record invariants are quarantined, not dropped.
ParseResult parse_csv(const std::string& path);

/// Same contract, reading from an in-memory string (used by tests).
ParseResult parse_csv_text(const std::string& text, const std::string& provenance);

/// Write a dataset with corrected header spellings. Floats are rendered
/// with shortest round-trip precision so parse(write(d)) == d exactly.
void write_csv(const Dataset& dataset, const std::string& path);

/// Serialize the quarantine: original row text plus reason.
void write_rejects_csv(const std::vector<RejectedRow>& rejects, const std::string& path);

/// Deterministic synthetic sales generator; a pure function of the config.
/// Demand per (item, division, week) composes a base level, annual
/// sinusoidal seasonality, a x1.5 promo uplift, a negative temperature
/// effect, and noise. Items are split between a price-linear regime and a
/// weather-nonlinear regime by regime_mix; intermittent items draw zero
/// demand with probability 0.65 per week.
Dataset generate_synthetic(const SyntheticConfig& config);

/// The canonical output header, in schema order.
const std::vector<std::string>& schema_columns();

} // namespace rackcast
