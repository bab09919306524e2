#pragma once

#include "rackcast/data.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rackcast {

/// Which source fields become model features and how series are grouped
/// for lag computation.
struct FeatureSpec {
    std::vector<std::string> numeric_columns{
        "month",       "week_of_year", "avg_sell_price", "original_price", "min_temp",
        "max_temp",    "hrs_sunshine", "hrs_rainfall",   "hrs_snowfall",   "hrs_precipitation"};
    std::vector<std::string> categorical_columns{"division", "promo_available"};
    std::vector<int> lag_orders{1, 2};
    std::vector<std::string> group_key{"item_id", "division"};

    bool operator==(const FeatureSpec&) const = default;
};

/// Traceability key for one feature row.
struct RowKey {
    std::string group; // joined group-key values
    long long gan = 0;
    std::string item_id;
    std::string division;
    int year = 0;
    int month = 0;
    int week_no = 0;
    int period = 0; // ordinal within the group after chronological sort

    /// Value of a named pivot dimension, as a string. Throws on unknown names.
    std::string dimension(const std::string& name) const;
};

struct FeatureMatrix {
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> rows;
    std::vector<double> target;
    std::vector<RowKey> row_keys;
    std::size_t dropped_for_lags = 0;
    bool week_no_month_relative = false; // detected WeekNo convention

    std::size_t n() const { return rows.size(); }
    std::size_t p() const { return column_names.size(); }
    int column_index(const std::string& name) const; // -1 if absent
};

/// Per-column (min, max) learned on training data only.
struct ScalerParams {
    std::vector<std::string> columns;
    std::vector<std::pair<double, double>> min_max;
};

/// Single-column scaler state, used for target scaling.
struct MinMax {
    double min = 0.0;
    double max = 0.0;
};

/// Build the design matrix: numeric fields, one-hot categoricals in
/// lexicographic category order, and lagged sales within each group.
/// Rows whose lags are undefined are dropped and counted. Groups are
/// ordered by key, rows chronologically (stable on ties).
FeatureMatrix build_features(const Dataset& dataset, const FeatureSpec& spec);

ScalerParams fit_scaler(const FeatureMatrix& matrix);

/// x' = (x - min) / (max - min); constant columns map to 0. Values outside
/// the training range are not clipped.
FeatureMatrix apply_scaler(const FeatureMatrix& matrix, const ScalerParams& params);

double inverse_scale(double value, const std::string& column, const ScalerParams& params);

MinMax fit_min_max(const std::vector<double>& values);
double scale_value(double x, const MinMax& mm);
double inverse_scale_value(double x, const MinMax& mm);

/// Chronological split per group: the last ceil(fraction * n) periods of
/// each group go to test. Groups too small to split stay in train.
std::pair<FeatureMatrix, FeatureMatrix> train_test_split(const FeatureMatrix& matrix,
                                                         double holdout_fraction);

/// Debug export: row keys, features, target.
void write_feature_matrix_csv(const FeatureMatrix& matrix, const std::string& path);

} // namespace rackcast
