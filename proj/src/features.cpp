#include "rackcast/features.hpp"

#include "rackcast/csv.hpp"
#include "rackcast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

namespace rackcast {

namespace {

std::string categorical_value(const SalesRecord& r, const std::string& field) {
    if (field == "division") return r.division;
    if (field == "promo_available") return r.promo_available ? "YES" : "NO";
    if (field == "item_id") return r.item_id;
    if (field == "range_id") return r.range_id;
    if (field == "fit_id") return r.fit_id;
    if (field == "listing_ind") return r.listing_ind;
    if (field == "gan") return std::to_string(r.gan);
    throw ConfigError("unknown categorical column '" + field + "' in feature spec");
}

double numeric_value(const SalesRecord& r, const std::string& field, bool month_relative_weeks) {
    if (field == "month") return static_cast<double>(r.month);
    if (field == "week_of_year") {
        if (month_relative_weeks) return static_cast<double>((r.month - 1) * 4 + r.week_no + 1);
        return static_cast<double>(r.week_no);
    }
    if (field == "week_no") return static_cast<double>(r.week_no);
    if (field == "year") return static_cast<double>(r.year);
    if (field == "avg_sell_price") return r.avg_sell_price;
    if (field == "original_price") return r.original_price;
    if (field == "min_temp") return r.min_temp;
    if (field == "max_temp") return r.max_temp;
    if (field == "hrs_sunshine") return r.hrs_sunshine;
    if (field == "hrs_rainfall") return r.hrs_rainfall;
    if (field == "hrs_snowfall") return r.hrs_snowfall;
    if (field == "hrs_precipitation") return r.hrs_precipitation;
    throw ConfigError("unknown numeric column '" + field + "' in feature spec");
}

} // namespace

std::string RowKey::dimension(const std::string& name) const {
    if (name == "group") return group;
    if (name == "gan") return std::to_string(gan);
    if (name == "item_id") return item_id;
    if (name == "division") return division;
    if (name == "year") return std::to_string(year);
    if (name == "month") return std::to_string(month);
    if (name == "week_no") return std::to_string(week_no);
    throw ConfigError("unknown pivot dimension '" + name + "'");
}

int FeatureMatrix::column_index(const std::string& name) const {
    auto it = std::find(column_names.begin(), column_names.end(), name);
    if (it == column_names.end()) return -1;
    return static_cast<int>(it - column_names.begin());
}

FeatureMatrix build_features(const Dataset& dataset, const FeatureSpec& spec) {
    if (dataset.records.empty()) throw DataError("build_features: dataset is empty");
    for (std::size_t i = 0; i < spec.lag_orders.size(); ++i) {
        if (spec.lag_orders[i] <= 0) throw ConfigError("lag orders must be strictly positive");
        if (i > 0 && spec.lag_orders[i] <= spec.lag_orders[i - 1])
            throw ConfigError("lag orders must be strictly increasing");
    }
    if (spec.group_key.empty()) throw ConfigError("group_key must be non-empty");

    // WeekNo convention: values 0..4 look month-relative.
    int max_week_no = 0;
    for (const auto& r : dataset.records) max_week_no = std::max(max_week_no, r.week_no);
    const bool month_relative = max_week_no <= 4;

    // Validate spec columns up front so errors do not depend on data content.
    for (const auto& c : spec.numeric_columns) numeric_value(dataset.records.front(), c, month_relative);
    for (const auto& c : spec.categorical_columns) categorical_value(dataset.records.front(), c);

    // Category levels, lexicographic.
    std::vector<std::vector<std::string>> levels(spec.categorical_columns.size());
    for (std::size_t c = 0; c < spec.categorical_columns.size(); ++c) {
        std::set<std::string> s;
        for (const auto& r : dataset.records) s.insert(categorical_value(r, spec.categorical_columns[c]));
        levels[c].assign(s.begin(), s.end());
    }

    FeatureMatrix m;
    m.week_no_month_relative = month_relative;
    for (const auto& c : spec.numeric_columns) m.column_names.push_back(c);
    for (int lag : spec.lag_orders) m.column_names.push_back("lag_" + std::to_string(lag));
    for (std::size_t c = 0; c < spec.categorical_columns.size(); ++c)
        for (const auto& lvl : levels[c])
            m.column_names.push_back(spec.categorical_columns[c] + "=" + lvl);

    // Group records, keep first-seen order of duplicates stable.
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < dataset.records.size(); ++i) {
        std::string key;
        for (std::size_t g = 0; g < spec.group_key.size(); ++g) {
            if (g) key += '|';
            key += categorical_value(dataset.records[i], spec.group_key[g]);
        }
        groups[key].push_back(i);
    }

    const int max_lag = spec.lag_orders.empty() ? 0 : spec.lag_orders.back();
    for (auto& [key, idxs] : groups) {
        std::stable_sort(idxs.begin(), idxs.end(), [&](std::size_t a, std::size_t b) {
            const auto& ra = dataset.records[a];
            const auto& rb = dataset.records[b];
            return std::tie(ra.year, ra.month, ra.week_no) < std::tie(rb.year, rb.month, rb.week_no);
        });
        const int len = static_cast<int>(idxs.size());
        m.dropped_for_lags += static_cast<std::size_t>(std::min(max_lag, len));
        for (int pos = max_lag; pos < len; ++pos) {
            const auto& r = dataset.records[idxs[static_cast<std::size_t>(pos)]];
            std::vector<double> row;
            row.reserve(m.column_names.size());
            for (const auto& c : spec.numeric_columns)
                row.push_back(numeric_value(r, c, month_relative));
            for (int lag : spec.lag_orders) {
                const auto& prev = dataset.records[idxs[static_cast<std::size_t>(pos - lag)]];
                row.push_back(static_cast<double>(prev.sales_qty));
            }
            for (std::size_t c = 0; c < spec.categorical_columns.size(); ++c) {
                std::string v = categorical_value(r, spec.categorical_columns[c]);
                for (const auto& lvl : levels[c]) row.push_back(lvl == v ? 1.0 : 0.0);
            }
            m.rows.push_back(std::move(row));
            m.target.push_back(static_cast<double>(r.sales_qty));
            RowKey rk;
            rk.group = key;
            rk.gan = r.gan;
            rk.item_id = r.item_id;
            rk.division = r.division;
            rk.year = r.year;
            rk.month = r.month;
            rk.week_no = r.week_no;
            rk.period = pos;
            m.row_keys.push_back(std::move(rk));
        }
    }
    return m;
}

ScalerParams fit_scaler(const FeatureMatrix& matrix) {
    if (matrix.n() == 0) throw DataError("fit_scaler: empty matrix");
    ScalerParams p;
    p.columns = matrix.column_names;
    p.min_max.resize(matrix.p());
    for (std::size_t c = 0; c < matrix.p(); ++c) {
        double lo = matrix.rows[0][c], hi = matrix.rows[0][c];
        for (const auto& row : matrix.rows) {
            lo = std::min(lo, row[c]);
            hi = std::max(hi, row[c]);
        }
        p.min_max[c] = {lo, hi};
    }
    return p;
}

FeatureMatrix apply_scaler(const FeatureMatrix& matrix, const ScalerParams& params) {
    if (matrix.column_names != params.columns)
        throw DataError("apply_scaler: column set does not match scaler params");
    FeatureMatrix out = matrix;
    for (auto& row : out.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            auto [lo, hi] = params.min_max[c];
            row[c] = hi > lo ? (row[c] - lo) / (hi - lo) : 0.0;
        }
    }
    return out;
}

double inverse_scale(double value, const std::string& column, const ScalerParams& params) {
    auto it = std::find(params.columns.begin(), params.columns.end(), column);
    if (it == params.columns.end())
        throw DataError("inverse_scale: unknown column '" + column + "'");
    auto [lo, hi] = params.min_max[static_cast<std::size_t>(it - params.columns.begin())];
    return lo + value * (hi - lo);
}

MinMax fit_min_max(const std::vector<double>& values) {
    if (values.empty()) throw DataError("fit_min_max: empty vector");
    MinMax mm{values[0], values[0]};
    for (double v : values) {
        mm.min = std::min(mm.min, v);
        mm.max = std::max(mm.max, v);
    }
    return mm;
}

double scale_value(double x, const MinMax& mm) {
    return mm.max > mm.min ? (x - mm.min) / (mm.max - mm.min) : 0.0;
}

double inverse_scale_value(double x, const MinMax& mm) { return mm.min + x * (mm.max - mm.min); }

std::pair<FeatureMatrix, FeatureMatrix> train_test_split(const FeatureMatrix& matrix,
                                                         double holdout_fraction) {
    if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0))
        throw ConfigError("holdout_fraction must be in (0,1)");

    FeatureMatrix train, test;
    for (FeatureMatrix* part : {&train, &test}) {
        part->column_names = matrix.column_names;
        part->week_no_month_relative = matrix.week_no_month_relative;
    }
    train.dropped_for_lags = matrix.dropped_for_lags;

    // Rows are grouped contiguously; find group runs.
    std::size_t i = 0;
    while (i < matrix.n()) {
        std::size_t j = i;
        while (j < matrix.n() && matrix.row_keys[j].group == matrix.row_keys[i].group) ++j;
        std::size_t len = j - i;
        auto n_test = static_cast<std::size_t>(
            std::ceil(holdout_fraction * static_cast<double>(len)));
        if (n_test >= len) n_test = 0; // group too small to split; all to train
        std::size_t cut = j - n_test;
        for (std::size_t r = i; r < j; ++r) {
            FeatureMatrix& part = r < cut ? train : test;
            part.rows.push_back(matrix.rows[r]);
            part.target.push_back(matrix.target[r]);
            part.row_keys.push_back(matrix.row_keys[r]);
        }
        i = j;
    }
    return {std::move(train), std::move(test)};
}

void write_feature_matrix_csv(const FeatureMatrix& matrix, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open " + path + " for writing");
    out << "group,gan,item_id,division,year,month,week_no,period";
    for (const auto& c : matrix.column_names) out << ',' << csv::escape(c);
    out << ",target\n";
    for (std::size_t r = 0; r < matrix.n(); ++r) {
        const auto& k = matrix.row_keys[r];
        out << csv::escape(k.group) << ',' << k.gan << ',' << csv::escape(k.item_id) << ','
            << csv::escape(k.division) << ',' << k.year << ',' << k.month << ',' << k.week_no << ','
            << k.period;
        for (double v : matrix.rows[r]) out << ',' << csv::format_double(v);
        out << ',' << csv::format_double(matrix.target[r]) << '\n';
    }
    if (!out) throw DataError("write failed for " + path);
}

} // namespace rackcast
