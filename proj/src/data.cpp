#include "rackcast/data.hpp"

#include "rackcast/csv.hpp"
#include "rackcast/errors.hpp"
#include "rackcast/rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace rackcast {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kWeeksPerYear = 48; // 12 months x 4 weeks in the generator's calendar

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Canonical column -> accepted lowercase header spellings.
struct ColumnSpec {
    const char* name;
    std::vector<std::string> accepted;
};

const std::vector<ColumnSpec>& column_specs() {
    static const std::vector<ColumnSpec> specs = {
        {"GAN", {"gan"}},
        {"Year", {"year"}},
        {"Month", {"month"}},
        {"WeekNo", {"weekno"}},
        {"PromoAvailable", {"promoavailable"}},
        {"RangeID", {"rangeid"}},
        {"ItemID", {"itemid"}},
        {"FitID", {"fitid"}},
        {"ListingInd", {"listingind"}},
        {"Division", {"division", "divison"}},
        {"AvgSellPrice", {"avgsellprice"}},
        {"OriginalPrice", {"originalprice"}},
        {"MinTemp", {"mintemp"}},
        {"MaxTemp", {"maxtemp"}},
        {"HrsSunShine", {"hrssunshine"}},
        {"HrsRainfall", {"hrsrainfall"}},
        {"HrsSnowFall", {"hrssnowfall"}},
        {"HrsPrecipitation", {"hrsprecipitation", "hrspercipitation"}},
        {"SalesQty", {"salesqty"}},
    };
    return specs;
}

bool parse_promo(const std::string& cell, bool& out) {
    std::string v = lower(cell);
    if (v == "yes" || v == "true" || v == "1") { out = true; return true; }
    if (v == "no" || v == "false" || v == "0") { out = false; return true; }
    return false;
}

// Parses one data row into a record; on failure fills `reason`.
bool parse_record(const std::vector<std::string>& cells, const std::vector<int>& col_of,
                  SalesRecord& rec, std::string& reason) {
    auto cell = [&](int canonical_idx) -> const std::string& {
        return cells[static_cast<std::size_t>(col_of[static_cast<std::size_t>(canonical_idx)])];
    };
    auto fail = [&](const std::string& why) {
        reason = why;
        return false;
    };

    long long tmp_int = 0;
    double tmp = 0.0;

    if (!csv::parse_long(cell(0), rec.gan)) return fail("unparsable GAN '" + cell(0) + "'");
    if (!csv::parse_long(cell(1), tmp_int)) return fail("unparsable Year '" + cell(1) + "'");
    rec.year = static_cast<int>(tmp_int);
    if (!csv::parse_long(cell(2), tmp_int)) return fail("unparsable Month '" + cell(2) + "'");
    rec.month = static_cast<int>(tmp_int);
    if (!csv::parse_long(cell(3), tmp_int)) return fail("unparsable WeekNo '" + cell(3) + "'");
    rec.week_no = static_cast<int>(tmp_int);
    if (!parse_promo(cell(4), rec.promo_available))
        return fail("unparsable PromoAvailable '" + cell(4) + "'");
    rec.range_id = cell(5);
    rec.item_id = cell(6);
    rec.fit_id = cell(7);
    rec.listing_ind = cell(8);
    rec.division = cell(9);
    if (!csv::parse_double(cell(10), rec.avg_sell_price))
        return fail("unparsable AvgSellPrice '" + cell(10) + "'");
    if (!csv::parse_double(cell(11), rec.original_price))
        return fail("unparsable OriginalPrice '" + cell(11) + "'");
    if (!csv::parse_double(cell(12), rec.min_temp)) return fail("unparsable MinTemp '" + cell(12) + "'");
    if (!csv::parse_double(cell(13), rec.max_temp)) return fail("unparsable MaxTemp '" + cell(13) + "'");
    if (!csv::parse_double(cell(14), rec.hrs_sunshine))
        return fail("unparsable HrsSunShine '" + cell(14) + "'");
    if (!csv::parse_double(cell(15), rec.hrs_rainfall))
        return fail("unparsable HrsRainfall '" + cell(15) + "'");
    if (!csv::parse_double(cell(16), rec.hrs_snowfall))
        return fail("unparsable HrsSnowFall '" + cell(16) + "'");
    if (!csv::parse_double(cell(17), rec.hrs_precipitation))
        return fail("unparsable HrsPrecipitation '" + cell(17) + "'");
    if (!csv::parse_long(cell(18), rec.sales_qty)) return fail("unparsable SalesQty '" + cell(18) + "'");

    // Record invariants; violators are quarantined.
    if (rec.month < 1 || rec.month > 12) return fail("Month out of range 1..12");
    if (rec.week_no < 0) return fail("negative WeekNo");
    if (rec.min_temp > rec.max_temp) return fail("MinTemp > MaxTemp");
    if (rec.avg_sell_price < 0.0) return fail("negative AvgSellPrice");
    if (rec.original_price < 0.0) return fail("negative OriginalPrice");
    if (rec.hrs_sunshine < 0.0 || rec.hrs_rainfall < 0.0 || rec.hrs_snowfall < 0.0 ||
        rec.hrs_precipitation < 0.0)
        return fail("negative weather hours");
    if (rec.sales_qty < 0) return fail("negative SalesQty");
    (void)tmp;
    return true;
}

ParseResult parse_csv_stream(std::istream& in, const std::string& provenance) {
    std::string header_line;
    if (!std::getline(in, header_line))
        throw DataError("empty input: " + provenance + " has no header row");
    // Tolerate a UTF-8 BOM.
    if (header_line.size() >= 3 && header_line.compare(0, 3, "\xEF\xBB\xBF") == 0)
        header_line.erase(0, 3);

    const auto& specs = column_specs();
    std::vector<std::string> header = csv::split_line(header_line);
    std::vector<int> col_of(specs.size(), -1); // canonical index -> position in file
    for (std::size_t pos = 0; pos < header.size(); ++pos) {
        std::string h = lower(header[pos]);
        bool known = false;
        for (std::size_t c = 0; c < specs.size(); ++c) {
            if (std::find(specs[c].accepted.begin(), specs[c].accepted.end(), h) !=
                specs[c].accepted.end()) {
                if (col_of[c] != -1)
                    throw DataError("duplicate column '" + header[pos] + "' in " + provenance);
                col_of[c] = static_cast<int>(pos);
                known = true;
                break;
            }
        }
        if (!known)
            throw DataError("unknown column '" + header[pos] + "' in " + provenance);
    }
    for (std::size_t c = 0; c < specs.size(); ++c) {
        if (col_of[c] == -1)
            throw DataError("missing required column '" + std::string(specs[c].name) + "' in " +
                            provenance);
    }

    ParseResult result;
    result.dataset.provenance = provenance;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++result.rows_in;
        std::vector<std::string> cells = csv::split_line(line);
        if (cells.size() != header.size()) {
            result.rejects.push_back({line_no, line,
                                      "expected " + std::to_string(header.size()) + " fields, got " +
                                          std::to_string(cells.size())});
            continue;
        }
        SalesRecord rec;
        std::string reason;
        if (parse_record(cells, col_of, rec, reason)) {
            result.dataset.records.push_back(std::move(rec));
        } else {
            result.rejects.push_back({line_no, line, reason});
        }
    }
    return result;
}

} // namespace

const std::vector<std::string>& schema_columns() {
    static const std::vector<std::string> cols = [] {
        std::vector<std::string> v;
        for (const auto& s : column_specs()) v.emplace_back(s.name);
        return v;
    }();
    return cols;
}

ParseResult parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return parse_csv_stream(in, path);
}

ParseResult parse_csv_text(const std::string& text, const std::string& provenance) {
    std::istringstream in(text);
    return parse_csv_stream(in, provenance);
}

void write_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open " + path + " for writing");
    const auto& cols = schema_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out << ',';
        out << cols[i];
    }
    out << '\n';
    for (const auto& r : dataset.records) {
        out << r.gan << ',' << r.year << ',' << r.month << ',' << r.week_no << ','
            << (r.promo_available ? "YES" : "NO") << ',' << csv::escape(r.range_id) << ','
            << csv::escape(r.item_id) << ',' << csv::escape(r.fit_id) << ','
            << csv::escape(r.listing_ind) << ',' << csv::escape(r.division) << ','
            << csv::format_double(r.avg_sell_price) << ',' << csv::format_double(r.original_price)
            << ',' << csv::format_double(r.min_temp) << ',' << csv::format_double(r.max_temp) << ','
            << csv::format_double(r.hrs_sunshine) << ',' << csv::format_double(r.hrs_rainfall) << ','
            << csv::format_double(r.hrs_snowfall) << ',' << csv::format_double(r.hrs_precipitation)
            << ',' << r.sales_qty << '\n';
    }
    if (!out) throw DataError("write failed for " + path);
}

void write_rejects_csv(const std::vector<RejectedRow>& rejects, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open " + path + " for writing");
    out << "LineNo,RawRow,Reason\n";
    for (const auto& rej : rejects)
        out << rej.line_no << ',' << csv::escape(rej.raw) << ',' << csv::escape(rej.reason) << '\n';
    if (!out) throw DataError("write failed for " + path);
}

namespace {

// Generator magnitudes. Base demand 5-50 units/week, promo uplift x1.5,
// seasonality amplitude ~40% of base; the remaining constants are free
// knobs of the synthetic regimes.
struct GenConstants {
    double promo_rate = 0.08;
    double promo_uplift = 1.5;
    double base_lo = 5.0, base_hi = 50.0;
    double season_amp = 0.4;
    double price_slope = 1.2;    // units lost per currency unit above reference
    double temp_slope = 1.05;    // units lost per degree above reference (linear regime)
    double temp_ref = 10.0;
    double cold_boost = 0.9;     // nonlinear regime: up to +90% in cold weeks
    double cold_knee = 5.0;      // max_temp below which the boost engages
    double cold_scale = 2.0;
    double noise_sd = 0.05;
    double intermittent_zero_prob = 0.65;
    double intermittent_shrink = 0.6;
};

struct ItemParams {
    double base = 0.0;
    bool linear_regime = false;
    bool intermittent = false;
    double original_price = 0.0;
    double ref_price = 0.0;
    double price_phase = 0.0;
};

} // namespace

Dataset generate_synthetic(const SyntheticConfig& config) {
    if (config.n_items < 1) throw ConfigError("generate_synthetic: n_items must be >= 1");
    if (config.n_weeks < 3) throw ConfigError("generate_synthetic: n_weeks must be >= 3 (lags)");
    if (config.divisions.empty()) throw ConfigError("generate_synthetic: divisions must be non-empty");
    if (config.intermittent_fraction < 0.0 || config.intermittent_fraction > 1.0)
        throw ConfigError("generate_synthetic: intermittent_fraction outside [0,1]");
    if (config.regime_mix < 0.0 || config.regime_mix > 1.0)
        throw ConfigError("generate_synthetic: regime_mix outside [0,1]");

    const GenConstants k;
    const int n_div = static_cast<int>(config.divisions.size());
    const int n_weeks = config.n_weeks;
    Rng rng(config.seed);

    // Calendar: 48-week years, month-relative week numbers 0..3 (Table-1 style).
    auto week_of_year = [&](int w) { return w % kWeeksPerYear + 1; };

    // Regional weather, one series per division.
    std::vector<std::vector<double>> tmid(n_div), tmin(n_div), tmax(n_div), sun(n_div), rain(n_div),
        snow(n_div), precip(n_div);
    for (int d = 0; d < n_div; ++d) {
        double div_off = (d - (n_div - 1) / 2.0) * 1.5;
        for (int w = 0; w < n_weeks; ++w) {
            double woy = week_of_year(w);
            double mid = 10.0 - 12.0 * std::cos(2.0 * kPi * (woy - 1) / kWeeksPerYear) + div_off +
                         rng.normal(0.0, 1.2);
            double spread = rng.uniform(1.0, 4.0);
            tmid[d].push_back(mid);
            tmin[d].push_back(mid - spread / 2.0);
            tmax[d].push_back(mid + spread / 2.0);
            sun[d].push_back(std::max(
                0.0, 1.4 + 1.1 * std::cos(2.0 * kPi * (woy - 25) / kWeeksPerYear) + rng.normal(0.0, 0.3)));
            double rn = std::max(0.0, rng.uniform(-0.2, 1.2));
            double sn = mid < 2.0 ? std::max(0.0, rng.uniform(-0.2, 1.2)) : 0.0;
            rain[d].push_back(rn);
            snow[d].push_back(sn);
            precip[d].push_back(std::max(0.0, rn + sn + rng.normal(0.0, 0.2)));
        }
    }

    // Per-item parameters.
    std::vector<ItemParams> items(static_cast<std::size_t>(config.n_items));
    for (auto& it : items) {
        it.base = rng.uniform(k.base_lo, k.base_hi);
        it.linear_regime = rng.uniform() < config.regime_mix;
        it.intermittent = rng.uniform() < config.intermittent_fraction;
        it.original_price = std::round(rng.uniform(25.0, 85.0));
        it.ref_price = it.original_price * rng.uniform(0.45, 0.7);
        it.price_phase = rng.uniform(0.0, 2.0 * kPi);
    }

    // National weekly prices and promo flags, shared across divisions.
    std::vector<std::vector<double>> price(items.size());
    std::vector<std::vector<bool>> promo(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (int w = 0; w < n_weeks; ++w) {
            bool p = rng.bernoulli(k.promo_rate);
            double woy = week_of_year(w);
            double v = items[i].ref_price *
                       (1.0 + 0.08 * std::sin(2.0 * kPi * woy / kWeeksPerYear + items[i].price_phase)) *
                       (p ? 0.70 : 1.0) * (1.0 + rng.normal(0.0, 0.02));
            price[i].push_back(std::max(1.0, v));
            promo[i].push_back(p);
        }
    }

    Dataset out;
    {
        std::ostringstream prov;
        prov << "synthetic(seed=" << config.seed << ",n_items=" << config.n_items
             << ",n_weeks=" << config.n_weeks << ")";
        out.provenance = prov.str();
    }
    out.records.reserve(items.size() * static_cast<std::size_t>(n_div) *
                        static_cast<std::size_t>(n_weeks));

    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& it = items[i];
        for (int d = 0; d < n_div; ++d) {
            double div_add = (d - (n_div - 1) / 2.0) * 3.0;
            double div_mult = 1.0 + (d - (n_div - 1) / 2.0) * 0.12;
            for (int w = 0; w < n_weeks; ++w) {
                double woy = week_of_year(w);
                double uplift = promo[i][static_cast<std::size_t>(w)] ? k.promo_uplift : 1.0;
                double mu;
                if (it.linear_regime) {
                    mu = it.base + div_add +
                         k.price_slope * (it.ref_price - price[i][static_cast<std::size_t>(w)]) +
                         k.temp_slope * (k.temp_ref - tmid[d][static_cast<std::size_t>(w)]);
                    mu *= uplift;
                } else {
                    double season =
                        1.0 + k.season_amp * std::cos(2.0 * kPi * (woy - 1) / kWeeksPerYear);
                    double boost =
                        1.0 + k.cold_boost /
                                  (1.0 + std::exp((tmax[d][static_cast<std::size_t>(w)] - k.cold_knee) /
                                                  k.cold_scale));
                    mu = it.base * div_mult * season * uplift * boost;
                }
                long long qty = 0;
                if (it.intermittent) {
                    mu *= k.intermittent_shrink;
                    if (!rng.bernoulli(k.intermittent_zero_prob))
                        qty = std::llround(std::max(0.0, mu * (1.0 + rng.normal(0.0, k.noise_sd))));
                } else {
                    qty = std::llround(std::max(0.0, mu * (1.0 + rng.normal(0.0, k.noise_sd))));
                }

                SalesRecord rec;
                rec.gan = 22400000 + static_cast<long long>(i);
                rec.year = 2018 + w / kWeeksPerYear;
                rec.month = 1 + (w % kWeeksPerYear) / 4;
                rec.week_no = (w % kWeeksPerYear) % 4;
                rec.promo_available = promo[i][static_cast<std::size_t>(w)];
                {
                    std::ostringstream rid, iid;
                    rid << "RNG" << (i / 8);
                    iid << "ITM" << (i < 10 ? "00" : i < 100 ? "0" : "") << i;
                    rec.range_id = rid.str();
                    rec.item_id = iid.str();
                }
                rec.fit_id = (i % 3 == 0) ? "F15" : (i % 3 == 1) ? "F20" : "F25";
                rec.listing_ind = (i % 2 == 0) ? "D" : "C";
                rec.division = config.divisions[static_cast<std::size_t>(d)];
                rec.avg_sell_price = price[i][static_cast<std::size_t>(w)];
                rec.original_price = it.original_price;
                rec.min_temp = tmin[d][static_cast<std::size_t>(w)];
                rec.max_temp = tmax[d][static_cast<std::size_t>(w)];
                rec.hrs_sunshine = sun[d][static_cast<std::size_t>(w)];
                rec.hrs_rainfall = rain[d][static_cast<std::size_t>(w)];
                rec.hrs_snowfall = snow[d][static_cast<std::size_t>(w)];
                rec.hrs_precipitation = precip[d][static_cast<std::size_t>(w)];
                rec.sales_qty = qty;
                out.records.push_back(std::move(rec));
            }
        }
    }
    return out;
}

} // namespace rackcast
