#include "rackcast/models/linear.hpp"

#include "rackcast/errors.hpp"
#include "rackcast/linalg.hpp"

namespace rackcast {

namespace {

constexpr std::size_t kPoly2FeatureGuard = 64;

nlohmann::json scaler_to_json(const ScalerParams& s) {
    nlohmann::json j;
    j["columns"] = s.columns;
    nlohmann::json mm = nlohmann::json::array();
    for (const auto& [lo, hi] : s.min_max) mm.push_back({lo, hi});
    j["min_max"] = mm;
    return j;
}

ScalerParams scaler_from_json(const nlohmann::json& j) {
    ScalerParams s;
    s.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& pair : j.at("min_max"))
        s.min_max.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return s;
}

} // namespace

std::vector<double> ridge_fit(const std::vector<std::vector<double>>& x,
                              const std::vector<double>& y, double lambda,
                              const char* who) {
    if (x.empty()) throw DataError(std::string(who) + ": no training rows");
    if (lambda < 0.0) throw ConfigError(std::string(who) + ": ridge lambda must be >= 0");
    std::vector<double> gram, rhs, beta;
    linalg::ridge_normal_equations(x, y, lambda, gram, rhs);
    const std::size_t m = x[0].size() + 1;
    if (!linalg::cholesky_solve(gram, m, rhs, beta))
        throw ConfigError(std::string(who) +
                          ": singular design matrix; set ridge lambda > 0 to regularize");
    return beta;
}

void LinearModel::fit(const FeatureMatrix& train) {
    columns_ = train.column_names;
    const FeatureMatrix* m = &train;
    FeatureMatrix scaled;
    if (hp_.scale_features) {
        scaler_ = fit_scaler(train);
        scaled = apply_scaler(train, scaler_);
        m = &scaled;
    }
    beta_ = ridge_fit(m->rows, m->target, hp_.lambda, "linear");
    fitted_ = true;
}

std::vector<double> LinearModel::predict(const FeatureMatrix& rows) const {
    require_fitted();
    check_schema(rows);
    const FeatureMatrix* m = &rows;
    FeatureMatrix scaled;
    if (hp_.scale_features) {
        scaled = apply_scaler(rows, scaler_);
        m = &scaled;
    }
    std::vector<double> out;
    out.reserve(m->n());
    for (const auto& row : m->rows) {
        double v = beta_[0];
        for (std::size_t i = 0; i < row.size(); ++i) v += beta_[i + 1] * row[i];
        out.push_back(v);
    }
    return out;
}

nlohmann::json LinearModel::to_json() const {
    require_fitted();
    nlohmann::json j;
    j["version"] = kModelFormatVersion;
    j["model"] = name();
    j["hyperparams"] = {{"lambda", hp_.lambda}, {"scale_features", hp_.scale_features}};
    j["columns"] = columns_;
    j["beta"] = beta_;
    if (hp_.scale_features) j["scaler"] = scaler_to_json(scaler_);
    return j;
}

void LinearModel::from_json(const nlohmann::json& j) {
    hp_.lambda = j.at("hyperparams").at("lambda").get<double>();
    hp_.scale_features = j.at("hyperparams").at("scale_features").get<bool>();
    columns_ = j.at("columns").get<std::vector<std::string>>();
    beta_ = j.at("beta").get<std::vector<double>>();
    if (hp_.scale_features) scaler_ = scaler_from_json(j.at("scaler"));
    fitted_ = true;
}

std::vector<std::string> poly2_column_names(const std::vector<std::string>& columns) {
    std::vector<std::string> out = columns;
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (std::size_t j = i; j < columns.size(); ++j)
            out.push_back(i == j ? columns[i] + "^2" : columns[i] + "*" + columns[j]);
    return out;
}

std::vector<double> poly2_expand_row(const std::vector<double>& row) {
    std::vector<double> out = row;
    out.reserve(row.size() + row.size() * (row.size() + 1) / 2);
    for (std::size_t i = 0; i < row.size(); ++i)
        for (std::size_t j = i; j < row.size(); ++j) out.push_back(row[i] * row[j]);
    return out;
}

void Poly2Model::fit(const FeatureMatrix& train) {
    if (train.p() > kPoly2FeatureGuard)
        throw ConfigError("poly2: " + std::to_string(train.p()) +
                          " features exceed the guard of " + std::to_string(kPoly2FeatureGuard) +
                          "; reduce the feature spec");
    columns_ = train.column_names;
    const FeatureMatrix* m = &train;
    FeatureMatrix scaled;
    if (hp_.scale_features) {
        scaler_ = fit_scaler(train);
        scaled = apply_scaler(train, scaler_);
        m = &scaled;
    }
    std::vector<std::vector<double>> expanded;
    expanded.reserve(m->n());
    for (const auto& row : m->rows) expanded.push_back(poly2_expand_row(row));
    beta_ = ridge_fit(expanded, m->target, hp_.lambda, "poly2");
    fitted_ = true;
}

std::vector<double> Poly2Model::predict(const FeatureMatrix& rows) const {
    require_fitted();
    check_schema(rows);
    const FeatureMatrix* m = &rows;
    FeatureMatrix scaled;
    if (hp_.scale_features) {
        scaled = apply_scaler(rows, scaler_);
        m = &scaled;
    }
    std::vector<double> out;
    out.reserve(m->n());
    for (const auto& row : m->rows) {
        std::vector<double> ex = poly2_expand_row(row);
        double v = beta_[0];
        for (std::size_t i = 0; i < ex.size(); ++i) v += beta_[i + 1] * ex[i];
        out.push_back(v);
    }
    return out;
}

nlohmann::json Poly2Model::to_json() const {
    require_fitted();
    nlohmann::json j;
    j["version"] = kModelFormatVersion;
    j["model"] = name();
    j["hyperparams"] = {{"lambda", hp_.lambda}, {"scale_features", hp_.scale_features}};
    j["columns"] = columns_;
    j["beta"] = beta_;
    if (hp_.scale_features) j["scaler"] = scaler_to_json(scaler_);
    return j;
}

void Poly2Model::from_json(const nlohmann::json& j) {
    hp_.lambda = j.at("hyperparams").at("lambda").get<double>();
    hp_.scale_features = j.at("hyperparams").at("scale_features").get<bool>();
    columns_ = j.at("columns").get<std::vector<std::string>>();
    beta_ = j.at("beta").get<std::vector<double>>();
    if (hp_.scale_features) scaler_ = scaler_from_json(j.at("scaler"));
    fitted_ = true;
}

} // namespace rackcast
