#pragma once

#include "rackcast/models/model.hpp"

namespace rackcast {

/// Ridge regression with intercept. Solves the regularized normal
/// equations of the augmented design [1 | X] by Cholesky; lambda = 0 on a
/// rank-deficient design raises a singularity error pointing at lambda.
class LinearModel final : public Regressor {
public:
    explicit LinearModel(LinearHyperparams hp = {}) : hp_(hp) {}

    ModelId id() const override { return ModelId::Linear; }
    void fit(const FeatureMatrix& train) override;
    std::vector<double> predict(const FeatureMatrix& rows) const override;
    nlohmann::json to_json() const override;
    void from_json(const nlohmann::json& j) override;

    double intercept() const { return beta_.empty() ? 0.0 : beta_[0]; }
    /// Full coefficient vector [intercept, per-feature...].
    const std::vector<double>& beta() const { return beta_; }
    const LinearHyperparams& hyperparams() const { return hp_; }

private:
    LinearHyperparams hp_;
    std::vector<double> beta_;
    ScalerParams scaler_;
};

/// Degree-2 expansion column names: linear terms first, then all (i <= j)
/// products in lexicographic index order.
std::vector<std::string> poly2_column_names(const std::vector<std::string>& columns);
std::vector<double> poly2_expand_row(const std::vector<double>& row);

/// Degree-2 polynomial regression: deterministic expansion (squares and
/// pairwise products) followed by the same ridge solve as LinearModel.
/// Guarded at 64 input features.
class Poly2Model final : public Regressor {
public:
    explicit Poly2Model(Poly2Hyperparams hp = {}) : hp_(hp) {}

    ModelId id() const override { return ModelId::Poly2; }
    void fit(const FeatureMatrix& train) override;
    std::vector<double> predict(const FeatureMatrix& rows) const override;
    nlohmann::json to_json() const override;
    void from_json(const nlohmann::json& j) override;

    /// Coefficients over [intercept, expanded terms...].
    const std::vector<double>& beta() const { return beta_; }
    const Poly2Hyperparams& hyperparams() const { return hp_; }

private:
    Poly2Hyperparams hp_;
    std::vector<double> beta_;
    ScalerParams scaler_;
};

/// Shared ridge solve: returns [intercept, coefficients...]. Exposed for
/// both linear-family models.
std::vector<double> ridge_fit(const std::vector<std::vector<double>>& x,
                              const std::vector<double>& y, double lambda,
                              const char* who);

} // namespace rackcast
