#pragma once

#include "rackcast/models/model.hpp"

namespace rackcast {

/// k-nearest-neighbour regression: unweighted mean of the k nearest
/// training targets by Euclidean distance, ties broken by lower training
/// row index. Features are min-max scaled internally by default.
class KnnModel final : public Regressor {
public:
    explicit KnnModel(KnnHyperparams hp = {}) : hp_(hp) {}

    ModelId id() const override { return ModelId::Knn; }
    void fit(const FeatureMatrix& train) override;
    std::vector<double> predict(const FeatureMatrix& rows) const override;
    nlohmann::json to_json() const override;
    void from_json(const nlohmann::json& j) override;

    const KnnHyperparams& hyperparams() const { return hp_; }

private:
    KnnHyperparams hp_;
    std::vector<std::vector<double>> train_rows_; // scaled if hp_.scale_features
    std::vector<double> train_targets_;
    ScalerParams scaler_;
};

} // namespace rackcast
