#pragma once

#include "rackcast/features.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace rackcast {

/// The five rack models. Numeric codes are fixed in this order forever;
/// selector labels depend on them.
enum class ModelId : int { Linear = 0, Knn = 1, Gbt = 2, Poly2 = 3, Lstm = 4 };

inline constexpr std::array<ModelId, 5> kAllModels = {ModelId::Linear, ModelId::Knn, ModelId::Gbt,
                                                      ModelId::Poly2, ModelId::Lstm};
inline constexpr std::size_t kNumModels = 5;

const char* model_name(ModelId id);
ModelId model_from_name(const std::string& name);
ModelId model_from_code(int code);

/// Serialized model format tag; load rejects anything else.
inline constexpr const char* kModelFormatVersion = "rackcast-model-v1";

struct LinearHyperparams {
    double lambda = 1e-8;
    bool scale_features = false;
    bool operator==(const LinearHyperparams&) const = default;
};

struct KnnHyperparams {
    int k = 5;
    bool scale_features = true; // Euclidean distance on min-max scaled features
    bool operator==(const KnnHyperparams&) const = default;
};

struct GbtHyperparams {
    int n_trees = 100;
    double learning_rate = 0.1;
    int max_depth = 3;
    int min_samples_leaf = 5;
    bool operator==(const GbtHyperparams&) const = default;
};

struct Poly2Hyperparams {
    double lambda = 1e-8; // degree is locked to 2
    bool scale_features = false;
    bool operator==(const Poly2Hyperparams&) const = default;
};

struct LstmHyperparams {
    int hidden_size = 32;
    int window = 8;
    int epochs = 30;
    int batch_size = 32;
    double learning_rate = 0.01; // adaptive per-parameter step sizes (Adam)
    std::uint64_t seed = 1;
    bool operator==(const LstmHyperparams&) const = default;
};

/// One config surface for every tunable of the rack.
struct Hyperparams {
    LinearHyperparams linear;
    KnnHyperparams knn;
    GbtHyperparams gbt;
    Poly2Hyperparams poly2;
    LstmHyperparams lstm;
    bool operator==(const Hyperparams&) const = default;
};

/// Common regressor contract. fit() records the training column schema;
/// predict() checks it and returns one finite value per input row, in the
/// target's original units. Outputs are not clamped here; clamping to >= 0
/// happens at the reporting layer only.
class Regressor {
public:
    virtual ~Regressor() = default;
    virtual ModelId id() const = 0;
    virtual void fit(const FeatureMatrix& train) = 0;
    virtual std::vector<double> predict(const FeatureMatrix& rows) const = 0;
    virtual nlohmann::json to_json() const = 0;
    virtual void from_json(const nlohmann::json& j) = 0;

    const char* name() const { return model_name(id()); }
    bool fitted() const { return fitted_; }
    const std::vector<std::string>& columns() const { return columns_; }

protected:
    /// Throws DataError naming missing/extra columns on schema mismatch.
    void check_schema(const FeatureMatrix& rows) const;
    void require_fitted() const;

    std::vector<std::string> columns_;
    bool fitted_ = false;
};

std::unique_ptr<Regressor> make_regressor(ModelId id, const Hyperparams& hp);
std::unique_ptr<Regressor> regressor_from_json(const nlohmann::json& j);

void save_model(const Regressor& model, const std::string& path);
std::unique_ptr<Regressor> load_model(const std::string& path);

/// The fitted algorithmic rack: all five models in ModelId order.
struct Rack {
    std::array<std::unique_ptr<Regressor>, kNumModels> models;

    const Regressor& model(ModelId id) const;
    bool complete() const;
    /// Raw predictions of every model, in ModelId order.
    std::array<std::vector<double>, kNumModels> predict_all(const FeatureMatrix& rows) const;
};

/// Fit all five models on one training matrix. Models that want scaled
/// inputs scale internally; the matrix passed in is the unscaled one.
Rack fit_rack(const FeatureMatrix& train, const Hyperparams& hp);

nlohmann::json hyperparams_to_json(const Hyperparams& hp);
Hyperparams hyperparams_from_json(const nlohmann::json& j);

} // namespace rackcast
