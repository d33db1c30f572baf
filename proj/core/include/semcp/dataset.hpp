#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semcp/error.hpp"

namespace semcp {

enum class ColumnKind { Continuous, Binary, Categorical };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::Continuous;
    int arity = 0; // categories when Categorical
};

/// Per-column affine transform recorded when a dataset is normalized:
/// normalized = (raw - offset) / scale. Constant columns get scale 1 and a
/// flag so callers can treat them specially.
struct ColumnAffine {
    double offset = 0.0;
    double scale = 1.0;
    bool constant = false;
};

struct NormalizationRecord {
    std::vector<ColumnAffine> columns; // one per context column
    ColumnAffine reward;

    double to_raw_reward(double normalized) const {
        return normalized * reward.scale + reward.offset;
    }
    double to_normalized_reward(double raw) const {
        return (raw - reward.offset) / reward.scale;
    }
};

/// Logged bandit rows (context, action, reward) from one environment.
/// Contexts are stored column-major.
class BanditDataset {
public:
    BanditDataset() = default;
    BanditDataset(std::vector<Column> schema, int action_count, std::string env_label);

    const std::vector<Column>& schema() const { return schema_; }
    int action_count() const { return action_count_; }
    const std::string& environment() const { return env_label_; }

    std::size_t rows() const { return actions_.size(); }
    std::size_t column_count() const { return schema_.size(); }

    void reserve(std::size_t n);
    void add_row(const std::vector<double>& context, int action, double reward);

    const std::vector<double>& column(std::size_t j) const { return columns_[j]; }
    const std::vector<double>& column(const std::string& name) const;
    std::vector<double>& mutable_column(std::size_t j) { return columns_[j]; }
    std::size_t column_index(const std::string& name) const;
    bool has_column(const std::string& name) const;

    const std::vector<int>& actions() const { return actions_; }
    const std::vector<double>& rewards() const { return rewards_; }
    std::vector<double>& mutable_rewards() { return rewards_; }

    /// Logging propensities pi0(a | x); defaults to uniform when unset.
    void set_propensities(std::vector<double> per_action);
    double propensity(int action) const;

    const std::optional<NormalizationRecord>& normalization() const { return normalization_; }
    void set_normalization(NormalizationRecord rec) { normalization_ = std::move(rec); }
    bool normalized() const { return normalization_.has_value(); }

    /// Dataset with the same schema and the selected rows.
    BanditDataset subset(const std::vector<std::size_t>& row_indices) const;

    void write_csv(const std::string& path) const;
    static BanditDataset read_csv(const std::string& path);

private:
    std::vector<Column> schema_;
    int action_count_ = 0;
    std::string env_label_;
    std::vector<std::vector<double>> columns_;
    std::vector<int> actions_;
    std::vector<double> rewards_;
    std::vector<double> propensities_; // per action; empty = uniform
    std::optional<NormalizationRecord> normalization_;
};

/// Fits a min-max [0,1] transform per continuous column (and the reward) over
/// the pooled rows of `train`, then applies it to every dataset in `train`
/// and `others`. Binary and categorical columns are left untouched.
NormalizationRecord normalize(std::vector<BanditDataset>& train,
                              std::vector<BanditDataset*> others = {});

/// Applies a previously fitted record.
void apply_normalization(BanditDataset& ds, const NormalizationRecord& rec);

/// Inverts the transform on one column's values.
std::vector<double> denormalize(const std::vector<double>& values, const ColumnAffine& affine);

} // namespace semcp
