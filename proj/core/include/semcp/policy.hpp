#pragma once

#include <random>
#include <string>
#include <vector>

#include "semcp/error.hpp"

namespace semcp {

enum class PolicyKind { UniformRandom, TabularArgmax, SoftmaxLinear };

/// Maps a context vector to a distribution over actions. Score-based kinds
/// hold one affine row per action: score_a(x) = weights[a][0] + weights[a][1:]·x.
/// TabularArgmax plays the best-scoring action (ties to the lowest index);
/// SoftmaxLinear samples proportionally to exp(score).
class Policy {
public:
    static Policy uniform(int action_count);
    static Policy argmax(std::vector<std::vector<double>> weights,
                         std::vector<std::string> context_columns = {});
    static Policy softmax(std::vector<std::vector<double>> weights,
                          std::vector<std::string> context_columns = {});

    PolicyKind kind() const { return kind_; }
    int action_count() const { return action_count_; }

    /// Names of the context columns the scores expect, when known.
    const std::vector<std::string>& context_columns() const { return context_columns_; }

    std::vector<double>& weights(int action) { return weights_[static_cast<std::size_t>(action)]; }
    const std::vector<std::vector<double>>& weights() const { return weights_; }

    /// Probability of each action given the context; always a distribution.
    std::vector<double> probabilities(const std::vector<double>& context) const;
    double probability(int action, const std::vector<double>& context) const;

    int best_action(const std::vector<double>& context) const;
    int sample(const std::vector<double>& context, std::mt19937_64& rng) const;

    std::string to_json() const;
    static Policy from_json(const std::string& text);
    void save(const std::string& path) const;
    static Policy load(const std::string& path);

private:
    Policy() = default;
    double score(int action, const std::vector<double>& context) const;

    PolicyKind kind_ = PolicyKind::UniformRandom;
    int action_count_ = 0;
    std::vector<std::vector<double>> weights_;
    std::vector<std::string> context_columns_;
};

} // namespace semcp
