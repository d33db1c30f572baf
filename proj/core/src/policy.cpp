#include "semcp/policy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace semcp {

using nlohmann::json;

Policy Policy::uniform(int action_count) {
    if (action_count < 1) throw Error("policy needs >= 1 action");
    Policy p;
    p.kind_ = PolicyKind::UniformRandom;
    p.action_count_ = action_count;
    return p;
}

namespace {

void check_weights(const std::vector<std::vector<double>>& w) {
    if (w.empty()) throw Error("score policy needs weight rows");
    for (const auto& row : w)
        if (row.size() != w[0].size() || row.empty())
            throw Error("weight rows must share a nonzero width");
}

} // namespace

Policy Policy::argmax(std::vector<std::vector<double>> weights,
                      std::vector<std::string> context_columns) {
    check_weights(weights);
    Policy p;
    p.kind_ = PolicyKind::TabularArgmax;
    p.action_count_ = static_cast<int>(weights.size());
    p.weights_ = std::move(weights);
    p.context_columns_ = std::move(context_columns);
    return p;
}

Policy Policy::softmax(std::vector<std::vector<double>> weights,
                       std::vector<std::string> context_columns) {
    check_weights(weights);
    Policy p;
    p.kind_ = PolicyKind::SoftmaxLinear;
    p.action_count_ = static_cast<int>(weights.size());
    p.weights_ = std::move(weights);
    p.context_columns_ = std::move(context_columns);
    return p;
}

double Policy::score(int action, const std::vector<double>& context) const {
    const auto& w = weights_[static_cast<std::size_t>(action)];
    if (context.size() + 1 != w.size()) throw Error("context width does not match policy weights");
    double s = w[0];
    for (std::size_t j = 0; j < context.size(); ++j) s += w[j + 1] * context[j];
    return s;
}

std::vector<double> Policy::probabilities(const std::vector<double>& context) const {
    std::vector<double> p(static_cast<std::size_t>(action_count_), 0.0);
    switch (kind_) {
    case PolicyKind::UniformRandom:
        std::fill(p.begin(), p.end(), 1.0 / action_count_);
        break;
    case PolicyKind::TabularArgmax:
        p[static_cast<std::size_t>(best_action(context))] = 1.0;
        break;
    case PolicyKind::SoftmaxLinear: {
        double mx = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < action_count_; ++a) mx = std::max(mx, score(a, context));
        double z = 0.0;
        for (int a = 0; a < action_count_; ++a) {
            p[static_cast<std::size_t>(a)] = std::exp(score(a, context) - mx);
            z += p[static_cast<std::size_t>(a)];
        }
        for (auto& v : p) v /= z;
        break;
    }
    }
    return p;
}

double Policy::probability(int action, const std::vector<double>& context) const {
    return probabilities(context)[static_cast<std::size_t>(action)];
}

int Policy::best_action(const std::vector<double>& context) const {
    if (kind_ == PolicyKind::UniformRandom) return 0;
    int best = 0;
    double best_score = score(0, context);
    for (int a = 1; a < action_count_; ++a) {
        double s = score(a, context);
        if (s > best_score) {
            best = a;
            best_score = s;
        }
    }
    return best;
}

int Policy::sample(const std::vector<double>& context, std::mt19937_64& rng) const {
    if (kind_ == PolicyKind::TabularArgmax) return best_action(context);
    auto p = probabilities(context);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double t = u(rng);
    double acc = 0.0;
    for (int a = 0; a < action_count_; ++a) {
        acc += p[static_cast<std::size_t>(a)];
        if (t <= acc) return a;
    }
    return action_count_ - 1;
}

std::string Policy::to_json() const {
    json j;
    switch (kind_) {
    case PolicyKind::UniformRandom: j["kind"] = "uniform-random"; break;
    case PolicyKind::TabularArgmax: j["kind"] = "tabular-argmax"; break;
    case PolicyKind::SoftmaxLinear: j["kind"] = "softmax-linear"; break;
    }
    j["action_count"] = action_count_;
    if (!weights_.empty()) j["weights"] = weights_;
    if (!context_columns_.empty()) j["context_columns"] = context_columns_;
    return j.dump(2);
}

Policy Policy::from_json(const std::string& text) {
    json j = json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform-random") return uniform(j.at("action_count").get<int>());
    auto weights = j.at("weights").get<std::vector<std::vector<double>>>();
    std::vector<std::string> cols;
    if (j.contains("context_columns"))
        cols = j.at("context_columns").get<std::vector<std::string>>();
    if (kind == "tabular-argmax") return argmax(std::move(weights), std::move(cols));
    if (kind == "softmax-linear") return softmax(std::move(weights), std::move(cols));
    throw Error("unknown policy kind '" + kind + "'");
}

void Policy::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write policy file '" + path + "'");
    out << to_json() << "\n";
}

Policy Policy::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open policy file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

} // namespace semcp
