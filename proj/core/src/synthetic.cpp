#include "semcp/synthetic.hpp"

#include <random>

#include "semcp/policy.hpp"

namespace semcp {

const std::vector<SyntheticEnv>& synthetic_envs(Split split) {
    static const std::vector<SyntheticEnv> train = {
        {5, 1.0, 5, 0.5, {{{3, 5}, {5, 4}, {5, 5}}}, 5, 0.1, 0.2},
        {6, 0.5, 5, 0.5, {{{3, 2}, {2, 4}, {2, 2}}}, 6, 0.1, 0.2},
        {5, 0.5, 5, 0.5, {{{3, 10}, {5, 4}, {4, 4}}}, 5, 0.1, 0.2},
    };
    static const std::vector<SyntheticEnv> test = {
        {5, 1.0, 5, 0.5, {{{3, 2}, {2, 4}, {2, 2}}}, 5, 0.1, 0.2},
        {6, 0.5, 5, 0.5, {{{3, 8}, {5, 4}, {2, 5}}}, 6, 0.1, 0.2},
        {5, 0.5, 5, 0.5, {{{3, 6}, {5, 4}, {5, 5}}}, 6, 0.1, 0.2},
    };
    return split == Split::Train ? train : test;
}

namespace {

std::vector<Column> synthetic_schema() {
    return {{"X0", ColumnKind::Continuous, 0},
            {"X1", ColumnKind::Continuous, 0},
            {"X2", ColumnKind::Continuous, 0}};
}

struct SyntheticRow {
    double x0, x1, x2, y;
};

SyntheticRow draw_row(const SyntheticEnv& env, int action, std::mt19937_64& rng) {
    std::normal_distribution<double> nx0(env.x0_mean, env.x0_std);
    std::normal_distribution<double> nx1(env.x1_mean, env.x1_std);
    std::normal_distribution<double> nx2(1.0, 0.01);
    std::uniform_real_distribution<double> uy(0.0, 0.1);
    SyntheticRow r;
    r.x0 = nx0(rng);
    r.x1 = nx1(rng);
    const auto& b = env.x2_branch[static_cast<std::size_t>(action)];
    r.x2 = b[0] * r.x0 + b[1] * r.x1 + nx2(rng);
    r.y = env.y_x2a * r.x2 + env.y_x1 * r.x1 + env.y_x2b * r.x2 + uy(rng);
    return r;
}

} // namespace

std::vector<BanditDataset> generate_synthetic(std::size_t n_per_env, Split split,
                                              std::uint64_t seed) {
    if (n_per_env < 1) throw Error("n_per_env must be >= 1");
    const auto& envs = synthetic_envs(split);
    std::vector<BanditDataset> out;
    out.reserve(envs.size());
    const std::uint64_t split_tag = split == Split::Train ? 0 : 1;
    for (std::size_t e = 0; e < envs.size(); ++e) {
        std::mt19937_64 rng(seed * 1000003ull + split_tag * 101ull + e);
        std::uniform_int_distribution<int> pick(0, 2);
        BanditDataset ds(synthetic_schema(), 3,
                         (split == Split::Train ? "train" : "test") + std::to_string(e + 1));
        ds.set_propensities({1.0 / 3, 1.0 / 3, 1.0 / 3});
        ds.reserve(n_per_env);
        for (std::size_t i = 0; i < n_per_env; ++i) {
            int a = pick(rng);
            auto r = draw_row(envs[e], a, rng);
            ds.add_row({r.x0, r.x1, r.x2}, a, r.y);
        }
        out.push_back(std::move(ds));
    }
    return out;
}

double simulate_policy_return(const SyntheticEnv& env, const Policy& policy, std::size_t n,
                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::mt19937_64 policy_rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> nx0(env.x0_mean, env.x0_std);
    std::normal_distribution<double> nx1(env.x1_mean, env.x1_std);
    std::normal_distribution<double> nx2(1.0, 0.01);
    std::uniform_real_distribution<double> uy(0.0, 0.1);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double x0 = nx0(rng);
        double x1 = nx1(rng);
        // contexts the policy sees exclude the intervened covariate
        int a = policy.sample({x0, x1}, policy_rng);
        const auto& b = env.x2_branch[static_cast<std::size_t>(a)];
        double x2 = b[0] * x0 + b[1] * x1 + nx2(rng);
        total += env.y_x2a * x2 + env.y_x1 * x1 + env.y_x2b * x2 + uy(rng);
    }
    return total / static_cast<double>(n);
}

CausalGraph synthetic_graph_well_specified() {
    return CausalGraph::parse(R"(node A action
node X0 cont
node X1 cont
node X2 cont
node Y outcome
edge X0 -> X2
edge X1 -> X2
edge X0 -> Y
edge X1 -> Y
edge X2 -> Y
intervene A => X2
)");
}

CausalGraph synthetic_graph_mis_specified() {
    return CausalGraph::parse(R"(node A action
node X0 cont
node X1 cont
node X2 cont
node Y outcome
edge X0 -> X1
edge X1 -> X2
edge X2 -> Y
intervene A => X2
)");
}

} // namespace semcp
