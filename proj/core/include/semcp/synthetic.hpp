#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "semcp/dataset.hpp"
#include "semcp/graph.hpp"

namespace semcp {

class Policy;

/// Parameters of one synthetic environment. Covariates X0, X1 are Gaussian
/// roots; X2 follows a per-action linear branch with N(1, 0.01) noise; the
/// reward adds U(0, 0.1) noise on top of its linear terms.
struct SyntheticEnv {
    double x0_mean, x0_std;
    double x1_mean, x1_std;
    // per action: X2 = c0 * X0 + c1 * X1 + N(1, 0.01)
    std::array<std::array<double, 2>, 3> x2_branch;
    // Y = y_x2a * X2 + y_x1 * X1 + y_x2b * X2 + U(0, 0.1)
    double y_x2a, y_x1, y_x2b;

    double y_x2_total() const { return y_x2a + y_x2b; }
};

enum class Split { Train, Test };

/// The three training and three test environments.
const std::vector<SyntheticEnv>& synthetic_envs(Split split);

/// Generates the three environments of a split under a uniform-random
/// logging policy over the 3 actions. Pure function of (n, split, seed).
std::vector<BanditDataset> generate_synthetic(std::size_t n_per_env, Split split,
                                              std::uint64_t seed);

/// Mean reward of `policy` on one environment, by simulation. The oracle
/// for worst-case estimates is the minimum of this over the test split.
double simulate_policy_return(const SyntheticEnv& env, const Policy& policy, std::size_t n,
                              std::uint64_t seed);

/// The factorization graph the generator follows (Fig.-3 layout: X0, X1
/// feed X2 and Y; X2 feeds Y; the action intervenes on X2).
CausalGraph synthetic_graph_well_specified();

/// Hand-altered variant: drops the direct covariate-outcome edges and wires
/// X0 into X1 instead of X2.
CausalGraph synthetic_graph_mis_specified();

} // namespace semcp
