#pragma once

#include <map>
#include <string>
#include <vector>

#include "semcp/dataset.hpp"

namespace semcp {

/// Costs entering the reward: doing nothing is free; mailing actions pay a
/// per-action printing cost plus a per-city cost.
struct VotingCosts {
    // actions 2..5 (1-based action ids; action 1 is "do nothing")
    std::vector<double> per_action = {0.0, 0.01, 0.02, 0.03};
    std::map<int, double> per_city = {
        {1, 0.01}, {2, 0.02}, {3, 0.03}, {4, 0.04}, {14, 0.05},   // observed cities
        {5, 0.06}, {6, 0.07}, {8, 0.08}, {13, 0.09}, {15, 0.10}}; // held-out cities
};

struct VotingLoadResult {
    std::vector<BanditDataset> per_city; // one dataset per city, city order ascending
    std::size_t skipped_rows = 0;
};

/// Bins a year of birth at 1943/1952/1959/1966 into five categories.
int bin_year_of_birth(int yob);

/// Household sizes above 4 collapse to 4.
int cap_household_size(int hh_size);

/// Reward for taking 1-based action k in a city: turnout for "do nothing",
/// turnout minus action and city costs otherwise.
double voting_reward(int p2006, int action_k, int city, const VotingCosts& costs);

/// Reads the voting CSV (header: yob,sex,hh_size,p2000,p2002,p2004,g2000,
/// g2002,city,treatment,p2006), applies the binning/capping rules, computes
/// rewards and splits rows into one dataset per city. Rows that fail to
/// parse are skipped and counted; unknown city labels are an error.
VotingLoadResult load_voting(const std::string& path, const VotingCosts& costs = {});

} // namespace semcp
