#pragma once

#include <cstdint>
#include <random>

#include "admission/population.hpp"

namespace admission {

// Per-deployment gamma posteriors over (lambda, sigma, mu) plus the sufficient
// statistics behind them. Updates are pure: old state in, new state out.
struct BeliefState {
    GammaParams lambda_post;
    GammaParams sigma_post;
    GammaParams mu_post;
    double nu = 0.0;  // power-law exponent used by the lambda exposure normalization
    std::uint64_t n_scaleouts = 0;
    std::uint64_t extra_cores_observed = 0;
    std::uint64_t n_core_deaths = 0;
    double total_core_exposure = 0.0;  // hours lived by all cores, censored included
    double deployment_age = 0.0;
};

struct InfoLevel {
    std::uint64_t pseudo_observations = 0;
};

BeliefState make_prior_belief(const PopulationModel& model);

// k = 0 returns the population priors; k > 0 sharpens them with k pseudo
// observations per process drawn from the deployment's true processes
BeliefState init_belief(const PopulationModel& model, InfoLevel info,
                        const DeploymentParams& true_params, std::mt19937_64& rng);

// gamma-exponential conjugate update for one observed core lifetime
BeliefState update_on_core_death(const BeliefState& b, double lifetime);

// censored cores contribute elapsed exposure to the mu posterior rate only
BeliefState update_on_exposure(const BeliefState& b, double elapsed,
                               std::int64_t live_cores);

// one scale-out of `size` cores observed `elapsed_since_last` hours after the
// previous one; lambda exposure is normalized by the current posterior mean of
// mu raised to nu (plug-in)
BeliefState update_on_scaleout(const BeliefState& b, std::int64_t size,
                               double elapsed_since_last);

// size information alone (used for the size attached to the arrival itself,
// which carries no waiting-time evidence about lambda)
BeliefState observe_scaleout_size(const BeliefState& b, std::int64_t size);

}  // namespace admission
