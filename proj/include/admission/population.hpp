#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace admission {

struct GammaParams {
    double shape = 1.0;
    double rate = 1.0;

    double mean() const { return shape / rate; }
    double variance() const { return shape / (rate * rate); }

    void validate(const char* what) const {
        if (!(shape > 0.0) || !(rate > 0.0))
            throw std::invalid_argument(std::string(what) +
                                        ": gamma shape and rate must be > 0");
    }
};

// Population-wide generative model: gamma priors over each deployment's
// (normalized scale-out rate, mean extra scale-out size, core lifetime rate),
// the shutdown-rate multiplier delta and the rate/lifetime power law nu.
// All rates are per hour.
struct PopulationModel {
    GammaParams lambda_prior{0.4907, 0.4496};
    GammaParams sigma_prior{0.2616, 0.0552};
    GammaParams mu_prior{0.3107, 0.5778};
    double delta = 0.119;
    double nu = 0.673;
    // initial size of a new deployment: one scale-out draw (1 + Poisson(sigma)),
    // or a fixed single core
    bool initial_size_is_scaleout = true;

    void validate() const {
        lambda_prior.validate("lambda_prior");
        sigma_prior.validate("sigma_prior");
        mu_prior.validate("mu_prior");
        if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
    }
};

// One deployment's true hidden parameters plus the two derived event rates.
struct DeploymentParams {
    double lambda_norm = 1.0;  // normalized scale-out rate
    double sigma = 0.0;        // mean extra cores per scale-out
    double mu = 1.0;           // core lifetime rate, 1/h
    double scaleout_rate = 1.0;  // lambda_norm * mu^nu, 1/h
    double shutdown_rate = 1.0;  // delta * mu, 1/h
};

enum class EventKind { scaleout, core_death, shutdown };

DeploymentParams make_deployment_params(double lambda_norm, double sigma, double mu,
                                        double nu, double delta);

DeploymentParams sample_deployment_params(const PopulationModel& model,
                                          std::mt19937_64& rng);

// waiting time (hours) until the next event of the given kind
double sample_event_time(const DeploymentParams& params, EventKind kind,
                         std::mt19937_64& rng);

// 1 + Poisson(sigma) cores
std::int64_t sample_scaleout_size(const DeploymentParams& params, std::mt19937_64& rng);

std::int64_t sample_initial_size(const PopulationModel& model,
                                 const DeploymentParams& params, std::mt19937_64& rng);

}  // namespace admission
