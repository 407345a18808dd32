#include "admission/population.hpp"

#include <cmath>

namespace admission {

DeploymentParams make_deployment_params(double lambda_norm, double sigma, double mu,
                                        double nu, double delta) {
    if (!(lambda_norm > 0.0)) throw std::invalid_argument("lambda_norm must be > 0");
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
    if (sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
    DeploymentParams p;
    p.lambda_norm = lambda_norm;
    p.sigma = sigma;
    p.mu = mu;
    p.scaleout_rate = lambda_norm * std::pow(mu, nu);
    p.shutdown_rate = delta * mu;
    return p;
}

DeploymentParams sample_deployment_params(const PopulationModel& model,
                                          std::mt19937_64& rng) {
    model.validate();
    auto draw = [&rng](const GammaParams& g) {
        std::gamma_distribution<double> d(g.shape, 1.0 / g.rate);
        return d(rng);
    };
    double lambda_norm = draw(model.lambda_prior);
    double sigma = draw(model.sigma_prior);
    double mu = draw(model.mu_prior);
    return make_deployment_params(lambda_norm, sigma, mu, model.nu, model.delta);
}

double sample_event_time(const DeploymentParams& params, EventKind kind,
                         std::mt19937_64& rng) {
    double rate = 0.0;
    switch (kind) {
        case EventKind::scaleout: rate = params.scaleout_rate; break;
        case EventKind::core_death: rate = params.mu; break;
        case EventKind::shutdown: rate = params.shutdown_rate; break;
    }
    std::exponential_distribution<double> d(rate);
    return d(rng);
}

std::int64_t sample_scaleout_size(const DeploymentParams& params, std::mt19937_64& rng) {
    if (params.sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
    if (params.sigma == 0.0) return 1;
    std::poisson_distribution<std::int64_t> d(params.sigma);
    return 1 + d(rng);
}

std::int64_t sample_initial_size(const PopulationModel& model,
                                 const DeploymentParams& params, std::mt19937_64& rng) {
    if (!model.initial_size_is_scaleout) return 1;
    return sample_scaleout_size(params, rng);
}

}  // namespace admission
