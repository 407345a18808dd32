#include "admission/belief.hpp"

#include <cmath>
#include <stdexcept>

namespace admission {

BeliefState make_prior_belief(const PopulationModel& model) {
    model.validate();
    BeliefState b;
    b.lambda_post = model.lambda_prior;
    b.sigma_post = model.sigma_prior;
    b.mu_post = model.mu_prior;
    b.nu = model.nu;
    return b;
}

BeliefState init_belief(const PopulationModel& model, InfoLevel info,
                        const DeploymentParams& true_params, std::mt19937_64& rng) {
    BeliefState b = make_prior_belief(model);
    std::exponential_distribution<double> life(true_params.mu);
    std::exponential_distribution<double> wait(true_params.scaleout_rate);
    for (std::uint64_t i = 0; i < info.pseudo_observations; ++i) {
        b = update_on_core_death(b, life(rng));
        std::int64_t size = sample_scaleout_size(true_params, rng);
        b = update_on_scaleout(b, size, wait(rng));
    }
    return b;
}

BeliefState update_on_core_death(const BeliefState& b, double lifetime) {
    if (lifetime < 0.0) throw std::invalid_argument("core lifetime must be >= 0");
    BeliefState n = b;
    n.mu_post.shape += 1.0;
    n.mu_post.rate += lifetime;
    n.n_core_deaths += 1;
    n.total_core_exposure += lifetime;
    return n;
}

BeliefState update_on_exposure(const BeliefState& b, double elapsed,
                               std::int64_t live_cores) {
    if (elapsed < 0.0) throw std::invalid_argument("elapsed must be >= 0");
    if (live_cores < 0) throw std::invalid_argument("live_cores must be >= 0");
    BeliefState n = b;
    double add = elapsed * static_cast<double>(live_cores);
    n.mu_post.rate += add;
    n.total_core_exposure += add;
    return n;
}

BeliefState update_on_scaleout(const BeliefState& b, std::int64_t size,
                               double elapsed_since_last) {
    if (size < 1) throw std::invalid_argument("scale-out size must be >= 1");
    if (elapsed_since_last < 0.0) throw std::invalid_argument("elapsed must be >= 0");
    BeliefState n = observe_scaleout_size(b, size);
    n.lambda_post.shape += 1.0;
    n.lambda_post.rate += elapsed_since_last * std::pow(b.mu_post.mean(), b.nu);
    n.n_scaleouts += 1;
    n.deployment_age += elapsed_since_last;
    return n;
}

BeliefState observe_scaleout_size(const BeliefState& b, std::int64_t size) {
    if (size < 1) throw std::invalid_argument("scale-out size must be >= 1");
    BeliefState n = b;
    n.sigma_post.shape += static_cast<double>(size - 1);
    n.sigma_post.rate += 1.0;
    n.extra_cores_observed += static_cast<std::uint64_t>(size - 1);
    return n;
}

}  // namespace admission
