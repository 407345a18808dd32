#pragma once

#include <cstdint>
#include <vector>

#include "admission/belief.hpp"

namespace admission {

struct LookaheadGrid {
    // 24 h, 1 week, 1 month, 1 year, 3 years; each horizon gets its own
    // steps_per_horizon-step discretization and must satisfy the policy
    // constraint on all of them
    std::vector<double> horizons_hours{24.0, 168.0, 730.0, 8760.0, 26280.0};
    int steps_per_horizon = 600;
    double marginality_epsilon = 1e-5;

    void validate() const;
    std::uint64_t id() const;  // structural hash, used for grid-mismatch checks
};

struct HorizonMoments {
    double step_hours = 0.0;
    // index 0 is "now" (e = cores, v = 0); entries run to steps_per_horizon
    // or stop at the marginality cutoff
    std::vector<double> e;
    std::vector<double> v;
    int truncated_at = -1;  // first step where both moments fell below epsilon

    double e_at(int n) const { return n < static_cast<int>(e.size()) ? e[n] : 0.0; }
    double v_at(int n) const { return n < static_cast<int>(v.size()) ? v[n] : 0.0; }
};

struct MomentProfile {
    std::uint64_t grid_id = 0;
    std::int64_t cores_at_origin = 0;
    std::vector<HorizonMoments> horizons;
};

// --- closed-form building blocks (reference path, plain libm) ---

// survival probability of one core over dt hours under the mu posterior
double e_Z(const GammaParams& mu_post, double n_hours, double i_hours);
double v_Z(const GammaParams& mu_post, double n_hours, double i_hours);

// deployment not shut down within n_hours
double e_Omega(const GammaParams& mu_post, double delta, double n_hours);
double v_Omega(const GammaParams& mu_post, double delta, double n_hours);

// expected cores from scale-outs in steps 1..n-1 still alive at step n,
// ignoring deployment death; direct sums, O(n) / O(n^2)
double e_Q(const BeliefState& b, int n, double step_hours);
double v_Q(const BeliefState& b, int n, double step_hours);

double e_B(const BeliefState& b, std::int64_t cores, int n, double step_hours);
double v_B(const BeliefState& b, std::int64_t cores, int n, double step_hours);

// upper bound on the probability the deployment still has at least one core
// at step n (forward recursion)
double e_D(const BeliefState& b, std::int64_t cores, int n, double step_hours);

// --- full profiles ---

struct MomentOptions {
    bool need_variance = true;
    bool use_fast_kernel = true;
};

// incremental serial reference (libm transcendentals); kept for testing
void profile_horizon_ref(const BeliefState& b, std::int64_t cores, int steps,
                         double step_hours, double delta, double epsilon,
                         bool need_variance, HorizonMoments& out);

// optimized kernel (vectorizable exp/log, fused power arrays)
void profile_horizon_fast(const BeliefState& b, std::int64_t cores, int steps,
                          double step_hours, double delta, double epsilon,
                          bool need_variance, HorizonMoments& out);

MomentProfile moment_profile(const BeliefState& b, std::int64_t cores,
                             const LookaheadGrid& grid, double delta,
                             const MomentOptions& opt = {});

void dump_profile_csv(const MomentProfile& profile, const LookaheadGrid& grid,
                      std::ostream& os);

}  // namespace admission
