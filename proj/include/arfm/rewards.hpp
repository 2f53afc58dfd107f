#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "arfm/errors.hpp"
#include "arfm/stats.hpp"

namespace arfm {

// Dense reward composition, return-to-go, leave-one-out advantages and
// per-task standardization. Weights follow the 13-component dense reward
// table; the image-similarity rows that need a camera (SSIM, ORB, gripper
// views) are pluggable hooks that default to disabled and contribute 0.

struct RewardWeights {
  double subgoal_image_mse = 0.1 / 13.0;
  double joint_position_mse = 0.1 / 13.0;
  double subgoal_division = 0.1 / 13.0;
  double joint_velocity = 0.1 / 13.0;
  double joint_acceleration = 0.1 / 13.0;
  double action_velocity = 0.01 / 13.0;
  double action_acceleration = 0.01 / 13.0;
  double task_success = 0.1 / 13.0;

  // Hook slots; enabled only when a component value is supplied externally.
  double image_ssim = 0.0;
  double image_orb = 0.0;
  double gripper_image = 0.0;

  std::map<std::string, double> as_map() const {
    return {
        {"subgoal_image_mse", subgoal_image_mse},
        {"joint_position_mse", joint_position_mse},
        {"subgoal_division", subgoal_division},
        {"joint_velocity", joint_velocity},
        {"joint_acceleration", joint_acceleration},
        {"action_velocity", action_velocity},
        {"action_acceleration", action_acceleration},
        {"task_success", task_success},
        {"image_ssim", image_ssim},
        {"image_orb", image_orb},
        {"gripper_image", gripper_image},
    };
  }
};

struct StepReward {
  double total = 0.0;
  std::map<std::string, double> breakdown;  // component name -> weighted contribution
};

/// Per-sample task id, raw return and standardized advantage R*.
struct AdvantageBatch {
  std::vector<int> task_ids;
  std::vector<double> returns;
  std::vector<double> advantages;
};

namespace detail {
inline double sq_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}
inline void require_len(const std::vector<double>& a, const std::vector<double>& b, const char* where) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(where) + ": vector length mismatch " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}
}  // namespace detail

/// Behavior-smoothness components: negated squared norms of joint velocity,
/// joint acceleration and first/second action differences. Missing
/// predecessors (episode starts) contribute 0.
inline std::map<std::string, double> smoothness_terms(const std::vector<double>* prev2_action,
                                                      const std::vector<double>* prev_action,
                                                      const std::vector<double>& action,
                                                      const std::vector<double>& joint_vel,
                                                      const std::vector<double>& joint_acc) {
  std::map<std::string, double> out;
  out["joint_velocity"] = -detail::sq_norm(joint_vel);
  out["joint_acceleration"] = -detail::sq_norm(joint_acc);

  double av = 0.0;
  if (prev_action != nullptr) {
    detail::require_len(*prev_action, action, "smoothness_terms");
    for (std::size_t i = 0; i < action.size(); ++i) {
      const double d = (*prev_action)[i] - action[i];
      av -= d * d;
    }
  }
  out["action_velocity"] = av;

  double aa = 0.0;
  if (prev2_action != nullptr && prev_action != nullptr) {
    detail::require_len(*prev2_action, action, "smoothness_terms");
    for (std::size_t i = 0; i < action.size(); ++i) {
      const double d = (*prev2_action)[i] - 2.0 * (*prev_action)[i] + action[i];
      aa -= d * d;
    }
  }
  out["action_acceleration"] = aa;
  return out;
}

/// Weighted sum of reward components. Every component with a nonzero weight
/// must be present; hook slots with weight 0 are skipped entirely.
inline StepReward step_reward(const std::map<std::string, double>& components, const RewardWeights& weights) {
  StepReward r;
  for (const auto& [name, w] : weights.as_map()) {
    if (w == 0.0) continue;
    auto it = components.find(name);
    if (it == components.end()) {
      throw ConfigError("step_reward: missing component '" + name + "' for enabled weight");
    }
    const double contribution = w * it->second;
    r.breakdown[name] = contribution;
    r.total += contribution;
  }
  return r;
}

/// Suffix sums: output[t] = sum_{s >= t} rewards[s].
inline std::vector<double> return_to_go(const std::vector<double>& step_rewards) {
  if (step_rewards.empty()) throw DomainError("return_to_go: empty reward sequence");
  std::vector<double> out(step_rewards.size());
  double acc = 0.0;
  for (std::size_t i = step_rewards.size(); i-- > 0;) {
    acc += step_rewards[i];
    out[i] = acc;
  }
  return out;
}

/// Leave-one-out advantage, the K/(K-1)-rescaled deviation from the group
/// mean. Unbiased and critic-free.
inline double loo_advantage(const std::vector<double>& returns, std::size_t k) {
  const std::size_t n = returns.size();
  if (n < 2) throw DomainError("loo_advantage: needs at least 2 samples");
  if (k >= n) throw DomainError("loo_advantage: index out of range");
  const double m = mean(returns);
  return static_cast<double>(n) / static_cast<double>(n - 1) * (returns[k] - m);
}

/// Z-score returns within each task group (population std). Groups of size 1
/// and zero-variance groups map to advantage 0: constant-quality data carries
/// no signal and degenerates to uniform weighting.
inline AdvantageBatch standardize_per_task(const std::vector<double>& returns, const std::vector<int>& task_ids) {
  if (returns.size() != task_ids.size()) {
    throw DimensionError("standardize_per_task: returns/task_ids length mismatch");
  }
  for (double r : returns) {
    if (!std::isfinite(r)) throw DomainError("standardize_per_task: non-finite return");
  }
  AdvantageBatch out;
  out.task_ids = task_ids;
  out.returns = returns;
  out.advantages.assign(returns.size(), 0.0);

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < task_ids.size(); ++i) groups[task_ids[i]].push_back(i);

  for (const auto& [task, idx] : groups) {
    (void)task;
    if (idx.size() < 2) continue;
    std::vector<double> vals;
    vals.reserve(idx.size());
    for (std::size_t i : idx) vals.push_back(returns[i]);
    const double m = mean(vals);
    const double sd = population_stddev(vals);
    if (sd == 0.0) continue;
    for (std::size_t i : idx) out.advantages[i] = (returns[i] - m) / sd;
  }
  return out;
}

}  // namespace arfm
