#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <variant>

#include "dcboost/dc_problem.hpp"

namespace dcboost {

/// What a growth-budget rule may look at. `d` is the current DCA direction
/// d^k = y^k - x^k; `phi_history` holds phi(x^0), ..., phi(x^k).
struct NuContext {
  int k = 0;
  Point d;
  double lambda_prev = 0.0;  ///< lambda_{k-1}
  double lambda_k = 0.0;     ///< accepted step; only read by update()
  double rho = 0.0;
  double zeta = 0.0;
  double sigma = 0.0;
  std::span<const double> phi_history;
  double nu_prev = 0.0;
  bool g_smooth = false;
};

namespace nu {

struct Zero {};

/// nu_k = nu0 * ratio^k, an exogenous summable sequence.
struct Summable {
  double nu0 = 1.0;
  double ratio = 0.5;
};

/// Zhang-Hager cost averaging: nu_k = C_k - phi(x^k) with
/// Q_{k+1} = eta Q_k + 1, C_{k+1} = (eta Q_k C_k + phi(x^{k+1})) / Q_{k+1}.
/// C_0 = phi(x^0) + c0_offset, Q_0 = 1.
struct ZhangHager {
  double eta = 0.5;
  double c0_offset = 1.0;
  // recursion state
  bool started = false;
  double C = 0.0;
  double Q = 1.0;
};

/// nu_{k+1} = (1 - delta) (sigma + rho lambda_k^2) |d^k|^2 with fixed delta.
struct Geometric {
  double nu0 = 1.0;
  double delta = 0.5;
  double next = 0.0;  // nu for the current k once k > 0
};

/// nu_k = omega |d^k|^2 / (k + 1)
struct PowerDecay {
  double omega = 0.01;
};

/// nu_k = omega |d^k|^2 / ln(k + 2)
struct LogDecay {
  double omega = 0.01;
};

/// Max over the last m_k + 1 objective values minus phi(x^k), with
/// m_k = min(m_{k-1} + 1, M). nu_0 = 0, so it needs a differentiable g.
struct Grippo {
  int M = 5;
  int m = 0;
};

}  // namespace nu

using NuState = std::variant<nu::Zero, nu::Summable, nu::ZhangHager, nu::Geometric, nu::PowerDecay,
                             nu::LogDecay, nu::Grippo>;

/// One growth-budget rule plus its recursion state, owned by a single run.
class NuStrategy {
 public:
  NuStrategy() = default;
  NuStrategy(NuState state) : state_(std::move(state)) {}  // NOLINT: implicit by intent
  template <class Rule>
    requires std::is_constructible_v<NuState, Rule> && (!std::is_same_v<std::decay_t<Rule>, NuState>) &&
             (!std::is_same_v<std::decay_t<Rule>, NuStrategy>)
  NuStrategy(Rule rule) : state_(std::move(rule)) {}  // NOLINT: implicit by intent

  /// nu_k for the context's iteration. Call after d^k is known and before the
  /// line search. Throws ConfigError for Grippo without a smooth g.
  double value(const NuContext& ctx);

  /// Advance the recursion once x^{k+1} is fixed.
  void update(double phi_next, const NuContext& ctx);

  /// Averaging rules (zhang_hager, geometric) report the delta_{k+1} of the last update;
  /// other rules return 0.
  double last_delta() const { return last_delta_; }

  /// The smallest delta_{k+1} the rule can produce (0 for the other rules).
  double delta_min() const;

  /// Whether nu_k > 0 is guaranteed for nonzero directions.
  bool strictly_positive() const;

  const NuState& state() const { return state_; }
  std::string name() const;

 private:
  NuState state_ = nu::PowerDecay{};
  double last_delta_ = 0.0;
};

/// Builds a rule from its CLI name (zero, summable, zhang_hager, geometric,
/// power, log, grippo) with `param` as omega (power/log), eta (zhang_hager),
/// delta (geometric), M (grippo) or nu0 (summable). Throws ConfigError.
NuStrategy make_nu_strategy(const std::string& name, double param);

enum class DecayKind { kPower, kLog };

/// Smallest k0 with nu_k <= varsigma * sigma * |d^k|^2 for every k >= k0 under
/// the power (omega/(k+1)) or log (omega/ln(k+2)) rule, clamped at 0.
std::int64_t s3_threshold_index(DecayKind kind, double omega, double varsigma, double sigma);

/// nu_k <= delta_bar |d^k|^2 with delta_bar in (0, sigma); a check, not a rule.
bool satisfies_s3_prime(double nu_k, double d_norm2, double delta_bar, double sigma);

}  // namespace dcboost
