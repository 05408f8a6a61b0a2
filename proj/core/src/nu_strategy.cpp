#include "dcboost/nu_strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dcboost/errors.hpp"

namespace dcboost {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double current_phi(const NuContext& ctx) {
  if (ctx.phi_history.empty()) throw ConfigError("NuContext: phi_history must not be empty");
  return ctx.phi_history.back();
}

}  // namespace

double NuStrategy::value(const NuContext& ctx) {
  const double d2 = ctx.d.squaredNorm();
  return std::visit(
      overloaded{
          [](nu::Zero&) { return 0.0; },
          [&](nu::Summable& s) { return s.nu0 * std::pow(s.ratio, ctx.k); },
          [&](nu::ZhangHager& s) {
            const double phi_k = current_phi(ctx);
            if (!s.started) {
              s.started = true;
              s.C = phi_k + s.c0_offset;
              s.Q = 1.0;
            }
            return std::max(0.0, s.C - phi_k);
          },
          [&](nu::Geometric& s) { return ctx.k == 0 ? s.nu0 : s.next; },
          [&](nu::PowerDecay& s) { return s.omega * d2 / (ctx.k + 1.0); },
          [&](nu::LogDecay& s) { return s.omega * d2 / std::log(ctx.k + 2.0); },
          [&](nu::Grippo& s) {
            if (!ctx.g_smooth) {
              throw ConfigError(
                  "grippo nu strategy has nu_0 = 0 and needs a differentiable g; this problem's g is "
                  "nonsmooth");
            }
            const auto& hist = ctx.phi_history;
            const double phi_k = current_phi(ctx);
            const auto window = std::min<std::size_t>(static_cast<std::size_t>(s.m) + 1, hist.size());
            const double ref = *std::max_element(hist.end() - static_cast<std::ptrdiff_t>(window), hist.end());
            return std::max(0.0, ref - phi_k);
          },
      },
      state_);
}

void NuStrategy::update(double phi_next, const NuContext& ctx) {
  last_delta_ = 0.0;
  std::visit(overloaded{
                 [](nu::Zero&) {},
                 [](nu::Summable&) {},
                 [&](nu::ZhangHager& s) {
                   if (!s.started) {
                     s.started = true;
                     s.C = current_phi(ctx) + s.c0_offset;
                     s.Q = 1.0;
                   }
                   const double q_next = s.eta * s.Q + 1.0;
                   s.C = (s.eta * s.Q * s.C + phi_next) / q_next;
                   s.Q = q_next;
                   last_delta_ = 1.0 / q_next;
                 },
                 [&](nu::Geometric& s) {
                   s.next = (1.0 - s.delta) * (ctx.sigma + ctx.rho * ctx.lambda_k * ctx.lambda_k) *
                            ctx.d.squaredNorm();
                   last_delta_ = s.delta;
                 },
                 [](nu::PowerDecay&) {},
                 [](nu::LogDecay&) {},
                 [](nu::Grippo& s) { s.m = std::min(s.m + 1, s.M); },
             },
             state_);
}

double NuStrategy::delta_min() const {
  return std::visit(overloaded{
                        [](const nu::ZhangHager& s) { return 1.0 - s.eta; },
                        [](const nu::Geometric& s) { return s.delta; },
                        [](const auto&) { return 0.0; },
                    },
                    state_);
}

bool NuStrategy::strictly_positive() const {
  return std::visit(overloaded{
                        [](const nu::Zero&) { return false; },
                        [](const nu::Grippo&) { return false; },
                        [](const nu::Summable& s) { return s.nu0 > 0.0 && s.ratio > 0.0; },
                        [](const nu::Geometric& s) { return s.nu0 > 0.0 && s.delta < 1.0; },
                        [](const nu::ZhangHager& s) { return s.c0_offset > 0.0; },
                        [](const nu::PowerDecay& s) { return s.omega > 0.0; },
                        [](const nu::LogDecay& s) { return s.omega > 0.0; },
                    },
                    state_);
}

std::string NuStrategy::name() const {
  return std::visit(overloaded{
                        [](const nu::Zero&) { return std::string("zero"); },
                        [](const nu::Summable&) { return std::string("summable"); },
                        [](const nu::ZhangHager&) { return std::string("zhang_hager"); },
                        [](const nu::Geometric&) { return std::string("geometric"); },
                        [](const nu::PowerDecay&) { return std::string("power"); },
                        [](const nu::LogDecay&) { return std::string("log"); },
                        [](const nu::Grippo&) { return std::string("grippo"); },
                    },
                    state_);
}

NuStrategy make_nu_strategy(const std::string& name, double param) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw ConfigError("nu strategy '" + name + "': " + what);
  };
  if (name == "zero") return nu::Zero{};
  if (name == "summable") {
    require(param > 0.0, "nu0 must be > 0");
    return nu::Summable{param, 0.5};
  }
  if (name == "zhang_hager") {
    require(param >= 0.0 && param < 1.0, "eta must lie in [0, 1)");
    return nu::ZhangHager{param};
  }
  if (name == "geometric") {
    require(param > 0.0 && param < 1.0, "delta must lie in (0, 1)");
    return nu::Geometric{1.0, param};
  }
  if (name == "power") {
    require(param > 0.0, "omega must be > 0");
    return nu::PowerDecay{param};
  }
  if (name == "log") {
    require(param > 0.0, "omega must be > 0");
    return nu::LogDecay{param};
  }
  if (name == "grippo") {
    require(param >= 1.0, "M must be a positive integer");
    return nu::Grippo{static_cast<int>(param)};
  }
  throw ConfigError("unknown nu strategy '" + name + "'");
}

std::int64_t s3_threshold_index(DecayKind kind, double omega, double varsigma, double sigma) {
  if (!(varsigma > 0.0 && varsigma < 1.0)) throw ConfigError("s3_threshold_index: varsigma must lie in (0, 1)");
  if (!(sigma > 0.0)) throw ConfigError("s3_threshold_index: sigma must be > 0");
  if (!(omega > 0.0)) throw ConfigError("s3_threshold_index: omega must be > 0");

  const double budget = varsigma * sigma;
  const double ratio = omega / budget;
  // The coefficient omega/(k+1) or omega/ln(k+2) is decreasing in k, so the
  // condition at a single k0 implies it for all later k.
  auto holds = [&](std::int64_t k) {
    const double kd = static_cast<double>(k);
    const double coeff = kind == DecayKind::kPower ? omega / (kd + 1.0) : omega / std::log(kd + 2.0);
    return coeff <= budget;
  };

  constexpr double kCap = 4.0e18;
  const double raw = kind == DecayKind::kPower ? ratio - 1.0 : std::exp(ratio) - 2.0;
  if (!(raw < kCap)) throw ConfigError("s3_threshold_index: threshold index overflows int64");
  auto k0 = static_cast<std::int64_t>(std::max(0.0, std::ceil(raw)));
  // ceil() of a rounded quotient can land one off the exact boundary.
  while (k0 > 0 && holds(k0 - 1)) --k0;
  while (!holds(k0)) ++k0;
  return k0;
}

bool satisfies_s3_prime(double nu_k, double d_norm2, double delta_bar, double sigma) {
  if (!(delta_bar > 0.0 && delta_bar < sigma)) throw ConfigError("satisfies_s3_prime: delta_bar must lie in (0, sigma)");
  return nu_k <= delta_bar * d_norm2;
}

}  // namespace dcboost
