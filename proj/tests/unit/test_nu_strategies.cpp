#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dcboost/errors.hpp"
#include "dcboost/nu_strategy.hpp"
#include "test_util.hpp"

namespace dcboost {
namespace {

using testing::pt;

NuContext ctx_with(int k, const Point& d, const std::vector<double>& history, bool smooth = false) {
  NuContext c;
  c.k = k;
  c.d = d;
  c.lambda_prev = 1.0;
  c.rho = 0.5;
  c.zeta = 0.5;
  c.sigma = 1.0;
  c.phi_history = history;
  c.g_smooth = smooth;
  return c;
}

TEST(NuValue, PowerDecay) {
  NuStrategy s = nu::PowerDecay{0.01};
  const std::vector<double> h{1.0};
  EXPECT_DOUBLE_EQ(s.value(ctx_with(0, pt({0.5, -1.0}), h)), 0.0125);
  EXPECT_DOUBLE_EQ(s.value(ctx_with(4, pt({0.5, -1.0}), h)), 0.0125 / 5.0);
}

TEST(NuValue, LogDecay) {
  NuStrategy s = nu::LogDecay{0.01};
  const std::vector<double> h{1.0};
  EXPECT_DOUBLE_EQ(s.value(ctx_with(3, pt({1.0, 1.0}), h)), 0.02 / std::log(5.0));
}

TEST(NuValue, ZeroAndSummable) {
  const std::vector<double> h{1.0};
  NuStrategy z = nu::Zero{};
  EXPECT_EQ(z.value(ctx_with(0, pt({3.0}), h)), 0.0);
  NuStrategy s = nu::Summable{};
  EXPECT_DOUBLE_EQ(s.value(ctx_with(3, pt({3.0}), h)), 0.125);
}

TEST(ZhangHager, HandRecursion) {
  // C0 = phi(x0) + 1 = 3, Q0 = 1, eta = 0.5, phi(x1) = 1:
  // Q1 = 0.5 * 1 + 1 = 1.5, C1 = (0.5 * 1 * 3 + 1) / 1.5 = 5/3, nu1 = 5/3 - 1.
  NuStrategy s = nu::ZhangHager{0.5, 1.0};
  std::vector<double> hist{2.0};
  EXPECT_DOUBLE_EQ(s.value(ctx_with(0, pt({1.0}), hist)), 1.0);
  s.update(1.0, ctx_with(0, pt({1.0}), hist));
  const auto& st = std::get<nu::ZhangHager>(s.state());
  EXPECT_DOUBLE_EQ(st.Q, 1.5);
  EXPECT_DOUBLE_EQ(st.C, 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.last_delta(), 1.0 / 1.5);
  hist.push_back(1.0);
  EXPECT_NEAR(s.value(ctx_with(1, pt({1.0}), hist)), 2.0 / 3.0, 1e-15);
}

TEST(ZhangHager, QStaysAtLeastOneAndDeltaAboveFloor) {
  NuStrategy s = nu::ZhangHager{0.5, 1.0};
  std::vector<double> hist{10.0};
  for (int k = 0; k < 30; ++k) {
    s.value(ctx_with(k, pt({1.0}), hist));
    const double next = hist.back() - 0.3;
    s.update(next, ctx_with(k, pt({1.0}), hist));
    hist.push_back(next);
    const auto& st = std::get<nu::ZhangHager>(s.state());
    EXPECT_GE(st.Q, 1.0);
    EXPECT_GE(st.C, hist.back());
    EXPECT_GE(s.last_delta(), s.delta_min() - 1e-15);
  }
}

TEST(Geometric, UpdateFormula) {
  // (1 - 0.5)(1 + 0.5 * 1^2) * 2 = 1.5 with |d|^2 = 2.
  NuStrategy s = nu::Geometric{1.0, 0.5};
  const std::vector<double> h{0.0};
  NuContext c = ctx_with(0, pt({1.0, 1.0}), h);
  EXPECT_DOUBLE_EQ(s.value(c), 1.0);
  c.lambda_k = 1.0;
  s.update(-1.0, c);
  EXPECT_DOUBLE_EQ(s.value(ctx_with(1, pt({5.0, 5.0}), h)), 1.5);
  EXPECT_DOUBLE_EQ(s.delta_min(), 0.5);
}

double window_max_oracle(const std::vector<double>& hist, int m) {
  double best = hist.back();
  for (int i = 0; i <= m && i < static_cast<int>(hist.size()); ++i) best = std::max(best, hist[hist.size() - 1 - i]);
  return best;
}

TEST(Grippo, WindowMaximum) {
  NuStrategy s = nu::Grippo{2};
  std::vector<double> hist{5.0};
  EXPECT_EQ(s.value(ctx_with(0, pt({1.0}), hist, true)), 0.0);  // nu_0 = 0
  int m = 0;
  for (double next : {4.0, 6.0, 3.0, 2.5}) {
    s.update(next, ctx_with(0, pt({1.0}), hist, true));
    m = std::min(m + 1, 2);
    hist.push_back(next);
    EXPECT_DOUBLE_EQ(s.value(ctx_with(static_cast<int>(hist.size()) - 1, pt({1.0}), hist, true)),
                     window_max_oracle(hist, m) - hist.back());
  }
  // window [5, 4, 6] ending at 6: max is the current value, so nu = 0
  NuStrategy t = nu::Grippo{2};
  std::vector<double> h3{5.0};
  t.update(4.0, ctx_with(0, pt({1.0}), h3, true));
  h3.push_back(4.0);
  t.update(6.0, ctx_with(1, pt({1.0}), h3, true));
  h3.push_back(6.0);
  EXPECT_EQ(t.value(ctx_with(2, pt({1.0}), h3, true)), 0.0);
  EXPECT_EQ(std::get<nu::Grippo>(t.state()).m, 2);
}

TEST(Grippo, RejectsNonsmoothG) {
  NuStrategy s = nu::Grippo{3};
  const std::vector<double> h{1.0};
  EXPECT_THROW(s.value(ctx_with(0, pt({1.0}), h, false)), ConfigError);
  EXPECT_FALSE(s.strictly_positive());
}

TEST(MakeNuStrategy, NamesAndErrors) {
  EXPECT_EQ(make_nu_strategy("power", 0.01).name(), "power");
  EXPECT_EQ(make_nu_strategy("log", 0.01).name(), "log");
  EXPECT_EQ(make_nu_strategy("zhang_hager", 0.5).name(), "zhang_hager");
  EXPECT_EQ(make_nu_strategy("geometric", 0.5).name(), "geometric");
  EXPECT_EQ(make_nu_strategy("grippo", 4).name(), "grippo");
  EXPECT_EQ(make_nu_strategy("summable", 1).name(), "summable");
  EXPECT_EQ(make_nu_strategy("zero", 0).name(), "zero");
  EXPECT_THROW(make_nu_strategy("power", 0.0), ConfigError);
  EXPECT_THROW(make_nu_strategy("geometric", 1.0), ConfigError);
  EXPECT_THROW(make_nu_strategy("bogus", 1.0), ConfigError);
}

std::int64_t scan_threshold(DecayKind kind, double omega, double varsigma, double sigma) {
  for (std::int64_t k = 0;; ++k) {
    const double c = kind == DecayKind::kPower ? omega / (k + 1.0) : omega / std::log(k + 2.0);
    if (c <= varsigma * sigma) return k;
  }
}

TEST(DecayThreshold, DocumentedValues) {
  EXPECT_EQ(s3_threshold_index(DecayKind::kPower, 0.01, 0.5, 1.0), 0);
  EXPECT_EQ(s3_threshold_index(DecayKind::kPower, 10.0, 0.5, 1.0), 19);
  EXPECT_EQ(s3_threshold_index(DecayKind::kLog, 1.0, 0.5, 1.0), 6);
  EXPECT_EQ(scan_threshold(DecayKind::kLog, 1.0, 0.5, 1.0), 6);
}

TEST(DecayThreshold, MatchesScanOnRandomTriples) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> om(0.01, 40.0), vs(0.05, 0.95), sg(0.1, 10.0), lr(0.1, 12.0);
  for (int t = 0; t < 200; ++t) {
    const double omega = om(gen), varsigma = vs(gen), sigma = sg(gen);
    EXPECT_EQ(s3_threshold_index(DecayKind::kPower, omega, varsigma, sigma),
              scan_threshold(DecayKind::kPower, omega, varsigma, sigma));
    // keep e^{omega/(varsigma sigma)} scan-sized
    const double budget = varsigma * sigma;
    const double omega_log = lr(gen) * budget;
    EXPECT_EQ(s3_threshold_index(DecayKind::kLog, omega_log, varsigma, sigma),
              scan_threshold(DecayKind::kLog, omega_log, varsigma, sigma));
  }
}

TEST(DecayThreshold, BoundaryIsExact) {
  // omega / (k + 1) == varsigma sigma exactly at k = 3
  EXPECT_EQ(s3_threshold_index(DecayKind::kPower, 2.0, 0.5, 1.0), 3);
  EXPECT_THROW(s3_threshold_index(DecayKind::kPower, 1.0, 1.0, 1.0), ConfigError);
  EXPECT_THROW(s3_threshold_index(DecayKind::kLog, 1e4, 0.01, 0.01), ConfigError);
}

TEST(RelaxedBudgetCheck, Check) {
  EXPECT_TRUE(satisfies_s3_prime(0.1, 1.0, 0.5, 1.0));
  EXPECT_FALSE(satisfies_s3_prime(0.6, 1.0, 0.5, 1.0));
  EXPECT_THROW(satisfies_s3_prime(0.1, 1.0, 1.5, 1.0), ConfigError);
}

}  // namespace
}  // namespace dcboost
