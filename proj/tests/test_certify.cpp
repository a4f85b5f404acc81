#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "synge/certify.hpp"

using namespace synge;

namespace {

const CheckResult* find(const std::vector<CheckResult>& v, const std::string& name, const std::string& gas) {
  for (const auto& c : v) {
    if (c.name == name && c.gas == gas) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("default certification passes and covers every family", "[certify]") {
  const CertReport rep = certify_all(CertOptions{});
  CHECK(rep.all_passed());
  CHECK(rep.label == "numerical evidence");
  auto fam = rep.families();
  auto want = certification_families();
  std::sort(fam.begin(), fam.end());
  std::sort(want.begin(), want.end());
  CHECK(fam == want);
  for (const auto& c : rep.checks) {
    INFO(c.family << "/" << c.name << "/" << c.gas);
    CHECK(c.passed);
    CHECK(c.failures == 0);
    CHECK(c.worst_margin > 0.0);
    CHECK(c.points > 0);
  }
  // the full e_pp grid includes every refinement
  const auto* epp = find(rep.checks, "epp_negative", "mono");
  REQUIRE(epp != nullptr);
  CHECK(epp->points == static_cast<int>(GridSpec{}.build().size()));
}

TEST_CASE("grid construction", "[certify]") {
  GridSpec g;
  const auto x = g.build();
  CHECK(std::is_sorted(x.begin(), x.end()));
  CHECK(std::adjacent_find(x.begin(), x.end()) == x.end());
  CHECK(x.front() == g.lo);
  CHECK(x.back() == g.hi);
  CHECK(x.size() > static_cast<std::size_t>(g.points));

  GridSpec narrow;
  narrow.lo = 10.0;
  narrow.hi = 20.0;
  for (double v : narrow.build()) {
    CHECK(v >= 10.0);
    CHECK(v <= 20.0);
  }
  GridSpec bad;
  bad.lo = 5.0;
  bad.hi = 1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = GridSpec{};
  bad.points = 1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = GridSpec{};
  bad.refine_factor = 1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("an injected fault is reported", "[certify]") {
  CertOptions opt;
  opt.inject_fault = "h0_lower_mid";
  const auto v = certify_bessel_bounds(opt);
  const auto* c = find(v, "h0_lower_mid", "-");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK(c->failures == c->points);
  CHECK(c->worst_margin < 0.0);
  for (const auto& o : v) {
    if (o.name != "h0_lower_mid") CHECK(o.passed);
  }
}

TEST_CASE("custom grid gives a subset report", "[certify]") {
  CertOptions opt;
  opt.grid.lo = 10.0;
  opt.grid.hi = 20.0;
  opt.grid.points = 64;
  const auto v = certify_epp_negative(GasKind::diatomic, opt);
  REQUIRE_FALSE(v.empty());
  for (const auto& c : v) CHECK(c.passed);
  // no case boundary lies in [10, 20]
  CHECK(v.size() == 1);
}

TEST_CASE("parallel and serial evaluation are bit-identical", "[certify]") {
  std::vector<double> x;
  for (int k = 0; k < 5000; ++k) x.push_back(1e-3 * std::pow(1e6, k / 4999.0));
  auto f = [](double g) { return p_epp(GasKind::monatomic, g); };
  const auto a = evaluate_points(x, f, true);
  const auto b = evaluate_points(x, f, false);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);

  CertOptions s;
  s.parallel = false;
  const auto ra = certify_ep_gt3_and_monotone_lambda(GasKind::diatomic, CertOptions{});
  const auto rb = certify_ep_gt3_and_monotone_lambda(GasKind::diatomic, s);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) CHECK(ra[k].worst_margin == rb[k].worst_margin);
}

TEST_CASE("evaluation failures count as check failures", "[certify]") {
  std::vector<double> x{1.0, 2.0, 3.0};
  const auto v = evaluate_points(x, [](double g) -> double {
    if (g == 2.0) throw DomainError("boom");
    return g;
  }, false);
  CHECK(v[0] == 1.0);
  CHECK(std::isnan(v[1]));
  CHECK(v[2] == 3.0);
}

TEST_CASE("shock structure checks each scenario", "[certify]") {
  const auto v = certify_shock_structure(CertOptions{});
  CHECK(v.size() == default_shock_scenarios().size());
  for (const auto& c : v) CHECK(c.passed);
}
