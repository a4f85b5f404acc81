#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "synge/ode.hpp"

using namespace synge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("exponential decay to the end point", "[ode]") {
  ode::Rhs<1> f = [](double, const ode::Vec<1>& y, ode::Vec<1>& dy) {
    dy[0] = -y[0];
    return true;
  };
  ode::Options o;
  o.rel_tol = 1e-12;
  o.abs_tol = 1e-14;
  const auto r = ode::integrate<1>(f, 0.0, {1.0}, 5.0, o);
  CHECK(r.status == ode::Status::reached_end);
  CHECK(r.t_final == 5.0);
  CHECK_THAT(r.y_final[0], WithinRel(std::exp(-5.0), 1e-10));
  // dense output between the accepted steps
  for (const auto& st : r.steps) {
    const double tm = st.t0 + 0.37 * st.h;
    CHECK_THAT(st(tm)[0], WithinRel(std::exp(-tm), 1e-9));
  }
}

TEST_CASE("events are located on the dense output", "[ode]") {
  // harmonic oscillator; x = cos t crosses zero at pi/2
  ode::Rhs<2> f = [](double, const ode::Vec<2>& y, ode::Vec<2>& dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
    return true;
  };
  ode::Options o;
  o.rel_tol = 1e-12;
  o.abs_tol = 1e-14;
  o.event_tol = 1e-14;
  std::vector<ode::Event<2>> ev;
  ev.push_back({7, [](double, const ode::Vec<2>& y) { return y[0]; }, -1, true});
  const auto r = ode::integrate<2>(f, 0.0, {1.0, 0.0}, 10.0, o, ev);
  REQUIRE(r.status == ode::Status::terminal_event);
  REQUIRE(r.hits.size() == 1);
  CHECK(r.hits[0].id == 7);
  CHECK_THAT(r.hits[0].t, WithinAbs(M_PI / 2.0, 1e-10));
  CHECK_THAT(r.y_final[1], WithinRel(-1.0, 1e-10));
}

TEST_CASE("non-terminal events are all recorded and direction filters apply", "[ode]") {
  ode::Rhs<2> f = [](double, const ode::Vec<2>& y, ode::Vec<2>& dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
    return true;
  };
  ode::Options o;
  std::vector<ode::Event<2>> ev;
  ev.push_back({1, [](double, const ode::Vec<2>& y) { return y[0]; }, +1, false});
  const auto r = ode::integrate<2>(f, 0.0, {1.0, 0.0}, 4.0 * M_PI, o, ev);
  CHECK(r.status == ode::Status::reached_end);
  REQUIRE(r.hits.size() == 2);  // rising crossings at 3pi/2 and 7pi/2
  CHECK_THAT(r.hits[0].t, WithinAbs(1.5 * M_PI, 1e-8));
  CHECK_THAT(r.hits[1].t, WithinAbs(3.5 * M_PI, 1e-8));
}

TEST_CASE("backward integration", "[ode]") {
  ode::Rhs<1> f = [](double t, const ode::Vec<1>&, ode::Vec<1>& dy) {
    dy[0] = 3.0 * t * t;
    return true;
  };
  const auto r = ode::integrate<1>(f, 2.0, {8.0}, -1.0, ode::Options{});
  CHECK(r.status == ode::Status::reached_end);
  CHECK_THAT(r.y_final[0], WithinAbs(-1.0, 1e-10));
}

TEST_CASE("a domain wall stops the integration", "[ode]") {
  // y' = 1 / (1 - t) is only allowed for t < 1
  ode::Rhs<1> f = [](double t, const ode::Vec<1>&, ode::Vec<1>& dy) {
    if (t >= 1.0) return false;
    dy[0] = 1.0 / (1.0 - t);
    return true;
  };
  const auto r = ode::integrate<1>(f, 0.0, {0.0}, 2.0, ode::Options{});
  CHECK(r.status == ode::Status::rejected_domain);
  CHECK(r.t_final < 1.0);
  CHECK(r.t_final > 0.99);
}
