#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rushsim/exposure.hpp"
#include "rushsim/grid.hpp"

using namespace rushsim;

namespace {

Customer at(CellCoord position, InfectionKind kind = InfectionKind::Susceptible) {
  Customer c;
  c.position = position;
  c.status.kind = kind;
  return c;
}

void accrue(std::vector<Customer>& customers, const StoreLayout& layout, double distance_ft,
            AccrualRule rule = AccrualRule::PerTick) {
  ExposureScratch scratch;
  accrue_exposure(customers, layout, vulnerable_neighborhood(distance_ft, layout.cell_size_feet),
                  rule, scratch);
}

}  // namespace

TEST_CASE("exposure distance semantics around one infective") {
  // One infective and three bystanders at 5', ~7.07' and 10'.
  const StoreLayout layout = StoreLayout::open(20, 20);
  std::vector<Customer> customers = {
      at({5, 5}, InfectionKind::SeedInfective),
      at({5, 6}),  // customer 1: 5 ft
      at({6, 6}),  // customer 2: ~7.07 ft
      at({7, 5}),  // customer 3: 10 ft
  };

  SUBCASE("6 ft: only the orthogonal neighbor accrues") {
    accrue(customers, layout, 6.0);
    CHECK(customers[1].status.exposure_seconds == 1);
    CHECK(customers[2].status.exposure_seconds == 0);
    CHECK(customers[3].status.exposure_seconds == 0);
  }
  SUBCASE("8 ft: the diagonal neighbor accrues too") {
    accrue(customers, layout, 8.0);
    CHECK(customers[1].status.exposure_seconds == 1);
    CHECK(customers[2].status.exposure_seconds == 1);
    CHECK(customers[3].status.exposure_seconds == 0);
  }
  SUBCASE("10 ft inclusive boundary") {
    accrue(customers, layout, 10.0);
    CHECK(customers[3].status.exposure_seconds == 1);
  }
  CHECK(customers[0].status.exposure_seconds == 0);  // infectives never accrue
}

TEST_CASE("no infectives, no exposure") {
  const StoreLayout layout = StoreLayout::open(10, 10);
  std::vector<Customer> customers = {at({1, 1}), at({1, 2}), at({2, 1})};
  accrue(customers, layout, 12.0);
  for (const Customer& c : customers) CHECK(c.status.exposure_seconds == 0);
}

TEST_CASE("accrual rule for simultaneous infectives") {
  const StoreLayout layout = StoreLayout::open(10, 10);
  std::vector<Customer> customers = {
      at({4, 5}, InfectionKind::SeedInfective),
      at({6, 5}, InfectionKind::SeedInfective),
      at({5, 5}),
  };
  SUBCASE("per tick caps at one second") {
    accrue(customers, layout, 6.0, AccrualRule::PerTick);
    CHECK(customers[2].status.exposure_seconds == 1);
  }
  SUBCASE("per infective counts both") {
    accrue(customers, layout, 6.0, AccrualRule::PerInfective);
    CHECK(customers[2].status.exposure_seconds == 2);
  }
}

TEST_CASE("separate encounters compound") {
  const StoreLayout layout = StoreLayout::open(10, 10);
  std::vector<Customer> customers = {at({0, 0}, InfectionKind::SeedInfective), at({0, 1})};
  accrue(customers, layout, 6.0);
  customers[0].position = {9, 9};  // walk away
  accrue(customers, layout, 6.0);
  customers[0].position = {0, 0};  // a different encounter, same clock
  accrue(customers, layout, 6.0);
  CHECK(customers[1].status.exposure_seconds == 2);
}

TEST_CASE("exited customers neither spread nor accrue") {
  const StoreLayout layout = StoreLayout::open(10, 10);
  std::vector<Customer> customers = {at({0, 0}, InfectionKind::SeedInfective), at({0, 1})};
  customers[0].phase = CustomerPhase::Exited;
  accrue(customers, layout, 6.0);
  CHECK(customers[1].status.exposure_seconds == 0);

  customers[0].phase = CustomerPhase::Shopping;
  customers[1].phase = CustomerPhase::Exited;
  accrue(customers, layout, 6.0);
  CHECK(customers[1].status.exposure_seconds == 0);
}

TEST_CASE("threshold is inclusive") {
  ExposureParams params;
  params.threshold_seconds = 120;
  Customer c = at({0, 0});

  c.status.exposure_seconds = 119;
  CHECK(!check_infection(c, params, 500));
  CHECK(c.status.kind == InfectionKind::Susceptible);

  c.status.exposure_seconds = 120;
  CHECK(check_infection(c, params, 501));
  CHECK(c.status.kind == InfectionKind::NewlyInfected);
  CHECK(c.status.infected_at_tick == 501);
  CHECK(!c.status.infective());  // spread flag off

  CHECK(!check_infection(c, params, 502));  // only flips once
}

TEST_CASE("spread flag controls whether the newly infected spread") {
  const StoreLayout layout = StoreLayout::open(10, 10);
  for (const bool spread : {false, true}) {
    ExposureParams params;
    params.threshold_seconds = 1;
    params.newly_infected_spread = spread;

    Customer fresh = at({0, 0});
    fresh.status.exposure_seconds = 1;
    REQUIRE(check_infection(fresh, params, 10));
    CHECK(fresh.status.infective() == spread);

    std::vector<Customer> customers = {fresh, at({0, 1})};
    accrue(customers, layout, 6.0);
    CHECK(customers[1].status.exposure_seconds == (spread ? 1 : 0));
  }
}

TEST_CASE("accrual depends on infective positions, not identities") {
  const StoreLayout layout = StoreLayout::open(10, 10);
  // Two mirrored placements of the infective around the same susceptible.
  std::vector<Customer> left = {at({4, 5}, InfectionKind::SeedInfective), at({5, 5}),
                                at({6, 5})};
  std::vector<Customer> right = {at({4, 5}), at({5, 5}), at({6, 5}, InfectionKind::SeedInfective)};
  for (int tick = 0; tick < 5; ++tick) {
    accrue(left, layout, 6.0);
    accrue(right, layout, 6.0);
  }
  CHECK(left[1].status.exposure_seconds == right[1].status.exposure_seconds);
}

TEST_CASE("exposure params validity") {
  ExposureParams params;
  CHECK(params.valid());
  params.max_distance_feet = 0;
  CHECK(!params.valid());
  params.max_distance_feet = 6;
  params.threshold_seconds = 0;
  CHECK(!params.valid());
  params.threshold_seconds = 120;
  params.seed_fraction = 1.5;
  CHECK(!params.valid());
}
