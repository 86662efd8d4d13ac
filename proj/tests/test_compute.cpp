#include <doctest.h>

#include "thermosim/compute.hpp"

using namespace thermosim;
using doctest::Approx;

TEST_CASE("affine power") {
  const ProcessorSpec nano{1.0, 10.0};
  CHECK(power_at(nano, OperatingPoint{1.0}) == Approx(10.0));
  CHECK(power_at(nano, OperatingPoint{0.0}) == Approx(1.0));
  CHECK(power_at(nano, OperatingPoint{0.5}) == Approx(5.5));
  const ProcessorSpec servers{0.0, 250.0, 8};
  CHECK(power_at(servers, OperatingPoint{1.0}) == Approx(2000.0));
}

TEST_CASE("work rate is linear in utilization") {
  const ProcessorSpec nano{1.0, 10.0};
  CHECK(work_rate(nano, OperatingPoint{1.0}) / work_rate(nano, OperatingPoint{0.1}) ==
        Approx(10.0));
  CHECK(work_rate(nano, OperatingPoint{0.0}) == 0.0);
  CHECK(work_rate(nano, OperatingPoint{0.5}) * 2.0 == Approx(1.0));
  CHECK(work_rate(ProcessorSpec{0, 250, 8}, OperatingPoint{1.0}) == Approx(8.0));
}

TEST_CASE("all power becomes heat") {
  const ProcessorSpec nano{1.0, 10.0};
  CHECK(heat_output(nano, OperatingPoint{1.0}) == Approx(10.0));
  CHECK(heat_output(nano, OperatingPoint{0.0}) == Approx(1.0));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS(OperatingPoint{1.01});
  CHECK_THROWS(OperatingPoint{-0.1});
  CHECK_THROWS(ProcessorSpec{5.0, 1.0}.validate());
  CHECK_THROWS(ProcessorSpec{1.0, 5.0, 0}.validate());
}
