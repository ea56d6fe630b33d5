#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "morrey/json_io.hpp"
#include "morrey/sequence.hpp"
#include "test_support.hpp"

using namespace morrey;

TEST_CASE("exponent pair validation") {
  CHECK_NOTHROW(MorreyParams(1, 1));
  CHECK_NOTHROW(MorreyParams(1.5, 8));
  CHECK_THROWS_AS(MorreyParams(0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(MorreyParams(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(MorreyParams(1, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK(MorreyParams(2, 4).alpha() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(MorreyParams(3, 3).alpha() == 0.0);
}

TEST_CASE("index strings round-trip") {
  CHECK(index_to_string(0) == "0");
  CHECK(index_to_string(-1) == "-1");
  const Index big = pow2_index(96) + 12345;
  CHECK(parse_index(index_to_string(big)) == big);
  CHECK(parse_index("-79228162514264337593543950336") == -pow2_index(96));
  CHECK_THROWS_AS(parse_index("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("999999999999999999999999999999999999999999"),
                  std::overflow_error);
  CHECK_THROWS_AS(pow2_index(127), std::overflow_error);
}

TEST_CASE("sparse sequence construction") {
  auto seq = SparseSequence::from_pairs({{5, 1.0}, {0, 2.0}, {3, 0.0}});
  REQUIRE(seq.size() == 2);
  CHECK(seq.entries()[0].index == 0);
  CHECK(seq.entries()[1].index == 5);
  CHECK(seq.value_at(0) == 2.0);
  CHECK(seq.value_at(3) == 0.0);
  CHECK(seq.min_index() == 0);
  CHECK(seq.max_index() == 5);

  // equal duplicates merge, conflicting ones are rejected
  CHECK(SparseSequence::from_pairs({{1, 2.0}, {1, 2.0}}).size() == 1);
  CHECK_THROWS_AS(SparseSequence::from_pairs({{1, 2.0}, {1, 3.0}}),
                  std::invalid_argument);
  CHECK(SparseSequence{}.empty());
}

TEST_CASE("window geometry") {
  const Window c = Window::centered(1, 1);
  CHECK(c.lo() == 0);
  CHECK(c.hi() == 2);
  CHECK(c.cardinality() == 3);
  const Window s = Window::span(-3, 5);
  CHECK(s.lo() == -3);
  CHECK(s.hi() == 2);
  CHECK(s.cardinality() == 6);
  CHECK_THROWS_AS(Window::span(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(Window::centered(0, -2), std::invalid_argument);
}

TEST_CASE("prefix masses") {
  const auto seq = SparseSequence::from_pairs({{0, 1.0}, {2, 1.0}});
  CHECK(prefix_masses(seq, 2.0) == std::vector<double>{1.0, 2.0});
  CHECK(prefix_masses(SparseSequence{}, 1.0).empty());
  const auto seq2 = SparseSequence::from_pairs({{0, 1.0}, {1, -2.0}, {5, 3.0}});
  CHECK(prefix_masses(seq2, 2.0) == std::vector<double>{1.0, 5.0, 14.0});
  CHECK_THROWS_AS(prefix_masses(seq, 0.5), std::invalid_argument);
}

TEST_CASE("window masses") {
  const auto seq = SparseSequence::from_pairs({{0, 1.0}, {2, 1.0}});
  CHECK(mass_in_window(seq, Window::span(0, 2), 1.0) == 2.0);
  CHECK(mass_in_window(seq, Window::centered(1, 1), 1.0) == 2.0);
  CHECK(mass_in_window(seq, Window::span(3, 5), 2.0) == 0.0);
}

TEST_CASE("window mass equals the naive loop") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long long> pos(-1000000, 1000000);
  std::uniform_int_distribution<long long> width(0, 2000000);
  for (int t = 0; t < 300; ++t) {
    const auto seq = testsup::random_sequence(rng, 1000000, 40);
    const auto params = testsup::random_params(rng);
    const long long lo = pos(rng);
    const auto w = Window::span(lo, width(rng));
    const double fast = mass_in_window(seq, w, params.p);
    const double naive = testsup::naive_mass(seq, w.lo(), w.hi(), params.p);
    CHECK(fast == doctest::Approx(naive).epsilon(1e-12));
  }
}

TEST_CASE("window mass is translation equivariant") {
  std::mt19937_64 rng(102);
  for (int t = 0; t < 100; ++t) {
    const auto seq = testsup::random_sequence(rng, 500, 25);
    const auto params = testsup::random_params(rng);
    const long long shift = static_cast<long long>(rng() % 2001) - 1000;
    std::vector<SparseSequence::Entry> moved;
    for (const auto& e : seq.entries())
      moved.push_back({e.index + shift, e.value});
    const auto shifted = SparseSequence::from_pairs(std::move(moved));
    const auto w = Window::span(-40, 90);
    const auto ws = Window::span(-40 + shift, 90);
    CHECK(mass_in_window(seq, w, params.p) ==
          mass_in_window(shifted, ws, params.p));
  }
}

TEST_CASE("sequence JSON round-trips, including 128-bit indices") {
  std::mt19937_64 rng(104);
  for (int t = 0; t < 50; ++t) {
    const auto seq = testsup::random_sequence(rng, 1000, 20);
    const auto back = sequence_from_json(sequence_to_json(seq));
    REQUIRE(back.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      CHECK(back.entries()[i].index == seq.entries()[i].index);
      CHECK(back.entries()[i].value == seq.entries()[i].value);
    }
  }
  const auto big =
      SparseSequence::from_pairs({{-pow2_index(100), 2.5}, {pow2_index(96), 1.0}});
  const auto round = sequence_from_json(sequence_to_json(big));
  CHECK(round.entries()[0].index == -pow2_index(100));
  CHECK(round.entries()[1].index == pow2_index(96));

  // malformed inputs name the offending entry
  using nlohmann::json;
  CHECK_THROWS_WITH_AS(sequence_from_json(json::parse(R"({"entries":[["0"]]})")),
                       doctest::Contains("entry 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      sequence_from_json(json::parse(R"({"entries":[["0",1],["x",2]]})")),
      doctest::Contains("'x'"), std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"rows": []})")),
                  std::invalid_argument);
}

TEST_CASE("log values stay consistent with their linear rendering") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> expo(-300.0, 300.0);
  for (int t = 0; t < 200; ++t) {
    const LogValue v = LogValue::from_log2(expo(rng));
    CHECK(std::abs(std::exp2(v.log2_value) - v.linear_value) <=
          1e-12 * v.linear_value);
  }
  CHECK(LogValue::zero().is_zero());
  CHECK(LogValue::zero().linear_value == 0.0);
  CHECK(LogValue::from_linear(0.0).is_zero());
  CHECK(LogValue::from_linear(8.0).log2_value == 3.0);
  CHECK_THROWS_AS(LogValue::from_linear(-1.0), std::invalid_argument);
  // extreme exponents overflow the linear rendering but stay comparable
  CHECK(LogValue::from_log2(40000.0).linear_value ==
        std::numeric_limits<double>::infinity());
}
