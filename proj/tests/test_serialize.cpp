#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rearr/serialize.hpp"

using namespace rearr;
using nlohmann::json;

TEST_CASE("rearrangement records round-trip") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Cell> cells(1 + rng() % 20);
    for (auto& v : cells) v = rng() & 1;
    Rearrangement r{Configuration(cells), {}};
    for (int k = 0; k < static_cast<int>(rng() % 5); ++k) {
      r.steps.push_back({rng() % 20, 1 + rng() % 5, 1 + rng() % 5});
    }
    const auto back = rearrangement_from_json(json::parse(to_json(r).dump()));
    CHECK(back.initial == r.initial);
    CHECK(back.steps == r.steps);
  }
}

TEST_CASE("rearrangement record shape") {
  const Rearrangement r{parse_config("1010"), {{0, 1, 1}, {1, 2, 1}}};
  const auto j = costed_json(r);
  CHECK(j["initial"] == "1010");
  CHECK(j["steps"][1]["y"] == 1);
  CHECK(j["steps"][1]["a"] == 2);
  CHECK(j["steps"][1]["b"] == 1);
  CHECK(j["cost_cells"] == 5);
  CHECK(j["cost_normalized"] == "5/4");
}

TEST_CASE("malformed step records") {
  CHECK_THROWS_AS(steps_from_json(json::parse(R"([{"y":0,"a":1}])")), FormatError);
  CHECK_THROWS_AS(steps_from_json(json::parse(R"([{"y":-1,"a":1,"b":1}])")), FormatError);
  CHECK_THROWS_AS(steps_from_json(json::parse(R"({"moves":[]})")), FormatError);
  CHECK_THROWS_AS(rearrangement_from_json(json::parse(R"({"initial":"10x","steps":[]})")),
                  FormatError);
  CHECK(steps_from_json(json::parse(R"({"steps":[{"y":2,"a":1,"b":3}]})")) ==
        std::vector<Transposition>{{2, 1, 3}});
}

TEST_CASE("solve result and certificate records") {
  const SolveResult result{5, {parse_config("1010"), {{0, 1, 1}, {1, 2, 1}}}, 5};
  const auto j = to_json(result);
  CHECK(j["cost_cells"] == 5);
  CHECK(j["cost_normalized"] == "5/4");
  CHECK(j["explored"] == 5);

  const auto cert = to_json(make_certificate(Rational(1, 2), Rational(1, 1024)));
  CHECK(cert["kappa"] == "1/2");
  CHECK(cert["eps"] == "1/1024");
  CHECK(cert["n_eps"] == 8);
  CHECK(cert["bound"] == "1/4");
  CHECK(cert["degenerate"] == false);
}

TEST_CASE("mask files") {
  const auto band = torus::make_band_set(4);
  const auto text = format_mask(band);
  CHECK(text == "1111\n1111\n0000\n0000\n");
  CHECK(parse_mask(text) == band);
  CHECK(parse_mask("01\r\n10\r\n") == torus::make_checkerboard(2));
  try {
    parse_mask("111\n11\n111\n");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_mask("1a\n00\n"), FormatError);
  CHECK_THROWS_AS(parse_mask(""), FormatError);
}

TEST_CASE("program files") {
  const auto program = torus::cat_program(2, 8);
  const auto back = parse_program(format_program(program));
  CHECK(back.m == 8);
  CHECK(back.steps == program.steps);

  const auto parsed = parse_program(R"([{"axis":"H","shifts":[0,1,-1,3]}])");
  CHECK(parsed.m == 4);
  CHECK(parsed.steps[0].shifts[2] == -1);

  CHECK(parse_program("[]").steps.empty());
  CHECK_THROWS_AS(parse_program(R"([{"axis":"D","shifts":[0]}])"), FormatError);
  CHECK_THROWS_AS(parse_program(R"([{"axis":"H","shifts":[0,1]},{"axis":"V","shifts":[0]}])"),
                  FormatError);
  CHECK_THROWS_AS(parse_program(R"({"axis":"H"})"), FormatError);
  CHECK_THROWS_AS(parse_program("[{"), FormatError);
  CHECK_THROWS_AS(parse_program(R"([{"axis":"H","shifts":[0.5]}])"), FormatError);
}
