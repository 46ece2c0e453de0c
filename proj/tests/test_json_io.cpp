#include <doctest.h>

#include <stdexcept>

#include "hilrank/families.hpp"
#include "hilrank/json_io.hpp"

using nlohmann::json;

TEST_CASE("complex JSON round trip") {
  const json j = {{"m", 4}, {"facets", {{2, 3}, {4, 1}, {1, 2}, {3, 4}}}};
  const auto c = hilrank::complex_from_json(j);
  CHECK(c == hilrank::cyclic_complex(4));

  const json emitted = hilrank::complex_to_json(c);
  CHECK(emitted["m"] == 4);
  CHECK(emitted["facets"] == json({{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  CHECK(hilrank::complex_from_json(emitted) == c);
}

TEST_CASE("levels parsing") {
  CHECK(hilrank::levels_from_json({{"m", 2}, {"facets", {{1, 2}}}, {"levels", {2, 3}}}) ==
        std::vector<int>{2, 3});
  CHECK_FALSE(hilrank::levels_from_json({{"m", 2}, {"facets", {{1, 2}}}}).has_value());
  CHECK_FALSE(
      hilrank::levels_from_json({{"m", 2}, {"facets", {{1, 2}}}, {"levels", nullptr}})
          .has_value());
  CHECK_THROWS_AS(hilrank::levels_from_json({{"m", 2}, {"levels", "two"}}),
                  std::invalid_argument);
}

TEST_CASE("malformed complex documents") {
  CHECK_THROWS_AS(hilrank::complex_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(hilrank::complex_from_json({{"facets", {{1}}}}), std::invalid_argument);
  CHECK_THROWS_AS(hilrank::complex_from_json({{"m", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(hilrank::complex_from_json({{"m", 1}, {"facets", "x"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hilrank::complex_from_json({{"m", 2}, {"facets", {{1, 2.5}}}}),
                  std::invalid_argument);
}

TEST_CASE("big integers serialize as numbers up to 2^53, strings beyond") {
  const hilrank::Int safe = hilrank::Int(1) << 53;
  CHECK(hilrank::int_to_json(safe).is_number_integer());
  CHECK(hilrank::int_to_json(-safe).is_number_integer());
  CHECK(hilrank::int_to_json(safe + 1).is_string());
  CHECK(hilrank::int_to_json(safe + 1).get<std::string>() == "9007199254740993");
  CHECK(hilrank::int_to_json(-(safe + 1)).is_string());
  CHECK(hilrank::int_to_json(hilrank::Int(42)) == json(42));
}

TEST_CASE("report JSON carries the oracle fields only when checked") {
  const auto spec =
      hilrank::ModelSpec::make(hilrank::main_effect_complex(2), {2, 2});
  const auto with_oracle = hilrank::report_to_json(hilrank::report(spec, true));
  CHECK(with_oracle["rank"] == 3);
  CHECK(with_oracle["oracle_checked"] == true);
  CHECK(with_oracle["oracle_rank"] == 3);
  CHECK(with_oracle["agree"] == true);

  const auto without = hilrank::report_to_json(hilrank::report(spec, false));
  CHECK(without["oracle_checked"] == false);
  CHECK_FALSE(without.contains("oracle_rank"));
}
