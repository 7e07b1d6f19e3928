#include <stdexcept>
#include "doctest.h"
#include "litichain/config.hpp"

using namespace litichain;

TEST_CASE("flat key-value document parses scalars and arrays") {
  ConfigDoc doc = ConfigDoc::parse(
      "# run setup\n"
      "variant = \"s\"\n"
      "K = 50\n"
      "lambda = 0.01\n"
      "cascading_retention = false\n"
      "K_values = [10, 50, 100]  # sweep grid\n"
      "variants = [\"p\", \"s\"]\n"
      "\n");
  CHECK(doc.get_string("variant") == "s");
  CHECK(doc.get_int("K") == 50);
  CHECK(doc.get_number("lambda") == 0.01);
  CHECK(doc.get_bool("cascading_retention") == false);
  CHECK(doc.get_ints("K_values") == std::vector<std::int64_t>{10, 50, 100});
  CHECK(doc.get_strings("variants") == std::vector<std::string>{"p", "s"});
  CHECK(doc.has("K"));
  CHECK_FALSE(doc.has("mu"));
}

TEST_CASE("config errors carry the line or key") {
  CHECK_THROWS_WITH_AS(ConfigDoc::parse("novalue\n"), "line 1: expected key = value",
                       std::invalid_argument);
  CHECK_THROWS_AS(ConfigDoc::parse("x = [1, 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(ConfigDoc::parse("x = zzz\n"), std::invalid_argument);
  CHECK_THROWS_AS(ConfigDoc::parse("x = [1, \"a\"]\n"), std::invalid_argument);

  ConfigDoc doc = ConfigDoc::parse("K = 50.5\nname = \"x\"\n");
  CHECK_THROWS_AS(doc.get_int("K"), std::invalid_argument);
  CHECK_THROWS_AS(doc.get_number("name"), std::invalid_argument);
  CHECK_THROWS_AS(doc.get_string("missing"), std::out_of_range);
  CHECK_THROWS_AS(ConfigDoc::load("/nonexistent/file.toml"), std::runtime_error);
}
