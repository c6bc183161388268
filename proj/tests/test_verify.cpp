#include <doctest.h>

#include <filesystem>

#include "gtq/errors.hpp"
#include "gtq/verify.hpp"
#include "support.hpp"

using namespace gtq;

TEST_CASE("random gluings are valid, bounded and reproducible") {
  auto a = random_gluings(7, 20, 6);
  auto b = random_gluings(7, 20, 6);
  REQUIRE(a.size() == 20);
  REQUIRE(b.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].blocks.size() <= 6);
    auto q = glue(a[i]);
    CHECK(validate(q).empty());
    CHECK(serialize(q) == serialize(glue(b[i])));
  }
  CHECK(serialize(glue(random_gluings(8, 1, 6)[0])) != serialize(glue(a[0])));
}

TEST_CASE("acceptance suite") {
  CHECK_THROWS_AS(run_acceptance(""), UsageError);
  auto empty = std::filesystem::temp_directory_path() / "gtq_empty_examples";
  std::filesystem::create_directories(empty);
  CHECK_THROWS_AS(run_acceptance(empty.string()), UsageError);

  auto results = run_acceptance(GTQ_DATA_DIR);
  REQUIRE(results.size() == 9);
  for (const auto& r : results) {
    CAPTURE(r.line());
    CHECK(r.pass());
    CHECK(r.line().rfind("PASS " + std::to_string(r.number), 0) == 0);
  }
}
