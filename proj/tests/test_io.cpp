#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "schur/enumerate.hpp"
#include "schur/errors.hpp"
#include "schur/io.hpp"

using namespace schur;

TEST_CASE("interchange round trip") {
  for (auto& r : enumerate_srings(AbelianGroup::parse("C2xC6"))) {
    auto j = to_json(r);
    CHECK(j.begin().key() == "group");
    CHECK(parse_sring(j.dump()) == r);
  }
  auto r = parse_sring(R"({"group":"C4","classes":[[0],[2],[3,1]]})");
  CHECK(r.class_lists() == std::vector<std::vector<Elem>>{{0}, {1, 3}, {2}});
  CHECK(to_json(r).dump() == R"({"group":"C4","classes":[[0],[1,3],[2]]})");
  auto path = (std::filesystem::temp_directory_path() / "schur_io_test.json").string();
  write_sring_file(path, r);
  CHECK(read_sring_file(path) == r);
  std::remove(path.c_str());
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_sring("{"), ParseError);
  CHECK_THROWS_AS(parse_sring(R"({"classes":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_sring(R"({"group":"C4","classes":[[0],[1],[2,3]]})"), SchurError);
  CHECK_THROWS_AS(parse_sring(R"({"group":"C4","classes":[[0],[1,3],[2],[9]]})"), SchurError);
  CHECK_THROWS_AS(parse_sring(R"({"group":"C4","classes":[[0],[1,3],[2,2]]})"), SchurError);
  CHECK_THROWS_AS(parse_sring(R"({"group":"D4","classes":[[0]]})"), ParseError);
  CHECK_THROWS_AS(read_sring_file("/nonexistent/file.json"), SchurError);
}

TEST_CASE("element lists") {
  CHECK(parse_element_list("1,3", 4) == ElementSet(4, {1, 3}));
  CHECK(parse_element_list("", 4).empty());
  CHECK_THROWS_AS(parse_element_list("1,x", 4), ParseError);
  CHECK_THROWS_AS(parse_element_list("7", 4), ParseError);
}
