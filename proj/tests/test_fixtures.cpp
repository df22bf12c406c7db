#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "permsplit/json_io.hpp"

namespace permsplit {
namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(PERMSPLIT_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Json::parse(buffer.str());
}

TEST(Fixtures, Scans) {
  for (int n = 3; n <= 5; ++n) {
    const auto golden = load("scan_" + std::to_string(n) + ".json");
    Json list = Json::array();
    for (const auto& h : exhaustive_scan(n)) list.push_back(split_report_to_json(h, check_split(h)));
    EXPECT_EQ(golden["n"], n);
    EXPECT_EQ(golden["splits"], list) << "n = " << n;
  }
}

TEST(Fixtures, Posets) {
  for (int n = 3; n <= 4; ++n) {
    const auto golden = load("poset_" + std::to_string(n) + ".json");
    EXPECT_EQ(Json::parse(export_poset(build_poset(n), PosetFormat::kJson)), golden) << "n = " << n;
    EXPECT_EQ(poset_from_json(golden).elements.size(), n == 3 ? 2u : 17u);
  }
}

}  // namespace
}  // namespace permsplit
