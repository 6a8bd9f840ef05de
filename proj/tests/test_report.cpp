#include "doctest.h"

#include <fstream>
#include <sstream>

#include "hocd/report.hpp"

using namespace hocd;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("hocd_report_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("histogram and witness cells") {
  CHECK(report::histogram_cell({{0, 89}, {1, 117}, {5, 2}}) == "0:89;1:117;5:2");
  CHECK(report::histogram_cell({}).empty());
  CHECK(report::witness_cell({{{1, 9}, 15}, {{1, 10}, 3}}) == "1 9|15");
  CHECK(report::witness_cell({{{}, 4}}) == "|4");
  CHECK(report::witness_cell({}).empty());
}

TEST_CASE("field header echoes the modulus and encoding") {
  auto k = Field::build(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
  const auto h = report::field_header(*k);
  CHECK(h["p"] == 2);
  CHECK(h["n"] == 3);
  CHECK(h["order"] == 8);
  CHECK(h["modulus"] == report::Json::array({1, 1, 0, 1}));
  CHECK(h["encoding"].get<std::string>().find("2^j") != std::string::npos);
}

TEST_CASE("spectrum JSON carries no timing") {
  auto k = Field::build(2, 4);
  auto f = FieldFunction::from_monomial(k, 14);
  auto r = uniformity(f, 2, 2);
  r.elapsed_seconds = 12.5;
  const auto j = report::to_json(r);
  CHECK_FALSE(j.dump().find("elapsed") != std::string::npos);
  CHECK(j["max_count"] == 5);
  CHECK(j["search_domain"]["a1_fixed_to_1"] == false);
  CHECK(j["search_domain"]["tuples"] == 256);
  std::uint64_t total = 0;
  for (const auto& pair : j["histogram"]) total += pair[1].get<std::uint64_t>();
  CHECK(total == 256 * 16);
  // Key order is stable.
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"c", "t", "max_count", "histogram", "witnesses", "search_domain"});
}

TEST_CASE("CSV layout") {
  auto k = Field::build(2, 4);
  auto f = FieldFunction::from_monomial(k, 14);
  const std::vector<Element> cs{0, 2};
  const auto csv = report::spectrum_csv(*k, "monomial:14", uniformity_sweep(f, 2, cs));
  std::istringstream in(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 7);
  for (std::size_t i = 0; i < 4; ++i) CHECK(lines[i].front() == '#');
  CHECK(lines[1] == "# field p=2 n=4 modulus=1,0,0,1,1");
  CHECK(lines[3] == "# function monomial:14");
  CHECK(lines[4] == "c_index,t,max_count,histogram,first_witness");
  CHECK(lines[5] == "0,2,1,1:4096,0 0|0");
  CHECK(lines[6].starts_with("2,2,5,"));
}

TEST_CASE("case-study JSON") {
  const auto row = inverse_second_order_case(4);
  const auto j = report::to_json(row);
  CHECK(j["max_c_eq_1"] == 4);
  CHECK(j["max_c_not_0_1"] == 5);
  CHECK(j["max_c_eq_0"] == 1);
  CHECK(j["quartic_cross_check"] == true);
  CHECK(j["classical_counts"] == report::Json::array({0, 4}));

  const auto g = report::to_json(gold_second_order_max(Field::build(3, 2), 1));
  CHECK(g["bound"] == 4);
  CHECK(g["attained"] == true);
  CHECK(g["witness"]["shifts"].size() == 2);
}

TEST_CASE("atomic writes") {
  const auto dir = scratch_dir("atomic");
  const auto a = dir / "a.json", b = dir / "b.csv";
  report::write_files_atomically({{a, "alpha\n"}, {b, "beta\n"}});
  CHECK(slurp(a) == "alpha\n");
  CHECK(slurp(b) == "beta\n");
  report::write_files_atomically({{a, "gamma\n"}});
  CHECK(slurp(a) == "gamma\n");
  for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().extension() != ".tmp");

  // One unwritable target: nothing new appears and existing files survive.
  const auto c = dir / "c.json";
  CHECK_THROWS_AS(report::write_files_atomically({{c, "x"}, {dir / "missing" / "d.csv", "y"}}), Error);
  CHECK_FALSE(fs::exists(c));
  CHECK(slurp(a) == "gamma\n");
  for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().extension() != ".tmp");

  CHECK(report::meta_path("out/r.json") == fs::path("out/r.json.meta.json"));
  fs::remove_all(dir);
}
