#include "support/cli_cases.hpp"

#include <gtest/gtest.h>

namespace tropbundle {
namespace {

class CliGolden : public ::testing::TestWithParam<testing::CliCase> {};

TEST_P(CliGolden, MatchesGoldenOutput) {
  const auto scratch = std::filesystem::temp_directory_path() / "tropbundle_cli_test";
  std::filesystem::create_directories(scratch);
  const auto problems =
      testing::check_cli_case(GetParam(), TROPBUNDLE_EXE, TROPBUNDLE_FIXTURES, TROPBUNDLE_GOLDEN, scratch);
  for (const auto& p : problems) ADD_FAILURE() << p;
}

INSTANTIATE_TEST_SUITE_P(Cases, CliGolden, ::testing::ValuesIn(testing::cli_cases()),
                         [](const auto& info) { return info.param.name; });

}  // namespace
}  // namespace tropbundle
