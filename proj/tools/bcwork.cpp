#include "bcwork/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Baum-Connes rank computations for crystallographic groups"};
  app.require_subcommand(1);

  std::string format = "text";
  std::optional<std::string> fixtures;
  bool timestamps = false;
  std::string suite, id;

  auto* run = app.add_subcommand("run", "run a check suite");
  run->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(bcwork::suite_names()));
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  run->add_option("--fixtures", fixtures, "fixture directory");
  run->add_flag("--timestamps", timestamps, "add a generation timestamp");

  auto* dump = app.add_subcommand("dump", "print a fixture or computed matrix");
  dump->add_option("id", id, "fixture or computed id")->required();
  dump->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  dump->add_option("--fixtures", fixtures, "fixture directory");

  CLI11_PARSE(app, argc, argv);

  try {
    const bcwork::FixtureStore store(bcwork::FixtureStore::resolve_dir(fixtures, BCWORK_FIXTURE_DIR));
    if (*run) {
      const bcwork::SuiteReport report = bcwork::run_suite(suite, store);
      if (format == "json") {
        nlohmann::json j = bcwork::report_to_json(report);
        if (timestamps) j["generated"] = utc_now();
        std::cout << j.dump(2) << '\n';
      } else {
        if (timestamps) std::cout << "generated " << utc_now() << '\n';
        std::cout << bcwork::report_to_text(report);
      }
      return report.passed() ? 0 : 1;
    }
    const bcwork::DumpOutput out = bcwork::dump(id, store);
    if (format == "json") std::cout << out.json.dump(2) << '\n';
    else std::cout << out.text;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "bcwork: " << e.what() << '\n';
    return 2;
  }
}
