#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gext/script.hpp"

namespace {

enum Exit { kOk = 0, kParseError = 1, kComputationError = 2 };

int run(const std::string& path, bool json, std::uint32_t prime) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "gext: cannot read " << path << "\n";
    return kParseError;
  }
  std::ostringstream text;
  text << in.rdbuf();

  gext::script::Script script;
  try {
    script = gext::script::parseScript(text.str(), prime);
  } catch (const gext::script::ScriptParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kParseError;
  }

  std::vector<gext::script::ResultRecord> records;
  try {
    records = gext::script::runScript(script);
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kComputationError;
  }
  // Everything is computed before anything is printed.
  if (json) {
    std::cout << gext::script::toJson(records).dump(2) << "\n";
  } else {
    std::cout << gext::script::toText(records);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global Ext and sheaf cohomology over projective schemes"};
  app.require_subcommand(1);

  CLI::App* runCmd = app.add_subcommand("run", "Execute a script");
  std::string path;
  bool json = false;
  std::uint32_t prime = gext::script::kDefaultPrime;
  runCmd->add_option("FILE", path, "Script file")->required();
  runCmd->add_flag("--json", json, "Print results as JSON");
  runCmd->add_option("--prime", prime, "Modulus for rings written kk[...]")
      ->check(CLI::Range(2u, (1u << 31) - 1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }
  return run(path, json, prime);
}
