#include <iostream>

#include "CLI11.hpp"
#include "odiam/acceptance.hpp"
#include "odiam/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"odiam acceptance suite"};
  odiam::AcceptanceOptions opt;
  bool quiet = false;
  app.add_option("--only", opt.only, "criteria to run");
  app.add_option("--corpus", opt.corpus_dir, "manifest directory");
  app.add_flag("--quiet", quiet, "no progress lines");
  CLI11_PARSE(app, argc, argv);
  if (!quiet) opt.log = [](const std::string& s) { std::cerr << s << std::endl; };
  try {
    auto results = odiam::run_acceptance(opt);
    std::cout << odiam::acceptance_summary(results);
    for (const auto& r : results)
      if (!r.pass) return 1;
  } catch (const odiam::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
