#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>

#include "plucker/acceptance.hpp"
#include "plucker/parallel.hpp"

using namespace plucker;

// One line per criterion. Criteria named with --known-failure are still run and
// printed as FAIL, but do not flip the exit code; an unexpected pass is reported.
int main(int argc, char** argv) {
  AcceptanceOptions opt;
  bool verbose = false;
  std::string suite = "all";
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--verbose" || a == "-v")
      verbose = true;
    else if (a == "--seed" && i + 1 < argc)
      opt.seed = std::stoull(argv[++i]);
    else if (a == "--trials" && i + 1 < argc)
      opt.trials = std::stoi(argv[++i]);
    else if (a == "--jobs" && i + 1 < argc)
      opt.jobs = std::stoi(argv[++i]);
    else if (a == "--known-failure" && i + 1 < argc)
      known.insert(std::stoi(argv[++i]));
    else
      suite = a;
  }
  set_default_jobs(opt.jobs);
  int failed = 0, unexpected = 0;
  for (int id : suite_criteria(suite)) {
    CriterionResult r = run_criterion(id, opt);
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << r.name << "  (" << std::fixed << std::setprecision(3) << r.seconds << std::defaultfloat << " s)";
    if (!r.pass && known.count(id)) std::cout << "  [known failure, see README]";
    if (r.pass && known.count(id)) std::cout << "  [listed as known failure but passed]";
    if (!r.pass || verbose) std::cout << "\n    " << r.details.dump();
    std::cout << std::endl;
    failed += !r.pass;
    unexpected += !r.pass && !known.count(id);
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed (" + std::to_string(unexpected) + " unexpected)" : std::string("all criteria passed"))
            << "\n";
  return unexpected ? 1 : 0;
}
