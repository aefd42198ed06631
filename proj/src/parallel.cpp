#include "plucker/parallel.hpp"

namespace plucker {

namespace {
std::atomic<int> g_jobs{1};
}

int default_jobs() { return g_jobs.load(); }
void set_default_jobs(int jobs) { g_jobs = std::max(jobs, 1); }

}  // namespace plucker
