#include "hopf/degree_guard.hpp"

#include <atomic>

#include <fmt/format.h>

#include "hopf/errors.hpp"

namespace hopf {

namespace {
std::atomic<int> g_max_degree{8};
}

int max_degree() noexcept { return g_max_degree.load(std::memory_order_relaxed); }

void set_max_degree(int n) {
    if (n < 0) throw DomainError(fmt::format("degree guard must be non-negative, got {}", n));
    g_max_degree.store(n, std::memory_order_relaxed);
}

void check_degree(int n, const char* what) {
    const int bound = max_degree();
    if (n > bound) {
        throw DegreeGuardError(fmt::format(
            "{} needs degree {} but the degree guard is {} (raise it with --max-degree)", what, n,
            bound));
    }
}

DegreeGuardOverride::DegreeGuardOverride(int n) : previous_(max_degree()) { set_max_degree(n); }

DegreeGuardOverride::~DegreeGuardOverride() { g_max_degree.store(previous_); }

}  // namespace hopf
