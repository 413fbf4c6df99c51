#pragma once

namespace hopf {

// Largest n for which S_n may be enumerated. Default 8.
int max_degree() noexcept;
void set_max_degree(int n);

// Throws DegreeGuardError when n exceeds max_degree(). `what` names the
// computation in the error message.
void check_degree(int n, const char* what);

// Scoped override, restores the previous bound on destruction.
class DegreeGuardOverride {
public:
    explicit DegreeGuardOverride(int n);
    ~DegreeGuardOverride();
    DegreeGuardOverride(const DegreeGuardOverride&) = delete;
    DegreeGuardOverride& operator=(const DegreeGuardOverride&) = delete;

private:
    int previous_;
};

}  // namespace hopf
