#pragma once

#include <stdexcept>
#include <string>

namespace sln {

struct non_unit_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A closure or enumeration hit its configured cap.  Distinct from logic
// errors: the input was simply too big for the budget.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive sweep would exceed the work budget; callers downgrade the
// verdict to "skipped" instead of failing.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sln
