#pragma once

#include <stdexcept>
#include <string>

namespace qglab {

// Scalar argument outside its mathematical domain (bad bracket base,
// negative radicand, q = 1, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dimension or grading metadata mismatch between operands.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested guard width cannot fit in the given truncated space.
struct guard_infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rewrite reached a misordered adjacent pair with no applicable rule.
struct incomplete_presentation : std::runtime_error {
    std::string left, right;
    incomplete_presentation(std::string l, std::string r)
        : std::runtime_error("incomplete presentation: no rule for pair (" + l + ", " + r + ")"),
          left(std::move(l)),
          right(std::move(r)) {}
};

// A constructive search (operator ansatz, dressing selection) did not reach
// the requested tolerance; carries the best residual found.
struct construction_failed : std::runtime_error {
    double best_residual;
    construction_failed(const std::string& what, double best)
        : std::runtime_error(what + " (best residual " + std::to_string(best) + ")"),
          best_residual(best) {}
};

// A mandatory internal cross-check failed; downstream results would be
// meaningless, so the construction aborts.
struct internal_inconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration input; message names the offending key.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qglab
