#pragma once

#include <stdexcept>
#include <string>

namespace sparseci {

/// Thrown by constructors and selectors when the declared SNR a/sigma lies
/// below the feasibility cutoff of the requested construction, i.e. no valid
/// sparse confidence set of that kind exists for the declared parameters.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sparseci
