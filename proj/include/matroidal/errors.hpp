#ifndef MATROIDAL_ERRORS_HPP
#define MATROIDAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matroidal {

// A computation hit its configured resource limit. The result is never wrong:
// the computation aborts instead of truncating.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Two independently computed routes to the same value disagreed. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace matroidal

#endif
