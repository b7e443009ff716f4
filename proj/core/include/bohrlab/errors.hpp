#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

// A call that violates an operation's usage contract (missing certificate,
// wrong input class, out-of-range request). Kept distinct from
// std::invalid_argument (malformed data) so callers such as the CLI can map
// every contract breach to a single exit status.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bohrlab
