#pragma once

#include <stdexcept>
#include <string>

namespace mapcensus {

// Single exception type for contract violations and malformed inputs.  The
// message always names the operation and the offending value; the CLI prints
// it verbatim and exits nonzero.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mapcensus
