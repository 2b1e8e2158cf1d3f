#ifndef MRTA_ERRORS_HPP
#define MRTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mrta {

// A solver was called outside its declared domain (missing structure tag,
// wrong budget kind, requirement bound exceeded).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration-based solver was asked to search a space beyond its
// configured size limit.
class CapExceededError : public PreconditionError {
 public:
  explicit CapExceededError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace mrta

#endif  // MRTA_ERRORS_HPP
