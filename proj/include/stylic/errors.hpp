#pragma once

#include <stdexcept>
#include <string>

namespace stylic {

// Malformed input: out-of-range letters, unparsable text, violated preconditions.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured limit was hit before the computation could finish.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stylic
