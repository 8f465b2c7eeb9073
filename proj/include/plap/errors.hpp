#pragma once
#include <stdexcept>
#include <string>

namespace plap {

// Error taxonomy shared by library and CLI. Exit codes: input 2, cap 3, numerical 4.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace plap
