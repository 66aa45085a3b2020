#pragma once

#include <stdexcept>
#include <string>

namespace fracplast {

/// Invalid or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { missing_file, parse, unknown_key, constraint };

  ConfigError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace fracplast
