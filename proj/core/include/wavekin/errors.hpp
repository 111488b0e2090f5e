#pragma once

#include <stdexcept>
#include <string>

namespace wavekin {

// Parameter outside the physical domain (|beta| >= 1, ray speed <= |v|, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at the 1/|r| singularity of the rest wave.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid or inconsistent run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FeatureNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OpenPathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientSamples : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace wavekin
