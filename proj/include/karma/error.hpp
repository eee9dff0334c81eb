#pragma once

#include <stdexcept>
#include <string>

namespace karma {

// Malformed or unusable input data (CSV files, configs, corpora).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model-level contract violations (dimension mismatch, bad containers).
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace karma
