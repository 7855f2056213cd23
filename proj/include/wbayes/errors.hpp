#pragma once

#include <stdexcept>

namespace wbayes {

// Input data that cannot be analysed: unparseable files, zero counts,
// singular systems, undefined statistics. Precondition violations on
// arguments use std::invalid_argument instead.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wbayes
