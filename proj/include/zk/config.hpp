#ifndef ZK_CONFIG_HPP
#define ZK_CONFIG_HPP

#include <cstdint>
#include <string>

#include "zk/order.hpp"
#include "zk/scalar.hpp"

namespace zk {

/// Runtime configuration. Resolution order: defaults, then config file,
/// then ZK_* environment variables, then command-line flags.
struct Config {
  Field field = Field::Q();
  TermOrder order = TermOrder::grevlex();
  std::uint64_t cap = 1'000'000;  // enumeration cap (points, elements)
  int power_bound = 20;           // saturation / clearing exponent bound
  unsigned margin = 0;            // multidegree window margin
  int jobs = 1;                   // parallelism degree
  std::string format = "json";    // json | text
  bool timing = false;            // include timing in reports (breaks byte determinism)

  void load_file(const std::string& path);
  void load_env();  // ZK_FIELD, ZK_ORDER, ZK_CAP, ZK_MARGIN, ZK_JOBS
};

}  // namespace zk

#endif
