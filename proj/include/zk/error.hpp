#ifndef ZK_ERROR_HPP
#define ZK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zk {

enum class errc {
  mismatch,               // incompatible fields / variable sets / dimensions
  usage,                  // bad argument shape (arity, malformed input)
  cap_exceeded,           // enumeration or scan cap hit
  zero_polynomial,        // the distinguished "f = 0" case
  not_a_unit,             // Laurent polynomial with != 1 terms
  well_definedness,       // homomorphism does not respect a relation
  solution_invalid,       // proposed solution fails a presentation relation
  not_unimodular,
  cocycle_violation,
  compatibility_failure,  // local ideals do not agree on an overlap
  unsupported_root,       // factor outside the declared root support
  composition_not_zero,   // consecutive boundary matrices do not compose to 0
  internal,               // broken invariant (window instability etc.)
};

struct Error : std::runtime_error {
  errc code;
  Error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw Error(c, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::mismatch: return "mismatch";
    case errc::usage: return "usage";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::zero_polynomial: return "zero_polynomial";
    case errc::not_a_unit: return "not_a_unit";
    case errc::well_definedness: return "well_definedness";
    case errc::solution_invalid: return "solution_invalid";
    case errc::not_unimodular: return "not_unimodular";
    case errc::cocycle_violation: return "cocycle_violation";
    case errc::compatibility_failure: return "compatibility_failure";
    case errc::unsupported_root: return "unsupported_root";
    case errc::composition_not_zero: return "composition_not_zero";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace zk

#endif
