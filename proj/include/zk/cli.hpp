#ifndef ZK_CLI_HPP
#define ZK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zk::cli {

/// Batch front end. Exit codes: 0 success/true, 1 false (decision commands),
/// 2 usage error, 3 computation error. The JSON report goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zk::cli

#endif
