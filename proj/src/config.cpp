#include "zk/config.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace zk {

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::usage, "cannot open config file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::usage, "config file " + path + ": " + e.what());
  }
  if (doc.contains("field")) field = Field::parse(doc["field"].get<std::string>());
  if (doc.contains("order")) order = TermOrder::parse(doc["order"].get<std::string>());
  if (doc.contains("cap")) cap = doc["cap"].get<std::uint64_t>();
  if (doc.contains("power_bound")) power_bound = doc["power_bound"].get<int>();
  if (doc.contains("margin")) margin = doc["margin"].get<unsigned>();
  if (doc.contains("jobs")) jobs = doc["jobs"].get<int>();
  if (doc.contains("format")) format = doc["format"].get<std::string>();
  if (cap == 0 || jobs < 1 || power_bound < 1) fail(errc::usage, "config caps must be positive");
}

void Config::load_env() {
  if (const char* v = std::getenv("ZK_FIELD")) field = Field::parse(v);
  if (const char* v = std::getenv("ZK_ORDER")) order = TermOrder::parse(v);
  if (const char* v = std::getenv("ZK_CAP")) cap = std::strtoull(v, nullptr, 10);
  if (const char* v = std::getenv("ZK_MARGIN"))
    margin = static_cast<unsigned>(std::strtoul(v, nullptr, 10));
  if (const char* v = std::getenv("ZK_JOBS")) jobs = static_cast<int>(std::strtol(v, nullptr, 10));
  if (cap == 0 || jobs < 1) fail(errc::usage, "ZK_CAP and ZK_JOBS must be positive");
}

}  // namespace zk
