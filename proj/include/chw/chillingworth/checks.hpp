#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chw::ch {

enum class CheckStatus { Pass, Fail, Warn };

std::string to_string(CheckStatus s);

struct CheckReport {
  std::string name;
  int genus = 0;
  CheckStatus status = CheckStatus::Fail;
  std::string expected;
  std::string actual;
  std::int64_t runtime_us = 0;
};

constexpr int kMinVerifyGenus = 3;
constexpr int kMaxVerifyGenus = 8;

// Stable check identifiers in report order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

// Runs one check. Pass iff the serialized expected and actual values agree;
// Warn when the check needs a larger genus. Throws UnsupportedGenus outside
// kMinVerifyGenus..kMaxVerifyGenus.
CheckReport run_check(const std::string& name, int genus);

// Runs the named checks (all when empty) in check_names() order.
std::vector<CheckReport> verify_all(int genus, const std::vector<std::string>& filter = {});

}  // namespace chw::ch
