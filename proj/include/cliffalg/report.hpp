#pragma once

#include <string>
#include <vector>

namespace cliffalg {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "fail";
}

// One verified claim. The anchor names the claim being checked, or
// "plumbing" for internal consistency checks.
struct Record {
  std::string name;
  Status status = Status::fail;
  std::string observed;
  std::string expected;
  std::string anchor;
};

inline Record check(std::string name, bool ok, std::string observed, std::string expected, std::string anchor) {
  return Record{std::move(name), ok ? Status::pass : Status::fail, std::move(observed), std::move(expected),
                std::move(anchor)};
}

using Suite = std::vector<Record>;

}  // namespace cliffalg
