#pragma once

#include <string>
#include <vector>

namespace skein {

struct Check {
  bool pass;
  std::string tag;     // identity name, e.g. "xbiff"
  std::string params;  // e.g. "m=3"
  std::string detail;  // first failing coefficient, if any
};

class Report {
 public:
  void add(bool pass, std::string tag, std::string params, std::string detail = {});
  void append(const Report& other);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool all_passed() const;
  std::size_t failures() const;
  // One line per check: "PASS <tag> <params>".
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace skein
