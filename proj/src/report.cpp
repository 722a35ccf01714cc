#include "skein/report.hpp"

#include <algorithm>

namespace skein {

void Report::add(bool pass, std::string tag, std::string params, std::string detail) {
  checks_.push_back({pass, std::move(tag), std::move(params), std::move(detail)});
}

void Report::append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.tag;
    if (!c.params.empty()) out += " " + c.params;
    if (!c.pass && !c.detail.empty()) out += "  # " + c.detail;
    out += '\n';
  }
  return out;
}

}  // namespace skein
