#include "colink/report.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace colink {

void Report::pass(std::string id, std::string params, std::string detail) {
  add({std::move(id), std::move(params), Status::Pass, std::move(detail), "", 0});
}

void Report::fail(std::string id, std::string params, std::string witness,
                  std::string detail) {
  add({std::move(id), std::move(params), Status::Fail, std::move(detail),
       std::move(witness), 0});
}

void Report::skip(std::string id, std::string params, std::string detail) {
  add({std::move(id), std::move(params), Status::Skip, std::move(detail), "", 0});
}

void Report::merge(Report other) {
  for (auto& e : other.entries_) entries_.push_back(std::move(e));
}

void Report::stampMs(double ms) {
  for (auto& e : entries_)
    if (e.ms == 0.0) e.ms = ms;
}

bool Report::allPassed() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const CheckEntry& e) { return e.status == Status::Fail; });
}

size_t Report::count(Status s) const {
  return static_cast<size_t>(std::count_if(
      entries_.begin(), entries_.end(),
      [s](const CheckEntry& e) { return e.status == s; }));
}

void Report::sortById() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const CheckEntry& a, const CheckEntry& b) {
                     return a.id != b.id ? a.id < b.id : a.params < b.params;
                   });
}

std::string Report::text() const {
  std::string out;
  for (const auto& e : entries_) {
    const char* st = e.status == Status::Pass   ? "pass"
                     : e.status == Status::Fail ? "FAIL"
                                                : "skip";
    out += fmt::format("[{}] {}", st, e.id);
    if (!e.params.empty()) out += fmt::format(" ({})", e.params);
    if (!e.detail.empty()) out += fmt::format(": {}", e.detail);
    if (!e.witness.empty()) out += fmt::format("\n    witness: {}", e.witness);
    out += "\n";
  }
  out += fmt::format("checks: {} passed, {} failed, {} skipped\n", passCount(),
                     failCount(), skipCount());
  return out;
}

}  // namespace colink
