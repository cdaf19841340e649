// Check reports: one entry per verified identity, with witnesses on failure.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace colink {

enum class Status { Pass, Fail, Skip };

struct CheckEntry {
  std::string id;      // stable dotted identifier, e.g. "uq.hopf.coassoc"
  std::string params;  // instance parameters, e.g. "mu=+ nu=- ups=0"
  Status status = Status::Pass;
  std::string detail;   // short human note
  std::string witness;  // counterexample rendering when status = Fail
  double ms = 0.0;
};

class Report {
 public:
  void add(CheckEntry e) { entries_.push_back(std::move(e)); }
  void pass(std::string id, std::string params = "", std::string detail = "");
  void fail(std::string id, std::string params, std::string witness,
            std::string detail = "");
  void skip(std::string id, std::string params, std::string detail);
  void merge(Report other);
  void stampMs(double ms);  // fills elapsed time where none was recorded

  bool allPassed() const;
  size_t passCount() const { return count(Status::Pass); }
  size_t failCount() const { return count(Status::Fail); }
  size_t skipCount() const { return count(Status::Skip); }
  const std::vector<CheckEntry>& entries() const { return entries_; }
  void sortById();

  std::string text() const;  // human-readable listing

 private:
  size_t count(Status s) const;
  std::vector<CheckEntry> entries_;
};

}  // namespace colink
