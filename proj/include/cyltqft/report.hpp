// Check results shared by every validator, law suite and auditor.
//
// A report is a flat list of records, one per (check, instance) pair. Audit
// records carry information only and never make a report fail.

#ifndef CYLTQFT_REPORT_HPP_
#define CYLTQFT_REPORT_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cyltqft {

struct Record {
  std::string check;
  std::string instance;
  bool pass = true;
  std::string witness;  // empty on pass
  std::string detail;
  bool audit = false;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool audit = false;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<Record>& records() const { return records_; }

  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  /// Registers a check name so it appears in summaries even with no records.
  void declare(const std::string& check, bool audit = false);

  void add(Record r);
  void pass(const std::string& check, const std::string& instance,
            std::string detail = {});
  void fail(const std::string& check, const std::string& instance,
            std::string witness, std::string detail = {});

  /// Appends all records and notes of `other`, keeping declared checks.
  void merge(const Report& other);

  /// True iff no non-audit record failed.
  bool ok() const;
  std::size_t failures(const std::string& check) const;
  std::size_t failures() const;
  const Record* first_failure(const std::string& check) const;

  /// Declared checks in declaration order, with their tallies.
  std::vector<std::pair<std::string, CheckTally>> summary() const;

  /// Records sorted by (check, instance, witness), for stable output.
  std::vector<Record> sorted_records() const;

 private:
  std::string title_;
  std::vector<std::string> notes_;
  std::vector<std::string> order_;
  std::map<std::string, bool> declared_;  // name -> audit
  std::vector<Record> records_;
};

using ValidationReport = Report;
using LawReport = Report;
using AxiomReport = Report;
using FunctorLawReport = Report;

}  // namespace cyltqft

#endif  // CYLTQFT_REPORT_HPP_
