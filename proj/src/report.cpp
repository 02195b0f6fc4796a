#include "cyltqft/report.hpp"

#include <algorithm>
#include <tuple>

namespace cyltqft {

void Report::declare(const std::string& check, bool audit) {
  auto [it, inserted] = declared_.emplace(check, audit);
  if (inserted) order_.push_back(check);
}

void Report::add(Record r) {
  declare(r.check, r.audit);
  records_.push_back(std::move(r));
}

void Report::pass(const std::string& check, const std::string& instance,
                  std::string detail) {
  Record r;
  r.check = check;
  r.instance = instance;
  r.detail = std::move(detail);
  r.audit = declared_.count(check) ? declared_[check] : false;
  add(std::move(r));
}

void Report::fail(const std::string& check, const std::string& instance,
                  std::string witness, std::string detail) {
  Record r;
  r.check = check;
  r.instance = instance;
  r.pass = false;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  r.audit = declared_.count(check) ? declared_[check] : false;
  add(std::move(r));
}

void Report::merge(const Report& other) {
  for (const auto& name : other.order_) declare(name, other.declared_.at(name));
  for (const auto& n : other.notes_) {
    if (std::find(notes_.begin(), notes_.end(), n) == notes_.end()) notes_.push_back(n);
  }
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::ok() const {
  return std::none_of(records_.begin(), records_.end(),
                      [](const Record& r) { return !r.pass && !r.audit; });
}

std::size_t Report::failures(const std::string& check) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [&](const Record& r) { return !r.pass && r.check == check; }));
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [](const Record& r) { return !r.pass && !r.audit; }));
}

const Record* Report::first_failure(const std::string& check) const {
  for (const auto& r : records_) {
    if (!r.pass && r.check == check) return &r;
  }
  return nullptr;
}

std::vector<std::pair<std::string, CheckTally>> Report::summary() const {
  std::map<std::string, CheckTally> tally;
  for (const auto& name : order_) tally[name].audit = declared_.at(name);
  for (const auto& r : records_) {
    auto& t = tally[r.check];
    (r.pass ? t.passed : t.failed) += 1;
  }
  std::vector<std::pair<std::string, CheckTally>> out;
  for (const auto& name : order_) out.emplace_back(name, tally[name]);
  return out;
}

std::vector<Record> Report::sorted_records() const {
  std::vector<Record> out = records_;
  std::stable_sort(out.begin(), out.end(), [](const Record& a, const Record& b) {
    return std::tie(a.check, a.instance, a.witness) < std::tie(b.check, b.instance, b.witness);
  });
  return out;
}

}  // namespace cyltqft
