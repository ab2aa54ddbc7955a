#ifndef GRLIE_REPORT_HPP
#define GRLIE_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace grlie {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, residues, ... empty when uninteresting
};

struct VerifyReport {
  std::string kind;
  std::vector<CheckItem> items;
  std::vector<std::string> warnings;  // findings that are not failures

  bool pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
  }
};

}  // namespace grlie

#endif
