#pragma once

#include <string>
#include <vector>

namespace hopfevol {

struct ReproItem {
  std::string id;
  std::string description;
  bool pass = false;
  std::string details;  // measured values and tolerances
};

const std::vector<std::string>& reproduce_item_ids();

/// Run one verification item (throws UnknownId for unknown ids).
ReproItem run_reproduce_item(const std::string& id);

std::vector<ReproItem> run_reproduce_all();

}  // namespace hopfevol
