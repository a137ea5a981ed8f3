#pragma once

#include <string>
#include <vector>

namespace dessinry {

// Closed forms of ap(sqrt(n)) at CM points, as expressions for evaluate_radical.
struct ApRow {
  int n;
  std::string expression;
};

const std::vector<ApRow>& table1_rows();

}  // namespace dessinry
