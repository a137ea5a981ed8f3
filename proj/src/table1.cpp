#include "dessinry/table1.hpp"

namespace dessinry {

const std::vector<ApRow>& table1_rows() {
  static const std::vector<ApRow> rows = {
      {1, "2"},
      {2, "(1 + sqrt(2)) / 2"},
      {3, "8 - 4*sqrt(3)"},
      {4, "1/2 + 3/8*sqrt(2)"},
      {5, "18 + 8*sqrt(5) - (14 + 6*sqrt(5))*sqrt((1 + sqrt(5))/2)"},
      {6, "1/2 + sqrt(3) - 1/2*sqrt(6)"},
      {7, "128 - 48*sqrt(7)"},
      {8, "1/2 + (1/4 + 3/8*sqrt(2))*sqrt(sqrt(2) - 1)"},
      {9, "194 - 104*root4(12) + 56*sqrt(12) - 30*root4(12)^3"},
      {10, "1/2 + 3/2*sqrt(10) - 3*sqrt(2)"},
      {12, "1/2 - 3/16*sqrt(2) + 5/16*sqrt(6)"},
      {13, "1298 + 360*sqrt(13) - (714 + 198*sqrt(13))*sqrt((3 + sqrt(13))/2)"},
      {15, "3008 - 1736*sqrt(3) + 1344*sqrt(5) - 776*sqrt(15)"},
      {16, "1/2 - 3/8*root4(2) + 9/16*root4(2)^3"},
      {18, "1/2 + 35/2*sqrt(2) - 14*sqrt(3)"},
      {22, "1/2 + 15*sqrt(11) - 21/2*sqrt(22)"},
      {25, "103682 - 69336*root4(5) + 46368*sqrt(5) - 31008*root4(5)^3"},
      {28, "1/2 + (129/16 - 3*sqrt(7))*sqrt(8 + 3*sqrt(7))"},
      // 511560, not 5111560: the latter misses lambda*(i sqrt(37)) by about 2.8e7
      {37, "3111698 + 511560*sqrt(37) - (895188 + 147168*sqrt(37))*sqrt(6 + sqrt(37))"},
      {58, "1/2 + 1287/2*sqrt(58) - 3465*sqrt(2)"},
  };
  return rows;
}

}  // namespace dessinry
