#pragma once

// Embedded reference values, one record per line:
//   id | n | m | kind | numerator | denominator
// table1: graphs on at most four vertices; table2: graphs on five vertices
// without isolated vertices (exact closed forms where available); table3:
// paths P1..P9; table4: cycles C3..C9; eq.*: standalone reference values.

namespace zetagraph {

inline constexpr const char* kFixtureData = R"FIX(
# ---- table1: graphs on <= 4 vertices ----
table1.K1      | 1 | 0 | w_minus | 1 | (1-XT)
table1.D2      | 2 | 0 | w_minus | 1 | (1-X^2T)
table1.K2      | 2 | 1 | w_minus | 1 - X^-1T | (1-T)(1-XT)
table1.D3      | 3 | 0 | w_minus | 1 | (1-X^3T)
table1.K2uK1   | 3 | 1 | w_minus | 1 - T | (1-XT)(1-X^2T)
table1.P3      | 3 | 2 | w_minus | 1 - X^-1T | (1-XT)^2
table1.K3      | 3 | 3 | w_minus | 1 - X^-2T | (1-T)(1-XT)
table1.D4      | 4 | 0 | w_minus | 1 | (1-X^4T)
table1.K2uD2   | 4 | 1 | w_minus | 1 - XT | (1-X^2T)(1-X^3T)
table1.K2uK2   | 4 | 2 | w_minus | XT - 2T + 1 + X^-1T^2 - 2X^-1T + X^-2T | (1-X^2T)(1-XT)(1-T)
table1.P3uK1   | 4 | 2 | w_minus | 1 - T | (1-X^2T)^2
table1.P4      | 4 | 3 | w_minus | -XT^2 + 3T^2 - T + 1 - X^-1T^3 + X^-1T^2 - 3X^-1T + X^-2T | (1-XT)^3(1-T)
table1.C4      | 4 | 4 | w_minus | T + 1 - 2X^-1T - 2X^-2T + X^-3T^2 + X^-3T | (1-XT)(1-T)^2
table1.diamond | 4 | 5 | w_minus | 1 - X^-1T - X^-2T + X^-3T^2 | (1-T)^2(1-XT)
table1.K3uK1   | 4 | 3 | w_minus | 1 - X^-1T | (1-XT)(1-X^2T)
table1.paw     | 4 | 4 | w_minus | 1 - 2X^-1T + X^-2T^2 | (1-T)(1-XT)^2
table1.S4      | 4 | 3 | w_minus | 1 - X^-1T | (1-XT)(1-X^2T)
table1.K4      | 4 | 6 | w_minus | 1 - X^-3T | (1-T)(1-XT)
# symmetric-side values; rows whose two columns coincide reuse the value above
table1.K1.plus      | 1 | 0 | w_plus | 1 | (1-XT)
table1.D2.plus      | 2 | 0 | w_plus | 1 | (1-X^2T)
table1.K2.plus      | 2 | 1 | w_plus | 1 - X^-1T | (1-T)(1-XT)
table1.D3.plus      | 3 | 0 | w_plus | 1 | (1-X^3T)
table1.K2uK1.plus   | 3 | 1 | w_plus | 1 - T | (1-XT)(1-X^2T)
table1.P3.plus      | 3 | 2 | w_plus | 1 - X^-1T | (1-XT)^2
table1.K3.plus      | 3 | 3 | w_plus | T^2 + T + 1 - 3X^-1T^2 - 6X^-1T + 6X^-2T^2 + 3X^-2T - X^-3T^3 - X^-3T^2 - X^-3T | (1-T)^4
table1.D4.plus      | 4 | 0 | w_plus | 1 | (1-X^4T)
table1.K2uK2.plus   | 4 | 2 | w_plus | XT - 2T + 1 + X^-1T^2 - 2X^-1T + X^-2T | (1-X^2T)(1-XT)(1-T)
table1.P4.plus      | 4 | 3 | w_plus | -XT^2 + 3T^2 - T + 1 - X^-1T^3 + X^-1T^2 - 3X^-1T + X^-2T | (1-XT)^3(1-T)
table1.C4.plus      | 4 | 4 | w_plus | T + 1 - 2X^-1T - 2X^-2T + X^-3T^2 + X^-3T | (1-XT)(1-T)^2
table1.diamond.plus | 4 | 5 | w_plus | T^3 + 2T^2 + 3T + 1 - 3X^-1T^3 - 7X^-1T^2 - 4X^-1T + 3X^-2T^3 - 3X^-2T + 4X^-3T^3 + 7X^-3T^2 + 3X^-3T - X^-4T^4 - 3X^-4T^3 - 2X^-4T^2 - X^-4T | (1-X^-1T)(1-T)^2(1-XT^2)
table1.K3uK1.plus   | 4 | 3 | w_plus | X^2T^2 - 3XT^2 + XT - T^3 + 6T^2 - 6T + 1 - X^-1T^2 + 3X^-1T - X^-2T | (1-XT)^4
table1.paw.plus     | 4 | 4 | w_plus | -XT^4 - XT^3 + 4T^4 + 4T^3 - 3T^2 + 2T + 1 - 8X^-1T^4 + 2X^-1T^3 + 2X^-1T^2 - 8X^-1T + X^-2T^5 + 2X^-2T^4 - 3X^-2T^3 + 4X^-2T^2 + 4X^-2T - X^-3T^2 - X^-3T | (1-T)^3(1-XT)(1-XT^2)
table1.K4.plus      | 4 | 6 | w_plus | 1 + 3X^-1T^2 + 5X^-1T + 3X^-2T^3 - 8X^-2T^2 - 14X^-2T - 10X^-3T^3 + 10X^-3T + 14X^-4T^3 + 8X^-4T^2 - 3X^-4T - 5X^-5T^3 - 3X^-5T^2 - X^-6T^4 | (1-X^-1T^2)(1-X^-1T)(1-T)^2
# ---- table2: five-vertex graphs without isolated vertices ----
# closed forms for the fourteen cograph rows (route-cross-checked) plus the
# two rows that also appear among the paths and cycles; the remaining seven
# rows have no closed form here and are covered by the enumeration checks
table2.S5          | 5 | 4  | w_minus | 1 - X^-1T | (1-XT)(1-X^3T)
table2.P3uK2       | 5 | 3  | w_minus | 1 + X^-2T - X^-1T - 3T + 3XT^2 + X^2T^2 - X^3T^2 - XT^3 | (1-XT)^2(1-X^2T)^2
table2.cricket     | 5 | 5  | w_minus | 1 - X^-1T - T + X^-1T^2 | (1-XT)^2(1-X^2T)
table2.P5          | 5 | 4  | w_minus | -2XT^2 + XT + 4T^2 - 2T + 1 - X^-1T^3 + 2X^-1T^2 - 4X^-1T - X^-2T^2 + 2X^-2T | (1-XT)^4
table2.dart        | 5 | 6  | w_minus | 1 - 2X^-1T + X^-2T^2 | (1-XT)^3
table2.K23         | 5 | 6  | w_minus | 1 + X^-4T - X^-3T - 2X^-2T - X^-1T + T + X^-4T^2 | (1-X^-1T)(1-XT)^2
table2.book3       | 5 | 7  | w_minus | 1 - X^-2T - X^-1T + X^-3T^2 | (1-T)(1-XT)^2
table2.K3uK2       | 5 | 4  | w_minus | 1 + X^-3T - X^-2T - 2X^-1T - T + XT + X^-2T^2 | (1-T)(1-XT)(1-X^2T)
table2.lollipop    | 5 | 7  | w_minus | 1 - X^-2T - X^-1T + X^-3T^2 | (1-T)(1-XT)^2
table2.butterfly   | 5 | 6  | w_minus | 1 + X^-3T - 2X^-2T - 2X^-1T + T + X^-3T^2 | (1-T)(1-XT)^2
table2.C5          | 5 | 5  | w_minus | T^2 + 3T + 1 - 5X^-1T^2 - 5X^-1T + 5X^-2T^2 - 5X^-2T + 5X^-3T^2 + 5X^-3T - X^-4T^3 - 3X^-4T^2 - X^-4T | (1-XT)(1-T)^3
table2.K23e        | 5 | 7  | w_minus | 1 + X^-4T - X^-3T - 3X^-2T + 3X^-3T^2 + X^-2T^2 - X^-1T^2 - X^-5T^3 | (1-X^-1T)(1-T)^2(1-XT)
table2.K2vK2uK1    | 5 | 8  | w_minus | 1 - 2X^-2T + X^-4T^2 | (1-T)^2(1-XT)
table2.W4          | 5 | 8  | w_minus | 1 + X^-4T - 2X^-3T - 2X^-2T + X^-1T + X^-5T^2 | (1-X^-1T)(1-T)(1-XT)
table2.K5e         | 5 | 9  | w_minus | 1 - X^-3T - X^-2T + X^-5T^2 | (1-X^-1T)(1-T)(1-XT)
table2.K5          | 5 | 10 | w_minus | 1 - X^-4T | (1-T)(1-XT)
# ---- table3: paths ----
table3.P1 | 1 | 0 | w_minus | 1 | (1-XT)
table3.P2 | 2 | 1 | w_minus | 1 - X^-1T | (1-T)(1-XT)
table3.P3 | 3 | 2 | w_minus | 1 - X^-1T | (1-XT)^2
table3.P4 | 4 | 3 | w_minus | -XT^2 + 3T^2 - T + 1 - X^-1T^3 + X^-1T^2 - 3X^-1T + X^-2T | (1-XT)^3(1-T)
table3.P5 | 5 | 4 | w_minus | -2XT^2 + XT + 4T^2 - 2T + 1 - X^-1T^3 + 2X^-1T^2 - 4X^-1T - X^-2T^2 + 2X^-2T | (1-XT)^4
table3.P6 | 6 | 5 | w_minus | X^2T^4 - X^2T^3 + X^2T^2 - 6XT^4 + 11XT^3 - 13XT^2 + 3XT + 7T^4 - 12T^3 + 20T^2 - 6T + 1 - X^-1T^5 + 6X^-1T^4 - 20X^-1T^3 + 12X^-1T^2 - 7X^-1T - 3X^-2T^4 + 13X^-2T^3 - 11X^-2T^2 + 6X^-2T - X^-3T^3 + X^-3T^2 - X^-3T | (1-T)(1-XT)^5
table3.P7 | 7 | 6 | w_minus | X^3T^3 + 3X^2T^4 - 12X^2T^3 + 7X^2T^2 - 12XT^4 + 41XT^3 - 40XT^2 + 7XT + 9T^4 - 28T^3 + 45T^2 - 12T + 1 - X^-1T^5 + 12X^-1T^4 - 45X^-1T^3 + 28X^-1T^2 - 9X^-1T - 7X^-2T^4 + 40X^-2T^3 - 41X^-2T^2 + 12X^-2T - 7X^-3T^3 + 12X^-3T^2 - 3X^-3T - X^-4T^2 | (1-XT)^6
table3.P8 | 8 | 7 | w_minus | -X^4T^5 + X^4T^4 - X^3T^6 + 14X^3T^5 - 28X^3T^4 + 14X^3T^3 + 10X^2T^6 - 84X^2T^5 + 200X^2T^4 - 150X^2T^3 + 31X^2T^2 - 25XT^6 + 185XT^5 - 496XT^4 + 462XT^3 - 161XT^2 + 14XT + 11T^6 - 76T^5 + 310T^4 - 374T^3 + 189T^2 - 26T + 1 - X^-1T^7 + 26X^-1T^6 - 189X^-1T^5 + 374X^-1T^4 - 310X^-1T^3 + 76X^-1T^2 - 11X^-1T - 14X^-2T^6 + 161X^-2T^5 - 462X^-2T^4 + 496X^-2T^3 - 185X^-2T^2 + 25X^-2T - 31X^-3T^5 + 150X^-3T^4 - 200X^-3T^3 + 84X^-3T^2 - 10X^-3T - 14X^-4T^4 + 28X^-4T^3 - 14X^-4T^2 + X^-4T - X^-5T^3 + X^-5T^2 | (1-XT)^7(1-T)
table3.P9 | 9 | 8 | w_minus | X^5T^5 - 16X^4T^5 + 26X^4T^4 - 4X^3T^6 + 110X^3T^5 - 282X^3T^4 + 109X^3T^3 + 25X^2T^6 - 376X^2T^5 + 1162X^2T^4 - 798X^2T^3 + 109X^2T^2 - 46XT^6 + 559XT^5 - 2042XT^4 + 1962XT^3 - 486XT^2 + 26XT + 8T^6 - 94T^5 + 918T^4 - 1526T^3 + 582T^2 - 50T + 1 - X^-1T^7 + 50X^-1T^6 - 582X^-1T^5 + 1526X^-1T^4 - 918X^-1T^3 + 94X^-1T^2 - 8X^-1T - 26X^-2T^6 + 486X^-2T^5 - 1962X^-2T^4 + 2042X^-2T^3 - 559X^-2T^2 + 46X^-2T - 109X^-3T^5 + 798X^-3T^4 - 1162X^-3T^3 + 376X^-3T^2 - 25X^-3T - 109X^-4T^4 + 282X^-4T^3 - 110X^-4T^2 + 4X^-4T - 26X^-5T^3 + 16X^-5T^2 - X^-6T^2 | (1-XT)^8
# ---- table4: cycles ----
table4.C3 | 3 | 3 | w_minus | 1 - X^-2T | (1-XT)(1-T)
table4.C4 | 4 | 4 | w_minus | T + 1 - 2X^-1T - 2X^-2T + X^-3T^2 + X^-3T | (1-XT)(1-T)^2
table4.C5 | 5 | 5 | w_minus | T^2 + 3T + 1 - 5X^-1T^2 - 5X^-1T + 5X^-2T^2 - 5X^-2T + 5X^-3T^2 + 5X^-3T - X^-4T^3 - 3X^-4T^2 - X^-4T | (1-XT)(1-T)^3
table4.C6 | 6 | 6 | w_minus | T^3 + 8T^2 + 8T + 1 - 6X^-1T^3 - 33X^-1T^2 - 15X^-1T + 13X^-2T^3 + 28X^-2T^2 - 5X^-2T - 5X^-3T^3 + 28X^-3T^2 + 13X^-3T - 15X^-4T^3 - 33X^-4T^2 - 6X^-4T + X^-5T^4 + 8X^-5T^3 + 8X^-5T^2 + X^-5T | (1-XT)(1-T)^4
table4.C7 | 7 | 7 | w_minus | T^4 + 17T^3 + 41T^2 + 17T + 1 - 7X^-1T^4 - 98X^-1T^3 - 168X^-1T^2 - 35X^-1T + 21X^-2T^4 + 189X^-2T^3 + 175X^-2T^2 - 28X^-3T^4 - 70X^-3T^3 + 70X^-3T^2 + 28X^-3T - 175X^-4T^3 - 189X^-4T^2 - 21X^-4T + 35X^-5T^4 + 168X^-5T^3 + 98X^-5T^2 + 7X^-5T - X^-6T^5 - 17X^-6T^4 - 41X^-6T^3 - 17X^-6T^2 - X^-6T | (1-XT)(1-T)^5
table4.C8 | 8 | 8 | w_minus | T^5 + 33T^4 + 158T^3 + 158T^2 + 33T + 1 - 8X^-1T^5 - 236X^-1T^4 - 924X^-1T^3 - 676X^-1T^2 - 76X^-1T + 28X^-2T^5 + 660X^-2T^4 + 1884X^-2T^3 + 860X^-2T^2 + 24X^-2T - 54X^-3T^5 - 772X^-3T^4 - 1128X^-3T^3 - 12X^-3T^2 + 46X^-3T + 46X^-4T^5 - 12X^-4T^4 - 1128X^-4T^3 - 772X^-4T^2 - 54X^-4T + 24X^-5T^5 + 860X^-5T^4 + 1884X^-5T^3 + 660X^-5T^2 + 28X^-5T - 76X^-6T^5 - 676X^-6T^4 - 924X^-6T^3 - 236X^-6T^2 - 8X^-6T + X^-7T^6 + 33X^-7T^5 + 158X^-7T^4 + 158X^-7T^3 + 33X^-7T^2 + X^-7T | (1-XT)(1-T)^6
table4.C9 | 9 | 9 | w_minus | T^6 + 60T^5 + 516T^4 + 1015T^3 + 516T^2 + 60T + 1 - 9X^-1T^6 - 504X^-1T^5 - 3798X^-1T^4 - 6192X^-1T^3 - 2358X^-1T^2 - 153X^-1T + 36X^-2T^6 + 1770X^-2T^5 + 10974X^-2T^4 + 13896X^-2T^3 + 3603X^-2T^2 + 87X^-2T - 84X^-3T^6 - 3141X^-3T^5 - 14154X^-3T^4 - 11760X^-3T^3 - 1287X^-3T^2 + 60X^-3T + 117X^-4T^6 + 2268X^-4T^5 + 3456X^-4T^4 - 3456X^-4T^3 - 2268X^-4T^2 - 117X^-4T - 60X^-5T^6 + 1287X^-5T^5 + 11760X^-5T^4 + 14154X^-5T^3 + 3141X^-5T^2 + 84X^-5T - 87X^-6T^6 - 3603X^-6T^5 - 13896X^-6T^4 - 10974X^-6T^3 - 1770X^-6T^2 - 36X^-6T + 153X^-7T^6 + 2358X^-7T^5 + 6192X^-7T^4 + 3798X^-7T^3 + 504X^-7T^2 + 9X^-7T - X^-8T^7 - 60X^-8T^6 - 516X^-8T^5 - 1015X^-8T^4 - 516X^-8T^3 - 60X^-8T^2 - X^-8T | (1-XT)(1-T)^7
# ---- standalone reference values ----
eq.H332  | 8 | 7 | w_hyper | 1 + X^-6T - 2X^-4T - 2X^-3T + X^-1T + X^-7T^2 | (1-T)^2(1-XT)
eq.ninja | 6 | 6 | w_minus | -X^3T^4 + 5X^2T^4 - 6X^2T^3 + 4X^2T^2 - 6XT^4 + 14XT^3 - 15XT^2 + 4XT + T^5 - 5T^4 + 5T^3 + 5T^2 - 5T + 1 + 4X^-1T^4 - 15X^-1T^3 + 14X^-1T^2 - 6X^-1T + 4X^-2T^3 - 6X^-2T^2 + 5X^-2T - X^-3T | (1-T)(1-XT)^3(1-X^3T^2)
)FIX";

}  // namespace zetagraph
