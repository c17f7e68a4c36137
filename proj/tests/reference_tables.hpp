#ifndef LATTICECOUNT_TESTS_REFERENCE_TABLES_HPP
#define LATTICECOUNT_TESTS_REFERENCE_TABLES_HPP

// Reference tables of ballot paths avoiding rur and urruurr, rows m = 8 .. 0,
// columns n = 0 .. 9. -1 marks cells under the boundary (left blank).
namespace reference {

inline constexpr long kRurTable[9][10] = {
    {1, 8, 28, 62, 105, 148, 178, 178, 127, 0},
    {1, 7, 21, 40, 59, 72, 72, 51, 0, -1},
    {1, 6, 15, 24, 30, 30, 21, 0, -1, -1},
    {1, 5, 10, 13, 13, 9, 0, -1, -1, -1},
    {1, 4, 6, 6, 4, 0, -1, -1, -1, -1},
    {1, 3, 3, 2, 0, -1, -1, -1, -1, -1},
    {1, 2, 1, 0, -1, -1, -1, -1, -1, -1},
    {1, 1, 0, -1, -1, -1, -1, -1, -1, -1},
    {1, 0, -1, -1, -1, -1, -1, -1, -1, -1},
};

inline constexpr long kUrruurrTable[9][10] = {
    {1, 8, 35, 110, 270, 544, 920, 1272, 1236, 0},
    {1, 7, 27, 75, 161, 279, 389, 377, 0, -1},
    {1, 6, 20, 48, 87, 122, 118, 0, -1, -1},
    {1, 5, 14, 28, 40, 38, 0, -1, -1, -1},
    {1, 4, 9, 14, 13, 0, -1, -1, -1, -1},
    {1, 3, 5, 5, 0, -1, -1, -1, -1, -1},
    {1, 2, 2, 0, -1, -1, -1, -1, -1, -1},
    {1, 1, 0, -1, -1, -1, -1, -1, -1, -1},
    {1, 0, -1, -1, -1, -1, -1, -1, -1, -1},
};

/// Entry at (n, m) of a table above; m in 0..8, n in 0..9.
inline long at(const long (&table)[9][10], long n, long m) { return table[8 - m][n]; }

} // namespace reference

#endif
