#include "soakit/fixtures.hpp"

#include "soakit/error.hpp"

namespace soakit {
namespace {

constexpr int kSoa8[8][3] = {
    {0, 0, 0}, {2, 3, 6}, {3, 6, 2}, {1, 5, 4}, {6, 2, 3}, {4, 1, 5}, {5, 4, 1}, {7, 7, 7},
};

// 54-run, 5-factor, 27-level strength-3 arrays built from the third and
// fourth nonisomorphic OA(54, 5, 3, 3). Rows are runs 1..54.
constexpr int kSoa54Iii[54][5] = {
    { 0,  0,  0,  1,  9},
    { 3,  3,  3,  5, 18},
    { 0,  1, 10, 10,  9},
    { 8, 18,  8, 22, 15},
    { 8, 26, 21,  7, 15},
    {18,  6,  5, 25, 14},
    {24,  8, 24,  4, 14},
    {16, 15,  6,  7, 10},
    { 3,  5, 20, 20, 18},
    { 7,  9,  1, 11, 21},
    { 7, 13,  9,  2, 21},
    { 9,  6,  7, 11, 25},
    {12,  7,  9,  8, 25},
    {23, 21,  6,  8, 20},
    { 6,  7, 13, 12,  0},
    { 6,  8, 23, 21,  0},
    { 1,  9,  8, 18,  3},
    { 5, 18,  4, 15,  6},
    { 1, 17, 18,  6,  3},
    { 5, 22, 15,  3,  6},
    { 9,  0,  2, 24,  7},
    {18,  3,  7, 15,  5},
    {15,  2, 24,  0,  7},
    {21,  4, 15,  6,  5},
    {13, 12,  3,  3,  1},
    {26, 24,  0,  0,  2},
    { 4, 13, 17, 25, 12},
    { 4, 17, 25, 16, 12},
    {12,  4, 17, 19, 16},
    {15,  5, 19, 16, 16},
    {14, 21,  1, 13, 13},
    {22, 12,  4, 13, 17},
    {11, 19, 12,  1, 13},
    {19, 10, 12,  4, 17},
    { 2, 26, 25, 14, 24},
    { 2, 22, 14, 26, 24},
    {24,  2, 22, 14, 23},
    {21,  1, 14, 23, 23},
    {25, 15,  2, 23, 26},
    {17, 24,  5, 20, 22},
    {19, 11, 21,  2, 26},
    {11, 20, 18,  5, 22},
    {10, 11, 23, 22, 10},
    {23, 23, 20, 19, 11},
    {26, 25, 10, 10, 11},
    {20, 19, 16, 17, 20},
    {16, 16, 16, 17, 19},
    {13, 14, 26, 26, 19},
    {10, 10, 13, 12,  1},
    {17, 25, 11, 21,  4},
    {14, 23, 22,  9,  4},
    {20, 20, 26, 24,  2},
    {22, 14, 19,  9,  8},
    {25, 16, 11, 18,  8},
};

constexpr int kSoa54Iv[54][5] = {
    { 0,  0,  0,  1,  9},
    { 3,  3,  3,  5, 18},
    { 0,  1, 10, 10,  9},
    { 8, 18,  8, 22, 15},
    { 8, 26, 21,  7, 15},
    {18,  6,  5, 25, 14},
    {24,  8, 24,  4, 14},
    {16, 15,  6,  7, 10},
    { 3,  5, 23, 23, 18},
    { 7,  9,  1, 11, 21},
    { 7, 13,  9,  2, 21},
    { 9,  6,  7, 11, 25},
    {12,  7,  9,  8, 25},
    {23, 21,  6,  8, 20},
    { 6,  7, 14, 18,  0},
    { 6,  8, 19, 12,  0},
    { 1,  9,  8, 18,  3},
    { 5, 18,  4, 15,  6},
    { 1, 17, 18,  6,  3},
    { 5, 22, 15,  3,  6},
    { 9,  0,  2, 24,  7},
    {18,  3,  7, 12,  5},
    {15,  2, 24,  0,  7},
    {21,  4, 12,  6,  5},
    {13, 12,  3,  3,  1},
    {26, 24,  0,  0,  2},
    { 4, 16, 13, 13, 12},
    { 4, 14, 26, 25, 12},
    {12,  4, 17, 22, 16},
    {15,  5, 22, 16, 16},
    {14, 21,  1, 13, 13},
    {22, 12,  4, 16, 17},
    {11, 19, 12,  1, 13},
    {19, 10, 15,  4, 17},
    { 2, 26, 25, 17, 24},
    { 2, 22, 17, 26, 24},
    {21,  2, 20, 20, 23},
    {24,  1, 16, 17, 23},
    {25, 15,  2, 23, 26},
    {17, 24,  5, 20, 22},
    {19, 11, 21,  2, 26},
    {11, 20, 18,  5, 22},
    {10, 11, 20, 19, 10},
    {23, 23, 19, 10, 11},
    {26, 25, 11, 19, 11},
    {20, 19, 13, 14, 20},
    {16, 13, 14, 26, 19},
    {13, 17, 25, 14, 19},
    {10, 10, 16, 15,  1},
    {17, 25, 10,  9,  4},
    {14, 23, 23, 21,  4},
    {25, 14, 22,  9,  8},
    {20, 20, 26, 24,  2},
    {22, 16, 11, 21,  8},
};

template <std::size_t N, std::size_t M>
ArrayFile make(const int (&rows)[N][M], int base, const char* source) {
  std::vector<int> cells;
  for (const auto& r : rows) cells.insert(cells.end(), r, r + M);
  Array a(N, std::vector<int>(M, base * base * base), std::move(cells));
  return ArrayFile{std::move(a), 3, ArrayFile::SoaMeta{base, 3}, std::string(source)};
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"soa-8-3-8", "SOA(8,3,8,3), base 2", make(kSoa8, 2, "soa-8-3-8")},
      {"soa-54-5-27-iii", "SOA(54,5,27,3) from OA(54,5,3,3) array III", make(kSoa54Iii, 3, "soa-54-5-27-iii")},
      {"soa-54-5-27-iv", "SOA(54,5,27,3) from OA(54,5,3,3) array IV", make(kSoa54Iv, 3, "soa-54-5-27-iv")},
  };
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw ParameterError("unknown fixture '" + name + "'");
}

}  // namespace soakit
