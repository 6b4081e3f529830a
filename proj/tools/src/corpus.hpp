#pragma once

#include <string>
#include <vector>

#include "ncequiv/eval.hpp"
#include "ncequiv/ncpoly.hpp"

namespace ncequiv::corpus {

NcPoly poly(const std::string& src);  // over x, y

// X = ((1,0),(0,0)), Y = ((0,1),(0,0))
MatrixTuple nilpotent_pair();
// X = ((1,0),(0,0)), Y = ((0,1),(1,0))
MatrixTuple swap_pair();
// X = ((1,0),(0,0)), Y = ((0,1),(-1,0))
MatrixTuple rotation_pair();
// X = ((0,1),(0,0)), Y = 1/2 ((1,1),(1,1))
MatrixTuple projection_pair();
// The 4 x 4 pair over Q(sqrt5)(xi), xi^2 = 29 + 13 sqrt5.
MatrixTuple quartic_pair();

// prod_{a in S} (x - a) for S = {lo..hi}; 1 when empty.
NcPoly p_range(int lo, int hi);
// p_{k+1..s} y p_{1..k} + x
NcPoly long_waypoint(int s, int k);

struct Item {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Item> verify_paper(std::uint64_t seed = 1);

}  // namespace ncequiv::corpus
