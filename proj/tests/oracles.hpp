#pragma once

// Brute-force reference implementations over text words. Deliberately share
// no code with the library: geometry instead of prefix sums, lists instead of
// bitmasks, literal transcriptions of each procedure.

#include <string>
#include <vector>

namespace oracle {

std::vector<std::string> dyck_words(int n); // recursive, sorted
std::string rc(const std::string& w);
std::string reverse(const std::string& w);

int cell_area(const std::string& w);   // counts unit cells between path and diagonal
int walk_bounce(const std::string& w); // walks the bounce path on the grid
int arm_leg_dinv(const std::string& w); // cells of λ with leg <= arm <= leg + 1

std::string sweep(const std::string& w);              // reverse, level, sweep 0, -1, -2, ...
std::string area_vector_passes(const std::string& w); // passes over the rc word's row counts
std::string scaffold(const std::string& w);           // list-based agent simulation

} // namespace oracle
