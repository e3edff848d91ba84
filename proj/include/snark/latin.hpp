#pragma once

#include <vector>

namespace snark {

using LatinSquare = std::vector<std::vector<int>>;

bool is_latin_square(const LatinSquare& l);
// Superimposing a and b yields every ordered symbol pair exactly once.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

// `count` mutually orthogonal Latin squares of side n. One square exists for
// every n (cyclic); more come from finite fields of prime-power order and
// their direct products. Throws UnreachableError otherwise (e.g. n = 6).
std::vector<LatinSquare> mols(int n, int count);

// Largest number of MOLS of side n that mols() can build.
int mols_capacity(int n);

}  // namespace snark
