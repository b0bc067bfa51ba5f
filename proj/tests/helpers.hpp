#ifndef ANVOR_TESTS_HELPERS_HPP
#define ANVOR_TESTS_HELPERS_HPP

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "anvor/linalg.hpp"

namespace anvor::test {

inline RatVec rv(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* s : xs) v.push_back(Rat::parse(s));
  return v;
}

inline RatVec rvl(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

inline std::vector<RatVec> sorted(std::vector<RatVec> vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  return vs;
}

inline RatMat mat(int rows, int cols, std::initializer_list<const char*> entries) {
  RatMat m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rat::parse(*it++);
  return m;
}

}  // namespace anvor::test

#endif
