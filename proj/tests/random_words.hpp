#pragma once

#include <random>

#include "braidmon/words/braid_word.hpp"
#include "braidmon/words/free_word.hpp"

namespace braidmon::testing {

inline BraidWord RandomBraid(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.4);
  std::vector<int> letters(len(rng));
  for (int& l : letters) l = neg(rng) ? -gen(rng) : gen(rng);
  return BraidWord(strands, std::move(letters));
}

inline FreeWord RandomFreeWord(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters(len(rng));
  for (int& l : letters) l = neg(rng) ? -gen(rng) : gen(rng);
  return FreeWord(rank, std::move(letters));
}

}  // namespace braidmon::testing
