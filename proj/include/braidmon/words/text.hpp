#pragma once

#include <string>
#include <vector>

#include "braidmon/words/braid_word.hpp"
#include "braidmon/words/free_word.hpp"

namespace braidmon {

// Text syntax shared by braid and free words: whitespace-separated tokens
// <p><k> or <p><k>^<e> (p = 's' for braids, 'g' for free words), and
// parenthesized groups "( ... )^<m>" with integer m, possibly negative.
// The empty string and "1" denote the identity.
std::vector<int> ParseLetters(const std::string& text, char prefix);

BraidWord ParseBraidWord(const std::string& text, int strands);
// Several braid words: comma-separated ("s1^-2, s1 s2 s1^-1"), or without
// commas whitespace-separated with '.' joining letters ("s1^-2 s1.s2.s1^-1").
std::vector<BraidWord> ParseBraidWordList(const std::string& text, int strands);
FreeWord ParseFreeWord(const std::string& text, int rank);
// Tokens are the given generator names (alphanumeric) instead of g<k>.
FreeWord ParseFreeWord(const std::string& text, const std::vector<std::string>& labels);

// Uncompressed output using only <p><k> and <p><k>^-1 tokens.
std::string FormatLetters(const std::vector<int>& letters, char prefix);
std::string FormatBraidWord(const BraidWord& b);
std::string FormatFreeWord(const FreeWord& w);
std::string FormatFreeWord(const FreeWord& w, const std::vector<std::string>& labels);

}  // namespace braidmon
