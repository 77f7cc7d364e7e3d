#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtqe {

// A sentence plus its deterministic tokenization.
struct TokenizedSentence {
    std::string raw;
    std::vector<std::string> tokens;
};

// Splits on Unicode whitespace, then peels leading/trailing punctuation off
// each run as single-character tokens. Tokens with ASCII letters are
// lowercased (A-Z only; Devanagari has no case). The punctuation set is
// ASCII punctuation plus danda (U+0964) and double danda (U+0965).
//
// Identical input always yields identical tokens. Empty input gives an
// empty token list. Invalid UTF-8 raises DataError.
TokenizedSentence tokenize(std::string_view text);

// True for a single-character token drawn from the punctuation set.
bool is_punctuation_token(std::string_view token);

bool is_punctuation_char(char32_t cp);
bool is_whitespace_char(char32_t cp);

// Number of Unicode scalar values in a UTF-8 string.
std::size_t codepoint_count(std::string_view utf8);

// Decodes UTF-8 into code points. Throws DataError on malformed input.
std::vector<char32_t> decode_utf8(std::string_view utf8);

std::string encode_utf8(char32_t cp);

}  // namespace mtqe
