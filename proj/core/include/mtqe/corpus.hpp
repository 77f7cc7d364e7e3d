#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtqe/token.hpp"

namespace mtqe {

// One aligned sentence pair from a parallel corpus file.
struct ParallelPair {
    std::string id;
    TokenizedSentence source;
    TokenizedSentence target;
    std::optional<std::string> engine;
};

// Table-I-shaped corpus statistics.
struct CorpusStats {
    std::size_t sentences = 0;
    std::size_t words = 0;
    std::size_t unique_words = 0;
};

// Loads a UTF-8 TSV with lines `id<TAB>source<TAB>target[<TAB>engine]`.
// Empty lines are skipped; pairs come back in file order. Malformed lines
// and duplicate ids raise DataError naming the line number.
std::vector<ParallelPair> load_parallel_corpus(const std::string& path);

// One sentence per line, tokenized. Empty lines are skipped.
std::vector<TokenizedSentence> load_monolingual_corpus(const std::string& path);

CorpusStats corpus_stats(std::span<const TokenizedSentence> sentences);

std::vector<TokenizedSentence> source_side(std::span<const ParallelPair> pairs);
std::vector<TokenizedSentence> target_side(std::span<const ParallelPair> pairs);

}  // namespace mtqe
