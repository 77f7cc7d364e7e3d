#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mtqe/token.hpp"

namespace mtqe {

using Ngram = std::vector<std::string>;

// Corpus n-gram frequencies plus the quartile thresholds that define the
// low/high frequency bands. Immutable once built.
//
// Thresholds over the sorted distinct-n-gram count list v[1..n]:
//   low  = v[ceil(n/4)]
//   high = midpoint of v[0.75n] and v[0.75n + 1] when 0.75n is integral,
//          otherwise v[ceil(0.75n)]
// An n-gram is low-frequency iff count <= low; high-frequency iff
// count >= high and count > low, so the bands never overlap. Unseen
// n-grams count as low-frequency.
struct NgramTable {
    int order = 1;
    std::map<Ngram, std::uint64_t> counts;  // only observed n-grams, count >= 1
    std::uint64_t distinct = 0;
    double low_threshold = 0.0;
    double high_threshold = 0.0;

    bool is_low(std::uint64_t count) const { return static_cast<double>(count) <= low_threshold; }
    bool is_high(std::uint64_t count) const {
        return static_cast<double>(count) >= high_threshold &&
               static_cast<double>(count) > low_threshold;
    }
    std::uint64_t total_instances() const;
};

// Counts all within-sentence n-grams of the given order (no padding, no
// cross-sentence n-grams). order must be 1..3; at least one sentence must
// have >= order tokens or a DataError is raised.
NgramTable build_ngram_table(std::span<const TokenizedSentence> sentences, int order);

// JSON {version, order, low_threshold, high_threshold, counts} with counts
// sorted lexicographically by n-gram for byte-stable output.
std::string ngram_table_to_json(const NgramTable& table);
NgramTable ngram_table_from_json(const std::string& json_text);

}  // namespace mtqe
