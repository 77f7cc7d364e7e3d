#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mtqe/token.hpp"

namespace mtqe {

inline constexpr std::string_view kBosSymbol = "<s>";
inline constexpr std::string_view kEosSymbol = "</s>";
inline constexpr std::string_view kUnkSymbol = "<unk>";

// Laplace-smoothed n-gram language model with hard UNK mapping.
//
// Training pads each sentence with (k-1) BOS markers and one EOS marker per
// order k. The vocabulary is every training token plus EOS and UNK; BOS is
// a pure context symbol and stays outside the smoothing denominator.
// Conditional probabilities use add-one smoothing,
//   P(w | ctx) = (count(ctx, w) + 1) / (count(ctx) + V),
// so an unseen context backs off to the uniform 1/V distribution.
class NgramLanguageModel {
public:
    using Context = std::vector<std::string>;

    // Throws DataError: empty corpus, or a reserved symbol in training text.
    static NgramLanguageModel train(std::span<const TokenizedSentence> sentences, int order);

    int order() const { return order_; }
    std::size_t vocab_size() const { return vocab_.size(); }
    const std::set<std::string>& vocab() const { return vocab_; }
    bool in_vocab(const std::string& token) const { return vocab_.count(token) != 0; }

    // P(word | context) at the model order; context must hold order-1
    // symbols. Both may contain BOS/EOS/UNK.
    double cond_prob(const Context& context, const std::string& word) const;

    // Length-normalized natural-log probability: sum of ln P over the real
    // tokens plus the EOS marker, divided by token_count + 1. OOV tokens are
    // scored as UNK. Always strictly negative; an empty sentence scores the
    // lone EOS event.
    double sentence_avg_logprob(const TokenizedSentence& sentence) const;

    // Observed contexts at a given order (1..order()); used by tests.
    std::vector<Context> contexts(int order) const;

    // JSON {version, order, vocab, counts} with sorted vocab and counts
    // sorted lexicographically per order.
    std::string to_json() const;
    static NgramLanguageModel from_json(const std::string& json_text);

private:
    NgramLanguageModel() = default;

    int order_ = 1;
    std::set<std::string> vocab_;  // includes EOS and UNK, never BOS
    // counts_[k-1]: context (k-1 symbols) -> next token -> count
    std::vector<std::map<Context, std::map<std::string, std::uint64_t>>> counts_;
    // context -> total events, per order; derived from counts_
    std::vector<std::map<Context, std::uint64_t>> context_totals_;

    void rebuild_totals();
};

NgramLanguageModel train_lm(std::span<const TokenizedSentence> sentences, int order);

}  // namespace mtqe
