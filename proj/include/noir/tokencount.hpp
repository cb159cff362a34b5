#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace noir {

enum class TokenStrategy { whitespace, chars4, bpe };

struct TokenCounterSpec {
    TokenStrategy strategy = TokenStrategy::whitespace;
    std::string vocab_path;  // required for bpe: one merge rule per line "a b"
};

TokenStrategy parse_token_strategy(std::string_view name);
std::string token_strategy_name(TokenStrategy s);

// Immutable counter; the bpe vocabulary is loaded once at construction so
// concurrent counting is safe.
class TokenCounter {
public:
    explicit TokenCounter(const TokenCounterSpec& spec);
    ~TokenCounter();
    TokenCounter(TokenCounter&&) noexcept;
    TokenCounter& operator=(TokenCounter&&) noexcept;

    // whitespace: maximal non-whitespace runs; chars4: ceil(codepoints / 4);
    // bpe: tokens left after applying the merge rules to the byte sequence.
    // Throws EmptyText when the text is empty after trimming.
    std::size_t count(std::string_view text) const;

    const TokenCounterSpec& spec() const { return spec_; }

private:
    TokenCounterSpec spec_;
    struct BpeVocab;
    std::unique_ptr<BpeVocab> bpe_;
};

// One-shot convenience for the stateless strategies.
std::size_t count_tokens(std::string_view text, const TokenCounterSpec& spec);

}  // namespace noir
