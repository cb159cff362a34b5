#include "noir/tokencount.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "noir/errors.hpp"
#include "noir/text.hpp"

namespace noir {

TokenStrategy parse_token_strategy(std::string_view name) {
    if (name == "whitespace") return TokenStrategy::whitespace;
    if (name == "chars4") return TokenStrategy::chars4;
    if (name == "bpe") return TokenStrategy::bpe;
    throw VocabLoadError("unknown token strategy: '" + std::string(name) + "'");
}

std::string token_strategy_name(TokenStrategy s) {
    switch (s) {
        case TokenStrategy::whitespace: return "whitespace";
        case TokenStrategy::chars4: return "chars4";
        case TokenStrategy::bpe: return "bpe";
    }
    return "?";
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<std::string, std::string>& p) const {
        return std::hash<std::string>{}(p.first) * 1000003u ^ std::hash<std::string>{}(p.second);
    }
};

std::size_t count_whitespace_runs(std::string_view text) {
    std::size_t pos = 0, runs = 0;
    bool in_run = false;
    while (pos < text.size()) {
        const bool space = is_unicode_space(next_codepoint(text, pos));
        if (!space && !in_run) ++runs;
        in_run = !space;
    }
    return runs;
}

bool is_blank(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (!is_unicode_space(next_codepoint(text, pos))) return false;
    }
    return true;
}

}  // namespace

struct TokenCounter::BpeVocab {
    std::vector<std::pair<std::string, std::string>> rules;  // by rank (line order)
    std::unordered_map<std::pair<std::string, std::string>, std::size_t, PairHash> ranks;

    explicit BpeVocab(const std::string& path) {
        std::ifstream in(path);
        if (!in) {
            throw VocabLoadError("cannot open vocabulary file: " + path);
        }
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const auto sp = line.find(' ');
            if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size() ||
                line.find(' ', sp + 1) != std::string::npos) {
                throw VocabLoadError("malformed merge rule at " + path + ":" +
                                     std::to_string(lineno) + ": '" + line + "'");
            }
            rules.emplace_back(line.substr(0, sp), line.substr(sp + 1));
            ranks.emplace(rules.back(), rules.size() - 1);
        }
    }

    std::size_t count(std::string_view text) const {
        std::vector<std::string> tokens;
        tokens.reserve(text.size());
        for (char c : text) tokens.emplace_back(1, c);
        while (tokens.size() > 1) {
            // best (lowest-rank) adjacent pair, then merge all its occurrences
            std::size_t best_rank = std::numeric_limits<std::size_t>::max();
            for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
                const auto it = ranks.find({tokens[i], tokens[i + 1]});
                if (it != ranks.end() && it->second < best_rank) best_rank = it->second;
            }
            if (best_rank == std::numeric_limits<std::size_t>::max()) break;
            const auto& [left, right] = rules[best_rank];
            std::vector<std::string> merged;
            merged.reserve(tokens.size());
            for (std::size_t i = 0; i < tokens.size(); ++i) {
                if (i + 1 < tokens.size() && tokens[i] == left && tokens[i + 1] == right) {
                    merged.push_back(tokens[i] + tokens[i + 1]);
                    ++i;
                } else {
                    merged.push_back(std::move(tokens[i]));
                }
            }
            tokens = std::move(merged);
        }
        return tokens.size();
    }
};

TokenCounter::TokenCounter(const TokenCounterSpec& spec) : spec_(spec) {
    if (spec_.strategy == TokenStrategy::bpe) {
        if (spec_.vocab_path.empty()) {
            throw VocabLoadError("bpe strategy requires a vocabulary file");
        }
        bpe_ = std::make_unique<BpeVocab>(spec_.vocab_path);
    }
}

TokenCounter::~TokenCounter() = default;
TokenCounter::TokenCounter(TokenCounter&&) noexcept = default;
TokenCounter& TokenCounter::operator=(TokenCounter&&) noexcept = default;

std::size_t TokenCounter::count(std::string_view text) const {
    if (is_blank(text)) {
        throw EmptyText("text is empty after trimming whitespace");
    }
    switch (spec_.strategy) {
        case TokenStrategy::whitespace:
            return count_whitespace_runs(text);
        case TokenStrategy::chars4:
            return (count_codepoints(text) + 3) / 4;
        case TokenStrategy::bpe:
            return bpe_->count(text);
    }
    return 0;
}

std::size_t count_tokens(std::string_view text, const TokenCounterSpec& spec) {
    return TokenCounter(spec).count(text);
}

}  // namespace noir
