#pragma once

// Text normalization shared by span matching and the lexical NatOp tier:
// casefold, fold common Latin diacritics, strip punctuation, trim trailing
// plural 's' per token.

#include <string>
#include <vector>

namespace veritab {

// Lowercases ASCII and folds common UTF-8 Latin-1 accented letters to their
// base letter (Cariño -> carino). Unknown bytes pass through.
std::string fold_text(const std::string& s);

// fold_text + punctuation replaced by spaces + whitespace collapsed.
std::string normalize_text(const std::string& s);

// Normalized tokens with trailing plural 's' stripped (word length > 3).
std::vector<std::string> normalize_tokens(const std::string& s);

// Tokens that survive stopword removal; these carry the comparable content.
std::vector<std::string> content_tokens(const std::string& s);

bool is_stopword(const std::string& normalized_token);

// True when `needle`'s content tokens occur as a contiguous run inside
// `haystack`'s content tokens. Empty needle content never matches.
bool content_run_match(const std::string& needle, const std::string& haystack);

// True when every content token of `needle` occurs in `haystack` (multiset).
bool content_subset(const std::string& needle, const std::string& haystack);

size_t content_overlap(const std::string& a, const std::string& b);

std::string trim(const std::string& s);

}  // namespace veritab
