#include "veritab/textnorm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace veritab {

namespace {

// Two-byte UTF-8 sequences for Latin-1 letters mapped to ASCII.
const std::map<std::string, char> kDiacritics = {
    {"\xc3\xa0", 'a'}, {"\xc3\xa1", 'a'}, {"\xc3\xa2", 'a'}, {"\xc3\xa3", 'a'},
    {"\xc3\xa4", 'a'}, {"\xc3\xa5", 'a'}, {"\xc3\xa8", 'e'}, {"\xc3\xa9", 'e'},
    {"\xc3\xaa", 'e'}, {"\xc3\xab", 'e'}, {"\xc3\xac", 'i'}, {"\xc3\xad", 'i'},
    {"\xc3\xae", 'i'}, {"\xc3\xaf", 'i'}, {"\xc3\xb2", 'o'}, {"\xc3\xb3", 'o'},
    {"\xc3\xb4", 'o'}, {"\xc3\xb5", 'o'}, {"\xc3\xb6", 'o'}, {"\xc3\xb9", 'u'},
    {"\xc3\xba", 'u'}, {"\xc3\xbb", 'u'}, {"\xc3\xbc", 'u'}, {"\xc3\xb1", 'n'},
    {"\xc3\xa7", 'c'}, {"\xc3\xbd", 'y'},
    {"\xc3\x80", 'a'}, {"\xc3\x81", 'a'}, {"\xc3\x82", 'a'}, {"\xc3\x83", 'a'},
    {"\xc3\x84", 'a'}, {"\xc3\x85", 'a'}, {"\xc3\x88", 'e'}, {"\xc3\x89", 'e'},
    {"\xc3\x8a", 'e'}, {"\xc3\x8b", 'e'}, {"\xc3\x8c", 'i'}, {"\xc3\x8d", 'i'},
    {"\xc3\x8e", 'i'}, {"\xc3\x8f", 'i'}, {"\xc3\x92", 'o'}, {"\xc3\x93", 'o'},
    {"\xc3\x94", 'o'}, {"\xc3\x95", 'o'}, {"\xc3\x96", 'o'}, {"\xc3\x99", 'u'},
    {"\xc3\x9a", 'u'}, {"\xc3\x9b", 'u'}, {"\xc3\x9c", 'u'}, {"\xc3\x91", 'n'},
    {"\xc3\x87", 'c'},
};

const std::set<std::string>& stopwords() {
  static const std::set<std::string> kStop = {
      "a",   "an",  "the",  "in",  "on",  "at",   "of",   "for", "to",
      "by",  "as",  "is",   "are", "was", "were", "be",   "been", "has",
      "have", "had", "its",  "it",  "and", "with", "from", "that", "this",
      "during", "which",
  };
  return kStop;
}

}  // namespace

std::string fold_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    unsigned char c = s[i];
    if (c < 0x80) {
      out += static_cast<char>(std::tolower(c));
      ++i;
      continue;
    }
    if (i + 1 < s.size()) {
      auto it = kDiacritics.find(s.substr(i, 2));
      if (it != kDiacritics.end()) {
        out += it->second;
        i += 2;
        continue;
      }
    }
    out += s[i];
    ++i;
  }
  return out;
}

std::string normalize_text(const std::string& s) {
  std::string folded = fold_text(s);
  std::string spaced;
  for (char c : folded) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      spaced += c;
    } else {
      spaced += ' ';
    }
  }
  std::istringstream iss(spaced);
  std::string tok, out;
  while (iss >> tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

std::vector<std::string> normalize_tokens(const std::string& s) {
  std::istringstream iss(normalize_text(s));
  std::vector<std::string> toks;
  std::string tok;
  while (iss >> tok) {
    if (tok.size() > 3 && tok.back() == 's' && !std::isdigit(static_cast<unsigned char>(tok[0])))
      tok.pop_back();
    toks.push_back(tok);
  }
  return toks;
}

bool is_stopword(const std::string& normalized_token) {
  return stopwords().count(normalized_token) > 0;
}

std::vector<std::string> content_tokens(const std::string& s) {
  std::vector<std::string> out;
  for (auto& t : normalize_tokens(s))
    if (!is_stopword(t)) out.push_back(t);
  return out;
}

bool content_run_match(const std::string& needle, const std::string& haystack) {
  auto n = content_tokens(needle);
  auto h = content_tokens(haystack);
  if (n.empty() || n.size() > h.size()) return false;
  for (size_t i = 0; i + n.size() <= h.size(); ++i) {
    if (std::equal(n.begin(), n.end(), h.begin() + i)) return true;
  }
  return false;
}

bool content_subset(const std::string& needle, const std::string& haystack) {
  auto n = content_tokens(needle);
  auto h = content_tokens(haystack);
  if (n.empty()) return false;
  std::multiset<std::string> pool(h.begin(), h.end());
  for (auto& t : n) {
    auto it = pool.find(t);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

size_t content_overlap(const std::string& a, const std::string& b) {
  auto ta = content_tokens(a);
  auto tb = content_tokens(b);
  std::multiset<std::string> pool(tb.begin(), tb.end());
  size_t n = 0;
  for (auto& t : ta) {
    auto it = pool.find(t);
    if (it != pool.end()) {
      pool.erase(it);
      ++n;
    }
  }
  return n;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace veritab
