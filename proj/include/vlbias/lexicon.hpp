#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vlbias {

enum class GenderLabel { Male, Female, Neutral, Discarded, Other };

std::string_view to_string(GenderLabel label);
std::optional<GenderLabel> gender_label_from_string(std::string_view name);

// True for the three demographic groups used by the metrics.
inline bool is_group(GenderLabel l) {
  return l == GenderLabel::Male || l == GenderLabel::Female || l == GenderLabel::Neutral;
}

// Group index used everywhere counts are kept: Male=0, Female=1, Neutral=2.
int group_index(GenderLabel l);
GenderLabel group_from_index(int idx);
inline constexpr int kGroupCount = 3;
extern const std::array<std::string, 3> kGroupNames;

// How to classify tokens listed both in a gendered set and the neutral set
// ("landlord"). The default keeps them neutral: their substitution target is
// the token itself.
enum class ConflictPolicy { PreferNeutral, PreferGendered };

struct LexiconConflict {
  std::string token;
  GenderLabel gendered_set;  // the gendered set the token also belongs to
};

// Result of normalizing a raw token for lexicon lookup.
struct LookupKey {
  std::string key;               // lowercase core, possessive suffix removed if applied
  bool stripped_possessive = false;
};

class GenderLexicon {
 public:
  const std::set<std::string>& male_terms() const { return male_; }
  const std::set<std::string>& female_terms() const { return female_; }
  const std::set<std::string>& neutral_terms() const { return neutral_; }
  const std::map<std::string, std::string>& neutral_map() const { return map_; }
  const std::set<std::string>& possessive_ambiguous() const { return ambiguous_; }
  const std::vector<LexiconConflict>& conflicts() const { return conflicts_; }
  const std::set<std::string>& function_words() const { return function_words_; }
  ConflictPolicy conflict_policy() const { return policy_; }

  bool is_gendered(std::string_view token) const;

  // Normalizes a raw token (lowercase, strip punctuation at the edges, retry
  // without a trailing "'s" when the base form is unknown).
  LookupKey lookup_key(std::string_view raw_token) const;

  // classify_token: total function, Other for anything outside the lists.
  GenderLabel classify(std::string_view token) const;

  // neutral_target: substitution target for a gendered token. `next_token`
  // drives the possessive heuristic for ambiguous pronouns ("her"). Leading
  // capitalization of the input is preserved. Throws DomainError if the token
  // is not gendered or has no mapping.
  std::string neutral_target(std::string_view token,
                             std::optional<std::string_view> next_token = std::nullopt) const;

  // Stable fingerprint of the lexicon content, for report metadata.
  std::string content_hash() const;

  std::string serialize() const;

  friend class LexiconBuilder;

 private:
  std::set<std::string> male_, female_, neutral_;
  std::map<std::string, std::string> map_;             // gendered -> neutral (objective form)
  std::map<std::string, std::string> possessive_map_;  // ambiguous token -> possessive form
  std::set<std::string> ambiguous_;
  std::set<std::string> function_words_;
  std::vector<LexiconConflict> conflicts_;
  ConflictPolicy policy_ = ConflictPolicy::PreferNeutral;
};

struct LexiconLoadOptions {
  ConflictPolicy policy = ConflictPolicy::PreferNeutral;
  // Optional word list for linting entries; unknown tokens produce warnings.
  std::optional<std::filesystem::path> lint_wordlist;
};

struct LexiconLoadReport {
  std::vector<std::string> lint_unknown_words;   // entries absent from the word list
  std::vector<std::string> unmapped_gendered;    // gendered terms with no substitution rule
};

GenderLexicon parse_lexicon(std::string_view content,
                            const LexiconLoadOptions& options = {},
                            LexiconLoadReport* report = nullptr);

GenderLexicon load_lexicon(const std::filesystem::path& path,
                           const LexiconLoadOptions& options = {},
                           LexiconLoadReport* report = nullptr);

// Target nouns for one corpus. Entries colliding with a gender term set are
// reported in `conflicts` and excluded from `nouns`, never silently dropped.
struct TargetNounList {
  std::string corpus_id;
  std::vector<std::string> nouns;
  std::vector<std::string> conflicts;
};

TargetNounList parse_targets(std::string_view content, const GenderLexicon& lexicon,
                             std::string default_corpus_id = "targets");
TargetNounList load_targets(const std::filesystem::path& path, const GenderLexicon& lexicon);

std::set<std::string> load_word_set(const std::filesystem::path& path);

}  // namespace vlbias
