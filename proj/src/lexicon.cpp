#include "vlbias/lexicon.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "vlbias/error.hpp"
#include "vlbias/text.hpp"

namespace vlbias {

const std::array<std::string, 3> kGroupNames = {"male", "female", "neutral"};

std::string_view to_string(GenderLabel label) {
  switch (label) {
    case GenderLabel::Male: return "male";
    case GenderLabel::Female: return "female";
    case GenderLabel::Neutral: return "neutral";
    case GenderLabel::Discarded: return "discarded";
    case GenderLabel::Other: return "other";
  }
  return "other";
}

std::optional<GenderLabel> gender_label_from_string(std::string_view name) {
  if (name == "male") return GenderLabel::Male;
  if (name == "female") return GenderLabel::Female;
  if (name == "neutral") return GenderLabel::Neutral;
  if (name == "discarded") return GenderLabel::Discarded;
  if (name == "other") return GenderLabel::Other;
  return std::nullopt;
}

int group_index(GenderLabel l) {
  switch (l) {
    case GenderLabel::Male: return 0;
    case GenderLabel::Female: return 1;
    case GenderLabel::Neutral: return 2;
    default: throw DomainError("not a demographic group: " + std::string(to_string(l)));
  }
}

GenderLabel group_from_index(int idx) {
  switch (idx) {
    case 0: return GenderLabel::Male;
    case 1: return GenderLabel::Female;
    case 2: return GenderLabel::Neutral;
    default: throw DomainError("group index out of range");
  }
}

bool GenderLexicon::is_gendered(std::string_view token) const {
  std::string t(token);
  return male_.count(t) > 0 || female_.count(t) > 0;
}

LookupKey GenderLexicon::lookup_key(std::string_view raw_token) const {
  std::string core(raw_token);
  std::size_t lo = 0, hi = core.size();
  while (lo < hi && is_ascii_punct(core[lo])) ++lo;
  while (hi > lo && is_ascii_punct(core[hi - 1])) --hi;
  LookupKey out;
  out.key = ascii_lower(std::string_view(core).substr(lo, hi - lo));
  if (!out.key.empty() && !male_.count(out.key) && !female_.count(out.key) &&
      !neutral_.count(out.key) && out.key.size() > 2 &&
      out.key.compare(out.key.size() - 2, 2, "'s") == 0) {
    std::string stripped = out.key.substr(0, out.key.size() - 2);
    if (male_.count(stripped) || female_.count(stripped) || neutral_.count(stripped)) {
      out.key = std::move(stripped);
      out.stripped_possessive = true;
    }
  }
  return out;
}

GenderLabel GenderLexicon::classify(std::string_view token) const {
  const std::string key = lookup_key(token).key;
  if (key.empty()) return GenderLabel::Other;
  bool m = male_.count(key) > 0;
  bool f = female_.count(key) > 0;
  bool n = neutral_.count(key) > 0;
  if (n && (m || f)) {
    if (policy_ == ConflictPolicy::PreferNeutral) return GenderLabel::Neutral;
    return m ? GenderLabel::Male : GenderLabel::Female;
  }
  if (m) return GenderLabel::Male;
  if (f) return GenderLabel::Female;
  if (n) return GenderLabel::Neutral;
  return GenderLabel::Other;
}

std::string GenderLexicon::neutral_target(std::string_view token,
                                          std::optional<std::string_view> next_token) const {
  const LookupKey lk = lookup_key(token);
  if (!is_gendered(lk.key)) {
    throw DomainError("neutral_target: token is not gendered: '" + std::string(token) + "'");
  }
  std::string target;
  if (ambiguous_.count(lk.key)) {
    bool possessive = false;
    if (next_token && !next_token->empty() && !is_punct_only(*next_token)) {
      const std::string next_key = lookup_key(*next_token).key;
      possessive = !next_key.empty() && function_words_.count(next_key) == 0;
    }
    target = possessive ? possessive_map_.at(lk.key) : map_.at(lk.key);
  } else {
    auto it = map_.find(lk.key);
    if (it == map_.end()) {
      throw DomainError("neutral_target: no mapping for gendered token '" + lk.key + "'");
    }
    target = it->second;
  }
  return match_case(token, target);
}

std::string GenderLexicon::serialize() const {
  std::ostringstream out;
  auto section = [&](const char* name, const std::set<std::string>& words) {
    out << "[" << name << "]\n";
    for (const auto& w : words) out << w << "\n";
    out << "\n";
  };
  section("female", female_);
  section("male", male_);
  section("neutral", neutral_);
  out << "[map]\n";
  for (const auto& [k, v] : map_) {
    if (ambiguous_.count(k)) continue;
    out << k << " -> " << v << "\n";
  }
  out << "\n[ambiguous]\n";
  for (const auto& k : ambiguous_) {
    out << k << " -> " << map_.at(k) << " | " << possessive_map_.at(k) << "\n";
  }
  out << "\n[function-words]\n";
  for (const auto& w : function_words_) out << w << "\n";
  return out.str();
}

std::string GenderLexicon::content_hash() const { return fnv1a64_hex(serialize()); }

namespace {

std::string trim(std::string_view s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return std::string(s.substr(lo, hi - lo));
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ParseError("lexicon line " + std::to_string(line_no) + ": " + msg);
}

void check_token(int line_no, const std::string& token) {
  if (token.empty()) fail(line_no, "empty token");
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c))) fail(line_no, "token contains whitespace");
    if (c >= 'A' && c <= 'Z') fail(line_no, "token must be lowercase: '" + token + "'");
  }
}

}  // namespace

GenderLexicon parse_lexicon(std::string_view content, const LexiconLoadOptions& options,
                            LexiconLoadReport* report) {
  GenderLexicon lex;
  lex.policy_ = options.policy;

  enum class Section { None, Male, Female, Neutral, Map, Ambiguous, FunctionWords };
  Section section = Section::None;
  bool saw_male = false, saw_female = false, saw_neutral = false;

  struct MapRule {
    int line_no;
    std::string key, value;
  };
  struct AmbiguousRule {
    int line_no;
    std::string key, objective, possessive;
  };
  std::vector<MapRule> map_rules;
  std::vector<AmbiguousRule> ambiguous_rules;

  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line_no, "unterminated section header");
      std::string name = s.substr(1, s.size() - 2);
      if (name == "male") { section = Section::Male; saw_male = true; }
      else if (name == "female") { section = Section::Female; saw_female = true; }
      else if (name == "neutral") { section = Section::Neutral; saw_neutral = true; }
      else if (name == "map") section = Section::Map;
      else if (name == "ambiguous") section = Section::Ambiguous;
      else if (name == "function-words") section = Section::FunctionWords;
      else fail(line_no, "unknown section [" + name + "]");
      continue;
    }
    switch (section) {
      case Section::None:
        fail(line_no, "content before any section header");
      case Section::Male:
        check_token(line_no, s);
        lex.male_.insert(s);
        break;
      case Section::Female:
        check_token(line_no, s);
        lex.female_.insert(s);
        break;
      case Section::Neutral:
        check_token(line_no, s);
        lex.neutral_.insert(s);
        break;
      case Section::FunctionWords:
        check_token(line_no, s);
        lex.function_words_.insert(s);
        break;
      case Section::Map: {
        auto arrow = s.find("->");
        if (arrow == std::string::npos) fail(line_no, "expected 'gendered -> neutral'");
        MapRule r{line_no, trim(s.substr(0, arrow)), trim(s.substr(arrow + 2))};
        check_token(line_no, r.key);
        check_token(line_no, r.value);
        map_rules.push_back(std::move(r));
        break;
      }
      case Section::Ambiguous: {
        auto arrow = s.find("->");
        if (arrow == std::string::npos) fail(line_no, "expected 'token -> objective | possessive'");
        std::string rhs = trim(s.substr(arrow + 2));
        auto bar = rhs.find('|');
        if (bar == std::string::npos) fail(line_no, "expected 'objective | possessive'");
        AmbiguousRule r{line_no, trim(s.substr(0, arrow)), trim(rhs.substr(0, bar)),
                        trim(rhs.substr(bar + 1))};
        check_token(line_no, r.key);
        check_token(line_no, r.objective);
        check_token(line_no, r.possessive);
        ambiguous_rules.push_back(std::move(r));
        break;
      }
    }
  }

  if (!saw_male || !saw_female || !saw_neutral) {
    throw ValidationError("lexicon must define [male], [female] and [neutral] sections");
  }

  // male and female must be disjoint; gendered/neutral overlaps become conflicts.
  for (const auto& t : lex.male_) {
    if (lex.female_.count(t)) {
      throw ValidationError("token '" + t + "' appears in both [male] and [female]");
    }
    if (lex.neutral_.count(t)) lex.conflicts_.push_back({t, GenderLabel::Male});
  }
  for (const auto& t : lex.female_) {
    if (lex.neutral_.count(t)) lex.conflicts_.push_back({t, GenderLabel::Female});
  }

  auto require_gendered = [&](const MapRule& r) {
    if (!lex.male_.count(r.key) && !lex.female_.count(r.key)) {
      throw ValidationError("lexicon line " + std::to_string(r.line_no) + ": mapping key '" +
                            r.key + "' is not in [male] or [female]");
    }
  };
  auto require_neutral = [&](int ln, const std::string& v) {
    if (!lex.neutral_.count(v)) {
      throw ValidationError("lexicon line " + std::to_string(ln) + ": mapping target '" + v +
                            "' is not in [neutral]");
    }
  };
  for (const auto& r : map_rules) {
    require_gendered(r);
    require_neutral(r.line_no, r.value);
    auto [it, inserted] = lex.map_.emplace(r.key, r.value);
    if (!inserted && it->second != r.value) {
      throw ValidationError("lexicon line " + std::to_string(r.line_no) +
                            ": conflicting mappings for '" + r.key + "' ('" + it->second +
                            "' vs '" + r.value + "'); use [ambiguous] for context-dependent tokens");
    }
  }
  for (const auto& r : ambiguous_rules) {
    require_gendered({r.line_no, r.key, r.objective});
    require_neutral(r.line_no, r.objective);
    require_neutral(r.line_no, r.possessive);
    lex.map_[r.key] = r.objective;
    lex.possessive_map_[r.key] = r.possessive;
    lex.ambiguous_.insert(r.key);
  }

  if (report) {
    for (const auto& set : {&lex.male_, &lex.female_}) {
      for (const auto& t : *set) {
        if (!lex.map_.count(t)) report->unmapped_gendered.push_back(t);
      }
    }
    if (options.lint_wordlist) {
      std::set<std::string> known = load_word_set(*options.lint_wordlist);
      for (const auto* set : {&lex.male_, &lex.female_, &lex.neutral_}) {
        for (const auto& t : *set) {
          if (!known.count(t)) report->lint_unknown_words.push_back(t);
        }
      }
    }
  }
  return lex;
}

GenderLexicon load_lexicon(const std::filesystem::path& path, const LexiconLoadOptions& options,
                           LexiconLoadReport* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_lexicon(buf.str(), options, report);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

TargetNounList parse_targets(std::string_view content, const GenderLexicon& lexicon,
                             std::string default_corpus_id) {
  TargetNounList out;
  out.corpus_id = std::move(default_corpus_id);
  std::set<std::string> seen;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("corpus:", 0) == 0) {
      out.corpus_id = trim(s.substr(7));
      continue;
    }
    std::string noun = ascii_lower(s);
    for (char c : noun) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw ParseError("targets line " + std::to_string(line_no) + ": token contains whitespace");
      }
    }
    if (!seen.insert(noun).second) continue;  // duplicate after normalization
    if (lexicon.male_terms().count(noun) || lexicon.female_terms().count(noun) ||
        lexicon.neutral_terms().count(noun)) {
      out.conflicts.push_back(noun);
      continue;
    }
    out.nouns.push_back(noun);
  }
  return out;
}

TargetNounList load_targets(const std::filesystem::path& path, const GenderLexicon& lexicon) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open targets file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_targets(buf.str(), lexicon, path.stem().string());
}

std::set<std::string> load_word_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open word list: " + path.string());
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    out.insert(ascii_lower(s));
  }
  return out;
}

}  // namespace vlbias
