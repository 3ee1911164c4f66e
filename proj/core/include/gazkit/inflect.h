// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_INFLECT_H_
#define GAZKIT_INFLECT_H_

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gazkit/gazetteer.h"

namespace gazkit {

enum class GramCase { kNominative, kGenitive, kDative, kAccusative, kInstrumental, kPrepositional };

inline constexpr std::array<GramCase, 5> kObliqueCases = {
    GramCase::kGenitive, GramCase::kDative, GramCase::kAccusative, GramCase::kInstrumental,
    GramCase::kPrepositional};

std::string_view to_string(GramCase c);

// Position of a token within a person name. Rules for kAny apply in every
// position and to every type.
enum class NameSlot { kFirst, kPatronymic, kSurname, kAny };

NameSlot parse_name_slot(std::string_view text);
std::string_view to_string(NameSlot slot);

// Replaces `suffix` with endings[case] on tokens that end in it. The stem
// (token minus suffix) must be at least two code points long; when
// `preceded_by` is non-empty the last stem character must be one of its
// characters.
struct InflectionRule {
  std::set<std::string> types;  // empty = every type
  NameSlot slot = NameSlot::kAny;
  std::string suffix;
  std::u32string preceded_by;
  std::array<std::string, 5> endings;  // indexed like kObliqueCases

  bool applies_to(std::string_view type, NameSlot slot) const;
};

class InflectionRules {
 public:
  InflectionRules() = default;
  explicit InflectionRules(std::vector<InflectionRule> rules);

  // Longest matching suffix wins; a slot-specific rule beats a kAny rule
  // with the same suffix; otherwise file order.
  const InflectionRule* find(std::string_view token, std::string_view type, NameSlot slot) const;

  // The token in the given case, or nothing when no rule applies. The
  // nominative is the token itself.
  std::optional<std::string> inflect(std::string_view token, std::string_view type, NameSlot slot,
                                     GramCase c) const;

  const std::vector<InflectionRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<InflectionRule> rules_;
};

// Rule file, one rule per line, '#' comments:
//   types<TAB>slot<TAB>suffix<TAB>preceded_by<TAB>gen<TAB>dat<TAB>acc<TAB>ins<TAB>pre
// types is a comma list or '*'; slot is first|patronymic|surname|any;
// '-' stands for an empty suffix or ending, '*' for no preceding-letter
// condition.
InflectionRules read_inflection_rules(std::istream& in);
InflectionRules load_inflection_rules_file(const std::string& path);

// Familiar and diminutive forms keyed by nominative first name.
class FamiliarFormTable {
 public:
  void add(std::string name, std::vector<std::string> forms);
  const std::vector<std::string>& lookup(const std::string& name) const;
  size_t size() const { return forms_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> forms_;
};

// `Name<TAB>form,form,...` lines.
FamiliarFormTable read_familiar_forms(std::istream& in);
FamiliarFormTable load_familiar_forms_file(const std::string& path);

// Types inflected by default; everything else passes through.
const std::set<std::string>& default_inflected_types();

// Inflected and familiar variants of a Russian name. For PER the name
// parts are read as first [patronymic] surname and the variants cover the
// full name, surname alone, first+surname and first+patronymic, with the
// first name optionally replaced by a familiar form; all tokens of one
// variant share a case. Other types inflect the tokens that match a rule
// and keep the rest. Results are sorted and exclude the input surface.
// Returns [] when no token of the input matches a rule.
std::vector<GazetteerEntry> inflect_name(const GazetteerEntry& entry, const InflectionRules& rules,
                                         const FamiliarFormTable& familiar,
                                         const std::set<std::string>& types =
                                             default_inflected_types());

// Runs inflect_name over Russian canonical and alias groups. The result
// holds only inflected groups, sorted.
Gazetteer inflect_gazetteer(const Gazetteer& g, const InflectionRules& rules,
                            const FamiliarFormTable& familiar,
                            const std::set<std::string>& types = default_inflected_types());

}  // namespace gazkit

#endif  // GAZKIT_INFLECT_H_
