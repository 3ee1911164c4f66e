// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/inflect.h"

#include <algorithm>
#include <fstream>
#include <istream>

#include "gazkit/error.h"
#include "gazkit/utf8.h"
#include "text.h"

namespace gazkit {

namespace {

std::string dash_empty(std::string_view field) {
  return field == "-" ? std::string() : std::string(field);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

size_t case_slot(GramCase c) { return static_cast<size_t>(c) - 1; }

}  // namespace

std::string_view to_string(GramCase c) {
  switch (c) {
    case GramCase::kNominative:
      return "nominative";
    case GramCase::kGenitive:
      return "genitive";
    case GramCase::kDative:
      return "dative";
    case GramCase::kAccusative:
      return "accusative";
    case GramCase::kInstrumental:
      return "instrumental";
    case GramCase::kPrepositional:
      return "prepositional";
  }
  return "nominative";
}

NameSlot parse_name_slot(std::string_view text) {
  if (text == "first") return NameSlot::kFirst;
  if (text == "patronymic") return NameSlot::kPatronymic;
  if (text == "surname") return NameSlot::kSurname;
  if (text == "any") return NameSlot::kAny;
  throw ParseError("unknown name slot '" + std::string(text) + "'");
}

std::string_view to_string(NameSlot slot) {
  switch (slot) {
    case NameSlot::kFirst:
      return "first";
    case NameSlot::kPatronymic:
      return "patronymic";
    case NameSlot::kSurname:
      return "surname";
    case NameSlot::kAny:
      return "any";
  }
  return "any";
}

bool InflectionRule::applies_to(std::string_view type, NameSlot s) const {
  if (!types.empty() && !types.count(std::string(type))) return false;
  return slot == NameSlot::kAny || slot == s;
}

InflectionRules::InflectionRules(std::vector<InflectionRule> rules) : rules_(std::move(rules)) {}

const InflectionRule* InflectionRules::find(std::string_view token, std::string_view type,
                                            NameSlot slot) const {
  const InflectionRule* best = nullptr;
  for (const auto& rule : rules_) {
    if (!rule.applies_to(type, slot) || !ends_with(token, rule.suffix)) continue;
    std::u32string stem = utf8::decode(token.substr(0, token.size() - rule.suffix.size()));
    if (stem.size() < 2) continue;
    if (!rule.preceded_by.empty() &&
        rule.preceded_by.find(stem.back()) == std::u32string::npos) {
      continue;
    }
    if (!best || rule.suffix.size() > best->suffix.size() ||
        (rule.suffix.size() == best->suffix.size() && best->slot == NameSlot::kAny &&
         rule.slot != NameSlot::kAny)) {
      best = &rule;
    }
  }
  return best;
}

std::optional<std::string> InflectionRules::inflect(std::string_view token, std::string_view type,
                                                    NameSlot slot, GramCase c) const {
  const InflectionRule* rule = find(token, type, slot);
  if (!rule) return std::nullopt;
  if (c == GramCase::kNominative) return std::string(token);
  std::string out(token.substr(0, token.size() - rule->suffix.size()));
  out += rule->endings[case_slot(c)];
  return out;
}

InflectionRules read_inflection_rules(std::istream& in) {
  std::vector<InflectionRule> rules;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::strip_cr(line);
    if (text::is_blank(line) || line[0] == '#') continue;
    auto f = text::split(line, '\t');
    if (f.size() != 9) {
      throw ParseError("inflection rules line " + std::to_string(lineno) + ": expected 9 fields");
    }
    InflectionRule r;
    if (f[0] != "*") {
      for (auto t : text::split(f[0], ',')) r.types.emplace(t);
    }
    try {
      r.slot = parse_name_slot(f[1]);
    } catch (const ParseError& e) {
      throw ParseError("inflection rules line " + std::to_string(lineno) + ": " + e.what());
    }
    r.suffix = dash_empty(f[2]);
    if (f[3] != "*") r.preceded_by = utf8::decode(f[3]);
    for (size_t i = 0; i < 5; ++i) r.endings[i] = dash_empty(f[4 + i]);
    rules.push_back(std::move(r));
  }
  return InflectionRules(std::move(rules));
}

InflectionRules load_inflection_rules_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open inflection rules: " + path);
  return read_inflection_rules(in);
}

void FamiliarFormTable::add(std::string name, std::vector<std::string> forms) {
  auto& dst = forms_[std::move(name)];
  for (auto& f : forms) {
    if (std::find(dst.begin(), dst.end(), f) == dst.end()) dst.push_back(std::move(f));
  }
}

const std::vector<std::string>& FamiliarFormTable::lookup(const std::string& name) const {
  static const std::vector<std::string> kNone;
  auto it = forms_.find(name);
  return it == forms_.end() ? kNone : it->second;
}

FamiliarFormTable read_familiar_forms(std::istream& in) {
  FamiliarFormTable table;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::strip_cr(line);
    if (text::is_blank(line) || line[0] == '#') continue;
    auto f = text::split(line, '\t');
    if (f.size() != 2 || f[0].empty()) {
      throw ParseError("familiar forms line " + std::to_string(lineno) + ": expected name<TAB>forms");
    }
    std::vector<std::string> forms;
    for (auto form : text::split(f[1], ',')) {
      if (!form.empty()) forms.emplace_back(form);
    }
    table.add(std::string(f[0]), std::move(forms));
  }
  return table;
}

FamiliarFormTable load_familiar_forms_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open familiar forms: " + path);
  return read_familiar_forms(in);
}

const std::set<std::string>& default_inflected_types() {
  static const std::set<std::string> kTypes = {"PER", "GPE", "LOC", "ORG"};
  return kTypes;
}

namespace {

struct Part {
  std::vector<std::string> forms;  // nominative alternatives
  NameSlot slot;
};

// Inflects each token in case c; an unmatched token stays as is. Returns
// nothing when no token changed.
std::optional<std::vector<std::string>> inflect_tokens(const std::vector<std::string>& tokens,
                                                       const std::vector<NameSlot>& slots,
                                                       const std::string& type,
                                                       const InflectionRules& rules, GramCase c) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  bool changed = false;
  for (size_t i = 0; i < tokens.size(); ++i) {
    auto form = rules.inflect(tokens[i], type, slots[i], c);
    if (form && *form != tokens[i]) {
      changed = true;
      out.push_back(std::move(*form));
    } else {
      out.push_back(tokens[i]);
    }
  }
  if (!changed) return std::nullopt;
  return out;
}

NameSlot single_token_slot(const std::string& token, const InflectionRules& rules) {
  return rules.find(token, "PER", NameSlot::kSurname) ? NameSlot::kSurname : NameSlot::kFirst;
}

}  // namespace

std::vector<GazetteerEntry> inflect_name(const GazetteerEntry& entry, const InflectionRules& rules,
                                         const FamiliarFormTable& familiar,
                                         const std::set<std::string>& types) {
  if (entry.language != "ru") {
    throw DataError("inflect_name expects a Russian entry, got language '" + entry.language + "'");
  }
  if (entry.tokens.empty() || !types.count(entry.type)) return {};

  // Each variant is a list of parts; every part contributes one token.
  std::vector<std::vector<Part>> shapes;
  const auto& t = entry.tokens;
  if (entry.type == "PER") {
    std::vector<std::string> first_forms{t.front()};
    for (const auto& f : familiar.lookup(t.front())) first_forms.push_back(f);
    Part first{first_forms, NameSlot::kFirst};
    if (t.size() == 1) {
      NameSlot slot = single_token_slot(t[0], rules);
      shapes.push_back({Part{slot == NameSlot::kFirst ? first_forms : std::vector{t[0]}, slot}});
    } else {
      Part surname{{t.back()}, NameSlot::kSurname};
      std::vector<Part> middle;
      for (size_t i = 1; i + 1 < t.size(); ++i) middle.push_back(Part{{t[i]}, NameSlot::kPatronymic});
      std::vector<Part> full{first};
      full.insert(full.end(), middle.begin(), middle.end());
      full.push_back(surname);
      shapes.push_back(full);
      shapes.push_back({surname});
      if (!middle.empty()) {
        shapes.push_back({first, surname});
        std::vector<Part> fp{first};
        fp.insert(fp.end(), middle.begin(), middle.end());
        shapes.push_back(fp);
      }
    }
  } else {
    std::vector<Part> all;
    for (const auto& tok : t) all.push_back(Part{{tok}, NameSlot::kAny});
    shapes.push_back(all);
  }

  std::set<std::vector<std::string>> seen;
  for (const auto& shape : shapes) {
    std::vector<NameSlot> slots;
    for (const auto& p : shape) slots.push_back(p.slot);
    // Odometer over the alternatives of each part.
    std::vector<size_t> pick(shape.size(), 0);
    while (true) {
      std::vector<std::string> tokens;
      for (size_t i = 0; i < shape.size(); ++i) tokens.push_back(shape[i].forms[pick[i]]);
      for (GramCase c : kObliqueCases) {
        if (auto v = inflect_tokens(tokens, slots, entry.type, rules, c)) seen.insert(std::move(*v));
      }
      size_t k = 0;
      while (k < shape.size() && ++pick[k] == shape[k].forms.size()) pick[k++] = 0;
      if (k == shape.size()) break;
    }
  }
  seen.erase(entry.tokens);

  std::vector<GazetteerEntry> out;
  out.reserve(seen.size());
  for (const auto& tokens : seen) {
    out.push_back(GazetteerEntry{tokens, entry.type, EntrySource::kInflected, entry.language});
  }
  return out;
}

Gazetteer inflect_gazetteer(const Gazetteer& g, const InflectionRules& rules,
                            const FamiliarFormTable& familiar, const std::set<std::string>& types) {
  Gazetteer out;
  for (const auto& [key, group] : g.groups()) {
    if (key.language != "ru" || key.source == EntrySource::kInflected) continue;
    for (const auto& tokens : group.entries()) {
      GazetteerEntry e{tokens, key.type, key.source, key.language};
      for (auto& v : inflect_name(e, rules, familiar, types)) out.insert(v);
    }
  }
  out.sort_groups();
  return out;
}

}  // namespace gazkit
