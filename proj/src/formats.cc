/* Copyright 2026 The trikit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "trikit/formats.h"

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "trikit/error.h"

namespace trikit {
namespace {

namespace pt = boost::property_tree;
using json = nlohmann::json;

constexpr std::string_view kLexOpen = "\n          ";
constexpr std::string_view kLexClose = "\n      ";

void AppendEscapedText(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
}

void AppendEscapedAttr(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
}

void AppendAttr(std::string& out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  AppendEscapedAttr(out, value);
  out += '"';
}

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string LexTextFromXml(std::string_view raw) {
  if (raw.size() >= kLexOpen.size() + kLexClose.size() &&
      raw.starts_with(kLexOpen) && raw.ends_with(kLexClose)) {
    return std::string(raw.substr(
        kLexOpen.size(), raw.size() - kLexOpen.size() - kLexClose.size()));
  }
  return std::string(Trim(raw));
}

void CollectEntries(const pt::ptree& node, std::vector<const pt::ptree*>& out) {
  for (const auto& [name, child] : node) {
    if (name == "entry") {
      out.push_back(&child);
    } else if (name != "<xmlattr>") {
      CollectEntries(child, out);
    }
  }
}

std::string Attr(const pt::ptree& node, const std::string& name,
                 const std::string& fallback = "") {
  return node.get<std::string>("<xmlattr>." + name, fallback);
}

CorpusEntry EntryFromPtree(const pt::ptree& node, const std::string& where) {
  CorpusEntry entry;
  entry.category = Attr(node, "category");
  entry.eid = Attr(node, "eid");
  const std::string loc = entry.eid.empty() ? where : "eid " + entry.eid;
  if (auto source = node.get_optional<std::string>("<xmlattr>.source")) {
    auto p = ParseProvenance(*source);
    if (!p) {
      throw Error(ErrorCode::kMalformedEntry, "unknown source \"" + *source + "\"",
                  loc);
    }
    entry.tripleset.provenance = *p;
  }
  entry.table_id = Attr(node, "table");
  entry.has_empty_value = Attr(node, "emptyvalue") == "true";

  const auto mts = node.get_child_optional("modifiedtripleset");
  if (!mts) {
    throw Error(ErrorCode::kMalformedEntry, "entry has no <modifiedtripleset>",
                loc);
  }
  for (const auto& [name, child] : *mts) {
    if (name != "mtriple") continue;
    try {
      entry.tripleset.triples.push_back(ParseMtriple(child.data()));
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedEntry, e.what(), loc);
    }
  }
  for (const auto& [name, child] : node) {
    if (name != "lex") continue;
    Realization r;
    r.text = LexTextFromXml(child.data());
    r.comment = Attr(child, "comment");
    if (auto a = child.get_optional<std::string>("<xmlattr>.annotator")) {
      r.annotator = ParseAnnotator(*a);
      if (!r.annotator) {
        throw Error(ErrorCode::kMalformedEntry, "unknown annotator \"" + *a + "\"",
                    loc);
      }
    }
    entry.realizations.push_back(std::move(r));
  }
  if (auto size = node.get_optional<std::string>("<xmlattr>.size")) {
    int declared = -1;
    try {
      size_t used = 0;
      declared = std::stoi(*size, &used);
      if (used != size->size()) declared = -1;
    } catch (const std::exception&) {
      declared = -1;
    }
    if (declared != entry.size()) {
      throw Error(ErrorCode::kMalformedEntry,
                  "size attribute \"" + *size + "\" does not match " +
                      std::to_string(entry.size()) + " mtriple elements",
                  loc);
    }
  }
  return entry;
}

}  // namespace

std::string EscapeTripleField(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    if (c == '|' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string FormatMtriple(const Triple& t) {
  return EscapeTripleField(t.subject) + " | " + EscapeTripleField(t.predicate) +
         " | " + EscapeTripleField(t.object);
}

Triple ParseMtriple(std::string_view text) {
  std::vector<std::string> fields(1);
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\\' && i + 1 < text.size()) {
      fields.back() += text[++i];
    } else if (c == '|') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (fields.size() != 3) {
    throw Error(ErrorCode::kMalformedEntry,
                "mtriple \"" + std::string(text) + "\" has " +
                    std::to_string(fields.size()) + " fields, expected 3");
  }
  // Each separator is " | "; drop exactly the one space on either side.
  for (size_t i = 0; i < 3; ++i) {
    std::string& f = fields[i];
    if (i > 0 && !f.empty() && f.front() == ' ') f.erase(0, 1);
    if (i < 2 && !f.empty() && f.back() == ' ') f.pop_back();
  }
  return {fields[0], fields[1], fields[2]};
}

std::string WriteXml(std::span<const CorpusEntry> entries) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<benchmark>\n  <entries>\n";
  bool first = true;
  for (const CorpusEntry& e : entries) {
    if (!first) out += "\n";
    first = false;
    out += "    <entry";
    AppendAttr(out, "category", e.category);
    AppendAttr(out, "eid", e.eid);
    AppendAttr(out, "size", std::to_string(e.size()));
    if (e.tripleset.provenance != Provenance::kUnknown) {
      AppendAttr(out, "source", ProvenanceName(e.tripleset.provenance));
    }
    if (!e.table_id.empty()) AppendAttr(out, "table", e.table_id);
    if (e.has_empty_value) AppendAttr(out, "emptyvalue", "true");
    out += ">\n      <modifiedtripleset>\n";
    for (const Triple& t : e.tripleset.triples) {
      out += "        <mtriple>";
      AppendEscapedText(out, FormatMtriple(t));
      out += "</mtriple>\n";
    }
    out += "      </modifiedtripleset>\n";
    int lid = 0;
    for (const Realization& r : e.realizations) {
      out += "      <lex";
      AppendAttr(out, "comment", r.comment);
      AppendAttr(out, "lid", "Id" + std::to_string(++lid));
      if (r.annotator) AppendAttr(out, "annotator", AnnotatorName(*r.annotator));
      out += ">";
      out += kLexOpen;
      AppendEscapedText(out, r.text);
      out += kLexClose;
      out += "</lex>\n";
    }
    out += "    </entry>\n";
  }
  out += "  </entries>\n</benchmark>\n";
  return out;
}

std::vector<CorpusEntry> ReadXml(std::string_view document) {
  pt::ptree root;
  std::istringstream in{std::string(document)};
  try {
    pt::read_xml(in, root, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::kMalformedEntry, e.message(),
                "line " + std::to_string(e.line()));
  }
  std::vector<const pt::ptree*> nodes;
  CollectEntries(root, nodes);
  std::vector<CorpusEntry> entries;
  entries.reserve(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    entries.push_back(EntryFromPtree(*nodes[i], "entry #" + std::to_string(i + 1)));
  }
  return entries;
}

std::string Linearize(const TripleSet& ts) {
  std::string out;
  for (const Triple& t : ts.triples) {
    if (!out.empty()) out += ' ';
    out += "<H> ";
    out += t.subject;
    out += " <R> ";
    out += t.predicate == kTitleLabel ? std::string("[title]") : t.predicate;
    out += " <T> ";
    out += t.object;
  }
  return out;
}

json TripleSetToJson(const TripleSet& ts) {
  json triples = json::array();
  for (const Triple& t : ts.triples) {
    triples.push_back(json::array({t.subject, t.predicate, t.object}));
  }
  return {{"provenance", ProvenanceName(ts.provenance)}, {"triples", triples}};
}

TripleSet TripleSetFromJson(const json& j) {
  TripleSet ts;
  if (j.contains("provenance")) {
    const std::string name = j.at("provenance").get<std::string>();
    auto p = ParseProvenance(name);
    if (!p) throw Error(ErrorCode::kParse, "unknown provenance \"" + name + "\"");
    ts.provenance = *p;
  }
  for (const auto& t : j.at("triples")) {
    if (!t.is_array() || t.size() != 3) {
      throw Error(ErrorCode::kParse, "triple must be a 3-element array");
    }
    ts.triples.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                          t[2].get<std::string>()});
  }
  return ts;
}

json EntryToJson(const CorpusEntry& e) {
  json j = TripleSetToJson(e.tripleset);
  j["schema"] = kCorpusSchemaVersion;
  j["eid"] = e.eid;
  j["category"] = e.category;
  j["size"] = e.size();
  j["table_id"] = e.table_id;
  j["has_empty_value"] = e.has_empty_value;
  json lex = json::array();
  for (const Realization& r : e.realizations) {
    json jr = {{"text", r.text}, {"comment", r.comment}};
    if (r.annotator) jr["annotator"] = AnnotatorName(*r.annotator);
    lex.push_back(std::move(jr));
  }
  j["realizations"] = std::move(lex);
  return j;
}

CorpusEntry EntryFromJson(const json& j) {
  if (j.contains("schema") && j.at("schema").get<int>() != kCorpusSchemaVersion) {
    throw Error(ErrorCode::kParse, "unsupported corpus schema " +
                                       j.at("schema").dump());
  }
  CorpusEntry e;
  e.tripleset = TripleSetFromJson(j);
  e.eid = j.value("eid", "");
  e.category = j.value("category", "");
  e.table_id = j.value("table_id", "");
  e.has_empty_value = j.value("has_empty_value", false);
  if (j.contains("size") && j.at("size").get<int>() != e.size()) {
    throw Error(ErrorCode::kMalformedEntry, "size does not match triple count",
                "eid " + e.eid);
  }
  for (const auto& jr : j.value("realizations", json::array())) {
    Realization r;
    r.text = jr.at("text").get<std::string>();
    r.comment = jr.value("comment", "");
    if (jr.contains("annotator")) {
      const std::string name = jr.at("annotator").get<std::string>();
      r.annotator = ParseAnnotator(name);
      if (!r.annotator) {
        throw Error(ErrorCode::kParse, "unknown annotator \"" + name + "\"");
      }
    }
    e.realizations.push_back(std::move(r));
  }
  return e;
}

std::string WriteJsonl(std::span<const CorpusEntry> entries) {
  std::string out;
  for (const CorpusEntry& e : entries) {
    out += EntryToJson(e).dump();
    out += '\n';
  }
  return out;
}

std::vector<CorpusEntry> ReadJsonl(std::string_view text) {
  std::vector<CorpusEntry> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(EntryFromJson(json::parse(line)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, e.what(), "line " + std::to_string(line_no));
    } catch (const Error& e) {
      throw e.WithLocation("line " + std::to_string(line_no));
    }
  }
  return out;
}

}  // namespace trikit
