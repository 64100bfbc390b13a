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

#ifndef TRIKIT_FORMATS_H_
#define TRIKIT_FORMATS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "trikit/tripler.h"

namespace trikit {

// ---------------------------------------------------------------------------
// XML entry documents
//
//   <?xml version="1.0" encoding="UTF-8"?>
//   <benchmark>
//     <entries>
//       <entry category="MISC" eid="Id5" size="3">
//         <modifiedtripleset>
//           <mtriple>Apertura 2006 | JORNADA_OR_OTHER | Semifinals Ida</mtriple>
//         </modifiedtripleset>
//         <lex comment="WikiTableQuestions" lid="Id1">
//             text
//         </lex>
//       </entry>
//
//       <entry ...>
//     </entries>
//   </benchmark>
//
// Entries are separated by one blank line. Inside <mtriple>, a literal '|'
// in a field is written as "\|" and a backslash as "\\". Optional attributes
// (entry: source, table, emptyvalue; lex: annotator) appear only when set.
// ---------------------------------------------------------------------------

std::string WriteXml(std::span<const CorpusEntry> entries);

// Inverse of WriteXml. Also accepts other WebNLG-style documents: unknown
// elements and attributes are ignored and lex text not in the writer's
// layout is whitespace-trimmed. Throws kMalformedEntry naming the entry.
std::vector<CorpusEntry> ReadXml(std::string_view document);

std::string EscapeTripleField(std::string_view field);
std::string FormatMtriple(const Triple& triple);
// Throws kMalformedEntry unless the text holds exactly three fields.
Triple ParseMtriple(std::string_view text);

// "<H> s <R> p <T> o" per triple, single-space separated. A "[TITLE]"
// predicate is written as "[title]".
std::string Linearize(const TripleSet& tripleset);

// ---------------------------------------------------------------------------
// JSON lines corpus: one entry object per line, tagged with "schema".
// ---------------------------------------------------------------------------

inline constexpr int kCorpusSchemaVersion = 1;

nlohmann::json EntryToJson(const CorpusEntry& entry);
CorpusEntry EntryFromJson(const nlohmann::json& j);
std::string WriteJsonl(std::span<const CorpusEntry> entries);
std::vector<CorpusEntry> ReadJsonl(std::string_view text);

nlohmann::json TripleSetToJson(const TripleSet& ts);
TripleSet TripleSetFromJson(const nlohmann::json& j);

}  // namespace trikit

#endif  // TRIKIT_FORMATS_H_
