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

// Literal documents and generators used across test binaries.

#ifndef TRIKIT_TESTS_FIXTURES_H_
#define TRIKIT_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "trikit/random.h"
#include "trikit/tripler.h"

namespace trikit::testing {

// Two hand-written entries in canonical layout, wrapped in the
// document header and footer.
inline constexpr char kTwoEntryXml[] =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<benchmark>\n"
    "  <entries>\n"
    "    <entry category=\"MISC\" eid=\"Id5\" size=\"3\">\n"
    "      <modifiedtripleset>\n"
    "        <mtriple>Apertura 2006 | JORNADA_OR_OTHER | Semifinals Ida</mtriple>\n"
    "        <mtriple>Semifinals Ida | AWAY_TEAM | Am\xc3\xa9rica</mtriple>\n"
    "        <mtriple>Semifinals Ida | HOME_TEAM | Chivas</mtriple>\n"
    "      </modifiedtripleset>\n"
    "      <lex comment=\"WikiTableQuestions\" lid=\"Id1\">\n"
    "          Chivas and Am\xc3\xa9rica will compete in the semifinals of the Apertura 2006 "
    "tournament.\n"
    "      </lex>\n"
    "    </entry>\n"
    "\n"
    "    <entry category=\"MISC\" eid=\"Id76\" size=\"6\">\n"
    "      <modifiedtripleset>\n"
    "        <mtriple>Terry Jenkins | ROUND | 1st Round</mtriple>\n"
    "        <mtriple>Terry Jenkins | YEAR | 2014</mtriple>\n"
    "        <mtriple>[TABLECONTEXT] | [TITLE] | PDC World Darts Championship</mtriple>\n"
    "        <mtriple>1st Round | OPPONENT | Per Laursen</mtriple>\n"
    "        <mtriple>1st Round | RESULT | Lost</mtriple>\n"
    "        <mtriple>[TABLECONTEXT] | PLAYER | Terry Jenkins</mtriple>\n"
    "      </modifiedtripleset>\n"
    "      <lex comment=\"WikiTableQuestions\" lid=\"Id1\">\n"
    "          Terry Jenkins lost the game with Per Laursen in \n"
    "          the 1st Round of 2014 PDC World Darts Championship\n"
    "      </lex>\n"
    "    </entry>\n"
    "  </entries>\n"
    "</benchmark>\n";

// A field with awkward characters: markup, separators, escapes, non-ASCII.
inline std::string RandomField(Rng& rng, bool allow_empty) {
  static const char* kPieces[] = {"alpha", "Beta",  "&",      "<tag>", "\"q\"", "'s",
                                  "|",     "a | b", "\\",     "10 637", "\xc3\xa9t\xc3\xa9",
                                  "[TITLE]", "x",   "]]>",    "&amp;",  "1st Round"};
  const int n = static_cast<int>(rng.UniformInt(allow_empty ? 0 : 1, 4));
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i > 0) out += rng.UniformInt(0, 3) == 0 ? "  " : " ";
    out += kPieces[rng.UniformInt(0, 15)];
  }
  return out;
}

inline CorpusEntry RandomEntry(Rng& rng, int index) {
  CorpusEntry e;
  e.eid = "Id" + std::to_string(index + 1);
  e.category = rng.UniformInt(0, 3) == 0 ? "Airport & Co" : "MISC";
  const int n = static_cast<int>(rng.UniformInt(1, 10));
  for (int i = 0; i < n; ++i) {
    e.tripleset.triples.push_back(
        {RandomField(rng, false), RandomField(rng, false), RandomField(rng, true)});
  }
  e.tripleset.provenance = static_cast<Provenance>(rng.UniformInt(0, 5));
  const int lex = static_cast<int>(rng.UniformInt(1, 3));
  for (int i = 0; i < lex; ++i) {
    Realization r;
    r.text = RandomField(rng, false);
    if (rng.UniformInt(0, 4) == 0) r.text += "\nsecond line\twith tab";
    if (rng.UniformInt(0, 1)) r.annotator = static_cast<Annotator>(rng.UniformInt(0, 3));
    r.comment = rng.UniformInt(0, 2) == 0 ? "" : RandomField(rng, true);
    e.realizations.push_back(r);
  }
  if (rng.UniformInt(0, 1)) e.table_id = "table_" + std::to_string(rng.UniformInt(0, 50));
  e.has_empty_value = rng.UniformInt(0, 3) == 0;
  return e;
}

// Handwritten single-table queries without aggregates, joins or ordering.
inline std::vector<std::string> CleanSqlQueries() {
  return {
      "SELECT year FROM t WHERE country = 'Greece'",
      "SELECT city FROM t WHERE year = 2004",
      "SELECT * FROM t",
      "SELECT name FROM t WHERE position = 'Forward'",
      "SELECT club FROM t WHERE player = 'Ann Berg'",
      "SELECT director FROM films WHERE film = 'Red'",
      "SELECT \"Running time\" FROM films WHERE film = 'Chungking Express'",
      "SELECT height FROM mountains WHERE mountain = 'Mont Blanc'",
      "SELECT range FROM mountains WHERE country = 'France'",
      "SELECT party FROM elections WHERE candidate = 'Jane Doe'",
      "SELECT votes FROM elections WHERE party = 'Green'",
      "SELECT label FROM albums WHERE year = '2001'",
      "SELECT album FROM albums WHERE label = 'North Records'",
      "SELECT iata FROM airports WHERE city = 'London'",
      "SELECT passengers FROM airports WHERE airport = 'Schiphol'",
      "SELECT founded FROM universities WHERE state = 'Ohio'",
      "SELECT students FROM universities WHERE university = 'University of Michigan'",
      "SELECT span FROM bridges WHERE bridge = 'Humber Bridge'",
      "SELECT opened FROM bridges WHERE river = 'Humber'",
      "SELECT origin FROM dishes WHERE dish = 'Paella'",
      "SELECT dish FROM dishes WHERE origin = 'Hungary' AND main = 'Beef'",
      "SELECT mouth FROM rivers WHERE river = 'Volga'",
      "SELECT length FROM rivers WHERE mouth = 'Black Sea'",
      "SELECT stadium FROM t WHERE team = 'Amsterdam Admirals'",
      "SELECT capacity FROM t WHERE stadium = 'Olympiastadion'",
      "SELECT team FROM t WHERE city = 'Berlin' AND capacity = '74475'",
      "SELECT result FROM t WHERE opponent = 'Per Laursen'",
      "SELECT round FROM t WHERE player = 'Terry Jenkins' AND year = 2014",
      "SELECT away_team FROM t WHERE home_team = 'Chivas'",
      "SELECT home_team FROM t WHERE away_team = 'América'",
      "SELECT attendance FROM t WHERE game = 3",
      "SELECT state FROM t WHERE active = '1892-1916'",
      "SELECT scale FROM t WHERE event = 'Peru Earthquake'",
      "SELECT assembly FROM t WHERE car = 'Alfa Romeo 164'",
      "SELECT draft_pick FROM t WHERE player = 'Akeem Ayers'",
      "SELECT former_team FROM t WHERE draft_pick = 39",
      "SELECT origin FROM genres WHERE genre = 'Indie rock'",
      "SELECT artist FROM t WHERE band = 'Kaliber 44'",
      "select notes from t where notes = 'none'",
      "SELECT `Winning score` FROM t WHERE `Tournament` = 'Open'",
      "SELECT [Original title] FROM t WHERE [Year] = '1994'",
      "SELECT score FROM t WHERE team <> 'Rovers'",
      "SELECT rank FROM t WHERE points > 10",
      "SELECT rank FROM t WHERE points < 3",
      "SELECT nation FROM t WHERE gold = 2 AND silver = 1",
      "SELECT title FROM t WHERE author LIKE 'Smith'",
      "SELECT episode FROM t WHERE season = 4 AND airdate = 'March 3'",
      "SELECT venue FROM t WHERE date = '12 May 2001'",
      "SELECT a, b FROM t WHERE c = 'maximum value'",
      "SELECT minute FROM t WHERE counter = 'summary'",
  };
}

}  // namespace trikit::testing

#endif  // TRIKIT_TESTS_FIXTURES_H_
