// Copyright 2026 The Cantomine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cantomine/util/errors.hpp"
#include "cantomine/wiki/article.hpp"
#include "cantomine/wiki/dump_parser.hpp"
#include "cantomine/wiki/langlinks.hpp"
#include "cantomine/wiki/pairing.hpp"
#include "cantomine/wiki/wikitext.hpp"

using namespace cantomine;
using wiki::CleanArticle;
using wiki::DumpParser;
using wiki::RawPage;

namespace {

std::vector<RawPage> parse_all(const std::string& xml, DumpParser::Stats* stats = nullptr,
                               std::ostream* warnings = nullptr) {
  std::istringstream in(xml);
  DumpParser parser(in, warnings);
  std::vector<RawPage> pages;
  while (auto page = parser.next()) pages.push_back(std::move(*page));
  if (stats != nullptr) *stats = parser.stats();
  return pages;
}

const std::string kFixtureXml = R"(<mediawiki xmlns="http://www.mediawiki.org/xml/export-0.11/" xml:lang="zh">
  <siteinfo>
    <sitename>Wikipedia</sitename>
  </siteinfo>
  <page>
    <title>香港</title>
    <ns>0</ns>
    <id>1</id>
    <revision>
      <id>100</id>
      <text bytes="12">舊版唔啱</text>
    </revision>
    <revision>
      <id>101</id>
      <text bytes="24">香港係一個城市。</text>
    </revision>
  </page>
  <page>
    <title>HK</title>
    <ns>0</ns>
    <id>2</id>
    <redirect title="香港" />
    <revision>
      <text>#REDIRECT [[香港]]</text>
    </revision>
  </page>
  <page>
    <title>A &amp; B</title>
    <ns>4</ns>
    <id>3</id>
    <revision>
      <text>a &lt;b&gt; &#39;c&#x4E2D;</text>
    </revision>
  </page>
</mediawiki>
)";

}  // namespace

TEST_CASE("dump parser yields pages in document order") {
  DumpParser::Stats stats;
  auto pages = parse_all(kFixtureXml, &stats);
  REQUIRE(pages.size() == 3);
  CHECK(stats.pages_seen == 3);
  CHECK(stats.pages_emitted == 3);
  CHECK(stats.redirects == 1);

  CHECK(pages[0].title == "香港");
  CHECK(pages[0].page_id == 1);
  CHECK(pages[0].ns == 0);
  CHECK_FALSE(pages[0].is_redirect);
  // Two revisions: the latest one wins.
  CHECK(pages[0].wikitext == "香港係一個城市。");

  CHECK(pages[1].title == "HK");
  CHECK(pages[1].is_redirect);

  CHECK(pages[2].title == "A & B");
  CHECK(pages[2].ns == 4);
  CHECK(pages[2].wikitext == "a <b> 'c中");
}

TEST_CASE("dump parser handles an empty root") {
  DumpParser::Stats stats;
  auto pages = parse_all("<mediawiki></mediawiki>", &stats);
  CHECK(pages.empty());
  CHECK(stats.pages_seen == 0);
}

TEST_CASE("dump parser skips pages without text and warns") {
  std::string xml =
      "<mediawiki>"
      "<page><title>empty</title><ns>0</ns><id>7</id><revision><id>1</id></revision></page>"
      "<page><title>ok</title><ns>0</ns><id>8</id><revision><text>body</text></revision></page>"
      "</mediawiki>";
  DumpParser::Stats stats;
  std::ostringstream warnings;
  auto pages = parse_all(xml, &stats, &warnings);
  REQUIRE(pages.size() == 1);
  CHECK(pages[0].title == "ok");
  CHECK(stats.pages_seen == 2);
  CHECK(stats.skipped_missing_text == 1);
  CHECK(warnings.str().find("empty") != std::string::npos);
}

TEST_CASE("dump parser reports malformed xml with a byte offset") {
  std::string xml = "<mediawiki><page><title>x</title></wrong></mediawiki>";
  std::istringstream in(xml);
  DumpParser parser(in);
  try {
    while (parser.next()) {
    }
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("dump parser rejects truncated input") {
  std::string xml = "<mediawiki><page><title>x</title><revision><text>unfinished";
  std::istringstream in(xml);
  DumpParser parser(in);
  CHECK_THROWS_AS([&] { while (parser.next()) {} }(), FormatError);
}

TEST_CASE("strip_markup applies the documented rules") {
  using wiki::strip_markup;
  CHECK(strip_markup("「[[香港|香港特區]]」{{cite}}好靚") == "「香港特區」好靚");
  CHECK(strip_markup("a<!-- hidden -->b") == "ab");
  CHECK(strip_markup("a{{t|{{inner}}}}b") == "ab");
  CHECK(strip_markup("a{| class=\"x\"\n|-\n| cell\n|}b") == "ab");
  CHECK(strip_markup("a{|\n{|nested|}\n|}b") == "ab");
  CHECK(strip_markup("見<ref name=\"x\">來源</ref>到") == "見到");
  CHECK(strip_markup("見<ref name=\"x\"/>到") == "見到");
  CHECK(strip_markup("<b>好</b>靚") == "好靚");
  CHECK(strip_markup("[[香港]]") == "香港");
  CHECK(strip_markup("[[File:pic.jpg|thumb|[[香港]]風景]]去") == "去");
  CHECK(strip_markup("[[分類:香港]]x") == "x");
  CHECK(strip_markup("[[:Category:香港|分類頁]]") == "分類頁");
  CHECK(strip_markup("[http://example.com 官網]") == "官網");
  CHECK(strip_markup("[http://example.com]") == "");
  CHECK(strip_markup("'''好'''靚''添''") == "好靚添");
  CHECK(strip_markup("== 標題 ==\n正文") == "\n正文");
  CHECK(strip_markup("* 一\n# 二\n:三") == "一\n二\n三");
  CHECK(strip_markup("above\n----\nbelow") == "above\n\nbelow");
  CHECK(strip_markup("a }} b ]] c") == "a  b  c");
}

TEST_CASE("unbalanced markup is dropped to the paragraph break") {
  using wiki::strip_markup;
  CHECK(strip_markup("前{{unclosed\n仲係junk\n\n後面") == "前\n\n後面");
  CHECK(strip_markup("前[[unclosed\n\n後面") == "前\n\n後面");
  CHECK(strip_markup("前<ref>無尾\n\n後面") == "前\n\n後面");
}

TEST_CASE("to_paragraphs groups lines between blank lines") {
  auto paragraphs = wiki::to_paragraphs("第一行\n同一段\n\n  \n第二段\n");
  REQUIRE(paragraphs.size() == 2);
  CHECK(paragraphs[0] == "第一行 同一段");
  CHECK(paragraphs[1] == "第二段");
  CHECK(wiki::to_paragraphs("").empty());
  CHECK(wiki::to_paragraphs("\n \n\t\n").empty());
}

TEST_CASE("clean_article filters redirects, namespaces and empty bodies") {
  RawPage page;
  page.page_id = 1;
  page.title = " 香港 ";
  page.ns = 0;
  page.wikitext = "「[[香港|香港特區]]」{{cite}}好靚";

  auto article = wiki::clean_article(page, "yue");
  REQUIRE(article.has_value());
  CHECK(article->lang == "yue");
  CHECK(article->title == "香港");
  CHECK(article->paragraphs == std::vector<std::string>{"「香港特區」好靚"});

  RawPage redirect = page;
  redirect.is_redirect = true;
  CHECK_FALSE(wiki::clean_article(redirect, "yue").has_value());

  RawPage talk = page;
  talk.ns = 1;
  CHECK_FALSE(wiki::clean_article(talk, "yue").has_value());

  RawPage table_only = page;
  table_only.wikitext = "{| class=\"wikitable\"\n| 單元\n|}";
  CHECK_FALSE(wiki::clean_article(table_only, "yue").has_value());
}

TEST_CASE("cleaned paragraphs never contain markup residue") {
  static const std::vector<std::string> pieces = {
      "{{",       "}}",        "[[",     "]]",   "|",     "<ref>",
      "</ref>",   "<ref n=\"x\"/>",      "{|",   "|}",    "==",
      "'''",      "''",        "[http://x y]",   "text",  "香港好",
      "\n\n",     "\n",        "* ",     "# ",   ": ",    "----",
      "a",        "。",        "<b>",    "</b>", "<!--",  "-->"};
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 500; ++trial) {
    std::string wikitext;
    std::size_t n = rng() % 40;
    for (std::size_t k = 0; k < n; ++k) wikitext += pieces[rng() % pieces.size()];
    RawPage page;
    page.title = "t";
    page.wikitext = wikitext;
    auto article = wiki::clean_article(page, "zh");
    if (!article.has_value()) continue;
    for (const std::string& paragraph : article->paragraphs) {
      INFO("wikitext: " << wikitext << "\nparagraph: " << paragraph);
      REQUIRE(paragraph.find("{{") == std::string::npos);
      REQUIRE(paragraph.find("}}") == std::string::npos);
      REQUIRE(paragraph.find("[[") == std::string::npos);
      REQUIRE(paragraph.find("]]") == std::string::npos);
      REQUIRE(paragraph.find("<ref") == std::string::npos);
      for (std::size_t k = 0; k + 1 < paragraph.size(); ++k) {
        bool tag_shape = paragraph[k] == '<' &&
                         (std::isalpha(static_cast<unsigned char>(paragraph[k + 1])) != 0 ||
                          paragraph[k + 1] == '/');
        REQUIRE_FALSE(tag_shape);
      }
    }
  }
}

TEST_CASE("langlinks tsv loads in input order") {
  std::istringstream in(
      "香港\t香港\n"
      "九龍\t九龙\n");
  auto load = wiki::load_langlinks_tsv(in);
  REQUIRE(load.links.size() == 2);
  CHECK(load.links[0].from_title == "香港");
  CHECK(load.links[0].to_title == "香港");
  CHECK(load.links[1].from_title == "九龍");
  CHECK(load.links[1].to_title == "九龙");
  CHECK(load.malformed == 0);
  CHECK(load.duplicates == 0);
}

TEST_CASE("langlinks tsv counts malformed lines and duplicates") {
  std::istringstream in(
      "a\tb\n"
      "no-tab-line\n"
      "too\tmany\tfields\n"
      "\tmissing-from\n"
      "a\tc\n");
  std::ostringstream warnings;
  auto load = wiki::load_langlinks_tsv(in, &warnings);
  REQUIRE(load.links.size() == 1);
  CHECK(load.links[0].to_title == "b");  // first occurrence kept
  CHECK(load.malformed == 3);
  CHECK(load.duplicates == 1);
  CHECK_FALSE(warnings.str().empty());
}

TEST_CASE("langlinks sql keeps tuples for the requested language") {
  std::istringstream in(
      "-- comment line\n"
      "INSERT INTO `langlinks` VALUES ('香港','zh','香港'),('九龍','en','Kowloon'),"
      "('it''s','zh','a\\'b');\n");
  auto load = wiki::load_langlinks_sql(in, "zh");
  REQUIRE(load.links.size() == 2);
  CHECK(load.links[0].from_title == "香港");
  CHECK(load.links[0].to_title == "香港");
  CHECK(load.links[1].from_title == "it's");
  CHECK(load.links[1].to_title == "a'b");
}

TEST_CASE("pair_articles joins links against both editions") {
  std::vector<CleanArticle> src = {
      {"zh", "香港", {"src a"}},
      {"zh", "九龙", {"src b"}},
  };
  std::vector<CleanArticle> tgt = {
      {"yue", "九龍", {"tgt b"}},
      {"yue", "香港", {"tgt a"}},
  };
  std::vector<wiki::LangLink> links = {
      {"香港", "香港"},
      {"九龍", "九龙"},
      {"唔存在", "香港"},  // missing target article
  };
  auto result = wiki::pair_articles(src, tgt, links);
  REQUIRE(result.pairs.size() == 2);
  CHECK(result.unmatched == 1);
  CHECK(result.duplicates == 0);
  // Sorted by target title.
  CHECK(result.pairs[0].tgt_article.title < result.pairs[1].tgt_article.title);
  for (const auto& pair : result.pairs) {
    CHECK(pair.src_article.lang == "zh");
    CHECK(pair.tgt_article.lang == "yue");
    CHECK(pair.link.from_title == pair.tgt_article.title);
    CHECK(pair.link.to_title == pair.src_article.title);
  }
}

TEST_CASE("pair_articles pairs each target article at most once") {
  std::vector<CleanArticle> src = {{"zh", "s1", {"x"}}, {"zh", "s2", {"y"}}};
  std::vector<CleanArticle> tgt = {{"yue", "t", {"z"}}};
  std::vector<wiki::LangLink> links = {{"t", "s1"}, {"t", "s2"}};
  auto result = wiki::pair_articles(src, tgt, links);
  REQUIRE(result.pairs.size() == 1);
  CHECK(result.pairs[0].src_article.title == "s1");
  CHECK(result.duplicates == 1);
  CHECK(result.pairs.size() <= std::min(links.size(), tgt.size()));
}
