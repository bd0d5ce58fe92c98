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

#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cantomine/io/json_string.hpp"
#include "cantomine/mine/pipeline.hpp"
#include "cantomine/text/sentence.hpp"
#include "cantomine/util/errors.hpp"
#include "cantomine/wiki/article.hpp"
#include "cantomine/wiki/pairing.hpp"

namespace cantomine::io {

// Writers are hand-rolled so output bytes are fully pinned down: keys in a
// fixed order, minimal escaping, no spaces, '\n' line ends. Readers lean on
// a real JSON parser and accept any spelling of the same records.

inline std::string article_line(const wiki::CleanArticle& a) {
  std::string line = "{\"lang\":";
  append_json_string(line, a.lang);
  line += ",\"title\":";
  append_json_string(line, a.title);
  line += ",\"paragraphs\":[";
  for (std::size_t i = 0; i < a.paragraphs.size(); ++i) {
    if (i > 0) line.push_back(',');
    append_json_string(line, a.paragraphs[i]);
  }
  line += "]}";
  return line;
}

inline std::string title_pair_line(const wiki::LangLink& link) {
  // Article pair records name the source article first.
  std::string line = "{\"src_title\":";
  append_json_string(line, link.to_title);
  line += ",\"tgt_title\":";
  append_json_string(line, link.from_title);
  line += "}";
  return line;
}

inline std::string sentence_line(const text::Sentence& s) {
  std::string line = "{\"lang\":";
  append_json_string(line, s.lang);
  line += ",\"title\":";
  append_json_string(line, s.title);
  line += ",\"p\":" + std::to_string(s.paragraph_index);
  line += ",\"s\":" + std::to_string(s.sentence_index);
  line += ",\"text\":";
  append_json_string(line, s.text);
  line += "}";
  return line;
}

inline std::string mined_pair_line(const mine::ScoredSentencePair& p) {
  std::string line = "{\"src\":";
  append_json_string(line, p.src.text);
  line += ",\"tgt\":";
  append_json_string(line, p.tgt.text);
  line += ",\"score\":" + format_score(p.score);
  line += ",\"article_pair_id\":" + std::to_string(p.article_pair_id);
  line += "}";
  return line;
}

namespace detail {

inline nlohmann::json parse_line(const std::string& line,
                                 std::size_t line_no) {
  nlohmann::json value =
      nlohmann::json::parse(line, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded() || !value.is_object()) {
    throw FormatError("line " + std::to_string(line_no) +
                      ": not a JSON object");
  }
  return value;
}

template <typename T>
T field(const nlohmann::json& obj, const char* key, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw FormatError("line " + std::to_string(line_no) +
                      ": missing field \"" + key + "\"");
  }
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError("line " + std::to_string(line_no) +
                      ": field \"" + key + "\" has the wrong type");
  }
}

template <typename Fn>
void for_each_record(std::istream& in, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fn(parse_line(line, line_no), line_no);
  }
}

}  // namespace detail

inline std::vector<wiki::CleanArticle> read_articles(std::istream& in) {
  std::vector<wiki::CleanArticle> articles;
  detail::for_each_record(in, [&](const nlohmann::json& obj,
                                  std::size_t line_no) {
    wiki::CleanArticle a;
    a.lang = detail::field<std::string>(obj, "lang", line_no);
    a.title = detail::field<std::string>(obj, "title", line_no);
    a.paragraphs =
        detail::field<std::vector<std::string>>(obj, "paragraphs", line_no);
    articles.push_back(std::move(a));
  });
  return articles;
}

inline std::vector<wiki::LangLink> read_title_pairs(std::istream& in) {
  std::vector<wiki::LangLink> links;
  detail::for_each_record(in, [&](const nlohmann::json& obj,
                                  std::size_t line_no) {
    wiki::LangLink link;
    link.to_title = detail::field<std::string>(obj, "src_title", line_no);
    link.from_title = detail::field<std::string>(obj, "tgt_title", line_no);
    links.push_back(std::move(link));
  });
  return links;
}

inline std::vector<text::Sentence> read_sentences(std::istream& in) {
  std::vector<text::Sentence> sentences;
  detail::for_each_record(in, [&](const nlohmann::json& obj,
                                  std::size_t line_no) {
    text::Sentence s;
    s.lang = detail::field<std::string>(obj, "lang", line_no);
    s.title = detail::field<std::string>(obj, "title", line_no);
    s.paragraph_index = detail::field<int>(obj, "p", line_no);
    s.sentence_index = detail::field<int>(obj, "s", line_no);
    s.text = detail::field<std::string>(obj, "text", line_no);
    sentences.push_back(std::move(s));
  });
  return sentences;
}

}  // namespace cantomine::io
