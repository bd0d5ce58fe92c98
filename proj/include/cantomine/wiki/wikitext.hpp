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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantomine/text/normalize.hpp"
#include "cantomine/wiki/article.hpp"

namespace cantomine::wiki {

namespace detail {

inline bool starts_with_at(std::string_view s, std::size_t i,
                           std::string_view prefix) {
  return s.size() - i >= prefix.size() &&
         s.compare(i, prefix.size(), prefix) == 0;
}

// First position at which a blank line begins at or after `from`, i.e. the
// index of a '\n' whose following line is empty up to whitespace. Used to
// drop unbalanced markup through the end of its paragraph.
inline std::size_t paragraph_break(std::string_view s, std::size_t from) {
  for (std::size_t k = from; k < s.size(); ++k) {
    if (s[k] != '\n') continue;
    std::size_t j = k + 1;
    while (j < s.size() && (s[j] == ' ' || s[j] == '\t' || s[j] == '\r')) ++j;
    if (j >= s.size() || s[j] == '\n') return k;
  }
  return s.size();
}

// Position just past the matching closer for a two-character bracket pair,
// with nesting. `i` points at the opener. npos when unbalanced.
inline std::size_t match_pair(std::string_view s, std::size_t i,
                              std::string_view open, std::string_view close) {
  int depth = 0;
  std::size_t k = i;
  while (k < s.size()) {
    if (starts_with_at(s, k, open)) {
      ++depth;
      k += open.size();
    } else if (starts_with_at(s, k, close)) {
      --depth;
      k += close.size();
      if (depth == 0) return k;
    } else {
      ++k;
    }
  }
  return std::string_view::npos;
}

// True when the line holds only a heading: == ... == with at least one '='
// on each side and nothing but whitespace after the closing run.
inline bool is_heading_line(std::string_view line) {
  std::size_t end = line.size();
  while (end > 0 && (line[end - 1] == ' ' || line[end - 1] == '\t' ||
                     line[end - 1] == '\r')) {
    --end;
  }
  if (end < 2 || line[0] != '=' || line[end - 1] != '=') return false;
  std::size_t lead = 0;
  while (lead < end && line[lead] == '=') ++lead;
  return lead < end;  // "====" alone is not a heading
}

inline bool ascii_iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i];
    char y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
    if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}

inline std::string_view trim_view(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return s.substr(b, e - b);
}

// Media and category namespaces whose links carry no sentence text.
inline bool is_dropped_namespace(std::string_view ns) {
  static constexpr std::array<std::string_view, 4> kAscii = {
      "file", "image", "category", "media"};
  for (auto a : kAscii) {
    if (ascii_iequals(ns, a)) return true;
  }
  static constexpr std::array<std::string_view, 5> kCjk = {
      "文件", "檔案", "档案", "圖像", "分類"};
  for (auto c : kCjk) {
    if (ns == c) return true;
  }
  return false;
}

inline bool scheme_at(std::string_view s, std::size_t i) {
  return starts_with_at(s, i, "http://") || starts_with_at(s, i, "https://") ||
         starts_with_at(s, i, "ftp://") || starts_with_at(s, i, "//");
}

}  // namespace detail

// Removes wiki markup, keeping human-readable sentence text. Output still
// has the source's line structure; paragraph assembly happens afterwards.
//
// Rules, in the order they are tried at each position:
//   comments             <!-- ... -->            dropped
//   templates            {{ ... }}  (nested)     dropped
//   tables               {| ... |}  (nested)     dropped
//   ref tags             <ref ...> ... </ref>    dropped with body
//   other tags           <x ...> / </x>          tag dropped, body kept
//   wiki links           [[t|label]] -> label, [[t]] -> t; File/Image/
//                        Category targets dropped entirely
//   external links       [proto label] -> label, bare [proto] dropped
//   headings             == x == lines           dropped
//   list markers         leading * # : ;         dropped
//   horizontal rules     ---- lines              dropped
//   bold and italics     '' runs                 quotes dropped, text kept
// Markup left unbalanced is dropped through the end of its paragraph, which
// keeps truncated junk out of otherwise clean articles.
inline std::string strip_markup(std::string_view src) {
  std::string out;
  out.reserve(src.size());
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto at_line_start = [&](std::size_t pos) {
    return pos == 0 || src[pos - 1] == '\n';
  };
  auto drop_to_paragraph_break = [&](std::size_t from) {
    i = detail::paragraph_break(src, from);
  };

  while (i < n) {
    char c = src[i];

    if (detail::starts_with_at(src, i, "<!--")) {
      std::size_t close = src.find("-->", i + 4);
      if (close == std::string_view::npos) {
        drop_to_paragraph_break(i);
      } else {
        i = close + 3;
      }
      continue;
    }

    if (detail::starts_with_at(src, i, "{{")) {
      std::size_t past = detail::match_pair(src, i, "{{", "}}");
      if (past == std::string_view::npos) {
        drop_to_paragraph_break(i);
      } else {
        i = past;
      }
      continue;
    }

    if (detail::starts_with_at(src, i, "{|")) {
      std::size_t past = detail::match_pair(src, i, "{|", "|}");
      if (past == std::string_view::npos) {
        drop_to_paragraph_break(i);
      } else {
        i = past;
      }
      continue;
    }

    if (c == '<') {
      std::size_t j = i + 1;
      bool closing = j < n && src[j] == '/';
      if (closing) ++j;
      std::size_t name_begin = j;
      while (j < n && ((src[j] >= 'a' && src[j] <= 'z') ||
                       (src[j] >= 'A' && src[j] <= 'Z') ||
                       (src[j] >= '0' && src[j] <= '9'))) {
        ++j;
      }
      if (j == name_begin) {
        out.push_back(c);  // bare '<', not markup
        ++i;
        continue;
      }
      std::string_view name = src.substr(name_begin, j - name_begin);
      // Find the end of the tag, honoring quoted attribute values.
      bool self_closing = false;
      std::size_t tag_end = std::string_view::npos;
      while (j < n) {
        if (src[j] == '"' || src[j] == '\'') {
          char quote = src[j++];
          while (j < n && src[j] != quote) ++j;
          if (j < n) ++j;
          continue;
        }
        if (src[j] == '>') {
          self_closing = j > 0 && src[j - 1] == '/';
          tag_end = j + 1;
          break;
        }
        ++j;
      }
      if (tag_end == std::string_view::npos) {
        drop_to_paragraph_break(i);
        continue;
      }
      if (!closing && detail::ascii_iequals(name, "ref") && !self_closing) {
        std::size_t body = tag_end;
        std::size_t close = std::string_view::npos;
        while (body < n) {
          if (detail::starts_with_at(src, body, "</ref") ||
              detail::starts_with_at(src, body, "</REF") ||
              detail::starts_with_at(src, body, "</Ref")) {
            std::size_t gt = src.find('>', body);
            if (gt != std::string_view::npos) close = gt + 1;
            break;
          }
          ++body;
        }
        if (close == std::string_view::npos) {
          drop_to_paragraph_break(i);
        } else {
          i = close;
        }
        continue;
      }
      i = tag_end;  // drop the tag, keep surrounding text
      continue;
    }

    if (detail::starts_with_at(src, i, "[[")) {
      std::size_t past = detail::match_pair(src, i, "[[", "]]");
      if (past == std::string_view::npos) {
        drop_to_paragraph_break(i);
        continue;
      }
      std::string_view inner = src.substr(i + 2, past - i - 4);
      // Top-level pipes only; image captions nest links.
      std::size_t first_pipe = std::string_view::npos;
      std::size_t last_pipe = std::string_view::npos;
      int depth = 0;
      for (std::size_t k = 0; k < inner.size(); ++k) {
        if (detail::starts_with_at(inner, k, "[[")) {
          ++depth;
          ++k;
        } else if (detail::starts_with_at(inner, k, "]]")) {
          --depth;
          ++k;
        } else if (inner[k] == '|' && depth == 0) {
          if (first_pipe == std::string_view::npos) first_pipe = k;
          last_pipe = k;
        }
      }
      std::string_view target = first_pipe == std::string_view::npos
                                    ? inner
                                    : inner.substr(0, first_pipe);
      target = detail::trim_view(target);
      bool visible_colon = !target.empty() && target.front() == ':';
      if (visible_colon) target = detail::trim_view(target.substr(1));
      std::size_t colon = target.find(':');
      bool dropped = false;
      if (!visible_colon && colon != std::string_view::npos) {
        std::string_view ns = detail::trim_view(target.substr(0, colon));
        dropped = detail::is_dropped_namespace(ns);
      }
      if (!dropped) {
        std::string_view label = last_pipe == std::string_view::npos
                                     ? target
                                     : inner.substr(last_pipe + 1);
        out.append(strip_markup(label));
      }
      i = past;
      continue;
    }

    if (c == '[' && detail::scheme_at(src, i + 1)) {
      std::size_t close = src.find(']', i + 1);
      if (close == std::string_view::npos) {
        drop_to_paragraph_break(i);
        continue;
      }
      std::string_view inner = src.substr(i + 1, close - i - 1);
      std::size_t space = inner.find(' ');
      if (space != std::string_view::npos) {
        out.append(strip_markup(inner.substr(space + 1)));
      }
      i = close + 1;
      continue;
    }

    if (at_line_start(i)) {
      std::size_t line_end = src.find('\n', i);
      if (line_end == std::string_view::npos) line_end = n;
      std::string_view line = src.substr(i, line_end - i);
      if (detail::is_heading_line(line)) {
        i = line_end;  // keep the newline so paragraphs still split
        continue;
      }
      std::string_view rule = line;
      while (!rule.empty() && (rule.back() == '\r' || rule.back() == ' ')) {
        rule.remove_suffix(1);
      }
      if (rule.size() >= 4 &&
          rule.find_first_not_of('-') == std::string_view::npos) {
        i = line_end;
        continue;
      }
      if (c == '*' || c == '#' || c == ':' || c == ';') {
        std::size_t k = i;
        while (k < n && (src[k] == '*' || src[k] == '#' || src[k] == ':' ||
                         src[k] == ';')) {
          ++k;
        }
        while (k < n && (src[k] == ' ' || src[k] == '\t')) ++k;
        i = k;
        continue;
      }
    }

    if (detail::starts_with_at(src, i, "}}") ||
        detail::starts_with_at(src, i, "]]")) {
      i += 2;  // stray closer, its opener already consumed or never written
      continue;
    }

    if (c == '\'' && i + 1 < n && src[i + 1] == '\'') {
      while (i < n && src[i] == '\'') ++i;  // bold or italic run
      continue;
    }

    out.push_back(c);
    ++i;
  }
  return out;
}

// Blank-line-separated paragraph assembly: lines within a paragraph are
// joined with single spaces, then the result is whitespace- and
// NFC-normalized. Empty paragraphs vanish.
inline std::vector<std::string> to_paragraphs(std::string_view cleaned) {
  std::vector<std::string> paragraphs;
  std::string current;
  std::size_t i = 0;
  auto flush = [&] {
    std::string flat = text::normalize(current);
    if (!flat.empty()) paragraphs.push_back(std::move(flat));
    current.clear();
  };
  while (i <= cleaned.size()) {
    std::size_t line_end = cleaned.find('\n', i);
    if (line_end == std::string_view::npos) line_end = cleaned.size();
    std::string_view line = cleaned.substr(i, line_end - i);
    bool blank = true;
    for (char ch : line) {
      if (ch != ' ' && ch != '\t' && ch != '\r') {
        blank = false;
        break;
      }
    }
    if (blank) {
      flush();
    } else {
      if (!current.empty()) current.push_back(' ');
      current.append(line);
    }
    if (line_end == cleaned.size()) break;
    i = line_end + 1;
  }
  flush();
  return paragraphs;
}

// Full page-to-article conversion. Redirects, pages outside the main
// namespace, and pages with no surviving text yield nullopt.
inline std::optional<CleanArticle> clean_article(const RawPage& page,
                                                 std::string_view lang) {
  if (page.is_redirect || page.ns != 0) return std::nullopt;
  std::vector<std::string> paragraphs =
      to_paragraphs(strip_markup(page.wikitext));
  if (paragraphs.empty()) return std::nullopt;
  CleanArticle article;
  article.lang = std::string(lang);
  article.title = text::normalize(page.title);
  article.paragraphs = std::move(paragraphs);
  return article;
}

}  // namespace cantomine::wiki
