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

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cantomine/unicode/utf8.hpp"
#include "cantomine/util/errors.hpp"
#include "cantomine/wiki/article.hpp"

namespace cantomine::wiki {

// Streaming pull parser for MediaWiki pages-articles XML dumps.
//
// Memory use is bounded by the largest single <page> element: the parser
// never buffers more than the page currently being assembled. Input that is
// not well formed at the level this parser understands (tag nesting, entity
// syntax, truncation inside an element) raises FormatError with the absolute
// byte offset where the problem was detected.
//
// Only the subset of the schema the miner needs is interpreted:
//   <page>            starts a page
//   <title>           page title (first one inside the page wins)
//   <ns>              namespace number
//   <id>              page id (first <id> inside the page; revision and
//                     contributor ids arrive later and are ignored)
//   <redirect .../>   marks the page as a redirect
//   <revision><text>  revision body; the latest (last) revision wins
// Everything else is skipped. A page whose <text> never appears is skipped
// with a warning rather than treated as fatal.
class DumpParser {
 public:
  struct Stats {
    std::uint64_t pages_seen = 0;
    std::uint64_t pages_emitted = 0;
    std::uint64_t redirects = 0;
    std::uint64_t skipped_missing_text = 0;
    std::uint64_t skipped_missing_title = 0;
  };

  explicit DumpParser(std::istream& in, std::ostream* warnings = nullptr)
      : in_(in), warnings_(warnings) {}

  const Stats& stats() const { return stats_; }

  // Returns the next page, or nullopt at end of input.
  std::optional<RawPage> next() {
    for (;;) {
      if (!scan_text()) {
        if (!stack_.empty()) {
          fail("unexpected end of input inside <" + stack_.back() + ">");
        }
        return std::nullopt;
      }
      if (auto page = handle_markup()) return page;
    }
  }

 private:
  static constexpr std::size_t kBufSize = 1 << 16;

  std::istream& in_;
  std::ostream* warnings_;
  Stats stats_;

  char buf_[kBufSize];
  std::size_t buf_len_ = 0;
  std::size_t buf_pos_ = 0;
  std::uint64_t offset_ = 0;  // absolute offset of the next unread byte

  std::vector<std::string> stack_;
  std::string* capture_ = nullptr;
  std::string capture_buf_;

  // Page under construction.
  bool in_page_ = false;
  bool have_title_ = false;
  bool have_id_ = false;
  bool have_text_ = false;
  RawPage page_;

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("dump parse error at byte " + std::to_string(offset_) +
                      ": " + what);
  }

  void warn(const std::string& what) {
    if (warnings_ != nullptr) *warnings_ << "warning: " << what << '\n';
  }

  int get() {
    if (buf_pos_ >= buf_len_) {
      in_.read(buf_, static_cast<std::streamsize>(kBufSize));
      buf_len_ = static_cast<std::size_t>(in_.gcount());
      buf_pos_ = 0;
      if (buf_len_ == 0) return -1;
    }
    ++offset_;
    return static_cast<unsigned char>(buf_[buf_pos_++]);
  }

  int peek() {
    if (buf_pos_ >= buf_len_) {
      in_.read(buf_, static_cast<std::streamsize>(kBufSize));
      buf_len_ = static_cast<std::size_t>(in_.gcount());
      buf_pos_ = 0;
      if (buf_len_ == 0) return -1;
    }
    return static_cast<unsigned char>(buf_[buf_pos_]);
  }

  // Consumes character data up to the next '<'. Returns false at EOF.
  bool scan_text() {
    for (;;) {
      int c = peek();
      if (c < 0) return false;
      if (c == '<') return true;
      get();
      if (c == '&') {
        append_capture(decode_entity());
      } else if (capture_ != nullptr) {
        capture_->push_back(static_cast<char>(c));
      }
    }
  }

  void append_capture(const std::string& s) {
    if (capture_ != nullptr) capture_->append(s);
  }

  // '&' already consumed.
  std::string decode_entity() {
    std::string name;
    for (;;) {
      int c = get();
      if (c < 0) fail("unterminated entity reference");
      if (c == ';') break;
      name.push_back(static_cast<char>(c));
      if (name.size() > 12) fail("entity reference too long: &" + name);
    }
    if (name == "lt") return "<";
    if (name == "gt") return ">";
    if (name == "amp") return "&";
    if (name == "quot") return "\"";
    if (name == "apos") return "'";
    if (!name.empty() && name[0] == '#') {
      std::uint32_t cp = 0;
      const char* first = name.data() + 1;
      const char* last = name.data() + name.size();
      std::from_chars_result r{};
      if (name.size() > 1 && (name[1] == 'x' || name[1] == 'X')) {
        r = std::from_chars(first + 1, last, cp, 16);
      } else {
        r = std::from_chars(first, last, cp, 10);
      }
      if (r.ec != std::errc() || r.ptr != last || cp > 0x10FFFF) {
        fail("bad character reference: &" + name + ";");
      }
      std::string out;
      utf8::append(out, static_cast<char32_t>(cp));
      return out;
    }
    fail("unknown entity: &" + name + ";");
  }

  // Positioned at '<'. Parses one piece of markup; returns a page when one
  // is completed by its closing tag.
  std::optional<RawPage> handle_markup() {
    get();  // '<'
    int c = peek();
    if (c < 0) fail("truncated markup");
    if (c == '!') {
      get();
      if (peek() == '-') {
        skip_comment();
      } else {
        skip_until('>');  // DOCTYPE and friends
      }
      return std::nullopt;
    }
    if (c == '?') {
      get();
      skip_processing_instruction();
      return std::nullopt;
    }
    if (c == '/') {
      get();
      return close_tag(read_name());
    }
    return open_tag();
  }

  void skip_comment() {
    // "<!-" consumed except for the dashes; expect "--" then scan for "-->".
    if (get() != '-' || get() != '-') fail("malformed comment");
    int dashes = 0;
    for (;;) {
      int c = get();
      if (c < 0) fail("unterminated comment");
      if (c == '-') {
        ++dashes;
      } else if (c == '>' && dashes >= 2) {
        return;
      } else {
        dashes = 0;
      }
    }
  }

  void skip_processing_instruction() {
    bool question = false;
    for (;;) {
      int c = get();
      if (c < 0) fail("unterminated processing instruction");
      if (c == '>' && question) return;
      question = (c == '?');
    }
  }

  void skip_until(char stop) {
    for (;;) {
      int c = get();
      if (c < 0) fail(std::string("expected '") + stop + "' before end of input");
      if (c == stop) return;
    }
  }

  static bool name_char(int c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == ':' ||
           c == '.';
  }

  std::string read_name() {
    std::string name;
    while (name_char(peek())) name.push_back(static_cast<char>(get()));
    if (name.empty()) fail("expected tag name");
    // Trailing whitespace before '>' on closing tags.
    while (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r') {
      get();
    }
    if (get() != '>') fail("malformed closing tag </" + name);
    return name;
  }

  std::optional<RawPage> open_tag() {
    std::string name;
    while (name_char(peek())) name.push_back(static_cast<char>(get()));
    if (name.empty()) fail("expected tag name after '<'");
    bool self_closing = false;
    // Skip attributes, honoring quoted values.
    for (;;) {
      int c = get();
      if (c < 0) fail("unterminated tag <" + name);
      if (c == '>') break;
      if (c == '/') {
        if (get() != '>') fail("malformed tag <" + name);
        self_closing = true;
        break;
      }
      if (c == '"' || c == '\'') {
        char quote = static_cast<char>(c);
        for (;;) {
          int q = get();
          if (q < 0) fail("unterminated attribute value in <" + name);
          if (q == quote) break;
        }
      }
    }
    element_start(name);
    if (self_closing) return element_end(name);
    stack_.push_back(std::move(name));
    return std::nullopt;
  }

  std::optional<RawPage> close_tag(const std::string& name) {
    if (stack_.empty()) fail("closing tag </" + name + "> with no open element");
    if (stack_.back() != name) {
      fail("mismatched closing tag </" + name + ">, expected </" +
           stack_.back() + ">");
    }
    stack_.pop_back();
    return element_end(name);
  }

  bool parent_is(std::string_view name) const {
    return !stack_.empty() && stack_.back() == name;
  }

  void element_start(const std::string& name) {
    capture_ = nullptr;
    if (name == "page") {
      in_page_ = true;
      have_title_ = have_id_ = have_text_ = false;
      page_ = RawPage{};
      return;
    }
    if (!in_page_) return;
    if (name == "redirect" && parent_is("page")) {
      page_.is_redirect = true;
      return;
    }
    if (name == "title" && parent_is("page") && !have_title_) {
      capture_buf_.clear();
      capture_ = &capture_buf_;
    } else if (name == "ns" && parent_is("page")) {
      capture_buf_.clear();
      capture_ = &capture_buf_;
    } else if (name == "id" && parent_is("page") && !have_id_) {
      capture_buf_.clear();
      capture_ = &capture_buf_;
    } else if (name == "text" && parent_is("revision")) {
      capture_buf_.clear();
      capture_ = &capture_buf_;
    }
  }

  std::optional<RawPage> element_end(const std::string& name) {
    std::string* captured = capture_;
    capture_ = nullptr;
    if (!in_page_) return std::nullopt;
    if (name == "title" && captured != nullptr) {
      page_.title = capture_buf_;
      have_title_ = true;
    } else if (name == "ns" && captured != nullptr) {
      page_.ns = parse_int<int>(capture_buf_, "<ns>");
    } else if (name == "id" && captured != nullptr) {
      page_.page_id = parse_int<std::int64_t>(capture_buf_, "<id>");
      have_id_ = true;
    } else if (name == "text" && captured != nullptr) {
      page_.wikitext = capture_buf_;  // last revision wins
      have_text_ = true;
    } else if (name == "page") {
      in_page_ = false;
      ++stats_.pages_seen;
      if (!have_title_ || page_.title.empty()) {
        ++stats_.skipped_missing_title;
        warn("skipping page id " + std::to_string(page_.page_id) +
             ": missing title");
        return std::nullopt;
      }
      if (!have_text_) {
        ++stats_.skipped_missing_text;
        warn("skipping page \"" + page_.title + "\": missing revision text");
        return std::nullopt;
      }
      ++stats_.pages_emitted;
      if (page_.is_redirect) ++stats_.redirects;
      return std::move(page_);
    }
    return std::nullopt;
  }

  template <typename T>
  T parse_int(const std::string& s, const char* what) {
    std::size_t begin = s.find_first_not_of(" \t\r\n");
    std::size_t end = s.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos) fail(std::string(what) + " is empty");
    T value{};
    auto r = std::from_chars(s.data() + begin, s.data() + end + 1, value);
    if (r.ec != std::errc() || r.ptr != s.data() + end + 1) {
      fail(std::string(what) + " is not a number: \"" + s + "\"");
    }
    return value;
  }
};

}  // namespace cantomine::wiki
