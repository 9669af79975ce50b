// Copyright 2026 The Acrokit Authors.
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

#include "support/latex_text.h"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace acrokit::testing {

namespace {

const std::set<std::string> kDropped = {
    "cite", "citet", "citep", "ref", "label", "url", "footnote",
    "bibliography", "bibliographystyle", "includegraphics",
};
const std::set<std::string> kUnwrapped = {"textit", "textbf", "emph", "textsc"};
const std::set<std::string> kHeadings = {"section", "subsection", "subsubsection"};

// Index just past the brace group starting at text[open] == '{'.
size_t SkipGroup(std::string_view text, size_t open) {
  int depth = 0;
  for (size_t i = open; i < text.size(); ++i) {
    if (text[i] == '\\') {
      ++i;
      continue;
    }
    if (text[i] == '{') ++depth;
    if (text[i] == '}' && --depth == 0) return i + 1;
  }
  return text.size();
}

std::string Render(std::string_view text) {
  std::string out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '$') {
      const size_t close = text.find('$', i + 1);
      i = close == std::string_view::npos ? text.size() : close + 1;
      continue;
    }
    if (c == '~') {
      out += ' ';
      ++i;
      continue;
    }
    if (c == '%') {
      const size_t eol = text.find('\n', i);
      i = eol == std::string_view::npos ? text.size() : eol;
      continue;
    }
    if (c != '\\') {
      if (c != '{' && c != '}') out += c;
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
    const std::string name(text.substr(i + 1, j - i - 1));
    if (name.empty()) {
      // Escaped character such as \_ or \%.
      if (j < text.size()) out += text[j];
      i = j + 1;
      continue;
    }
    if (j < text.size() && text[j] == '*') ++j;
    if (j < text.size() && text[j] == '[') {
      const size_t close = text.find(']', j);
      j = close == std::string_view::npos ? text.size() : close + 1;
    }
    const bool has_group = j < text.size() && text[j] == '{';
    const size_t group_end = has_group ? SkipGroup(text, j) : j;
    const std::string_view inner =
        has_group ? text.substr(j + 1, group_end - j - 2) : std::string_view();
    if (kDropped.count(name)) {
      i = group_end;
    } else if (kUnwrapped.count(name)) {
      out += Render(inner);
      i = group_end;
    } else if (kHeadings.count(name)) {
      out += "\n\n" + Render(inner) + "\n\n";
      i = group_end;
    } else if (name == "item") {
      out += "\n\n";
      i = j;
    } else if (name == "begin" || name == "end") {
      out += "\n\n";
      i = group_end;
    } else {
      i = j;  // unknown command: drop the command word only
    }
  }
  return out;
}

}  // namespace

std::string LatexToText(std::string_view latex) {
  const size_t begin = latex.find("\\begin{document}");
  const size_t end = latex.find("\\end{document}");
  std::string body(latex.substr(begin == std::string_view::npos ? 0 : begin,
                                end == std::string_view::npos ? std::string_view::npos
                                                              : end - begin));
  static const std::regex floats(R"(\\begin\{(table|figure)\*?\}[\s\S]*?\\end\{\1\*?\})");
  body = std::regex_replace(body, floats, "\n\n");
  return Render(body);
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace acrokit::testing
