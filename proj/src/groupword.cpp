#include "raaglie/groupword.hpp"

#include <algorithm>
#include <cctype>

#include "raaglie/errors.hpp"

namespace raaglie {

GroupWord::GroupWord(std::vector<Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (const auto& s : syllables)
    if (s.exponent != 0) syllables_.push_back(s);
}

GroupWord GroupWord::from_trace(const Trace& t) {
  std::vector<Syllable> sylls;
  sylls.reserve(t.word().size());
  for (auto v : t.word()) sylls.push_back({v, 1});
  return GroupWord(std::move(sylls));
}

namespace {

struct Token {
  enum Kind { kName, kOpen, kClose, kComma } kind;
  std::string text;    // kName only
  std::int64_t exponent = 1;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '\'' || c == '.' || c == '-';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '[') {
      tokens.push_back({Token::kOpen, "", 1});
      ++i;
    } else if (c == ']') {
      tokens.push_back({Token::kClose, "", 1});
      ++i;
    } else if (c == ',') {
      tokens.push_back({Token::kComma, "", 1});
      ++i;
    } else if (c == '^') {
      throw ParseError("'^' must follow a generator name");
    } else {
      size_t j = i;
      while (j < text.size() && name_char(text[j]) && text[j] != '^') ++j;
      if (j == i) throw ParseError(std::string("unexpected character '") + c + "'");
      Token tok{Token::kName, text.substr(i, j - i), 1};
      i = j;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t k = i;
        if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == i || (k == i + 1 && !std::isdigit(static_cast<unsigned char>(text[i]))))
          throw ParseError("malformed exponent after '" + tok.text + "^'");
        try {
          tok.exponent = std::stoll(text.substr(i, k - i));
        } catch (const std::exception&) {
          throw ParseError("exponent out of range after '" + tok.text + "^'");
        }
        i = k;
      }
      tokens.push_back(std::move(tok));
    }
  }
  return tokens;
}

class WordParser {
public:
  WordParser(const CommutationGraph& g, std::vector<Token> tokens)
      : graph_(g), tokens_(std::move(tokens)) {}

  GroupWord parse() {
    auto sylls = parse_sequence();
    if (pos_ != tokens_.size()) throw ParseError("unexpected ',' or ']'");
    // A lone "1" with no vertex of that name denotes the identity.
    if (sylls.size() == 1 && sylls[0].vertex == -1) sylls.clear();
    for (const auto& s : sylls)
      if (s.vertex == -1) throw ParseError("unknown vertex '1'");
    return GroupWord(std::move(sylls));
  }

private:
  std::vector<Syllable> parse_sequence() {
    std::vector<Syllable> out;
    while (pos_ < tokens_.size()) {
      const Token& tok = tokens_[pos_];
      if (tok.kind == Token::kClose || tok.kind == Token::kComma) break;
      if (tok.kind == Token::kName) {
        int v = graph_.find_vertex(tok.text);
        if (v < 0) {
          if (tok.text != "1") throw ParseError("unknown vertex '" + tok.text + "'");
          v = -1;  // placeholder, validated by parse()
        }
        if (tok.exponent != 0) out.push_back({v, tok.exponent});
        ++pos_;
      } else {  // '['
        ++pos_;
        auto left = parse_sequence();
        expect(Token::kComma, "',' inside commutator");
        auto right = parse_sequence();
        expect(Token::kClose, "']' closing commutator");
        if (left.empty() || right.empty())
          throw ParseError("commutator with an empty side");
        GroupWord comm = commutator(GroupWord(std::move(left)), GroupWord(std::move(right)));
        out.insert(out.end(), comm.syllables().begin(), comm.syllables().end());
      }
    }
    return out;
  }

  void expect(Token::Kind kind, const char* what) {
    if (pos_ >= tokens_.size() || tokens_[pos_].kind != kind)
      throw ParseError(std::string("expected ") + what);
    ++pos_;
  }

  const CommutationGraph& graph_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

GroupWord GroupWord::parse(const CommutationGraph& g, const std::string& text) {
  return WordParser(g, tokenize(text)).parse();
}

std::string GroupWord::str(const CommutationGraph& g) const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < syllables_.size(); ++i) {
    if (i) out += ' ';
    out += g.label(syllables_[i].vertex);
    if (syllables_[i].exponent != 1)
      out += '^' + std::to_string(syllables_[i].exponent);
  }
  return out;
}

GroupWord inverse(const GroupWord& w) {
  std::vector<Syllable> sylls(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : sylls) s.exponent = -s.exponent;
  return GroupWord(std::move(sylls));
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  std::vector<Syllable> sylls = a.syllables();
  sylls.insert(sylls.end(), b.syllables().begin(), b.syllables().end());
  return GroupWord(std::move(sylls));
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) {
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

GroupWord fully_reduce(const CommutationGraph& g, const GroupWord& w) {
  std::vector<Syllable> s = w.syllables();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < s.size() && !changed; ++i) {
      for (size_t j = i + 1; j < s.size(); ++j) {
        if (s[j].vertex == s[i].vertex) {
          bool movable = true;
          for (size_t t = i + 1; t < j && movable; ++t)
            movable = g.adjacent(s[t].vertex, s[i].vertex);
          if (movable) {
            if (__builtin_add_overflow(s[i].exponent, s[j].exponent,
                                       &s[i].exponent))
              throw LimitError("syllable exponent overflow");
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
            if (s[i].exponent == 0) s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
          }
          break;  // only the next occurrence of this vertex can merge
        }
      }
    }
  }
  return GroupWord(std::move(s));
}

GroupWord normal_form(const CommutationGraph& g, const GroupWord& w) {
  std::vector<Syllable> rest = fully_reduce(g, w).syllables();
  std::vector<Syllable> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    VertexSet blocked = 0;
    size_t best_pos = 0;
    bool have = false;
    for (size_t i = 0; i < rest.size(); ++i) {
      const auto& s = rest[i];
      if (!((blocked >> s.vertex) & 1u)) {
        // Distinct movable syllables always have distinct vertices, so the
        // vertex-major order decides.
        if (!have || s.vertex > rest[best_pos].vertex ||
            (s.vertex == rest[best_pos].vertex && s.exponent > rest[best_pos].exponent)) {
          best_pos = i;
          have = true;
        }
      }
      blocked |= g.blockers(s.vertex);
    }
    out.push_back(rest[best_pos]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_pos));
  }
  return GroupWord(std::move(out));
}

bool is_identity(const CommutationGraph& g, const GroupWord& w) {
  return fully_reduce(g, w).empty();
}

bool equal(const CommutationGraph& g, const GroupWord& a, const GroupWord& b) {
  return is_identity(g, concat(a, inverse(b)));
}

VertexSet init_set(const CommutationGraph& g, const GroupWord& w) {
  const GroupWord reduced = fully_reduce(g, w);
  VertexSet init = 0, blocked = 0;
  for (const auto& s : reduced.syllables()) {
    if (!((blocked >> s.vertex) & 1u)) init |= 1u << s.vertex;
    blocked |= g.blockers(s.vertex);
  }
  return init;
}

VertexSet term_set(const CommutationGraph& g, const GroupWord& w) {
  const auto sylls = fully_reduce(g, w).syllables();
  VertexSet term = 0, blocked = 0;
  for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
    if (!((blocked >> it->vertex) & 1u)) term |= 1u << it->vertex;
    blocked |= g.blockers(it->vertex);
  }
  return term;
}

}  // namespace raaglie
