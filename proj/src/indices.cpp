#include "eulersum/indices.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "eulersum/errors.hpp"

namespace eulersum {

int MultiIndex::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int MultiIndex::height() const {
  int h = 0;
  for (int a : parts) h += a > 1 ? 1 : 0;
  return h;
}

bool MultiIndex::admissible() const { return !parts.empty() && parts.back() >= 2; }

IndexStats weight_depth_height(const MultiIndex& idx) {
  return IndexStats{idx.weight(), idx.depth(), idx.height()};
}

MultiIndex repeat(int value, int count) {
  if (count < 0) throw DomainError("repeat: negative count");
  return MultiIndex(std::vector<int>(static_cast<size_t>(count), value));
}

MultiIndex join(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
  return r;
}

std::string to_string(const MultiIndex& idx) {
  std::string s = "(";
  for (size_t i = 0; i < idx.parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx.parts[i]);
  }
  return s + ")";
}

namespace {

class IndexParser {
 public:
  explicit IndexParser(std::string_view text) : text_(text) {}

  MultiIndex parse() {
    expect('(');
    MultiIndex idx;
    skip_ws();
    if (peek() == ')') {
      ++pos_;
    } else {
      for (;;) {
        item(idx);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return idx;
  }

 private:
  void item(MultiIndex& idx) {
    skip_ws();
    if (peek() == '{') {
      ++pos_;
      size_t at = pos_;
      int value = integer();
      if (value < 1) fail("index parts must be positive", at);
      expect('}');
      expect('^');
      int count = integer();
      idx.parts.insert(idx.parts.end(), static_cast<size_t>(count), value);
      return;
    }
    size_t at = pos_;
    int value = integer();
    if (value < 1) fail("index parts must be positive", at);
    idx.parts.push_back(value);
  }

  int integer() {
    skip_ws();
    size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, size_t at) const {
    throw ParseError(what, at);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

void compose(int remaining, int slots, int min_part, std::vector<int>& current,
             const std::function<void(const std::vector<int>&)>& visit) {
  if (slots == 1) {
    current.push_back(remaining);
    visit(current);
    current.pop_back();
    return;
  }
  // Leave at least min_part for each later slot.
  const int max_here = remaining - (slots - 1) * min_part;
  for (int v = min_part; v <= max_here; ++v) {
    current.push_back(v);
    compose(remaining - v, slots - 1, min_part, current, visit);
    current.pop_back();
  }
}

}  // namespace

MultiIndex parse_index(std::string_view text) { return IndexParser(text).parse(); }

void for_each_composition(int total, int parts, int min_part,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (min_part != 0 && min_part != 1) throw DomainError("compositions: min_part must be 0 or 1");
  if (total < 0 || parts < 0) throw DomainError("compositions: negative argument");
  if (parts == 0) {
    if (total == 0) visit({});
    return;
  }
  if (total < parts * min_part) return;
  std::vector<int> current;
  current.reserve(static_cast<size_t>(parts));
  compose(total, parts, min_part, current, visit);
}

std::vector<Composition> compositions(int total, int parts, int min_part) {
  std::vector<Composition> out;
  for_each_composition(total, parts, min_part,
                       [&](const std::vector<int>& c) { out.push_back(Composition{c, total}); });
  return out;
}

std::vector<MultiIndex> admissible_by_weight_height(int weight, int height) {
  if (weight < 2) throw DomainError("admissible_by_weight_height: weight must be >= 2");
  if (height < 1) throw DomainError("admissible_by_weight_height: height must be >= 1");
  std::vector<MultiIndex> out;
  if (2 * height > weight) return out;
  // Lexicographic order across depths: collect then sort.
  for (int depth = 1; depth <= weight - 1; ++depth) {
    for_each_composition(weight, depth, 1, [&](const std::vector<int>& c) {
      MultiIndex idx(c);
      if (idx.admissible() && idx.height() == height) out.push_back(std::move(idx));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eulersum
