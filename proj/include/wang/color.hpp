#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wang {

// Structured edge label. Compilers build labels from these constructors and
// never from raw strings, so two constructions cannot collide by accident.
//
// Canonical text forms:
//   atom:H              plain named colour
//   seq:0.1.1           finite sequence over naturals (tree node); "seq:" is the empty sequence
//   seqx:3:0.1          sequence with a small superscript tag (spoke/periodic variants)
//   idx:c.1.3           indexed family, tag text plus integer indices
//   tint:2:(atom:B)     disjoint-union tint; tints compose outermost-first
//
// Equality is structural and equivalent to byte equality of encode().
class Color {
 public:
  enum class Kind { Atom, Seq, SeqExt, Indexed };

  Color() : kind_(Kind::Atom), text_("?") {}

  static Color atom(std::string text) {
    check_text(text);
    Color c;
    c.kind_ = Kind::Atom;
    c.text_ = std::move(text);
    return c;
  }
  static Color seq(std::vector<int> digits) {
    Color c;
    c.kind_ = Kind::Seq;
    c.nums_ = std::move(digits);
    return c;
  }
  static Color seq_ext(std::vector<int> digits, int tag) {
    Color c;
    c.kind_ = Kind::SeqExt;
    c.nums_ = std::move(digits);
    c.ext_ = tag;
    return c;
  }
  static Color indexed(std::string tag, std::vector<int> indices) {
    check_text(tag);
    Color c;
    c.kind_ = Kind::Indexed;
    c.text_ = std::move(tag);
    c.nums_ = std::move(indices);
    return c;
  }

  // Tint for disjoint unions. Applying a tint to an already tinted colour
  // extends the tint path rather than nesting pair-in-pair structurally.
  Color tinted(int component) const {
    Color c = *this;
    c.tints_.insert(c.tints_.begin(), component);
    return c;
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& tints() const { return tints_; }
  const std::string& text() const { return text_; }
  const std::vector<int>& nums() const { return nums_; }
  int ext_tag() const { return ext_; }

  std::string encode() const {
    std::string s;
    for (int t : tints_) s += "tint:" + std::to_string(t) + ":(";
    s += base_encode();
    s.append(tints_.size(), ')');
    return s;
  }

  // Inverse of encode(); throws std::invalid_argument on malformed input.
  static Color decode(const std::string& s);

  bool operator==(const Color& o) const {
    return kind_ == o.kind_ && ext_ == o.ext_ && tints_ == o.tints_ &&
           text_ == o.text_ && nums_ == o.nums_;
  }
  bool operator!=(const Color& o) const { return !(*this == o); }
  bool operator<(const Color& o) const { return encode() < o.encode(); }

 private:
  static void check_text(const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty colour text");
    for (char ch : t)
      if (ch == ':' || ch == '(' || ch == ')' || ch == '.')
        throw std::invalid_argument("reserved character in colour text: " + t);
  }

  std::string base_encode() const {
    switch (kind_) {
      case Kind::Atom:
        return "atom:" + text_;
      case Kind::Seq:
        return "seq:" + join_nums();
      case Kind::SeqExt:
        return "seqx:" + std::to_string(ext_) + ":" + join_nums();
      case Kind::Indexed: {
        std::string s = "idx:" + text_;
        for (int n : nums_) s += "." + std::to_string(n);
        return s;
      }
    }
    return {};
  }

  std::string join_nums() const {
    std::string s;
    for (size_t i = 0; i < nums_.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(nums_[i]);
    }
    return s;
  }

  std::vector<int> tints_;
  Kind kind_;
  std::string text_;
  std::vector<int> nums_;
  int ext_ = 0;
};

}  // namespace wang
