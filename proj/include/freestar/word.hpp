#ifndef FREESTAR_WORD_HPP
#define FREESTAR_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace freestar {

// One of the 2g letters x1..xg, x1*..xg*. Precedence for the monomial order
// puts every unstarred letter before every starred one, then by index.
struct Letter {
  uint32_t index = 1;  // 1..g
  bool starred = false;

  Letter() = default;
  Letter(uint32_t idx, bool st) : index(idx), starred(st) {}

  Letter star() const { return Letter(index, !starred); }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.index == b.index && a.starred == b.starred;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.starred != b.starred) return !a.starred;
    return a.index < b.index;
  }
};

// A word in the free monoid on the 2g letters; the empty word is the
// identity. Stored as a plain letter sequence (no hash-consing) so that
// iteration order, and with it every downstream output, is deterministic.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}
  static Word one() { return Word(); }
  static Word letter(uint32_t index, bool starred = false) {
    return Word({Letter(index, starred)});
  }

  int degree() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& at(int i) const { return letters_[static_cast<size_t>(i)]; }

  // Reverses the sequence and flips every starred flag; an involution.
  Word star() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l = l.star();
    return Word(std::move(out));
  }

  Word concat(const Word& o) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(out));
  }
  friend Word operator*(const Word& a, const Word& b) { return a.concat(b); }

  Word append(Letter l) const {
    std::vector<Letter> out = letters_;
    out.push_back(l);
    return Word(std::move(out));
  }
  Word prepend(Letter l) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + 1);
    out.push_back(l);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
  }

  Word prefix(int len) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + len));
  }
  Word suffix(int len) const {
    return Word(std::vector<Letter>(letters_.end() - len, letters_.end()));
  }
  Word subword(int pos, int len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }

  bool is_analytic() const {
    for (const auto& l : letters_)
      if (l.starred) return false;
    return true;
  }
  bool is_antianalytic() const {
    for (const auto& l : letters_)
      if (!l.starred) return false;
    return true;
  }

  // First position where `f` occurs as a factor, or -1. The empty word is a
  // factor of everything.
  int find_factor(const Word& f) const {
    int n = degree(), m = f.degree();
    for (int i = 0; i + m <= n; ++i) {
      bool ok = true;
      for (int j = 0; j < m; ++j)
        if (!(letters_[i + j] == f.letters_[j])) { ok = false; break; }
      if (ok) return i;
    }
    return -1;
  }
  bool contains_factor(const Word& f) const { return find_factor(f) >= 0; }
  bool has_suffix(const Word& f) const {
    int n = degree(), m = f.degree();
    if (m > n) return false;
    for (int j = 0; j < m; ++j)
      if (!(letters_[n - m + j] == f.letters_[j])) return false;
    return true;
  }
  bool has_prefix(const Word& f) const {
    int n = degree(), m = f.degree();
    if (m > n) return false;
    for (int j = 0; j < m; ++j)
      if (!(letters_[j] == f.letters_[j])) return false;
    return true;
  }

  Word rotated_left(int k) const {
    int n = degree();
    if (n == 0) return *this;
    k %= n;
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (int i = 0; i < n; ++i) out.push_back(letters_[(i + k) % n]);
    return Word(std::move(out));
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  std::vector<Letter> letters_;
};

// The fixed graded left-lexicographic order: degree first, then letter
// precedence left to right. Total, multiplicative on both sides, graded.
inline std::strong_ordering compare_words(const Word& u, const Word& v) {
  if (u.degree() != v.degree())
    return u.degree() < v.degree() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (int i = 0; i < u.degree(); ++i) {
    const Letter &a = u.at(i), &b = v.at(i);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

inline bool operator<(const Word& a, const Word& b) {
  return compare_words(a, b) == std::strong_ordering::less;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return a < b; }
};
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return b < a; }
};

// The class-least rotation under the monomial order; trace_normal_form's
// canonical cyclic representative.
inline Word least_rotation(const Word& w) {
  Word best = w;
  for (int k = 1; k < w.degree(); ++k) {
    Word r = w.rotated_left(k);
    if (r < best) best = r;
  }
  return best;
}

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int i = 0; i < w.degree(); ++i) {
    if (i) s += "*";
    s += "x" + std::to_string(w.at(i).index);
    if (w.at(i).starred) s += "'";
  }
  return s;
}

}  // namespace freestar

#endif
