#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"

namespace orbitcount {

// Which counting function a sequence holds. Plain marks integer data that
// carries no dynamical meaning (S-parts, imported b-files before tagging).
enum class View { Orbit, Fix, Monoid, Plain };

inline std::string_view view_name(View v) {
  switch (v) {
    case View::Orbit: return "orbit";
    case View::Fix: return "fix";
    case View::Monoid: return "monoid";
    case View::Plain: return "plain";
  }
  return "?";
}

inline std::optional<View> parse_view(std::string_view s) {
  if (s == "orbit") return View::Orbit;
  if (s == "fix") return View::Fix;
  if (s == "monoid") return View::Monoid;
  if (s == "plain") return View::Plain;
  return std::nullopt;
}

// Finite one-indexed truncation of an integer sequence, tagged with its view.
// Orbit, fix and monoid data are cardinalities and must be nonnegative; plain
// sequences may hold any integers. Immutable once built.
class Sequence {
 public:
  Sequence(View view, std::vector<Integer> terms) : view_(view), terms_(std::move(terms)) {
    if (terms_.empty()) throw ArgumentError("Sequence: truncation length must be >= 1");
    if (view_ != View::Plain)
      for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i] < 0)
          throw ArgumentError("Sequence: negative term at index " + std::to_string(i + 1) + " in " +
                              std::string(view_name(view_)) + " view");
  }

  template <typename Int>
  static Sequence of(View view, std::initializer_list<Int> values) {
    std::vector<Integer> terms;
    for (const auto& v : values) terms.emplace_back(v);
    return Sequence(view, std::move(terms));
  }

  View view() const { return view_; }
  Index size() const { return terms_.size(); }

  // Term n, 1 <= n <= size(). Unchecked.
  const Integer& operator[](Index n) const { return terms_[n - 1]; }

  const Integer& at(Index n) const {
    if (n == 0 || n > size())
      throw TruncationError("Sequence: index " + std::to_string(n) + " outside 1.." + std::to_string(size()));
    return terms_[n - 1];
  }

  std::span<const Integer> terms() const { return terms_; }

  Sequence with_view(View view) const { return Sequence(view, terms_); }

  // First m terms.
  Sequence slice(Index m) const {
    if (m == 0 || m > size())
      throw TruncationError("slice: requested " + std::to_string(m) + " terms of a length-" +
                            std::to_string(size()) + " sequence");
    return Sequence(view_, std::vector<Integer>(terms_.begin(), terms_.begin() + m));
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  View view_;
  std::vector<Integer> terms_;
};

inline Sequence slice(const Sequence& s, Index m) { return s.slice(m); }

inline void require_view(const Sequence& s, View expected, const char* op) {
  if (s.view() != expected)
    throw ViewError(std::string(op) + ": expected " + std::string(view_name(expected)) + " view, got " +
                    std::string(view_name(s.view())));
}

inline std::string to_string(const Sequence& s) {
  std::string out;
  for (Index n = 1; n <= s.size(); ++n) {
    if (n > 1) out += ' ';
    out += s[n].str();
  }
  return out;
}

// One-indexed sequence of exact rationals; feeds Dirichlet series only.
class RationalSequence {
 public:
  explicit RationalSequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw ArgumentError("RationalSequence: truncation length must be >= 1");
  }

  Index size() const { return terms_.size(); }
  const Rational& operator[](Index n) const { return terms_[n - 1]; }
  std::span<const Rational> terms() const { return terms_; }

  friend bool operator==(const RationalSequence&, const RationalSequence&) = default;

 private:
  std::vector<Rational> terms_;
};

}  // namespace orbitcount
