#pragma once

// Signed permutations of type C_{n+1} restricted to the parabolic quotient
// by <s_3, ..., s_{n+1}>, and the odd subset indexing Schubert cells of
// IF(1,2; C^{2n+1}).

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ifodd {

/// Thrown when a verified identity fails. Distinct from std::domain_error,
/// which signals a caller precondition.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_rank(int n);

/// A letter of the alphabet 1 < 2 < ... < n+1 < bar(n+1) < ... < bar(1).
/// The order does not depend on n; rank() does.
struct BarValue {
  int letter = 1;
  bool barred = false;

  constexpr BarValue bar() const { return {letter, !barred}; }

  /// Position in the alphabet, with bar(i) = 2n+3-i.
  constexpr int rank(int n) const { return barred ? 2 * n + 3 - letter : letter; }

  /// +letter or -letter; the sign is the coefficient of t_letter.
  constexpr int signed_value() const { return barred ? -letter : letter; }

  friend constexpr bool operator==(BarValue, BarValue) = default;
  friend constexpr std::strong_ordering operator<=>(BarValue x, BarValue y) {
    if (x.barred != y.barred) return x.barred <=> y.barred;
    return x.barred ? y.letter <=> x.letter : x.letter <=> y.letter;
  }
};

constexpr BarValue plain(int letter) { return {letter, false}; }
constexpr BarValue barred(int letter) { return {letter, true}; }

/// Coset of W/W_P identified by its first two one-line values (a|b).
struct FlagLabel {
  BarValue a;
  BarValue b;
  int n = 2;

  bool is_valid() const;
  friend bool operator==(const FlagLabel&, const FlagLabel&) = default;
};

FlagLabel make_label(int n, BarValue a, BarValue b);

/// One-line notation on positions 1..n+1; values on barred positions follow
/// from w(bar i) = bar(w(i)).
struct SignedPermutation {
  std::vector<BarValue> values;

  int n() const { return static_cast<int>(values.size()) - 1; }
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

struct Root {
  enum class Kind { Diff, Sum, Long };
  Kind kind = Kind::Diff;
  int i = 1;
  int j = 0;  // unused for Long

  static constexpr Root diff(int i, int j) { return {Kind::Diff, i, j}; }
  static constexpr Root sum(int i, int j) { return {Kind::Sum, i, j}; }
  static constexpr Root twice(int i) { return {Kind::Long, i, 0}; }

  /// Roots of the Levi factor: both indices >= 3.
  bool in_levi() const { return i >= 3; }

  friend constexpr bool operator==(Root, Root) = default;
};

std::string to_string(const Root& r);

/// All positive roots of C_{n+1}.
std::vector<Root> positive_roots(int n);

/// R+ \ R+_P: the 4n roots with i in {1,2}.
std::vector<Root> moment_roots(int n);

// --- label text syntax: "a|b", "-k" denotes bar(k) ---

std::string to_string(BarValue v);
std::string to_string(const FlagLabel& w);
BarValue parse_bar_value(std::string_view text);
FlagLabel parse_label(std::string_view text, int n);

// --- coset combinatorics ---

/// Sorted by (length, rank(a), rank(b)).
std::vector<FlagLabel> enumerate_labels(int n);

/// All of W^P, including labels containing bar(1). Used for the even space.
std::vector<FlagLabel> enumerate_even_labels(int n);

SignedPermutation minimal_representative(const FlagLabel& w);

/// Coxeter length: number of positive roots sent to negative roots.
int length(const SignedPermutation& w);
int length(const FlagLabel& w);

/// Right action w -> w s_alpha on one-line notation.
SignedPermutation apply_reflection(const SignedPermutation& w, const Root& alpha);

struct EvenOnly {
  FlagLabel label;  // the coset in the even flag manifold
  friend bool operator==(const EvenOnly&, const EvenOnly&) = default;
};
struct Fixed {
  friend bool operator==(Fixed, Fixed) = default;
};
using ReflectResult = std::variant<FlagLabel, EvenOnly, Fixed>;

/// Coset of minimal_representative(w) * s_alpha. Throws std::domain_error for
/// alpha in R+_P.
ReflectResult reflect(const FlagLabel& w, const Root& alpha);

/// Same as reflect() but without the odd filter; nullopt means unchanged.
std::optional<FlagLabel> reflect_even(const FlagLabel& w, const Root& alpha);

/// Bruhat order via the type A tableau criterion on the doubled word in
/// S_{2n+2}.
bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& v);
bool bruhat_leq(const FlagLabel& u, const FlagLabel& v);

std::vector<FlagLabel> down_set(const FlagLabel& w);

/// Lower covers: u <= v with length(u) = length(v) - 1.
std::vector<FlagLabel> covers(const FlagLabel& v);

/// The maximum of the odd quotient, (bar 2 | bar 3).
FlagLabel top_label(int n);

/// Orders labels by (length, rank(a), rank(b)).
bool label_less(const FlagLabel& x, const FlagLabel& y);

/// Dense index for labels of a fixed n; the inverse of enumerate order is
/// not assumed.
std::size_t label_key(const FlagLabel& w);

/// Position lookup for a fixed list of labels of one rank.
class LabelIndex {
 public:
  LabelIndex() = default;
  explicit LabelIndex(const std::vector<FlagLabel>& labels);

  bool contains(const FlagLabel& w) const;
  /// Throws std::out_of_range if w is not in the list.
  std::size_t operator()(const FlagLabel& w) const;

 private:
  std::vector<std::size_t> slots_;  // label_key -> position + 1, 0 if absent
};

}  // namespace ifodd

template <>
struct std::hash<ifodd::FlagLabel> {
  std::size_t operator()(const ifodd::FlagLabel& w) const noexcept {
    return ifodd::label_key(w) * 31u + static_cast<std::size_t>(w.n);
  }
};
