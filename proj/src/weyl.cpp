#include "ifodd/weyl.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ifodd {

void require_rank(int n) {
  if (n < 2) throw std::domain_error("rank n must be at least 2, got " + std::to_string(n));
}

bool FlagLabel::is_valid() const {
  auto in_range = [this](BarValue v) { return v.letter >= 1 && v.letter <= n + 1; };
  if (n < 2 || !in_range(a) || !in_range(b)) return false;
  if (a.letter == b.letter) return false;
  return a != barred(1) && b != barred(1);
}

FlagLabel make_label(int n, BarValue a, BarValue b) {
  FlagLabel w{a, b, n};
  if (!w.is_valid()) throw std::domain_error("not an odd symplectic label: " + to_string(w));
  return w;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  switch (r.kind) {
    case Root::Kind::Diff: os << "t" << r.i << "-t" << r.j; break;
    case Root::Kind::Sum: os << "t" << r.i << "+t" << r.j; break;
    case Root::Kind::Long: os << "2t" << r.i; break;
  }
  return os.str();
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> roots;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      roots.push_back(Root::diff(i, j));
      roots.push_back(Root::sum(i, j));
    }
    roots.push_back(Root::twice(i));
  }
  return roots;
}

std::vector<Root> moment_roots(int n) {
  std::vector<Root> roots;
  for (const Root& r : positive_roots(n))
    if (!r.in_levi()) roots.push_back(r);
  return roots;
}

std::string to_string(BarValue v) {
  return (v.barred ? "-" : "") + std::to_string(v.letter);
}

std::string to_string(const FlagLabel& w) { return to_string(w.a) + "|" + to_string(w.b); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

BarValue parse_bar_value(std::string_view text) {
  text = trim(text);
  bool bar = false;
  if (!text.empty() && text.front() == '-') {
    bar = true;
    text.remove_prefix(1);
  }
  int letter = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), letter);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || letter < 1)
    throw std::invalid_argument("bad letter '" + std::string(text) + "'");
  return {letter, bar};
}

FlagLabel parse_label(std::string_view text, int n) {
  auto bar_pos = text.find('|');
  if (bar_pos == std::string_view::npos)
    throw std::invalid_argument("label must have the form a|b: '" + std::string(text) + "'");
  FlagLabel w{parse_bar_value(text.substr(0, bar_pos)), parse_bar_value(text.substr(bar_pos + 1)), n};
  if (!w.is_valid())
    throw std::invalid_argument("'" + std::string(text) + "' is not an odd label for n=" + std::to_string(n));
  return w;
}

SignedPermutation minimal_representative(const FlagLabel& w) {
  SignedPermutation p;
  p.values.reserve(static_cast<std::size_t>(w.n) + 1);
  p.values.push_back(w.a);
  p.values.push_back(w.b);
  for (int k = 1; k <= w.n + 1; ++k)
    if (k != w.a.letter && k != w.b.letter) p.values.push_back(plain(k));
  return p;
}

namespace {

// True iff c_p t_p + c_q t_q (p != q) is a positive root, i.e. the
// coefficient on the smaller index is positive.
bool positive_pair(int p, int cp, int q, int cq) { return p < q ? cp > 0 : cq > 0; }

int sign_of(BarValue v) { return v.barred ? -1 : 1; }

}  // namespace

int length(const SignedPermutation& w) {
  const int m = static_cast<int>(w.values.size());
  int negatives = 0;
  for (int i = 0; i < m; ++i) {
    const BarValue wi = w.values[i];
    if (wi.barred) ++negatives;  // 2t_i
    for (int j = i + 1; j < m; ++j) {
      const BarValue wj = w.values[j];
      if (!positive_pair(wi.letter, sign_of(wi), wj.letter, -sign_of(wj))) ++negatives;
      if (!positive_pair(wi.letter, sign_of(wi), wj.letter, sign_of(wj))) ++negatives;
    }
  }
  return negatives;
}

int length(const FlagLabel& w) { return length(minimal_representative(w)); }

SignedPermutation apply_reflection(const SignedPermutation& w, const Root& alpha) {
  SignedPermutation out = w;
  auto& v = out.values;
  const auto i = static_cast<std::size_t>(alpha.i - 1);
  switch (alpha.kind) {
    case Root::Kind::Diff:
      std::swap(v[i], v[static_cast<std::size_t>(alpha.j - 1)]);
      break;
    case Root::Kind::Sum: {
      const auto j = static_cast<std::size_t>(alpha.j - 1);
      const BarValue vi = w.values[i];
      v[i] = w.values[j].bar();
      v[j] = vi.bar();
      break;
    }
    case Root::Kind::Long:
      v[i] = v[i].bar();
      break;
  }
  return out;
}

std::optional<FlagLabel> reflect_even(const FlagLabel& w, const Root& alpha) {
  if (alpha.in_levi()) throw std::domain_error("root " + to_string(alpha) + " lies in R+_P");
  const SignedPermutation moved = apply_reflection(minimal_representative(w), alpha);
  FlagLabel out{moved.values[0], moved.values[1], w.n};
  if (out == w) return std::nullopt;
  return out;
}

ReflectResult reflect(const FlagLabel& w, const Root& alpha) {
  const auto moved = reflect_even(w, alpha);
  if (!moved) return Fixed{};
  if (moved->a == barred(1) || moved->b == barred(1)) return EvenOnly{*moved};
  return *moved;
}

namespace {

// Doubled word in S_{2n+2}: position i carries rank(w(i)), position bar(i)
// carries rank(bar(w(i))).
std::vector<int> doubled_word(const SignedPermutation& w) {
  const int n = w.n();
  const int size = 2 * n + 2;
  std::vector<int> word(static_cast<std::size_t>(size));
  for (int i = 1; i <= n + 1; ++i) {
    const BarValue v = w.values[static_cast<std::size_t>(i - 1)];
    word[static_cast<std::size_t>(i - 1)] = v.rank(n);
    word[static_cast<std::size_t>(2 * n + 3 - i - 1)] = v.bar().rank(n);
  }
  return word;
}

}  // namespace

bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.n() != v.n()) throw std::domain_error("bruhat_leq: rank mismatch");
  const std::vector<int> wu = doubled_word(u);
  const std::vector<int> wv = doubled_word(v);
  const std::size_t size = wu.size();
  // count[r] = #{prefix entries >= r}; u <= v iff dominated for every prefix.
  std::vector<int> cu(size + 2, 0), cv(size + 2, 0);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    for (int r = 1; r <= wu[k]; ++r) ++cu[static_cast<std::size_t>(r)];
    for (int r = 1; r <= wv[k]; ++r) ++cv[static_cast<std::size_t>(r)];
    for (std::size_t r = 1; r <= size; ++r)
      if (cu[r] > cv[r]) return false;
  }
  return true;
}

bool bruhat_leq(const FlagLabel& u, const FlagLabel& v) {
  if (u.n != v.n) throw std::domain_error("bruhat_leq: labels of different rank");
  return bruhat_leq(minimal_representative(u), minimal_representative(v));
}

namespace {

std::vector<FlagLabel> sorted_by_length(std::vector<FlagLabel> labels) {
  std::vector<std::pair<std::array<int, 3>, FlagLabel>> keyed;
  keyed.reserve(labels.size());
  for (const auto& w : labels) keyed.push_back({{length(w), w.a.rank(w.n), w.b.rank(w.n)}, w});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t k = 0; k < keyed.size(); ++k) labels[k] = keyed[k].second;
  return labels;
}

std::vector<FlagLabel> all_pairs(int n, bool odd_only) {
  require_rank(n);
  std::vector<BarValue> alphabet;
  for (int k = 1; k <= n + 1; ++k) alphabet.push_back(plain(k));
  for (int k = n + 1; k >= 1; --k) alphabet.push_back(barred(k));
  std::vector<FlagLabel> labels;
  for (BarValue a : alphabet)
    for (BarValue b : alphabet) {
      if (a.letter == b.letter) continue;
      if (odd_only && (a == barred(1) || b == barred(1))) continue;
      labels.push_back({a, b, n});
    }
  return sorted_by_length(std::move(labels));
}

}  // namespace

std::vector<FlagLabel> enumerate_labels(int n) { return all_pairs(n, true); }

std::vector<FlagLabel> enumerate_even_labels(int n) { return all_pairs(n, false); }

std::vector<FlagLabel> down_set(const FlagLabel& w) {
  std::vector<FlagLabel> out;
  for (const auto& u : enumerate_labels(w.n))
    if (bruhat_leq(u, w)) out.push_back(u);
  return out;
}

std::vector<FlagLabel> covers(const FlagLabel& v) {
  const int target = length(v) - 1;
  std::vector<FlagLabel> out;
  for (const auto& u : enumerate_labels(v.n))
    if (length(u) == target && bruhat_leq(u, v)) out.push_back(u);
  return out;
}

FlagLabel top_label(int n) {
  require_rank(n);
  return {barred(2), barred(3), n};
}

bool label_less(const FlagLabel& x, const FlagLabel& y) {
  const std::array<int, 3> kx{length(x), x.a.rank(x.n), x.b.rank(x.n)};
  const std::array<int, 3> ky{length(y), y.a.rank(y.n), y.b.rank(y.n)};
  return kx < ky;
}

std::size_t label_key(const FlagLabel& w) {
  const int width = 2 * w.n + 2;
  return static_cast<std::size_t>((w.a.rank(w.n) - 1) * width + (w.b.rank(w.n) - 1));
}

LabelIndex::LabelIndex(const std::vector<FlagLabel>& labels) {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const std::size_t key = label_key(labels[k]);
    if (key >= slots_.size()) slots_.resize(key + 1, 0);
    slots_[key] = k + 1;
  }
}

bool LabelIndex::contains(const FlagLabel& w) const {
  const std::size_t key = label_key(w);
  return key < slots_.size() && slots_[key] != 0;
}

std::size_t LabelIndex::operator()(const FlagLabel& w) const {
  if (!contains(w)) throw std::out_of_range("label " + to_string(w) + " not indexed");
  return slots_[label_key(w)] - 1;
}

}  // namespace ifodd
