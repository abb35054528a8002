#include "rvs/braid.hpp"

#include <cstdlib>

#include "rvs/checked.hpp"
#include "rvs/error.hpp"

namespace rvs {

void check_letters(const BraidWord& w) {
  for (const auto& l : w)
    if ((l.gen != 1 && l.gen != 2) || (l.sign != 1 && l.sign != -1))
      throw Error(Errc::BadParams, "braid letters must be s1^{+-1} or s2^{+-1}");
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

namespace {

// Letters 1 and 2 as bits 1 and 2.
constexpr unsigned kStart[] = {0, 1, 2, 1, 2, 3};
constexpr unsigned kFinish[] = {0, 1, 2, 2, 1, 3};

// x * s_gen when still simple.
bool times_letter(Simple x, int gen, Simple& out) {
  switch (x) {
    case Simple::E: out = gen == 1 ? Simple::A : Simple::B; return true;
    case Simple::A: if (gen == 2) { out = Simple::AB; return true; } return false;
    case Simple::B: if (gen == 1) { out = Simple::BA; return true; } return false;
    case Simple::AB: if (gen == 1) { out = Simple::Delta; return true; } return false;
    case Simple::BA: if (gen == 2) { out = Simple::Delta; return true; } return false;
    case Simple::Delta: return false;
  }
  return false;
}

// s_gen^{-1} * x, for gen a starting letter of x.
Simple strip_first(Simple x, int gen) {
  switch (x) {
    case Simple::A:
    case Simple::B: return Simple::E;
    case Simple::AB: return Simple::B;
    case Simple::BA: return Simple::A;
    case Simple::Delta: return gen == 1 ? Simple::BA : Simple::AB;
    case Simple::E: break;
  }
  throw Error(Errc::BadParams, "no letter to strip from the identity");
}

std::vector<int> letters_of(Simple x) {
  switch (x) {
    case Simple::E: return {};
    case Simple::A: return {1};
    case Simple::B: return {2};
    case Simple::AB: return {1, 2};
    case Simple::BA: return {2, 1};
    case Simple::Delta: return {1, 2, 1};
  }
  return {};
}

// Make the pair (a, b) left-weighted by sliding starting letters of b into a.
bool left_weight(Simple& a, Simple& b) {
  bool changed = false;
  while (true) {
    const unsigned bad = kStart[static_cast<int>(b)] & ~kFinish[static_cast<int>(a)];
    if (bad == 0) return changed;
    const int gen = (bad & 1u) ? 1 : 2;
    Simple grown;
    if (!times_letter(a, gen, grown)) throw Error(Errc::BadParams, "Garside table inconsistency");
    a = grown;
    b = strip_first(b, gen);
    changed = true;
  }
}

}  // namespace

GarsideNF garside_nf(const BraidWord& w) {
  check_letters(w);
  // Rewrite as Delta^p times a positive word, using s1^-1 = Delta^-1 s1 s2,
  // s2^-1 = Delta^-1 s2 s1 and x Delta^-1 = Delta^-1 tau(x).
  int p = 0;
  std::vector<int> positive;
  for (const auto& l : w) {
    if (l.sign > 0) {
      positive.push_back(l.gen);
      continue;
    }
    --p;
    for (auto& g : positive) g = 3 - g;
    positive.push_back(l.gen);
    positive.push_back(3 - l.gen);
  }

  std::vector<Simple> f;
  for (int g : positive) f.push_back(g == 1 ? Simple::A : Simple::B);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) changed |= left_weight(f[k], f[k + 1]);
    std::erase(f, Simple::E);
  }

  GarsideNF nf;
  nf.infimum = p;
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == Simple::Delta) ++lead;
  nf.infimum += static_cast<int>(lead);
  nf.factors.assign(f.begin() + static_cast<std::ptrdiff_t>(lead), f.end());
  return nf;
}

BraidWord to_word(const GarsideNF& nf) {
  BraidWord out;
  const int sign = nf.infimum >= 0 ? 1 : -1;
  for (int k = 0; k < std::abs(nf.infimum); ++k) {
    const std::vector<int> d = letters_of(Simple::Delta);
    for (int g : d) out.push_back({g, sign});
  }
  for (Simple x : nf.factors)
    for (int g : letters_of(x)) out.push_back({g, 1});
  return out;
}

std::pair<int, int> exponent_sums(const BraidWord& w) {
  check_letters(w);
  std::pair<int, int> s{0, 0};
  for (const auto& l : w) (l.gen == 1 ? s.first : s.second) += l.sign;
  return s;
}

bool equal_braid(FlatType type, const BraidWord& u, const BraidWord& v) {
  if (type == FlatType::A1A1) return exponent_sums(u) == exponent_sums(v);
  return garside_nf(u) == garside_nf(v);
}

// Laurent polynomials.

Laurent Laurent::monomial(std::int64_t coeff, int exp) {
  Laurent p;
  p.add_term(exp, coeff);
  return p;
}

void Laurent::add_term(int exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (inserted) return;
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (auto [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (auto [e, c] : b.terms_) out.add_term(e, checked::sub(0, c));
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, checked::mul(ca, cb));
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e != 0) out += (mag != 1 ? "*t" : "t") + (e != 1 ? "^" + std::to_string(e) : std::string());
  }
  return out;
}

LaurentMat LaurentMat::identity() {
  LaurentMat m;
  m.e[0][0] = Laurent::constant(1);
  m.e[1][1] = Laurent::constant(1);
  return m;
}

Laurent LaurentMat::det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

LaurentMat operator*(const LaurentMat& a, const LaurentMat& b) {
  LaurentMat out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.e[r][c] = a.e[r][0] * b.e[0][c] + a.e[r][1] * b.e[1][c];
  return out;
}

namespace {

LaurentMat burau_letter(const BraidLetter& l) {
  using L = Laurent;
  LaurentMat m;
  if (l.gen == 1 && l.sign > 0) {
    m.e = {{{L::monomial(-1, 1), L::constant(1)}, {L(), L::constant(1)}}};
  } else if (l.gen == 1) {
    m.e = {{{L::monomial(-1, -1), L::monomial(1, -1)}, {L(), L::constant(1)}}};
  } else if (l.sign > 0) {
    m.e = {{{L::constant(1), L()}, {L::monomial(1, 1), L::monomial(-1, 1)}}};
  } else {
    m.e = {{{L::constant(1), L()}, {L::constant(1), L::monomial(-1, -1)}}};
  }
  return m;
}

}  // namespace

LaurentMat burau(const BraidWord& w) {
  check_letters(w);
  LaurentMat m = LaurentMat::identity();
  for (const auto& l : w) m = m * burau_letter(l);
  return m;
}

// Sign patterns.

int flat_m(FlatType type) { return type == FlatType::A1A1 ? 2 : 3; }

BraidWord alternating_word(int first_gen, const std::vector<int>& signs) {
  BraidWord out;
  int g = first_gen;
  for (int s : signs) {
    out.push_back({g, s});
    g = 3 - g;
  }
  return out;
}

BraidWord lhs_word(const SignPattern& p) { return alternating_word(1, p.lhs); }
BraidWord rhs_word(const SignPattern& p) { return alternating_word(2, p.rhs); }

std::string to_string(const SignPattern& p) {
  auto side = [](const std::vector<int>& s) {
    std::string out = "(";
    for (int x : s) out += x > 0 ? '+' : '-';
    return out + ")";
  };
  return side(p.lhs) + " = " + side(p.rhs);
}

bool pattern_holds(FlatType type, const SignPattern& p) {
  return equal_braid(type, lhs_word(p), rhs_word(p));
}

std::vector<SignPattern> enumerate_sign_patterns(FlatType type) {
  const int m = flat_m(type);
  std::vector<SignPattern> out;
  for (unsigned mask = 0; mask < (1u << (2 * m)); ++mask) {
    SignPattern p;
    for (int k = 0; k < m; ++k) p.lhs.push_back((mask >> (2 * m - 1 - k)) & 1u ? -1 : 1);
    for (int k = 0; k < m; ++k) p.rhs.push_back((mask >> (m - 1 - k)) & 1u ? -1 : 1);
    if (pattern_holds(type, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rvs
