#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rvs {

/// sigma_gen^sign with gen in {1, 2} and sign in {+1, -1}.
struct BraidLetter {
  int gen;
  int sign;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

using BraidWord = std::vector<BraidLetter>;

/// Rank-2 parabolic types: Z^2 (m = 2) and B_3 (m = 3).
enum class FlatType { A1A1, A2 };

std::string to_string(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);
BraidWord inverse(const BraidWord& w);
void check_letters(const BraidWord& w);

/// Permutation braids of B_3: e, s1, s2, s1s2, s2s1, Delta.
enum class Simple : std::uint8_t { E, A, B, AB, BA, Delta };

struct GarsideNF {
  int infimum = 0;
  /// Left-weighted, each neither e nor Delta.
  std::vector<Simple> factors;

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

/// Left normal form Delta^infimum * x_1 ... x_k in B_3.
GarsideNF garside_nf(const BraidWord& w);
BraidWord to_word(const GarsideNF& nf);

std::pair<int, int> exponent_sums(const BraidWord& w);
bool equal_braid(FlatType type, const BraidWord& u, const BraidWord& v);

/// Integer Laurent polynomial in t, sparse and trimmed.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(std::int64_t coeff, int exp);
  static Laurent constant(std::int64_t c) { return monomial(c, 0); }

  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::string str() const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void add_term(int exp, std::int64_t coeff);
  std::map<int, std::int64_t> terms_;
};

struct LaurentMat {
  std::array<std::array<Laurent, 2>, 2> e;

  static LaurentMat identity();
  Laurent det() const;
  friend LaurentMat operator*(const LaurentMat& a, const LaurentMat& b);
  friend bool operator==(const LaurentMat&, const LaurentMat&) = default;
};

/// Reduced Burau image with s1 -> [[-t,1],[0,1]], s2 -> [[1,0],[t,-t]].
LaurentMat burau(const BraidWord& w);

/// An equality  x_1 x_2 (x_3) = y_1 y_2 (y_3)  between alternating words,
/// the left side starting with generator 1 and the right with generator 2.
struct SignPattern {
  std::vector<int> lhs;
  std::vector<int> rhs;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
};

int flat_m(FlatType type);
BraidWord alternating_word(int first_gen, const std::vector<int>& signs);
BraidWord lhs_word(const SignPattern& p);
BraidWord rhs_word(const SignPattern& p);
std::string to_string(const SignPattern& p);

bool pattern_holds(FlatType type, const SignPattern& p);

/// All 2^(2m) candidate equalities, filtered to those holding in the group.
std::vector<SignPattern> enumerate_sign_patterns(FlatType type);

}  // namespace rvs
