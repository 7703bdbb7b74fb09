#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vn/rational.hpp"
#include "vn/tables.hpp"
#include "vn/words.hpp"

namespace vn {

// coeff * S_a S_b^* with words a, b over {1..n}; either word may be empty.
struct CuntzMonomial {
  Rational coeff;
  Word a;
  Word b;
  bool operator==(const CuntzMonomial&) const = default;
};

// Finite sum of monomials, always stored in canonical form: like terms
// combined, zero terms dropped, complete sibling families S_{u.j} S^*_{v.j}
// with one shared coefficient collapsed to S_u S^*_v, terms sorted by (a, b).
class CuntzSum {
 public:
  explicit CuntzSum(int base);
  static CuntzSum identity(int base);
  static CuntzSum monomial(int base, Rational coeff, Word a, Word b);
  static CuntzSum from_terms(int base, std::vector<CuntzMonomial> terms);

  // "c*S[a]S*[b] + ...", "1" for the identity, "0" for the zero sum.
  static CuntzSum parse(std::string_view text, int base);
  std::string str() const;

  int base() const { return base_; }
  const std::vector<CuntzMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const CuntzSum&) const = default;

 private:
  int base_ = 0;
  std::vector<CuntzMonomial> terms_;
};

// Product of two monomials under S_i^* S_j = delta_ij; nullopt when it
// vanishes. Bases must match the sum the monomials came from.
std::optional<CuntzMonomial> multiply(const CuntzMonomial& m1, const CuntzMonomial& m2);

CuntzSum multiply_sums(const CuntzSum& s1, const CuntzSum& s2);
CuntzSum add(const CuntzSum& s1, const CuntzSum& s2);
CuntzSum scale(const Rational& c, const CuntzSum& s);
CuntzSum adjoint(const CuntzSum& s);

// Re-canonicalizes; the identity map on anything built through CuntzSum.
CuntzSum normalize(const CuntzSum& s);

bool is_identity(const CuntzSum& s);

// The sum over the rows of g of S_{a_i} S^*_{b_i}: a unitary whose products
// mirror table composition.
CuntzSum psi(const Table& g);

}  // namespace vn
