#pragma once
#include "vn/cuntz.hpp"
#include "vn/tables.hpp"
#include "vn/words.hpp"

namespace vn {

// The alphabet {1..m} with m = k(n-1)+1 embeds into words over {1..n}:
// letter 1 goes to 1^k, the others fill the maximal code
// {1^k} u {1^(k-i).j : 1 <= i <= k, 2 <= j <= n} in order.
int source_base(int n, int k);
Word gamma(int y, int n, int k);

// Morphism on words: concatenate gamma letterwise. Injective, prefix- and
// order-preserving, which is what makes the table embedding work.
Word f_morphism(const Word& u, int n, int k);

// S_u S^*_v over m letters to S_f(u) S^*_f(v) over n letters.
CuntzSum iota_monomial(const CuntzMonomial& t, int n, int k);
CuntzSum iota_sum(const CuntzSum& s, int n, int k);

// Injective group homomorphism from tables over m letters to tables over n
// letters; preserves the F and T classes.
Table embed_table(const Table& g, int n, int k);

}  // namespace vn
