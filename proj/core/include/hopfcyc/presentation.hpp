#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/triples.hpp"

namespace hopfcyc {

/// A word over the generators, as generator indices.  The empty word is 1.
using Word = std::vector<int>;
/// Linear combination of words; no zero coefficients.
using WordCombination = std::map<Word, Scalar>;
/// Element of the tensor square, legs as words.
using TensorCombination = std::map<std::pair<Word, Word>, Scalar>;

struct RewriteRule {
  Word lhs;
  WordCombination rhs;
  int line = 0;
};

/// Generators, oriented rewrite rules and coalgebra data on generators.
/// Words are ordered by total weight, then lexicographically by generator
/// declaration order.
struct Presentation {
  Field field = Field::rational();
  std::vector<std::string> generators;
  std::vector<int> weights;
  std::vector<RewriteRule> rules;
  std::vector<TensorCombination> coproduct;
  std::vector<Scalar> counit;
  std::vector<WordCombination> antipode;
  std::vector<WordCombination> antipode_inv;  // empty when not supplied

  int num_generators() const { return static_cast<int>(generators.size()); }
  int generator(const std::string& name) const;  // -1 when absent
  int weight(const Word& w) const;
  bool less(const Word& a, const Word& b) const;
  std::string word_string(const Word& w) const;
  std::string to_string(const WordCombination& c) const;
  std::string to_string(const TensorCombination& c) const;
  /// Normalized text that parses back to the same presentation.
  std::string to_text() const;
};

/// Throws ParseError with line/column on syntax errors, unknown symbols and
/// rules whose left side is not larger than every monomial on the right.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

WordCombination single(const Word& w, const Scalar& c);
/// Parses a word combination such as "y*x - q*u*v" against p's generators.
WordCombination parse_combination(const Presentation& p, const std::string& text);

constexpr long long kDefaultSteps = 1000000;

/// Rewrites until no left side occurs.  Throws BudgetExceeded after step_budget rewrites.
WordCombination normal_form(const Presentation& p, const WordCombination& w, long long step_budget = kDefaultSteps);
WordCombination multiply(const Presentation& p, const WordCombination& a, const WordCombination& b,
                         long long step_budget = kDefaultSteps);

/// Delta(w) extended multiplicatively, both legs normalized.  Requires |w| <= degree_bound.
TensorCombination coproduct_expand(const Presentation& p, const Word& w, int degree_bound,
                                   long long step_budget = kDefaultSteps);
TensorCombination coproduct_of(const Presentation& p, const WordCombination& c, long long step_budget = kDefaultSteps);
Scalar counit_of(const Presentation& p, const WordCombination& c);
/// S (or S^-1) extended antimultiplicatively, normalized.
WordCombination antipode_of(const Presentation& p, const WordCombination& c, bool inverse = false,
                            long long step_budget = kDefaultSteps);

/// Irreducible words of length <= max_length, in increasing order.
std::vector<Word> normal_monomials(const Presentation& p, int max_length);

/// Structure constants on the normal-form basis, recertified.  Throws
/// NotFiniteDimensional when the basis passes max_dim.
HopfAlgebra compile(const Presentation& p, int max_dim = 512);

/// Hopf axioms on all normal monomials of length <= degree_bound: counit,
/// coassociativity, multiplicativity of Delta and epsilon, antipode and
/// S S^-1 = S^-1 S = id.
AxiomReport check_bounded(const Presentation& p, int degree_bound, std::vector<std::string>* witnesses = nullptr);

/// Overlaps of left sides with length <= max_degree rewrite to the same normal form.
bool critical_pairs_resolve(const Presentation& p, int max_degree, std::vector<std::string>* failures = nullptr);

/// A finite-dimensional module given by the action of each generator.
struct PresentedModule {
  IndexedSpace space;
  std::vector<SparseMatrix> generator_action;
  int dim() const { return space.dim(); }
};
SparseMatrix act(const Presentation& p, const PresentedModule& m, const WordCombination& c);
/// Every rewrite rule holds as a matrix identity on M.
AxiomReport check_presented_module(const Presentation& p, const PresentedModule& m);

/// sigma m = m and S^2(m (x) h) = m (x) h for every basis m and every normal
/// monomial h of length <= degree_bound.
MatchedPairCertificate check_matched_pair_bounded(const Presentation& p, const PresentedModule& m,
                                                  const WordCombination& sigma, int degree_bound);

}  // namespace hopfcyc
