#pragma once

// Multiplicative formulas as word constraints. Every tree of 𝕋⁺ factors
// uniquely into ⋈-prime trees; giving each prime a binary code and joining
// codes with the delimiter 2 turns ⋈ into concatenation, t ⋈ τ into a suffix
// successor and τ ⋈ t into a prefix successor.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeshare/formula.hpp"
#include "treeshare/string_formula.hpp"

namespace treeshare {

// ── factorization ──────────────────────────────────────────────────────────

// σ with σ ⋈ ρ = τ, if any. Throws DomainError unless τ, ρ ∈ 𝕋⁺.
std::optional<TreeShare> divide_right(const TreeShare& tau, const TreeShare& rho);

// No ρ ∈ 𝕋⁺ other than τ divides τ on the right with a quotient in 𝕋⁺.
bool is_prime(const TreeShare& tau);

// Unique prime sequence whose ⋈-product is τ.
using Factorization = std::vector<TreeShare>;
Factorization factorize(const TreeShare& tau);

TreeShare product(const Factorization& factors);

// ── encoding ───────────────────────────────────────────────────────────────

// Injective map from prime trees to binary codes, assigned in shortlex order
// (ε, 0, 1, 00, ...) to primes sorted by size and then by printed form.
class EncodingTable {
 public:
  EncodingTable() = default;
  explicit EncodingTable(std::vector<TreeShare> primes);

  const std::vector<TreeShare>& primes() const noexcept { return primes_; }
  std::optional<std::string> code(const TreeShare& prime) const;
  std::optional<TreeShare> prime(const std::string& code) const;
  std::size_t size() const noexcept { return primes_.size(); }

  std::string str() const;

 private:
  std::vector<TreeShare> primes_;
  std::map<std::string, std::string> code_of_;  // keyed by printed prime
  std::map<std::string, TreeShare> prime_of_;
};

// n-th binary word in shortlex order: 0 ↦ ε, 1 ↦ 0, 2 ↦ 1, 3 ↦ 00, ...
std::string shortlex_code(std::size_t n);

EncodingTable build_encoding(const FormulaPtr& f);
EncodingTable build_encoding(const std::vector<TreeShare>& trees);

// Î(τ): prime codes joined by 2. Throws EncodingGap for a missing prime and
// DomainError on • or ∘.
std::string encode_tree(const TreeShare& tau, const EncodingTable& table);
// Inverse of encode_tree; throws UnknownPrime for codes absent from table.
TreeShare decode_string(const std::string& word, const EncodingTable& table);

// ── formula translation ────────────────────────────────────────────────────

// Case-splits each quantified variable of a closed MULT formula over ∘, •
// and 𝕋⁺, simplifies with the unit and zero laws of ⋈ and folds ground
// atoms. The remaining quantifiers range over 𝕋⁺ and no • or ∘ constant is
// left. Throws FragmentError outside MULT and DomainError on free variables.
FormulaPtr strip_trivial(const FormulaPtr& f);

// Constants τ ↦ Î(τ), t ⋈ τ ↦ S_{2Î(τ)}(t), τ ⋈ t ↦ P_{Î(τ)2}(t). Every
// quantifier must range over 𝕋⁺ (DomainError otherwise), as must every
// constant; EncodingGap when a prime has no code.
words::FormulaPtr translate(const FormulaPtr& f, const EncodingTable& table);

// Prime tree for a binary code: ε ↦ (* o), a0…am ↦ (* k(a0)⋈…⋈k(am)) with
// k(0) = (* o) and k(1) = (o *).
TreeShare code_to_prime(const std::string& code);
// Tree for a ternary word, reading each 2-delimited block with code_to_prime.
TreeShare word_to_tree(const std::string& word);

// Maps a word formula back to a MULT formula over 𝕋⁺ using code_to_prime.
// S_w needs w to start with 2 and P_w to end with 2 (UnsupportedSymbol
// otherwise).
FormulaPtr reverse_translate(const words::FormulaPtr& g);

// Rewrites P_w / S_w into single-letter successors: P_{a1…an}(t) becomes
// P_{a1}(…P_{an}(t)) and S_{a1…an}(t) becomes S_{an}(…S_{a1}(t)).
words::FormulaPtr expand_successors(const words::FormulaPtr& g);
words::TermPtr expand_successors(const words::TermPtr& t);

// SMT-LIB 2 script over the string theory. Variables range over {0,1,2}*.
// A leading universal block is negated (unsat means valid); otherwise the
// sentence is asserted as is (sat means true). The intended reading is
// stated in the header comment.
std::string emit_smtlib(const words::FormulaPtr& g);

}  // namespace treeshare
