#include <algorithm>
#include <set>

#include "treeshare/error.hpp"
#include "treeshare/word_bridge.hpp"

namespace treeshare {

namespace {

void require_nontrivial(const TreeShare& t, const char* what) {
  if (t.is_leaf()) throw DomainError(std::string(what) + ": " + t.str() + " is not in 𝕋⁺");
}

// Quotient candidate: each occurrence of rho becomes •.
std::optional<TreeShare> quotient(const TreeShare& t, const TreeShare& rho) {
  if (t == rho) return TreeShare::black();
  if (t.is_white()) return t;
  if (t.is_black()) return std::nullopt;
  auto l = quotient(t.left(), rho);
  if (!l) return std::nullopt;
  auto r = quotient(t.right(), rho);
  if (!r) return std::nullopt;
  return TreeShare::node(*l, *r);
}

void collect_subtrees(const TreeShare& t, std::set<std::string>& seen, std::vector<TreeShare>& out) {
  if (t.is_leaf()) return;
  if (seen.insert(t.str()).second) out.push_back(t);
  collect_subtrees(t.left(), seen, out);
  collect_subtrees(t.right(), seen, out);
}

// Proper non-leaf subtrees, smallest first.
std::vector<TreeShare> divisor_candidates(const TreeShare& tau) {
  std::set<std::string> seen{tau.str()};
  std::vector<TreeShare> out;
  collect_subtrees(tau.left(), seen, out);
  collect_subtrees(tau.right(), seen, out);
  std::sort(out.begin(), out.end(), [](const TreeShare& a, const TreeShare& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
  });
  return out;
}

// Smallest right divisor of tau other than tau, with its quotient.
std::optional<std::pair<TreeShare, TreeShare>> smallest_divisor(const TreeShare& tau) {
  for (const TreeShare& rho : divisor_candidates(tau)) {
    auto sigma = divide_right(tau, rho);
    if (sigma && sigma->is_nontrivial()) return std::make_pair(rho, *sigma);
  }
  return std::nullopt;
}

}  // namespace

std::optional<TreeShare> divide_right(const TreeShare& tau, const TreeShare& rho) {
  require_nontrivial(tau, "divide_right");
  require_nontrivial(rho, "divide_right");
  auto sigma = quotient(tau, rho);
  if (!sigma || !(bowtie(*sigma, rho) == tau)) return std::nullopt;
  return sigma;
}

bool is_prime(const TreeShare& tau) {
  require_nontrivial(tau, "is_prime");
  return !smallest_divisor(tau).has_value();
}

Factorization factorize(const TreeShare& tau) {
  require_nontrivial(tau, "factorize");
  Factorization reversed;
  TreeShare rest = tau;
  while (auto split = smallest_divisor(rest)) {
    reversed.push_back(split->first);
    rest = split->second;
  }
  reversed.push_back(rest);
  Factorization out(reversed.rbegin(), reversed.rend());
  if (!(product(out) == tau)) throw Error("factorize: product check failed for " + tau.str());
  return out;
}

TreeShare product(const Factorization& factors) {
  TreeShare out = TreeShare::black();
  for (const TreeShare& f : factors) out = bowtie(out, f);
  return out;
}

// ── encoding ───────────────────────────────────────────────────────────────

std::string shortlex_code(std::size_t n) {
  // Words of length L occupy indices 2^L - 1 ... 2^(L+1) - 2.
  std::size_t length = 0;
  while (n >= (std::size_t{2} << length) - 1) ++length;
  std::size_t offset = n - ((std::size_t{1} << length) - 1);
  std::string out(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if (offset >> (length - 1 - i) & 1) out[i] = '1';
  }
  return out;
}

EncodingTable::EncodingTable(std::vector<TreeShare> primes) {
  std::sort(primes.begin(), primes.end(), [](const TreeShare& a, const TreeShare& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
  });
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  primes_ = std::move(primes);
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    std::string c = shortlex_code(i);
    code_of_[primes_[i].str()] = c;
    prime_of_.emplace(c, primes_[i]);
  }
}

std::optional<std::string> EncodingTable::code(const TreeShare& prime) const {
  auto it = code_of_.find(prime.str());
  if (it == code_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<TreeShare> EncodingTable::prime(const std::string& c) const {
  auto it = prime_of_.find(c);
  if (it == prime_of_.end()) return std::nullopt;
  return it->second;
}

std::string EncodingTable::str() const {
  std::string out;
  for (const TreeShare& p : primes_) {
    std::string c = *code(p);
    out += "I(" + p.str() + ") = " + (c.empty() ? std::string("ε") : c) + "\n";
  }
  return out;
}

EncodingTable build_encoding(const std::vector<TreeShare>& trees) {
  std::vector<TreeShare> primes;
  for (const TreeShare& t : trees) {
    if (t.is_leaf()) continue;
    for (const TreeShare& p : factorize(t)) primes.push_back(p);
  }
  return EncodingTable(std::move(primes));
}

EncodingTable build_encoding(const FormulaPtr& f) { return build_encoding(constants(f)); }

std::string encode_tree(const TreeShare& tau, const EncodingTable& table) {
  require_nontrivial(tau, "encode_tree");
  std::string out;
  bool first = true;
  for (const TreeShare& p : factorize(tau)) {
    auto c = table.code(p);
    if (!c) throw EncodingGap("no code for prime " + p.str());
    if (!first) out += '2';
    out += *c;
    first = false;
  }
  return out;
}

namespace {

std::vector<std::string> blocks(const std::string& word) {
  std::vector<std::string> out{""};
  for (char c : word) {
    if (c == '2') out.emplace_back();
    else out.back() += c;
  }
  return out;
}

}  // namespace

TreeShare decode_string(const std::string& word, const EncodingTable& table) {
  TreeShare out = TreeShare::black();
  for (const std::string& code : blocks(word)) {
    if (code.find_first_not_of("01") != std::string::npos) {
      throw UnknownPrime("code '" + code + "' is not binary");
    }
    auto p = table.prime(code);
    if (!p) throw UnknownPrime("no prime with code '" + code + "'");
    out = bowtie(out, *p);
  }
  return out;
}

TreeShare code_to_prime(const std::string& code) {
  if (code.empty()) return left_half();
  TreeShare chain = TreeShare::black();
  for (char c : code) {
    if (c != '0' && c != '1') throw UnknownPrime("code '" + code + "' is not binary");
    chain = bowtie(chain, c == '0' ? left_half() : right_half());
  }
  return TreeShare::node(TreeShare::black(), chain);
}

TreeShare word_to_tree(const std::string& word) {
  TreeShare out = TreeShare::black();
  for (const std::string& code : blocks(word)) out = bowtie(out, code_to_prime(code));
  return out;
}

}  // namespace treeshare
