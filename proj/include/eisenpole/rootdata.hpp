#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eisenpole/rational.hpp"

namespace eisenpole {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "A".."G" series letter plus rank, e.g. E7, F4, A1.
struct TypeLabel {
  char series = 'A';
  int rank = 1;

  std::string str() const { return std::string(1, series) + std::to_string(rank); }
  static std::optional<TypeLabel> parse(const std::string& s);
  bool operator==(const TypeLabel& o) const { return series == o.series && rank == o.rank; }
};

// Integer coordinate vectors in the simple-root / simple-coroot basis.
using RootVec = std::vector<long>;
using CorootVec = std::vector<long>;
// Integer weights in the fundamental-weight basis (Weyl-stable lattice).
using IWeight = std::vector<long>;
// Word in the simple reflections, 0-based letters; acts right-to-left
// (word.back() is applied first). The empty word is the identity.
using WeylWord = std::vector<int>;

std::string word_str(const WeylWord& w);  // "w1w2w3", "e" for identity

// Root datum of a split simple group of rank <= 8, with the simple roots
// numbered as in the tables this library reproduces (E-series branch node
// is 2, chain 1,3,4,...; F4 double edge between 2 and 3; G2 node 1 short).
class RootDatum {
 public:
  static RootDatum build(const TypeLabel& type);
  static RootDatum build(const std::string& type_label);

  const TypeLabel& type() const { return type_; }
  int rank() const { return n_; }
  // cartan(i,j) = <alpha_j, alpha_i^vee>; column j is alpha_j in the
  // fundamental-weight basis.
  long cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<RootVec>& positive_roots() const { return roots_; }
  const std::vector<CorootVec>& positive_coroots() const { return coroots_; }
  int num_positive() const { return static_cast<int>(roots_.size()); }

  Weight zero_weight() const { return Weight(n_, Rat(0)); }
  Weight rho() const { return Weight(n_, Rat(1)); }
  Weight fundamental_weight(int i) const;
  Weight simple_root_as_weight(int j) const;
  Weight root_to_weight(const RootVec& v) const;
  std::vector<Rat> weight_to_root(const Weight& w) const;  // inverse Cartan

  // <lambda, alpha^vee> for lambda in the fundamental-weight basis.
  Rat pair(const Weight& lambda, const CorootVec& cv) const;
  long pair(const IWeight& lambda, const CorootVec& cv) const;

  Weight reflect(int i, const Weight& lambda) const;
  IWeight reflect(int i, const IWeight& lambda) const;
  RootVec reflect_root(int i, const RootVec& v) const;
  CorootVec reflect_coroot(int i, const CorootVec& v) const;

  Weight apply(const WeylWord& w, const Weight& lambda) const;
  IWeight apply(const WeylWord& w, const IWeight& lambda) const;
  RootVec apply_root(const WeylWord& w, const RootVec& v) const;

  // Lexicographically least reduced word of the same group element.
  WeylWord canonical(const WeylWord& w) const;
  WeylWord compose(const WeylWord& a, const WeylWord& b) const;  // a*b
  WeylWord inverse(const WeylWord& a) const;
  int length(const WeylWord& w) const;
  bool equal_elements(const WeylWord& a, const WeylWord& b) const;
  // Indices (into positive_roots()) of the inversion set {a>0 : w a<0}.
  std::vector<int> inversions(const WeylWord& w) const;

  // Minimal-length representatives of W/W_I, I the Levi subset of simple
  // roots. Sorted by (length, word). levi_of(r) gives I for the maximal
  // parabolic P_r (omit node r).
  std::vector<WeylWord> coset_representatives(const std::vector<int>& levi) const;
  std::vector<int> levi_of(int omitted) const;

  WeylWord longest_element(const std::vector<int>& subset) const;
  // Shortest representative of the longest element of W_P / W_R, R <= P.
  WeylWord shortest_rep_of_longest(const std::vector<int>& P, const std::vector<int>& R) const;

  // (dominant orbit point, shortest w with w(lambda) dominant).
  std::pair<Weight, WeylWord> dominant_representative(const Weight& lambda) const;

  // |W_I| via the classification of the sub-diagram.
  unsigned long weyl_order(const std::vector<int>& subset) const;
  unsigned long weyl_order() const;

  std::string to_json() const;  // versioned document (cartan, roots, coroots)

  bool minus_one_in_weyl() const;  // -1 in W(G)

 private:
  RootDatum() = default;
  void generate_roots();

  TypeLabel type_;
  int n_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<RootVec> roots_;
  std::vector<CorootVec> coroots_;
  std::map<RootVec, int> root_index_;
};

}  // namespace eisenpole
