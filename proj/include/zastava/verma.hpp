#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zastava/lie.hpp"
#include "zastava/linear_algebra.hpp"

namespace zastava {

/// Letters j_1..j_k, standing for e_{j_1} ... e_{j_k} v.
using Word = std::vector<int>;

Content word_content(const Word& w, std::size_t rank);
/// All words of the given content, in lexicographic order.
std::vector<Word> words_of_content(const Content& theta);
/// Number of distinct words of the given content (a multinomial coefficient).
BigInt word_count(const Content& theta);
std::string word_to_string(const Word& w);

/// Lowest weight lambda(h_i) of each simple coroot, plus the loop parameter hbar, all in one ring.
struct LowestWeight {
  std::vector<RationalFunction> values;
  RationalFunction hbar;
};

/// Linear combination of words.
using WordCombination = std::vector<std::pair<Word, RationalFunction>>;

/// f_i applied to e_u v in M(lambda). `working` is the algebra whose Verma module is modelled.
WordCombination apply_lowering(const CartanDatum& working, std::size_t i, const Word& u, const LowestWeight& lambda);

/// Height limits above which weight spaces with more than one word are refused.
struct Limits {
  int finite_height = 8;
  int affine_height = 6;
};

/// Contravariant pairing on M(lambda) with lambda(h_i) = l_i kept as free symbols.
/// C is IntPolynomial for the symbolic pairing or BigRational for a numeric point.
template <class C>
class PairingEngine {
 public:
  PairingEngine(const CartanDatum& working, std::vector<C> lambda, C one);

  const CartanDatum& working() const noexcept { return working_; }
  /// f_i e_u v as a combination of words with coefficients in C.
  std::vector<std::pair<Word, C>> lower(std::size_t i, const Word& u) const;
  /// <e_u v, e_w v>; zero unless the contents agree.
  const C& pair(const Word& u, const Word& w);
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  CartanDatum working_;
  std::vector<C> lambda_;
  C one_;
  C zero_;
  std::unordered_map<std::string, C> memo_;
};

extern template class PairingEngine<IntPolynomial>;
extern template class PairingEngine<BigRational>;
extern template class PairingEngine<RationalFunction>;

struct WeightSpaceModel {
  Content theta;
  std::vector<Word> words;
  Matrix gram;
};

struct WhittakerComponent {
  Content theta;
  std::vector<Word> words;
  std::vector<RationalFunction> coefficients;
  RationalFunction norm;
};

/// Whittaker data over the ring of free symbols l_1..l_n: on the chosen words,
/// c = hbar^(-k) numerators / denominator and norm = hbar^(-2k) norm_factor, k = height.
struct GenericWhittaker {
  Content theta;
  std::vector<Word> words;
  std::vector<std::size_t> support;
  std::vector<IntPolynomial> numerators;
  IntPolynomial denominator;
  RationalFunction norm_factor;
};

/// Symbolic engine shared across weight spaces of one algebra.
class VermaModel {
 public:
  explicit VermaModel(const CartanDatum& working, Limits limits = {});

  const CartanDatum& working() const noexcept { return engine_.working(); }
  /// Ring of the symbols l_1..l_n standing for lambda(h_i).
  const RingPtr& symbol_ring() const noexcept { return ring_; }
  PairingEngine<IntPolynomial>& engine() noexcept { return engine_; }

  /// Throws ResourceError when theta is beyond the configured limits.
  void check_limits(const Content& theta) const;
  /// Gram matrix over the symbol ring.
  std::vector<std::vector<IntPolynomial>> generic_gram(const Content& theta);
  const GenericWhittaker& generic_whittaker(const Content& theta);

 private:
  Limits limits_;
  RingPtr ring_;
  PairingEngine<IntPolynomial> engine_;
  std::map<Content, GenericWhittaker> whittaker_;
};

/// Gram matrix of all words of content theta at the given lowest weight.
WeightSpaceModel gram_matrix(VermaModel& model, const Content& theta, const LowestWeight& lambda);

/// Whittaker component w_theta, characterised by <w_theta, e_u v> = hbar^(-height) for all words u.
/// Coefficients vanish outside a basis of the weight space.
WhittakerComponent whittaker_component(VermaModel& model, const Content& theta, const LowestWeight& lambda);
/// Only the norm <w_theta, w_theta>.
RationalFunction whittaker_norm(VermaModel& model, const Content& theta, const LowestWeight& lambda);

/// Checks f_i w_theta = (1/hbar) w_(theta - alpha_i) for all i by pairing against every word.
bool verify_whittaker(VermaModel& model, const Content& theta, const LowestWeight& lambda,
                      const std::map<Content, WhittakerComponent>& components);

/// Sign relating w_theta to the component of the vector with f_i w' = -(1/hbar) w'.
int dual_sign_component(const Content& theta);

}  // namespace zastava
