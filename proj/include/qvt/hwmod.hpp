#pragma once

#include "qvt/bilform.hpp"
#include "qvt/canbasis.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace qvt {

// L(lambda, eps) realised as 'f / (radical + sum_i 'f theta_i^{lambda_i+1}), with
// F_i acting by left multiplication and x standing for x xi_0.
struct HWData {
  Cartan cartan;
  std::vector<int> lambda;
  std::vector<RatFunc> eps;  // all 1 when left empty
  int depth_bound = 8;

  // Throws std::invalid_argument on a size mismatch, negative lambda or a zero eps_i.
  static HWData make(Cartan c, std::vector<int> lambda, std::vector<RatFunc> eps = {},
                     int depth_bound = 8);
};

struct ModuleVector {
  FreeElem rep;
  Degree depth;  // mu, the vector has weight lambda - mu
};

struct DepthExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

class WeightSpace {
 public:
  WeightSpace(const HWData& h, Degree mu);

  const Degree& depth() const { return mu_; }
  std::size_t dim() const { return basis_.size(); }
  // Pivot words; their images form a basis.
  const std::vector<Word>& basis_words() const { return basis_; }
  std::vector<ModuleVector> basis() const;
  // Spanning set of the kernel ideal at mu: w theta_i^{lambda_i+1}.
  const std::vector<FreeElem>& kernel_span() const { return kernel_; }

  // Coordinates of x (of degree mu, or zero) on basis_words().
  std::vector<RatFunc> coords(const FreeElem& x) const;
  bool is_zero(const FreeElem& x) const;
  bool in_kernel_ideal(const FreeElem& x) const;

 private:
  Cartan cartan_;
  Degree mu_;
  std::vector<FreeElem> kernel_;
  std::vector<Word> basis_;
  std::vector<std::size_t> basis_index_;  // position of each basis word in the stacked span
  std::unique_ptr<QuotientSpan> stacked_;
  std::unique_ptr<QuotientSpan> kernel_span_;
};

// Memoises weight spaces of one module.
class Module {
 public:
  explicit Module(HWData h) : h_(std::move(h)) {}

  const HWData& data() const { return h_; }
  // Throws DepthExceeded if tr(mu) > depth_bound.
  const WeightSpace& weight_space(const Degree& mu);
  // Dimensions at every mu with tr(mu) <= depth_bound, skipping zero entries;
  // stops after the first trace level where every weight space vanishes.
  std::map<Degree, std::size_t> dimensions();
  std::size_t total_dimension();

  bool equal(const ModuleVector& a, const ModuleVector& b);
  bool is_zero(const ModuleVector& a);
  std::vector<RatFunc> coords(const ModuleVector& a);

 private:
  HWData h_;
  std::map<Degree, std::unique_ptr<WeightSpace>> spaces_;
};

ModuleVector highest_vector(const HWData& h);
std::vector<ModuleVector> weight_space(const HWData& h, const Degree& mu);

// theta_i . rep; throws DepthExceeded beyond depth_bound.
ModuleVector act_F(const HWData& h, int i, const ModuleVector& m);
// Eigenvalue of K_i (or K_i') on any vector of depth m.depth.
RatFunc act_K(const HWData& h, int i, const ModuleVector& m, bool primed);
RatFunc k_scalar(const HWData& h, int i, const Degree& mu, bool primed);
// Sum over letters i of w: (K_i - K_i')/(v_i - v_i^{-1}) on the suffix, times w
// with that letter removed. E_i xi_0 = 0; the result has depth m.depth - i.
ModuleVector act_E(const HWData& h, int i, const ModuleVector& m);

// Images of canonical-family elements outside the kernel ideal, per weight.
// Rank one or A2 only (the families of canonical_family).
std::vector<ModuleVector> module_basis_from_cb(Module& mod);

}  // namespace qvt
