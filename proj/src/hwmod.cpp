#include "qvt/hwmod.hpp"

#include <algorithm>

namespace qvt {

HWData HWData::make(Cartan c, std::vector<int> lambda, std::vector<RatFunc> eps, int depth_bound) {
  const auto n = static_cast<std::size_t>(c->rank());
  if (lambda.size() != n) throw std::invalid_argument("lambda has the wrong length");
  if (std::any_of(lambda.begin(), lambda.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("lambda must be nonnegative");
  if (eps.empty()) eps.assign(n, RatFunc(1));
  if (eps.size() != n) throw std::invalid_argument("eps has the wrong length");
  if (std::any_of(eps.begin(), eps.end(), [](const RatFunc& e) { return e.is_zero(); }))
    throw std::invalid_argument("eps_i must be nonzero");
  if (depth_bound < 0) throw std::invalid_argument("negative depth bound");
  return HWData{std::move(c), std::move(lambda), std::move(eps), depth_bound};
}

WeightSpace::WeightSpace(const HWData& h, Degree mu) : cartan_(h.cartan), mu_(std::move(mu)) {
  const auto n = static_cast<std::size_t>(cartan_->rank());
  if (mu_.size() != n || std::any_of(mu_.begin(), mu_.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("bad depth");
  for (std::size_t i = 0; i < n; ++i) {
    const int e = h.lambda[i] + 1;
    if (mu_[i] < e) continue;
    Degree rest = mu_;
    rest[i] -= e;
    const Word tail(static_cast<std::size_t>(e), static_cast<char>(i));
    for (const auto& w : words_of_degree(rest)) kernel_.push_back(FreeElem::word(cartan_, w + tail));
  }
  const auto words = words_of_degree(mu_);
  std::vector<FreeElem> stacked = kernel_;
  for (const auto& w : words) stacked.push_back(FreeElem::word(cartan_, w));
  stacked_ = std::make_unique<QuotientSpan>(cartan_, mu_, stacked);
  kernel_span_ = std::make_unique<QuotientSpan>(cartan_, mu_, kernel_);
  std::size_t kernel_pivots = 0;
  for (std::size_t k : stacked_->basis()) {
    if (k < kernel_.size()) {
      ++kernel_pivots;
    } else {
      basis_.push_back(words[k - kernel_.size()]);
      basis_index_.push_back(k);
    }
  }
  // Kernel rows come first, so their pivots span the kernel unless the
  // evaluation point was unlucky.
  if (kernel_pivots != kernel_span_->rank())
    throw std::logic_error("kernel pivots do not span the kernel ideal");
}

std::vector<ModuleVector> WeightSpace::basis() const {
  std::vector<ModuleVector> out;
  for (const auto& w : basis_) out.push_back({FreeElem::word(cartan_, w), mu_});
  return out;
}

std::vector<RatFunc> WeightSpace::coords(const FreeElem& x) const {
  std::vector<RatFunc> out(basis_.size());
  if (x.is_zero()) return out;
  auto c = stacked_->expand(x);
  if (!c) throw std::logic_error("words fail to span the weight space");
  for (std::size_t k = 0; k < basis_index_.size(); ++k) out[k] = (*c)[basis_index_[k]];
  return out;
}

bool WeightSpace::is_zero(const FreeElem& x) const {
  auto c = coords(x);
  return std::all_of(c.begin(), c.end(), [](const RatFunc& r) { return r.is_zero(); });
}

bool WeightSpace::in_kernel_ideal(const FreeElem& x) const { return kernel_span_->contains(x); }

const WeightSpace& Module::weight_space(const Degree& mu) {
  if (trace(mu) > h_.depth_bound) throw DepthExceeded("depth beyond the module's bound");
  auto it = spaces_.find(mu);
  if (it == spaces_.end()) it = spaces_.emplace(mu, std::make_unique<WeightSpace>(h_, mu)).first;
  return *it->second;
}

std::map<Degree, std::size_t> Module::dimensions() {
  std::map<Degree, std::size_t> out;
  for (int tr = 0; tr <= h_.depth_bound; ++tr) {
    bool any = false;
    for (const auto& mu : degrees_up_to_trace(h_.cartan->rank(), tr)) {
      if (trace(mu) != tr) continue;
      const std::size_t d = weight_space(mu).dim();
      if (d) out[mu] = d;
      any = any || d;
    }
    if (!any) break;
  }
  return out;
}

std::size_t Module::total_dimension() {
  std::size_t s = 0;
  for (const auto& [mu, d] : dimensions()) s += d;
  return s;
}

bool Module::is_zero(const ModuleVector& a) {
  return a.rep.is_zero() || weight_space(a.depth).is_zero(a.rep);
}

bool Module::equal(const ModuleVector& a, const ModuleVector& b) {
  if (a.rep.is_zero() || b.rep.is_zero()) return is_zero(a) && is_zero(b);
  return a.depth == b.depth && is_zero({a.rep - b.rep, a.depth});
}

std::vector<RatFunc> Module::coords(const ModuleVector& a) { return weight_space(a.depth).coords(a.rep); }

ModuleVector highest_vector(const HWData& h) { return {FreeElem::one(h.cartan), h.cartan->zero()}; }

std::vector<ModuleVector> weight_space(const HWData& h, const Degree& mu) {
  if (trace(mu) > h.depth_bound) throw DepthExceeded("depth beyond the module's bound");
  return WeightSpace(h, mu).basis();
}

ModuleVector act_F(const HWData& h, int i, const ModuleVector& m) {
  Degree d = m.depth + h.cartan->unit(i);
  if (trace(d) > h.depth_bound) throw DepthExceeded("F_i leaves the depth bound");
  return {FreeElem::gen(h.cartan, i) * m.rep, d};
}

RatFunc k_scalar(const HWData& h, int i, const Degree& mu, bool primed) {
  const CartanData& c = *h.cartan;
  const Degree ei = c.unit(i);
  const int s = primed ? -1 : 1;
  const int ve = s * (h.lambda[static_cast<std::size_t>(i)] - c.dot(ei, mu));
  const int te = c.angle(mu, ei) - c.angle(ei, mu);
  return h.eps[static_cast<std::size_t>(i)] * monomial(ve, te);
}

RatFunc act_K(const HWData& h, int i, const ModuleVector& m, bool primed) {
  return k_scalar(h, i, m.depth, primed);
}

ModuleVector act_E(const HWData& h, int i, const ModuleVector& m) {
  const Cartan& c = h.cartan;
  const auto ui = static_cast<std::size_t>(i);
  c->unit(i);
  if (m.depth[ui] == 0) return {FreeElem(c), m.depth};
  const int d = c->scale(i);
  const RatFunc denom = RatFunc(LPoly::monomial(1, d, 0) - LPoly::monomial(1, -d, 0));
  std::map<Degree, RatFunc> cache;
  auto scalar = [&](const Degree& mu) -> const RatFunc& {
    auto it = cache.find(mu);
    if (it == cache.end())
      it = cache.emplace(mu, (k_scalar(h, i, mu, false) - k_scalar(h, i, mu, true)) / denom).first;
    return it->second;
  };
  FreeElem out(c);
  for (const auto& [w, coeff] : m.rep.terms())
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != i) continue;
      const Degree suffix = word_degree(w.substr(p + 1), c->rank());
      out.add(w.substr(0, p) + w.substr(p + 1), coeff * scalar(suffix));
    }
  return {out, m.depth - c->unit(i)};
}

std::vector<ModuleVector> module_basis_from_cb(Module& mod) {
  const Cartan& c = mod.data().cartan;
  std::vector<ModuleVector> out;
  for (const auto& [mu, d] : mod.dimensions()) {
    const WeightSpace& ws = mod.weight_space(mu);
    for (const auto& b : canonical_family(c, mu))
      if (!ws.in_kernel_ideal(b.element)) out.push_back({b.element, mu});
  }
  return out;
}

}  // namespace qvt
