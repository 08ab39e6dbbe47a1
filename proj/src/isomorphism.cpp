#include "igt/isomorphism.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "igt/errors.hpp"

namespace igt {

namespace {

constexpr Element kUnmapped = static_cast<Element>(-1);

std::vector<std::uint32_t> centralizer_sizes(const FiniteGroup& g) {
  std::vector<std::uint32_t> out(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++out[x];
  return out;
}

// (element order, centraliser size) per element.
using Signature = std::pair<std::uint32_t, std::uint32_t>;

std::vector<Signature> signatures(const FiniteGroup& g) {
  auto cent = centralizer_sizes(g);
  std::vector<Signature> out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = {g.element_order(x), cent[x]};
  return out;
}

class Matcher {
 public:
  Matcher(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Signature>& sig_g,
          const std::vector<Signature>& sig_h)
      : g_(g), h_(h), gens_(g.generators().begin(), g.generators().end()) {
    for (Element x : gens_) {
      std::vector<Element> cands;
      for (Element y = 0; y < h.order(); ++y)
        if (sig_h[y] == sig_g[x]) cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
  }

  bool run() {
    images_.assign(gens_.size(), 0);
    return search(0);
  }

 private:
  bool search(std::size_t depth) {
    if (depth == gens_.size()) return true;
    for (Element y : candidates_[depth]) {
      images_[depth] = y;
      if (extend(depth + 1)) {
        if (search(depth + 1)) return true;
      }
    }
    return false;
  }

  // Extends x -> phi(x) over <gens_[0..count)> by breadth-first word expansion;
  // false on a conflict or a loss of injectivity.
  bool extend(std::size_t count) {
    forward_.assign(g_.order(), kUnmapped);
    backward_.assign(h_.order(), kUnmapped);
    forward_[0] = 0;
    backward_[0] = 0;
    std::vector<Element> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Element x = queue[i];
      for (std::size_t j = 0; j < count; ++j) {
        Element gx = g_.mul(gens_[j], x);
        Element hx = h_.mul(images_[j], forward_[x]);
        if (forward_[gx] != kUnmapped) {
          if (forward_[gx] != hx) return false;
          continue;
        }
        if (backward_[hx] != kUnmapped) return false;
        forward_[gx] = hx;
        backward_[hx] = gx;
        queue.push_back(gx);
      }
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> forward_, backward_;
};

}  // namespace

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::size_t max_order) {
  if (g.order() > max_order || h.order() > max_order)
    throw GuardExceeded("isomorphism test limited to order " + std::to_string(max_order));
  if (g.order() != h.order()) return false;

  auto sig_g = signatures(g);
  auto sig_h = signatures(h);
  auto sorted_g = sig_g, sorted_h = sig_h;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return false;
  if (is_abelian(g) != is_abelian(h)) return false;
  if (center(g).count() != center(h).count()) return false;
  if (derived_subgroup(g).count() != derived_subgroup(h).count()) return false;

  return Matcher(g, h, sig_g, sig_h).run();
}

}  // namespace igt
