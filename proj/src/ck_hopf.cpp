#include "forestcalc/ck_hopf.hpp"

#include <map>
#include <mutex>
#include <string>

#include "forestcalc/errors.hpp"

namespace forestcalc {

namespace {

TensorSum tree_coproduct_uncached(const RootedTree& t) {
  Forest whole(t);
  FlatForest flat = flatten(whole);
  const std::uint64_t n = flat.size();
  const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  TensorSum out;
  for (std::uint64_t trunk = 0; trunk <= all; ++trunk) {
    if (!is_downward_closed(flat, trunk)) continue;
    out.add({induced_subforest(flat, all & ~trunk), induced_subforest(flat, trunk)}, Rational(1));
  }
  return out;
}

const TensorSum& tree_coproduct(const RootedTree& t) {
  static std::mutex mutex;
  static std::map<std::string, TensorSum> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(t.str());
  if (it == cache.end()) it = cache.emplace(t.str(), tree_coproduct_uncached(t)).first;
  return it->second;
}

}  // namespace

TensorSum coproduct(const Forest& u) {
  TensorSum out({Forest{}, Forest{}});
  for (const auto& t : u.trees()) out = multiply(out, tree_coproduct(t));
  return out;
}

TensorSum coproduct(const ForestSum& x) {
  TensorSum out;
  for (const auto& [f, c] : x) out += c * coproduct(f);
  return out;
}

TensorSum reduced_coproduct(const Forest& u) {
  if (u.empty()) throw PreconditionError("reduced coproduct is defined on the augmentation ideal only");
  TensorSum out = coproduct(u);
  out.add({u, Forest{}}, Rational(-1));
  out.add({Forest{}, u}, Rational(-1));
  return out;
}

MultiTensorSum reduced_coproduct(const Forest& u, int iterations) {
  if (u.empty()) throw PreconditionError("reduced coproduct is defined on the augmentation ideal only");
  if (iterations < 1) throw PreconditionError("iteration count must be positive");
  MultiTensorSum current(std::vector<Forest>{u});
  for (int k = 0; k < iterations; ++k) {
    MultiTensorSum next;
    for (const auto& [key, c] : current) {
      for (const auto& [pair, d] : reduced_coproduct(key.back())) {
        std::vector<Forest> k2(key.begin(), key.end() - 1);
        k2.push_back(pair.first);
        k2.push_back(pair.second);
        next.add(k2, c * d);
      }
    }
    current = std::move(next);
  }
  return current;
}

namespace {

class AntipodeSolver {
 public:
  explicit AntipodeSolver(AntipodeMethod method) : method_(method) {}

  const ForestSum& operator()(const Forest& u) {
    if (auto it = memo_.find(u); it != memo_.end()) return it->second;
    ForestSum value = compute(u);
    return memo_.emplace(u, std::move(value)).first->second;
  }

 private:
  ForestSum compute(const Forest& u) {
    if (u.empty()) return unit_sum();
    switch (method_) {
      case AntipodeMethod::left_recursion: {
        ForestSum s = -ForestSum(u);
        for (const auto& [k, c] : reduced_coproduct(u)) s -= c * multiply((*this)(k.first), ForestSum(k.second));
        return s;
      }
      case AntipodeMethod::right_recursion: {
        ForestSum s = -ForestSum(u);
        for (const auto& [k, c] : reduced_coproduct(u)) s -= c * multiply(ForestSum(k.first), (*this)(k.second));
        return s;
      }
      case AntipodeMethod::geometric: {
        // (u eps - I)^{*k}(x) = (-1)^k m_{k-1} reduced_coproduct^{k-1}(x) on the augmentation ideal.
        ForestSum s = -ForestSum(u);
        const int n = static_cast<int>(u.vertex_count());
        for (int k = 2; k <= n; ++k) {
          Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
          for (const auto& [key, c] : reduced_coproduct(u, k - 1)) {
            Forest prod;
            for (const auto& f : key) prod = prod * f;
            s.add(prod, sign * c);
          }
        }
        return s;
      }
    }
    throw PreconditionError("unknown antipode method");
  }

  AntipodeMethod method_;
  std::map<Forest, ForestSum> memo_;
};

}  // namespace

ForestSum antipode(const Forest& u, AntipodeMethod method) {
  AntipodeSolver solver(method);
  return solver(u);
}

ForestSum antipode(const ForestSum& x, AntipodeMethod method) {
  AntipodeSolver solver(method);
  ForestSum out;
  for (const auto& [f, c] : x) out += c * solver(f);
  return out;
}

Rational counit(const ForestSum& x) { return x.coefficient(Forest{}); }

ForestSum hopf_convolution_check(const Forest& u, bool antipode_on_left, AntipodeMethod method) {
  AntipodeSolver solver(method);
  ForestSum out;
  for (const auto& [k, c] : coproduct(u)) {
    if (antipode_on_left) {
      out += c * multiply(solver(k.first), ForestSum(k.second));
    } else {
      out += c * multiply(ForestSum(k.first), solver(k.second));
    }
  }
  return out;
}

MultiTensorSum apply_coproduct_to_slot(const MultiTensorSum& x, std::size_t slot) {
  MultiTensorSum out;
  for (const auto& [key, c] : x) {
    for (const auto& [pair, d] : coproduct(key.at(slot))) {
      std::vector<Forest> k2;
      k2.reserve(key.size() + 1);
      k2.insert(k2.end(), key.begin(), key.begin() + static_cast<long>(slot));
      k2.push_back(pair.first);
      k2.push_back(pair.second);
      k2.insert(k2.end(), key.begin() + static_cast<long>(slot) + 1, key.end());
      out.add(k2, c * d);
    }
  }
  return out;
}

MultiTensorSum as_multi(const TensorSum& x) {
  MultiTensorSum out;
  for (const auto& [k, c] : x) out.add({k.first, k.second}, c);
  return out;
}

}  // namespace forestcalc
