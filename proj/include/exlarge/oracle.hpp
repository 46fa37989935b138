#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "exlarge/finset.hpp"

namespace exlarge {

/// A pure membership predicate over the naturals. Implementations must answer
/// identically on repeated queries.
class OracleSet {
 public:
  virtual ~OracleSet() = default;
  virtual bool contains(Natural x) const = 0;
  virtual std::string describe() const = 0;
};

using Oracle = std::shared_ptr<const OracleSet>;

class ExplicitOracle final : public OracleSet {
 public:
  explicit ExplicitOracle(FinSet set) : set_(std::move(set)) {}
  bool contains(Natural x) const override { return set_.contains(x); }
  std::string describe() const override { return to_string(set_); }
  const FinSet& set() const noexcept { return set_; }

 private:
  FinSet set_;
};

inline Oracle explicit_oracle(FinSet s) { return std::make_shared<ExplicitOracle>(std::move(s)); }
inline Oracle empty_oracle() { return explicit_oracle(FinSet{}); }

/// A ⊕ B: A on the evens, B on the odds.
class JoinOracle final : public OracleSet {
 public:
  JoinOracle(Oracle a, Oracle b) : a_(std::move(a)), b_(std::move(b)) {}
  bool contains(Natural x) const override { return (x % 2 == 0) ? a_->contains(x / 2) : b_->contains(x / 2); }
  std::string describe() const override { return "join(" + a_->describe() + "," + b_->describe() + ")"; }

 private:
  Oracle a_, b_;
};

inline Oracle join(Oracle a, Oracle b) { return std::make_shared<JoinOracle>(std::move(a), std::move(b)); }

class PredicateOracle final : public OracleSet {
 public:
  PredicateOracle(std::function<bool(Natural)> pred, std::string name) : pred_(std::move(pred)), name_(std::move(name)) {}
  bool contains(Natural x) const override { return pred_(x); }
  std::string describe() const override { return name_; }

 private:
  std::function<bool(Natural)> pred_;
  std::string name_;
};

/// Membership cache shared by the oracles whose answers are expensive to compute.
class MembershipMemo {
 public:
  template <class Compute>
  bool get(Natural x, Compute&& compute) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    }
    bool v = compute();
    std::lock_guard lock(mu_);
    memo_.emplace(x, v);
    return v;
  }

 private:
  mutable std::mutex mu_;
  mutable std::unordered_map<Natural, bool> memo_;
};

/// {x < bound : x in X}.
inline FinSet restrict_below(const OracleSet& x, Natural bound) {
  std::vector<Natural> v;
  for (Natural i = 0; i < bound; ++i)
    if (x.contains(i)) v.push_back(i);
  return FinSet(std::move(v));
}

}  // namespace exlarge
