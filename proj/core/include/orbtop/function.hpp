#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orbtop/gcf.hpp"
#include "orbtop/numbers.hpp"

namespace orbtop {

namespace detail {
class FnImpl;
}

// Uniform, immutable access to a self-map of the positive integers: a
// validated GCF, the successor builtin, a hat-wrapped function, or a finite
// table override used to prescribe test dynamics. Evaluation is pure and
// safe to share across threads.
class FunctionHandle {
 public:
  FunctionHandle() = default;

  static FunctionHandle from_gcf(Gcf g);  // validates; throws on REJECT
  static FunctionHandle successor();
  static FunctionHandle collatz();
  // Overrides base on the keys of `table`; keys and values must be >= 1.
  static FunctionHandle table_override(FunctionHandle base,
                                       std::map<Integer, Integer> table,
                                       const std::string& name = "");

  bool valid() const { return impl_ != nullptr; }
  const std::string& name() const;

  Integer operator()(const Integer& x) const;
  // out must not alias x.
  void eval_into(const Integer& x, Integer& out) const;

  // Finite preimage of y under this function. Throws InfinitePreimageRisk
  // when it cannot be bounded (constant branch hitting y).
  std::vector<Integer> preimage(const Integer& y) const;

  // The underlying GCF, when this handle wraps one directly.
  const Gcf* as_gcf() const;

  // Used by the transform module to build hat handles.
  explicit FunctionHandle(std::shared_ptr<const detail::FnImpl> impl)
      : impl_(std::move(impl)) {}
  const std::shared_ptr<const detail::FnImpl>& impl() const { return impl_; }

 private:
  std::shared_ptr<const detail::FnImpl> impl_;
};

namespace detail {
class FnImpl {
 public:
  virtual ~FnImpl() = default;
  virtual void eval_into(const Integer& x, Integer& out) const = 0;
  virtual std::vector<Integer> preimage(const Integer& y) const = 0;
  virtual const std::string& name() const = 0;
  virtual const Gcf* as_gcf() const { return nullptr; }
};
}  // namespace detail

}  // namespace orbtop
