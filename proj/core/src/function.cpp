#include "orbtop/function.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <utility>

namespace orbtop {

namespace detail {

namespace {

class GcfImpl final : public FnImpl {
 public:
  explicit GcfImpl(Gcf g) : gcf_(std::move(g)) {
    branches_.reserve(gcf_.modulus);
    for (const GcfBranch& br : gcf_.branches) {
      Norm n;
      // g(x) = (alpha*x + beta) / delta with integer alpha, beta, delta.
      Integer da = denominator(br.a), db = denominator(br.b);
      Integer delta;
      mpz_lcm(delta.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
      n.alpha = numerator(br.a) * (delta / da);
      n.beta = numerator(br.b) * (delta / db);
      n.delta = delta;
      n.small = n.alpha.fits_slong_p() && n.beta.fits_slong_p() &&
                n.delta.fits_slong_p();
      if (n.small) {
        n.salpha = n.alpha.get_si();
        n.sbeta = n.beta.get_si();
        n.sdelta = n.delta.get_si();
      }
      branches_.push_back(std::move(n));
    }
  }

  void eval_into(const Integer& x, Integer& out) const override {
    unsigned long i = mpz_fdiv_ui(x.get_mpz_t(), gcf_.modulus);
    const Norm& n = branches_[i];
    if (n.small && mpz_fits_ulong_p(x.get_mpz_t())) {
      unsigned long ux = mpz_get_ui(x.get_mpz_t());
      __int128 t = static_cast<__int128>(n.salpha) * ux + n.sbeta;
      t /= n.sdelta;  // exact after validation
      if (t > 0 && t <= static_cast<__int128>(ULONG_MAX)) {
        mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(t));
        return;
      }
    }
    mpz_mul(out.get_mpz_t(), n.alpha.get_mpz_t(), x.get_mpz_t());
    mpz_add(out.get_mpz_t(), out.get_mpz_t(), n.beta.get_mpz_t());
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), n.delta.get_mpz_t());
  }

  std::vector<Integer> preimage(const Integer& y) const override {
    return orbtop::preimage(gcf_, y);
  }

  const std::string& name() const override { return gcf_.name; }
  const Gcf* as_gcf() const override { return &gcf_; }

 private:
  struct Norm {
    Integer alpha, beta, delta;
    bool small = false;
    long salpha = 0, sbeta = 0, sdelta = 1;
  };
  Gcf gcf_;
  std::vector<Norm> branches_;
};

class SuccessorImpl final : public FnImpl {
 public:
  void eval_into(const Integer& x, Integer& out) const override {
    mpz_add_ui(out.get_mpz_t(), x.get_mpz_t(), 1);
  }

  std::vector<Integer> preimage(const Integer& y) const override {
    if (y <= 1) return {};
    return {Integer(y - 1)};
  }

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "successor";
};

class TableImpl final : public FnImpl {
 public:
  TableImpl(std::shared_ptr<const FnImpl> base, std::map<Integer, Integer> table,
            std::string name)
      : base_(std::move(base)), table_(std::move(table)), name_(std::move(name)) {
    if (name_.empty()) name_ = base_->name() + "+table";
    for (const auto& [k, v] : table_)
      if (k < 1 || v < 1)
        throw std::invalid_argument("table override entries must be positive");
  }

  void eval_into(const Integer& x, Integer& out) const override {
    auto it = table_.find(x);
    if (it != table_.end()) {
      out = it->second;
      return;
    }
    base_->eval_into(x, out);
  }

  std::vector<Integer> preimage(const Integer& y) const override {
    std::vector<Integer> result;
    for (const auto& [k, v] : table_)
      if (v == y) result.push_back(k);
    for (const Integer& x : base_->preimage(y))
      if (!table_.count(x)) result.push_back(x);
    std::sort(result.begin(), result.end());
    return result;
  }

  const std::string& name() const override { return name_; }

 private:
  std::shared_ptr<const FnImpl> base_;
  std::map<Integer, Integer> table_;
  std::string name_;
};

}  // namespace

}  // namespace detail

FunctionHandle FunctionHandle::from_gcf(Gcf g) {
  ValidationReport rep = validate(g);
  if (!rep.accepted) throw ValidationFailure(std::move(rep));
  return FunctionHandle(std::make_shared<detail::GcfImpl>(std::move(g)));
}

FunctionHandle FunctionHandle::successor() {
  return FunctionHandle(std::make_shared<detail::SuccessorImpl>());
}

FunctionHandle FunctionHandle::collatz() { return from_gcf(collatz_gcf()); }

FunctionHandle FunctionHandle::table_override(FunctionHandle base,
                                              std::map<Integer, Integer> table,
                                              const std::string& name) {
  return FunctionHandle(std::make_shared<detail::TableImpl>(
      base.impl(), std::move(table), name));
}

const std::string& FunctionHandle::name() const { return impl_->name(); }

Integer FunctionHandle::operator()(const Integer& x) const {
  Integer out;
  impl_->eval_into(x, out);
  return out;
}

void FunctionHandle::eval_into(const Integer& x, Integer& out) const {
  impl_->eval_into(x, out);
}

std::vector<Integer> FunctionHandle::preimage(const Integer& y) const {
  return impl_->preimage(y);
}

const Gcf* FunctionHandle::as_gcf() const { return impl_->as_gcf(); }

}  // namespace orbtop
