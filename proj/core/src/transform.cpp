#include "orbtop/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbtop {

PhiPair phi(const Integer& n) {
  if (n < 1) throw std::invalid_argument("phi: argument must be positive");
  PhiPair p;
  p.r = static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 4));
  mpz_add_ui(p.m.get_mpz_t(), n.get_mpz_t(), 3);
  mpz_fdiv_q_2exp(p.m.get_mpz_t(), p.m.get_mpz_t(), 2);
  return p;
}

Integer phi_inv(const Integer& m, int r) {
  if (m < 1) throw std::invalid_argument("phi_inv: first component must be positive");
  int rr = ((r % 4) + 4) % 4;
  // 4m-3, 4m-2, 4m-1, 4m have residues 1, 2, 3, 0 mod 4.
  Integer n;
  mpz_mul_2exp(n.get_mpz_t(), m.get_mpz_t(), 2);
  mpz_sub_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>((4 - rr) & 3));
  return n;
}

namespace detail {
namespace {

class HatImpl final : public FnImpl {
 public:
  HatImpl(std::shared_ptr<const FnImpl> base, std::string base_name)
      : base_(std::move(base)), name_("hat:" + std::move(base_name)) {}

  void eval_into(const Integer& x, Integer& out) const override {
    if (x <= 4) {
      out = x;
      return;
    }
    unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 4);
    mpz_add_ui(out.get_mpz_t(), x.get_mpz_t(), 3);
    mpz_fdiv_q_2exp(out.get_mpz_t(), out.get_mpz_t(), 2);  // out = m >= 2
    Integer fm;
    base_->eval_into(out, fm);
    unsigned long r1 = (r + 1) & 3;
    mpz_mul_2exp(out.get_mpz_t(), fm.get_mpz_t(), 2);
    mpz_sub_ui(out.get_mpz_t(), out.get_mpz_t(), (4 - r1) & 3);
  }

  std::vector<Integer> preimage(const Integer& y) const override {
    std::vector<Integer> result;
    if (y >= 1 && y <= 4) result.push_back(y);  // fixed point of the m=1 fibre
    PhiPair p = phi(y);
    int r_pre = (p.r + 3) & 3;  // residue whose successor is p.r
    for (const Integer& m : base_->preimage(p.m))
      if (m >= 2) result.push_back(phi_inv(m, r_pre));
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  const std::string& name() const override { return name_; }

 private:
  std::shared_ptr<const FnImpl> base_;
  std::string name_;
};

}  // namespace
}  // namespace detail

FunctionHandle hat(const FunctionHandle& f) {
  if (!f.valid()) throw std::invalid_argument("hat: invalid function handle");
  return FunctionHandle(
      std::make_shared<detail::HatImpl>(f.impl(), f.name()));
}

}  // namespace orbtop
