#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopflab/linalg.hpp"
#include "hopflab/report.hpp"
#include "hopflab/scalar.hpp"

namespace hopflab {

// One summand c * e_{i[0]} (x) ... (x) e_{i[k-1]} of an iterated coproduct.
struct Term {
  Scalar c;
  std::array<int, 10> i{};
};

struct Entry {
  int k;
  Scalar c;
};
using Sparse = std::vector<Entry>;

// Finite-dimensional Hopf algebra given by structure constants.
//   mult(i,j,k):   coefficient of e_k in e_i e_j
//   comult(i,j,k): coefficient of e_j (x) e_k in Delta(e_i)
//   antipode(i,j): coefficient of e_i in S(e_j)   (columns are images)
class HopfAlgebra {
 public:
  static constexpr int kMaxLegs = 10;

  HopfAlgebra(Field field, std::string name, std::vector<std::string> basis, Tensor mult, Tensor comult, Vec unit,
              Vec counit, Matrix antipode, Matrix antipode_inv);

  const Field& field() const { return field_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const Tensor& mult() const { return mult_; }
  const Tensor& comult() const { return comult_; }
  const Vec& unit() const { return unit_; }
  const Vec& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }
  const Matrix& antipode_inv() const { return antipode_inv_; }

  // sparse product of basis elements
  const Sparse& prod(int i, int j) const { return prod_[i * n_ + j]; }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul(int i, int j) const;
  Vec e(int i) const { return unit_vec(n_, i); }
  Vec one() const { return unit_; }
  Vec S(const Vec& x) const { return antipode_.apply(x); }
  Vec Sinv(const Vec& x) const { return antipode_inv_.apply(x); }
  Vec S(int i) const { return antipode_.column(i); }
  Vec Sinv(int i) const { return antipode_inv_.column(i); }
  Scalar eps(const Vec& x) const { return dot(counit_, x); }
  const Scalar& eps(int i) const { return counit_[i]; }

  // Delta^(k-1)(e_i) as a list of k-fold terms; k = 1 gives e_i itself.
  const std::vector<Term>& cop(int i, int k) const;
  // Delta^(k-1)(x) for a vector, accumulated into terms (not merged)
  std::vector<Term> cop(const Vec& x, int k) const;

  // f(x (x) y) for a bilinear form given as a matrix f(i,j) = f(e_i (x) e_j)
  static Scalar pair(const Matrix& f, const Vec& x, const Vec& y);

  // Structural equality of all tensors (names ignored).
  bool same_structure(const HopfAlgebra& o) const;

 private:
  Field field_;
  std::string name_;
  std::size_t n_;
  std::vector<std::string> basis_;
  Tensor mult_, comult_;
  Vec unit_, counit_;
  Matrix antipode_, antipode_inv_;
  std::vector<Sparse> prod_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<std::vector<Term>>> cop_cache_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

HopfPtr make_hopf(Field field, std::string name, std::vector<std::string> basis, Tensor mult, Tensor comult,
                  Vec unit, Vec counit, Matrix antipode, Matrix antipode_inv);
// antipode inverse computed by matrix inversion
HopfPtr make_hopf(Field field, std::string name, std::vector<std::string> basis, Tensor mult, Tensor comult,
                  Vec unit, Vec counit, Matrix antipode);

CheckReport verify_hopf_axioms(const HopfAlgebra& h);
HopfPtr dual_hopf(const HopfAlgebra& h);
// Tensor of shape [n, n^k] holding Delta^(k-1)
Tensor iterated_coproduct(const HopfAlgebra& h, int k);
HopfPtr op_cop(const HopfAlgebra& h, bool flip_mult, bool flip_comult);

// Elements of H^{(x)k} as dense coordinate vectors of length n^k.
Vec tensor_mul(const HopfAlgebra& h, int k, const Vec& x, const Vec& y);
// (Delta applied at leg `leg`) : H^{(x)k} -> H^{(x)(k+1)}
Vec apply_delta_at(const HopfAlgebra& h, int k, const Vec& x, int leg);
// (eps applied at leg) : H^{(x)k} -> H^{(x)(k-1)}
Vec apply_eps_at(const HopfAlgebra& h, int k, const Vec& x, int leg);
// permute legs: output leg j carries input leg perm[j]
Vec permute_legs(const HopfAlgebra& h, int k, const Vec& x, const std::vector<int>& perm);
// x (x) 1 or 1 (x) x style embeddings: place x (k legs) into k+extra legs at given positions
Vec embed_legs(const HopfAlgebra& h, int k, const Vec& x, int total, const std::vector<int>& positions);

}  // namespace hopflab
