#pragma once

#include <map>
#include <vector>

#include "drinfeld/finite_field.hpp"
#include "drinfeld/herbrand.hpp"

namespace drinfeld {

/// Small dense matrix over F_q.
class FqMatrix {
 public:
  FqMatrix(const FiniteField* f, long rows, long cols);
  static FqMatrix identity(const FiniteField* f, long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const FiniteField* field() const { return f_; }
  FqElem& at(long r, long c) { return e_[r * cols_ + c]; }
  const FqElem& at(long r, long c) const { return e_[r * cols_ + c]; }

  FqMatrix operator*(const FqMatrix& o) const;
  bool operator==(const FqMatrix& o) const { return e_ == o.e_; }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }
  bool operator<(const FqMatrix& o) const;  // for set keys
  std::string str() const;

 private:
  const FiniteField* f_;
  long rows_, cols_;
  std::vector<FqElem> e_;
};

/// The n x n shift matrix A_{n,l} = (delta_{i, j-l+1}).
FqMatrix shift_matrix(const FiniteField* f, long n, long l);

/// Generator sigma_{l,u} of the wild ramification subgroup: level l, scalar
/// u in F_q.
struct WildGenerator {
  long l;
  FqElem u;
};

/// 2n x 2n block matrix [[I, 0], [L, I]] over F_q acting on the basis
/// (xi_{-n},..,xi_{-1},xi_n,..,xi_1) by rows: sigma(b_i) = sum_j M_ij b_j.
class BlockUnipotentMatrix {
 public:
  BlockUnipotentMatrix(long n, FqMatrix full);  // validates the block shape

  long n() const { return n_; }
  const FqMatrix& full() const { return m_; }
  FqMatrix lower_left() const;

  BlockUnipotentMatrix operator*(const BlockUnipotentMatrix& o) const;
  bool operator==(const BlockUnipotentMatrix& o) const { return m_ == o.m_; }
  bool operator<(const BlockUnipotentMatrix& o) const { return m_ < o.m_; }

 private:
  long n_;
  FqMatrix m_;
};

/// Matrix of sigma_{l,u} on phi[pi^n]: L = u * A_{n,l}.
BlockUnipotentMatrix generator_matrix(long n, const WildGenerator& g);

/// sigma_{l,u} on the basis labels: xi_{-i} fixed; xi_i fixed for i < l and
/// xi_i -> xi_i + u xi_{-(i-l+1)} for i >= l. Keys are signed indices.
std::map<long, std::vector<std::pair<long, FqElem>>> act_on_basis(
    const WildGenerator& g, long n);

/// act_on_basis rendered as a matrix in the ordered basis, for
/// entry-by-entry comparison with generator_matrix.
BlockUnipotentMatrix action_matrix(const FiniteField* f, long n,
                                   const WildGenerator& g);

/// Full closure of the generator matrices under multiplication. Levels run
/// to min(n, m) at an infinite place and to n at a finite place; the order
/// is q^levels = p^{s*levels}.
std::vector<BlockUnipotentMatrix> group_elements(const TowerCase& c,
                                                 const FiniteField* f, long n,
                                                 unsigned long cap = 1000000);

/// Upper filtration break R_n^l = psi_{K_n/K}(r_l / E).
Rat filtration_break(const TowerCase& c, const ValuationProfile& pr, long n, long l,
                     long E);

}  // namespace drinfeld
