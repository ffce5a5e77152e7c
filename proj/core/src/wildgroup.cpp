#include "drinfeld/wildgroup.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace drinfeld {

FqMatrix::FqMatrix(const FiniteField* f, long rows, long cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, f->zero()) {}

FqMatrix FqMatrix::identity(const FiniteField* f, long n) {
  FqMatrix m(f, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_) throw error("matrix shape mismatch");
  FqMatrix r(f_, rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

bool FqMatrix::operator<(const FqMatrix& o) const {
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == o.e_[i]) continue;
    return e_[i] < o.e_[i];
  }
  return false;
}

std::string FqMatrix::str() const {
  std::ostringstream os;
  for (long i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (long j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

FqMatrix shift_matrix(const FiniteField* f, long n, long l) {
  FqMatrix a(f, n, n);
  for (long i = 0; i < n; ++i) {
    long j = i + l - 1;
    if (j >= 0 && j < n) a.at(i, j) = f->one();
  }
  return a;
}

BlockUnipotentMatrix::BlockUnipotentMatrix(long n, FqMatrix full)
    : n_(n), m_(std::move(full)) {
  if (m_.rows() != 2 * n || m_.cols() != 2 * n)
    throw error("block-unipotent matrix must be 2n x 2n");
  const FiniteField* f = m_.field();
  for (long i = 0; i < 2 * n; ++i)
    for (long j = 0; j < 2 * n; ++j) {
      bool diag_block = (i < n) == (j < n);
      if (diag_block) {
        if (m_.at(i, j) != (i == j ? f->one() : f->zero()))
          throw error("diagonal blocks must be the identity");
      } else if (i < n && !m_.at(i, j).is_zero()) {
        throw error("upper-right block must vanish");
      }
    }
}

FqMatrix BlockUnipotentMatrix::lower_left() const {
  FqMatrix l(m_.field(), n_, n_);
  for (long i = 0; i < n_; ++i)
    for (long j = 0; j < n_; ++j) l.at(i, j) = m_.at(n_ + i, j);
  return l;
}

BlockUnipotentMatrix BlockUnipotentMatrix::operator*(
    const BlockUnipotentMatrix& o) const {
  return BlockUnipotentMatrix(n_, m_ * o.m_);
}

BlockUnipotentMatrix generator_matrix(long n, const WildGenerator& g) {
  if (g.l < 1 || g.l > n) throw error("generator level out of range");
  const FiniteField* f = g.u.field();
  FqMatrix m = FqMatrix::identity(f, 2 * n);
  FqMatrix a = shift_matrix(f, n, g.l);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m.at(n + i, j) = g.u * a.at(i, j);
  return BlockUnipotentMatrix(n, std::move(m));
}

std::map<long, std::vector<std::pair<long, FqElem>>> act_on_basis(
    const WildGenerator& g, long n) {
  if (g.l < 1 || g.l > n) throw error("generator level out of range");
  const FiniteField* f = g.u.field();
  std::map<long, std::vector<std::pair<long, FqElem>>> act;
  for (long i = 1; i <= n; ++i) {
    act[-i] = {{-i, f->one()}};
    std::vector<std::pair<long, FqElem>> img = {{i, f->one()}};
    if (i >= g.l && !g.u.is_zero()) img.emplace_back(-(i - g.l + 1), g.u);
    act[i] = std::move(img);
  }
  return act;
}

namespace {
// basis (xi_{-n},..,xi_{-1},xi_n,..,xi_1): position of a signed index
long basis_pos(long idx, long n) { return idx < 0 ? n + idx : 2 * n - idx; }
}  // namespace

BlockUnipotentMatrix action_matrix(const FiniteField* f, long n,
                                   const WildGenerator& g) {
  FqMatrix m(f, 2 * n, 2 * n);
  for (const auto& [idx, img] : act_on_basis(g, n))
    for (const auto& [jdx, coeff] : img) m.at(basis_pos(idx, n), basis_pos(jdx, n)) = coeff;
  return BlockUnipotentMatrix(n, std::move(m));
}

std::vector<BlockUnipotentMatrix> group_elements(const TowerCase& c,
                                                 const FiniteField* f, long n,
                                                 unsigned long cap) {
  long levels;
  switch (c.tag) {
    case CaseTag::InfWild:
      levels = std::min(n, c.m);
      break;
    case CaseTag::FinWild:
      levels = n;
      break;
    default:
      throw inconsistent_case("wild ramification group exists only in wild cases");
  }
  if (!f->order_fits_ulong()) throw cap_exceeded("field too large to enumerate");
  unsigned long q = f->order_ulong();
  unsigned long expected = 1;
  for (long i = 0; i < levels; ++i) {
    if (expected > cap / q) throw cap_exceeded("group enumeration cap exceeded");
    expected *= q;
  }

  std::vector<BlockUnipotentMatrix> gens;
  for (long l = 1; l <= levels; ++l)
    for (unsigned long k = 0; k < q; ++k)
      gens.push_back(generator_matrix(n, WildGenerator{l, f->element(k)}));

  std::set<BlockUnipotentMatrix> seen;
  std::deque<BlockUnipotentMatrix> queue;
  BlockUnipotentMatrix id(n, FqMatrix::identity(f, 2 * n));
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    BlockUnipotentMatrix cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      BlockUnipotentMatrix nxt = cur * g;
      if (seen.insert(nxt).second) {
        if (seen.size() > cap) throw cap_exceeded("group enumeration cap exceeded");
        queue.push_back(nxt);
      }
    }
  }
  return std::vector<BlockUnipotentMatrix>(seen.begin(), seen.end());
}

Rat filtration_break(const TowerCase& c, const ValuationProfile& pr, long n, long l,
                     long E) {
  if (!c.is_wild()) throw inconsistent_case("filtration breaks exist only in wild cases");
  long max_l = c.tag == CaseTag::InfWild ? std::min(n, c.m) : n;
  if (l < 1 || l > max_l) throw error("level out of range");
  TowerBreaks tb = tower_breaks(c, pr, std::max(n, l), E);
  return psi_tower(c, pr, n, E).eval(tb.r_list[l - 1] / E);
}

}  // namespace drinfeld
