#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "category.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "structure.hpp"
#include "symmetry.hpp"

namespace particat {

inline std::int64_t ipow(std::int64_t base, std::size_t e) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = detail::checked_mul(r, base);
  return r;
}

inline mpq_class qpow(long base, long e) {
  mpz_class b = base, r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1, r) : mpq_class(r);
}

// T̊_p is N^l x N^k; T_p = N^(half_exponent/2) T̊_p with half_exponent = -β(p).
struct MapModel {
  IntMatrix matrix;
  long half_exponent = 0;
  unsigned N = 1;

  RatMatrix normalized() const {
    if (half_exponent % 2 != 0)
      throw PreconditionError("T_p is irrational: odd β(p)");
    return scaled(to_rational(matrix), qpow(N, half_exponent / 2));
  }
};

inline void check_dimension(unsigned N, std::size_t k, std::size_t l, const Limits& limits) {
  if (N == 0) throw PreconditionError("N must be at least 1");
  const std::size_t e = std::max(k, l);
  std::size_t rows = 1;
  for (std::size_t i = 0; i < e; ++i) {
    rows *= N;
    if (rows > limits.max_matrix_rows)
      throw BoundsError("N^max(k,l) exceeds the cap of " + std::to_string(limits.max_matrix_rows) + " rows");
  }
}

inline MapModel t_map(const Partition& p, unsigned N, const Limits& limits = default_limits()) {
  check_dimension(N, p.upper_count(), p.lower_count(), limits);
  const std::size_t k = p.upper_count(), l = p.lower_count(), b = p.block_count();
  const auto cols = static_cast<std::size_t>(ipow(N, k));
  const auto rows = static_cast<std::size_t>(ipow(N, l));
  MapModel m{IntMatrix(rows, cols), -static_cast<long>(stats(p).beta), N};
  std::vector<unsigned> value(b, 0);
  while (true) {
    std::size_t i = 0, j = 0;
    for (std::size_t x = 0; x < k; ++x) i = i * N + value[p.upper_block(x)];
    for (std::size_t y = 0; y < l; ++y) j = j * N + value[p.lower_block(y)];
    m.matrix(j, i) = 1;
    std::size_t d = 0;
    while (d < b && ++value[d] == N) value[d++] = 0;
    if (d == b) break;
  }
  return m;
}

struct CheckReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void merge(const CheckReport& o) {
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

// p, q composable as pq (q on top). Checks involution, tensor, composition and
// partial-isometry rules, plus the projection rule for projective inputs.
inline CheckReport check_functor(const Partition& p, const Partition& q, unsigned N,
                                 const Limits& limits = default_limits()) {
  if (p.upper_count() != q.lower_count()) throw ArityError("check_functor: p and q not composable");
  CheckReport r;
  const std::string tag = " [" + p.text() + " , " + q.text() + ", N=" + std::to_string(N) + "]";
  const IntMatrix tp = t_map(p, N, limits).matrix;
  const IntMatrix tq = t_map(q, N, limits).matrix;
  r.expect(t_map(involution(p), N, limits).matrix == tp.transpose(), "involution" + tag);
  r.expect(t_map(involution(q), N, limits).matrix == tq.transpose(), "involution" + tag);
  r.expect(t_map(tensor(p, q), N, limits).matrix == kronecker(tp, tq), "tensor" + tag);
  const auto pq = compose(p, q);
  r.expect(tp * tq == scaled(t_map(pq.partition, N, limits).matrix, ipow(N, pq.removed_loops)),
           "composition" + tag);
  for (const Partition* x : {&p, &q}) {
    const IntMatrix tx = x == &p ? tp : tq;
    const auto xx = compose(*x, involution(*x));
    r.expect(tx * tx.transpose() ==
                 scaled(t_map(xx.partition, N, limits).matrix, ipow(N, xx.removed_loops)),
             "partial isometry" + tag);
    if (x->upper_count() == x->lower_count() && is_projective(*x)) {
      const auto sq = compose(*x, *x);
      r.expect(tx * tx == scaled(tx, ipow(N, sq.removed_loops)), "projection" + tag);
      const RatMatrix n = t_map(*x, N, limits).normalized();
      r.expect(n * n == n && n.transpose() == n, "normalized projection" + tag);
    }
  }
  return r;
}

struct IndependenceReport {
  std::size_t size = 0;
  std::size_t rank = 0;
  bool dependent = false;
};

inline IndependenceReport gram_rank(const std::vector<Partition>& family, unsigned N,
                                    const Limits& limits = default_limits()) {
  std::vector<IntMatrix> maps;
  for (const auto& p : family) maps.push_back(t_map(p, N, limits).matrix);
  IntMatrix gram(maps.size(), maps.size());
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t b = a; b < maps.size(); ++b) gram(a, b) = gram(b, a) = frobenius(maps[a], maps[b]);
  IndependenceReport r;
  r.size = family.size();
  r.rank = rank(gram);
  r.dependent = r.rank < r.size;
  return r;
}

inline IndependenceReport independent(const CategorySpec& C, std::size_t k, unsigned N,
                                      const Limits& limits = default_limits()) {
  check_dimension(N, k, k, limits);
  return gram_rank(enumerate(C, k, k, limits), N, limits);
}

// Projections P_p = T_p - R_p over the projectives of C(k,k) at fixed N.
class ProjectionModel {
 public:
  ProjectionModel(const CategorySpec& C, std::size_t k, unsigned N, const Limits& limits = default_limits())
      : C_(C), k_(k), N_(N), limits_(limits), projectives_(projectives(C, k, limits)) {
    check_dimension(N, k, k, limits);
  }

  const std::vector<Partition>& projective_list() const { return projectives_; }
  unsigned N() const { return N_; }
  std::size_t dimension() const { return static_cast<std::size_t>(ipow(N_, k_)); }

  std::vector<Partition> strictly_dominated(const Partition& p) const {
    std::vector<Partition> out;
    for (const auto& q : projectives_)
      if (strictly_dominates(p, q)) out.push_back(q);
    return out;
  }

  // Sum of T̊_q over q ≺ p: a PSD integer matrix whose image is the image of R_p.
  IntMatrix dominated_sum(const Partition& p) const {
    require(p);
    IntMatrix s(dimension(), dimension());
    for (const auto& q : strictly_dominated(p)) s = s + map(q);
    return s;
  }

  std::size_t rank_R(const Partition& p) const {
    auto it = rank_R_cache_.find(p);
    if (it != rank_R_cache_.end()) return it->second;
    const std::size_t r = rank(dominated_sum(p));
    rank_R_cache_.emplace(p, r);
    return r;
  }

  std::size_t rank_P(const Partition& p) const {
    return static_cast<std::size_t>(ipow(N_, through_count(p))) - rank_R(p);
  }

  RatMatrix R(const Partition& p) const {
    return column_space_projection(to_rational(dominated_sum(p)), limits_.max_rational_entries);
  }

  RatMatrix P(const Partition& p) const {
    auto it = P_cache_.find(p);
    if (it != P_cache_.end()) return it->second;
    const RatMatrix out = t_map(p, N_, limits_).normalized() - R(p);
    P_cache_.emplace(p, out);
    return out;
  }

  const IntMatrix& map(const Partition& q) const {
    auto it = map_cache_.find(q);
    if (it == map_cache_.end()) it = map_cache_.emplace(q, t_map(q, N_, limits_).matrix).first;
    return it->second;
  }

 private:
  void require(const Partition& p) const {
    require_projective(p, "projection");
    if (p.upper_count() != k_) throw ArityError("projection: arity differs from the model");
    if (!C_.contains(p)) throw PreconditionError("projection: " + p.text() + " is not in " + C_.name());
  }

  CategorySpec C_;
  std::size_t k_;
  unsigned N_;
  Limits limits_;
  std::vector<Partition> projectives_;
  mutable std::map<Partition, std::size_t> rank_R_cache_;
  mutable std::map<Partition, RatMatrix> P_cache_;
  mutable std::map<Partition, IntMatrix> map_cache_;
};

inline RatMatrix projection_P(const CategorySpec& C, const Partition& p, unsigned N,
                              const Limits& limits = default_limits()) {
  return ProjectionModel(C, p.upper_count(), N, limits).P(p);
}

struct ClassProjection {
  Partition representative;
  std::size_t t = 0;
  std::size_t class_size = 0;
  std::size_t rank_class = 0;
  std::size_t rank_p = 0;
  std::size_t multiplicity = 0;  // 0 when rank_p does not divide rank_class
};

struct ClassDecomposition {
  std::vector<ClassProjection> classes;
  std::size_t total_rank = 0;
  bool orthogonal = true;
};

inline ClassDecomposition class_projection(const CategorySpec& C, std::size_t k, unsigned N,
                                           const Limits& limits = default_limits()) {
  const ProjectionModel model(C, k, N, limits);
  const auto classes = equivalence_classes(C, k, limits);
  ClassDecomposition out;
  std::vector<RatMatrix> projections;
  for (const auto& cls : classes) {
    RatMatrix sum(model.dimension(), model.dimension());
    for (const auto& q : cls.members) sum = sum + model.P(q);
    ClassProjection cp;
    cp.representative = cls.representative;
    cp.t = through_count(cls.representative);
    cp.class_size = cls.members.size();
    cp.rank_class = rank(sum);
    cp.rank_p = model.rank_P(cls.representative);
    if (cp.rank_p > 0 && cp.rank_class % cp.rank_p == 0) cp.multiplicity = cp.rank_class / cp.rank_p;
    out.total_rank += cp.rank_class;
    out.classes.push_back(cp);
    projections.push_back(column_space_projection(sum, limits.max_rational_entries));
  }
  for (std::size_t a = 0; a < projections.size(); ++a)
    for (std::size_t b = a + 1; b < projections.size(); ++b)
      if (!(projections[a] * projections[b]).is_zero()) out.orthogonal = false;
  return out;
}

struct PsiReport {
  CheckReport checks;
  std::size_t sym_order = 0;
  std::size_t dim_aut = 0;      // dim of P_p End(u^k) P_p
  std::size_t dim_image = 0;    // dim span{P_p T_{p_σ} P_p}
};

inline std::size_t flattened_rank(const std::vector<RatMatrix>& ms) {
  if (ms.empty()) return 0;
  RatMatrix flat(ms.size(), ms.front().rows() * ms.front().cols());
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t i = 0; i < ms[a].rows(); ++i)
      for (std::size_t j = 0; j < ms[a].cols(); ++j) flat(a, i * ms[a].cols() + j) = ms[a](i, j);
  return rank(flat);
}

inline PsiReport psi_check(const CategorySpec& C, const Partition& p, unsigned N,
                           const Limits& limits = default_limits()) {
  const std::size_t k = p.upper_count();
  const ProjectionModel model(C, k, N, limits);
  const auto sym = sym_group(C, p, limits);
  const RatMatrix P = model.P(p);
  std::map<Permutation, RatMatrix> image;
  for (const auto& s : sym) image.emplace(s, P * t_map(p_sigma(p, s), N, limits).normalized() * P);
  PsiReport r;
  r.sym_order = sym.size();
  r.checks.expect(image.at(Permutation::identity(through_count(p))) == P, "psi(id) = P_p");
  for (const auto& a : sym)
    for (const auto& b : sym)
      r.checks.expect(image.at(a) * image.at(b) == image.at(a * b), "psi multiplicative");
  std::vector<RatMatrix> ims;
  for (const auto& [s, m] : image) ims.push_back(m);
  r.dim_image = flattened_rank(ims);
  std::vector<RatMatrix> aut;
  for (const auto& q : enumerate(C, k, k, limits)) aut.push_back(P * to_rational(model.map(q)) * P);
  r.dim_aut = flattened_rank(aut);
  r.checks.expect(r.dim_aut <= r.sym_order, "dim Aut(u_p) <= |Sym(p)|");
  r.checks.expect(r.dim_aut == r.dim_image, "Aut(u_p) spanned by the image of psi");
  return r;
}

using BrauerElement = std::map<Partition, mpq_class>;

inline void brauer_add(BrauerElement& x, const Partition& p, const mpq_class& c) {
  auto& slot = x[p];
  slot += c;
  if (sgn(slot) == 0) x.erase(p);
}

// x.y with q.p = N^{rl(q,p)} qp, so that Ξ(p) = T̊_p is multiplicative.
inline BrauerElement brauer_product(const BrauerElement& x, const BrauerElement& y, unsigned N) {
  BrauerElement out;
  for (const auto& [q, a] : x)
    for (const auto& [p, b] : y) {
      const auto qp = compose(q, p);
      brauer_add(out, qp.partition, a * b * qpow(N, static_cast<long>(qp.removed_loops)));
    }
  return out;
}

inline BrauerElement brauer_involution(const BrauerElement& x) {
  BrauerElement out;
  for (const auto& [p, a] : x) brauer_add(out, involution(p), a);
  return out;
}

inline RatMatrix brauer_image(const BrauerElement& x, std::size_t k, unsigned N,
                              const Limits& limits = default_limits()) {
  check_dimension(N, k, k, limits);
  const auto n = static_cast<std::size_t>(ipow(N, k));
  RatMatrix m(n, n);
  for (const auto& [p, a] : x) m = m + scaled(to_rational(t_map(p, N, limits).matrix), a);
  return m;
}

inline std::size_t brauer_kernel_dim(const CategorySpec& C, std::size_t k, unsigned N,
                                     const Limits& limits = default_limits()) {
  const auto r = independent(C, k, N, limits);
  return r.size - r.rank;
}

}  // namespace particat
