#include "toricjet/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <type_traits>
#include <set>

#include "toricjet/lp.hpp"

namespace toricjet {

DualConeData::DualConeData(Cone q) : q_(std::move(q)) {
  if (!q_.is_full_dimensional() || !q_.is_pointed()) {
    throw Error(ErrorKind::Precondition, "semigroup cone must be pointed and full-dimensional");
  }
  grading_ = zero_lattice(q_.ambient_dim());
  for (const auto& n : q_.facet_normals()) grading_ = grading_ + n;
  const std::size_t d = dim(), m = q_.rays().size();
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
  do {
    RayBasis b;
    std::vector<LatticeVector> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        b.rays.push_back(static_cast<int>(i));
        sub.push_back(q_.rays()[i]);
      }
    b.det = abs_determinant(sub);
    if (b.det == 0) continue;
    std::vector<RationalVector> cols(d, RationalVector(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) cols[i][j] = sub[j][i];
    auto inv = *inverse(cols);
    b.weight = zero_lattice(d);
    for (auto& row : inv) {
      b.adj.push_back(to_lattice(Rational(b.det) * row));
      b.weight = b.weight + b.adj.back();
    }
    bases_.push_back(std::move(b));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

DualConeData DualConeData::dual_of(const Cone& sigma) {
  if (!sigma.is_full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional,
                "dual of a lower-dimensional cone is not pointed; Γ is undefined there");
  }
  return DualConeData(dual_cone(sigma));
}

RationalVector DualConeData::ray_coordinates(const LatticeVector& u) const {
  if (!is_simplicial()) throw Error(ErrorKind::Precondition, "cone is not simplicial");
  const RayBasis& b = bases_.front();
  RationalVector a(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    a[i] = Rational(dot(b.adj[i], u)) / Rational(b.det);
  }
  return a;
}

namespace {

void require_in_cone(const DualConeData& q, const LatticeVector& u) {
  require_same_dim(u.size(), q.dim());
  if (!q.cone().contains(u)) throw Error(ErrorKind::OutsideCone, "outside cone: " + to_string(u));
}

LinearProgram ray_program(const DualConeData& q, const LatticeVector& u, std::size_t extra_vars) {
  const auto& w = q.rays();
  const std::size_t m = w.size();
  LinearProgram lp(m + extra_vars);
  for (std::size_t j = 0; j < q.dim(); ++j) {
    RationalVector row(m + extra_vars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = w[i][j];
    lp.add_constraint(std::move(row), Sense::Equal, u[j]);
  }
  return lp;
}

Rational weight_lp(const DualConeData& q, const LatticeVector& u, bool maximize) {
  require_in_cone(q, u);
  const std::size_t m = q.rays().size();
  LinearProgram lp = ray_program(q, u, 0);
  RationalVector ones(m, Rational(1));
  LpResult r = maximize ? lp.maximize(ones) : lp.minimize(ones);
  if (r.status != LpStatus::Optimal) throw Error(ErrorKind::OutsideCone, "weight LP failed for " + to_string(u));
  return r.value;
}

// The LP optimum sits at a basic solution, i.e. on a basis of rays with
// nonnegative coordinates.
Rational weight(const DualConeData& q, const LatticeVector& u, bool maximize) {
  require_in_cone(q, u);
  std::optional<Rational> best;
  for (const auto& b : q.bases()) {
    bool inside = true;
    for (const auto& row : b.adj)
      if (dot(row, u) < 0) {
        inside = false;
        break;
      }
    if (!inside) continue;
    Rational s = Rational(dot(b.weight, u)) / Rational(b.det);
    if (!best || (maximize ? s > *best : s < *best)) best = s;
  }
  return *best;
}

}  // namespace

Rational w_max(const DualConeData& q, const LatticeVector& u) { return weight(q, u, true); }
Rational w_min(const DualConeData& q, const LatticeVector& u) { return weight(q, u, false); }
Rational w_max_lp(const DualConeData& q, const LatticeVector& u) { return weight_lp(q, u, true); }
Rational w_min_lp(const DualConeData& q, const LatticeVector& u) { return weight_lp(q, u, false); }

bool in_half_open_box(const DualConeData& q, const LatticeVector& u) {
  require_same_dim(u.size(), q.dim());
  if (!q.cone().contains(u)) return false;
  if (q.is_simplicial()) {
    for (const auto& a : q.ray_coordinates(u))
      if (a >= 1) return false;
    return true;
  }
  // max t subject to sum a_i w_i = u, a_i + t <= 1, a, t >= 0; inside iff t > 0.
  const std::size_t m = q.rays().size();
  LinearProgram lp = ray_program(q, u, 1);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(m + 1, Rational(0));
    row[i] = 1;
    row[m] = 1;
    lp.add_constraint(std::move(row), Sense::LessEqual, 1);
  }
  RationalVector obj(m + 1, Rational(0));
  obj[m] = 1;
  LpResult r = lp.maximize(obj);
  return r.status == LpStatus::Optimal && r.value > 0;
}

namespace {

template <class T>
T narrow(const Integer& z) {
  if constexpr (std::is_same_v<T, Integer>) return z;
  else return z.get_si();
}

template <class T>
T floor_mod(const T& a, const T& m) {
  T r = a % m;
  if (r < 0) r += m;
  return r;
}

// Lattice points of the half-open box, for one integer representation T.
struct Overflow {};

template <class T>
class BoxEnumerator {
 public:
  using Vec = std::vector<T>;

  BoxEnumerator(const DualConeData& q, const std::vector<std::vector<int>>& simplices) : q_(q), d_(q.dim()) {
    for (const auto& w : q.rays()) rays_.push_back(convert(w));
    for (const auto& n : q.cone().facet_normals()) normals_.push_back(convert(n));
    for (const auto& b : q.bases()) {
      Basis nb;
      nb.rays = b.rays;
      for (const auto& row : b.adj) nb.adj.push_back(convert(row));
      nb.det = narrow<T>(b.det);
      std::vector<LatticeVector> sub;
      for (int i : b.rays) sub.push_back(q.rays()[i]);
      HermiteForm hf = hermite_normal_form(IntegerMatrix::from_rows(sub, d_));
      for (std::size_t j = 0; j < d_; ++j) nb.bound.push_back(narrow<T>(hf.h(j, j)));
      bases_.push_back(std::move(nb));
    }
    for (const auto& simplex : simplices)
      for (std::size_t i = 0; i < bases_.size(); ++i)
        if (bases_[i].rays == simplex) simplices_.push_back(i);
    total_y_.assign(normals_.size(), T(0));
    for (const auto& w : rays_) {
      ray_y_.push_back(y_of(w));
      add_to(total_y_, ray_y_.back());
    }
    coord_bound_ = 1;
    for (const auto& w : q.rays())
      for (const auto& x : w) coord_bound_ += abs(x);
  }

  std::set<Vec> run() {
    std::set<Vec> found;
    if (q_.is_simplicial()) {
      simplicial_points(bases_.front(), [&](Vec p) { found.insert(std::move(p)); });
      return found;
    }
    std::set<Vec> visited;
    for (std::size_t s : simplices_) {
      const Basis& b = bases_[s];
      simplicial_points(b, [&](Vec p) {
        Vec y = y_of(p);
        extend(b, 0, p, y, found, visited);
      });
    }
    return found;
  }

 private:
  struct Slab {
    Vec h;
    T lo, hi;
  };
  struct Basis {
    std::vector<int> rays;
    std::vector<Vec> adj;
    T det;
    Vec bound;
  };

  const DualConeData& q_;
  std::size_t d_;
  Integer coord_bound_;
  std::vector<Vec> ray_y_;
  std::map<std::vector<char>, std::vector<Slab>> slabs_;
  std::vector<Vec> rays_, normals_;
  std::vector<Basis> bases_;
  std::vector<std::size_t> simplices_;
  Vec total_y_;

  static Vec convert(const LatticeVector& v) {
    Vec out;
    for (const auto& x : v) out.push_back(narrow<T>(x));
    return out;
  }
  static T dotv(const Vec& a, const Vec& b) {
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }
  static void add_to(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }
  Vec y_of(const Vec& u) const {
    Vec y;
    for (const auto& n : normals_) y.push_back(dotv(n, u));
    return y;
  }

  // Coset representatives x of Z^d / (lattice of the basis), mapped into the box.
  template <class F>
  void simplicial_points(const Basis& b, F&& emit) const {
    Vec x(d_, T(0));
    for (;;) {
      Vec p(d_, T(0));
      for (std::size_t i = 0; i < d_; ++i) {
        T r = floor_mod(dotv(b.adj[i], x), b.det);
        if (r == 0) continue;
        const Vec& w = rays_[b.rays[i]];
        for (std::size_t j = 0; j < d_; ++j) p[j] += r * w[j];
      }
      for (auto& c : p) c /= b.det;
      emit(std::move(p));
      std::size_t k = 0;
      while (k < d_) {
        if (++x[k] < b.bound[k]) break;
        x[k] = 0;
        ++k;
      }
      if (k == d_) break;
    }
  }

  bool below_total(const Vec& y) const {
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] >= total_y_[j]) return false;
    return true;
  }

  // u ∈ S_Q iff u lies in the relative interior of the zonotope sum [0,1] w
  // over the rays of the face F whose relative interior contains u: any
  // representation puts zero weight outside F, and a relative facet of that
  // zonotope through u would force some coefficient to 1.
  bool in_half_open_box_exact(const Vec& u, const Vec& y) {
    std::vector<char> zero(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) zero[j] = y[j] == 0;
    auto it = slabs_.find(zero);
    if (it == slabs_.end()) it = slabs_.emplace(zero, face_slabs(zero)).first;
    for (const auto& sl : it->second) {
      T v = dotv(sl.h, u);
      if (!(sl.lo < v && v < sl.hi)) return false;
    }
    return true;
  }

  std::vector<Slab> face_slabs(const std::vector<char>& zero) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      bool in = true;
      for (std::size_t j = 0; j < zero.size() && in; ++j)
        if (zero[j] && ray_y_[i][j] != 0) in = false;
      if (in) gens.push_back(q_.rays()[i]);
    }
    const std::size_t k = rank(std::span<const LatticeVector>(gens));
    std::vector<Slab> out;
    if (k == 0) return out;
    std::set<LatticeVector> seen;
    const std::size_t g = gens.size();
    std::vector<bool> pick(g, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
    do {
      std::vector<LatticeVector> sub;
      for (std::size_t i = 0; i < g; ++i)
        if (pick[i]) sub.push_back(gens[i]);
      if (rank(std::span<const LatticeVector>(sub)) != k - 1) continue;
      for (const auto& h : integer_kernel(sub, d_)) {
        LatticeVector pairing;
        for (const auto& w : gens) pairing.push_back(dot(h, w));
        if (is_zero(pairing)) continue;
        LatticeVector hh = h;
        auto first = std::find_if(pairing.begin(), pairing.end(), [](const Integer& x) { return x != 0; });
        if (*first < 0) {
          for (auto& x : hh) x = -x;
          for (auto& x : pairing) x = -x;
        }
        if (seen.insert(pairing).second) {
          Integer lo = 0, hi = 0;
          for (const auto& x : pairing) (x < 0 ? lo : hi) += x;
          if constexpr (!std::is_same_v<T, Integer>) {
            Integer hmax = 0;
            for (const auto& x : hh) hmax = std::max(hmax, Integer(abs(x)));
            if (hmax * coord_bound_ * Integer(d_) > (Integer(1) << 60)) throw Overflow{};
          }
          out.push_back({convert(hh), narrow<T>(lo), narrow<T>(hi)});
        }
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  }

  // Candidates p + sum c_j w_j; every box point pairs with each facet normal
  // strictly below sum_i w_i.
  void extend(const Basis& b, std::size_t j, const Vec& u, const Vec& y, std::set<Vec>& found,
              std::set<Vec>& visited) {
    if (!below_total(y)) return;
    if (j == d_) {
      if (!visited.insert(u).second) return;
      if (in_half_open_box_exact(u, y)) found.insert(u);
      return;
    }
    const Vec& w = rays_[b.rays[j]];
    Vec wy = y_of(w);
    Vec v = u, vy = y;
    while (below_total(vy)) {
      extend(b, j + 1, v, vy, found, visited);
      add_to(v, w);
      add_to(vy, wy);
    }
  }
};

// Regular triangulation of the cone over its rays from a generic lifting.
std::vector<std::vector<int>> triangulate(const DualConeData& q) {
  const std::size_t d = q.dim(), m = q.rays().size();
  std::mt19937_64 rng(7);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<LatticeVector> lifted;
    for (std::size_t i = 0; i < m; ++i) {
      LatticeVector v = q.rays()[i];
      long h = attempt == 0 ? static_cast<long>(i * i) : static_cast<long>(rng() % 4096);
      v.emplace_back(h);
      lifted.push_back(v);
    }
    Cone c(lifted, d + 1);
    if (!c.is_full_dimensional()) continue;
    std::vector<std::vector<int>> out;
    bool generic = true;
    for (const auto& n : c.facet_normals()) {
      if (n[d] <= 0) continue;
      std::vector<int> tight;
      for (std::size_t i = 0; i < m; ++i)
        if (dot(n, lifted[i]) == 0) tight.push_back(static_cast<int>(i));
      if (tight.size() != d) {
        generic = false;
        break;
      }
      out.push_back(tight);
    }
    if (generic) return out;
  }
  // Fallback: every basis covers Q as well.
  std::vector<std::vector<int>> out;
  for (const auto& b : q.bases()) out.push_back(b.rays);
  return out;
}

bool fits_fast(const DualConeData& q) {
  const std::size_t d = q.dim(), m = q.rays().size();
  Integer ray_max = 0, adj_max = 0, det_max = 0, normal_max = 0;
  for (const auto& w : q.rays())
    for (const auto& x : w) ray_max = std::max(ray_max, Integer(abs(x)));
  for (const auto& b : q.bases()) {
    det_max = std::max(det_max, b.det);
    for (const auto& row : b.adj)
      for (const auto& x : row) adj_max = std::max(adj_max, Integer(abs(x)));
  }
  for (const auto& n : q.cone().facet_normals())
    for (const auto& x : n) normal_max = std::max(normal_max, Integer(abs(x)));
  Integer coord = Integer(m + 1) * ray_max + 1;
  Integer limit = Integer(1) << 60;
  Integer a = Integer(d) * adj_max * std::max(coord, det_max);
  Integer b = Integer(d) * normal_max * coord * Integer(m + 1);
  Integer c = Integer(d * d) * det_max * ray_max;
  Integer worst = std::max({a, b, c});
  return worst < limit;
}

template <class T>
std::vector<LatticeVector> enumerate_box(const DualConeData& q, const std::vector<std::vector<int>>& simplices) {
  BoxEnumerator<T> e(q, simplices);
  std::set<std::vector<T>> found = e.run();
  std::vector<LatticeVector> out;
  out.push_back(zero_lattice(q.dim()));
  for (const auto& v : found) {
    LatticeVector lv_;
    for (const auto& c : v) lv_.push_back(Integer(c));
    if (!is_zero(lv_)) out.push_back(std::move(lv_));
  }
  return out;
}

}  // namespace

std::vector<LatticeVector> box_points(const DualConeData& q) {
  std::vector<std::vector<int>> simplices;
  if (!q.is_simplicial()) simplices = triangulate(q);
  if (fits_fast(q)) {
    try {
      return enumerate_box<long>(q, simplices);
    } catch (const Overflow&) {
    }
  }
  return enumerate_box<Integer>(q, simplices);
}

std::vector<LatticeVector> generators(const DualConeData& q) {
  std::vector<LatticeVector> out = q.rays();
  std::set<LatticeVector> seen(out.begin(), out.end());
  for (auto& p : box_points(q))
    if (!is_zero(p) && seen.insert(p).second) out.push_back(std::move(p));
  return out;
}

namespace {

constexpr long kFastLimit = 1L << 40;

std::optional<std::vector<long>> facet_coordinates(const std::vector<LatticeVector>& normals, const LatticeVector& u) {
  std::vector<long> y(normals.size());
  for (std::size_t j = 0; j < normals.size(); ++j) {
    Integer v = dot(normals[j], u);
    if (!v.fits_slong_p() || abs(v) > kFastLimit) return std::nullopt;
    y[j] = v.get_si();
  }
  return y;
}

}  // namespace

std::size_t KuMemo::VecHash::operator()(const std::vector<long>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

void KuMemo::prepare(const DualConeData& q) {
  if (!prepared_) build(q, generators(q));
}

void KuMemo::prepare(const DualConeData& q, const std::vector<LatticeVector>& box) {
  if (prepared_) return;
  std::vector<LatticeVector> gens = q.rays();
  std::set<LatticeVector> seen(gens.begin(), gens.end());
  for (const auto& p : box)
    if (!is_zero(p) && seen.insert(p).second) gens.push_back(p);
  build(q, std::move(gens));
}

void KuMemo::build(const DualConeData& q, std::vector<LatticeVector> gens) {
  prepared_ = true;
  gens_ = std::move(gens);
  const LatticeVector& ell = q.grading();
  std::stable_sort(gens_.begin(), gens_.end(),
                   [&](const LatticeVector& a, const LatticeVector& b) { return dot(a, ell) < dot(b, ell); });
  // Keep only irreducible elements: g is reducible iff g - h ∈ Q for an
  // irreducible h of smaller grading. Decompositions into generators refine
  // into irreducibles, so k_u is unchanged.
  const auto& normals = q.cone().facet_normals();
  fast_ = true;
  std::vector<std::vector<long>> ys;
  for (const auto& g : gens_) {
    auto y = facet_coordinates(normals, g);
    if (!y) {
      fast_ = false;
      break;
    }
    ys.push_back(std::move(*y));
  }
  std::vector<LatticeVector> irreducible;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    bool reducible = false;
    for (std::size_t h = 0; h < irreducible.size() && !reducible; ++h) {
      if (fast_) {
        const auto& yh = gens_y_[h];
        reducible = true;
        for (std::size_t j = 0; j < yh.size(); ++j)
          if (yh[j] > ys[i][j]) {
            reducible = false;
            break;
          }
      } else {
        reducible = q.cone().contains(gens_[i] - irreducible[h]);
      }
    }
    if (!reducible) {
      irreducible.push_back(gens_[i]);
      if (fast_) gens_y_.push_back(ys[i]);
    }
  }
  gens_ = std::move(irreducible);
}

long k_u(const DualConeData& q, const LatticeVector& u, KuMemo& memo) {
  require_in_cone(q, u);
  memo.prepare(q);
  const auto& gens = memo.gens_;
  const LatticeVector& ell = q.grading();
  const Integer min_step = dot(gens.front(), ell);

  if (memo.fast_) {
    if (auto yu = facet_coordinates(q.cone().facet_normals(), u)) {
      // In facet coordinates y = (<n_j, .>) the test u - g ∈ Q is y(g) <= y(u),
      // and sum(y) is the grading.
      const auto& gy = memo.gens_y_;
      const std::size_t f = yu->size();
      long min_sum = std::numeric_limits<long>::max();
      for (const auto& y : gy) {
        long s = 0;
        for (long x : y) s += x;
        min_sum = std::min(min_sum, s);
      }
      std::function<long(const std::vector<long>&)> solve = [&](const std::vector<long>& y) -> long {
        long total = 0;
        for (long x : y) total += x;
        if (total == 0) return 0;
        auto it = memo.fast_values_.find(y);
        if (it != memo.fast_values_.end()) return it->second;
        const long cap = total / min_sum;
        long best = 0;
        std::vector<long> rest(f);
        for (const auto& g : gy) {
          bool fits = true;
          for (std::size_t j = 0; j < f; ++j) {
            rest[j] = y[j] - g[j];
            if (rest[j] < 0) {
              fits = false;
              break;
            }
          }
          if (!fits) continue;
          best = std::max(best, 1 + solve(rest));
          if (best >= cap) break;
        }
        memo.fast_values_.emplace(y, best);
        return best;
      };
      return solve(*yu);
    }
  }

  std::function<long(const LatticeVector&)> solve = [&](const LatticeVector& x) -> long {
    if (is_zero(x)) return 0;
    auto it = memo.values_.find(x);
    if (it != memo.values_.end()) return it->second;
    long cap = Integer(dot(x, ell) / min_step).get_si();
    long best = 0;
    for (const auto& g : gens) {
      LatticeVector rest = x - g;
      if (!q.cone().contains(rest)) continue;
      best = std::max(best, 1 + solve(rest));
      if (best >= cap) break;
    }
    memo.values_.emplace(x, best);
    return best;
  };
  return solve(u);
}

GammaResult gamma_q_detailed(const DualConeData& q) {
  KuMemo memo;
  return gamma_q_detailed(q, memo);
}

GammaResult gamma_q_detailed(const DualConeData& q, KuMemo& memo) {
  auto box = box_points(q);
  GammaResult res{Rational(0), zero_lattice(q.dim()), box.size()};
  memo.prepare(q, box);
  for (const auto& u : box) {
    if (is_zero(u)) continue;
    Rational w = w_max(q, u);
    if (w - 1 <= res.gamma) continue;  // k_u >= 1 for u != 0
    Rational cand = w - k_u(q, u, memo);
    if (cand > res.gamma) {
      res.gamma = cand;
      res.argmax = u;
    }
  }
  return res;
}

Rational gamma_q(const DualConeData& q) { return gamma_q_detailed(q).gamma; }

Rational gamma_x(const Fan& fan) {
  Rational best = 0;
  for (std::size_t i = 0; i < fan.num_cones(); ++i) {
    if (!fan.cone(i).is_full_dimensional()) {
      throw Error(ErrorKind::NotFullDimensional,
                  "maximal cone " + std::to_string(i) + " is not top-dimensional; Γ_X is undefined");
    }
    best = std::max(best, gamma_q(DualConeData::dual_of(fan.cone(i))));
  }
  return best;
}

std::vector<LatticeVector> quotient_basis_exponents(const DualConeData& q, long k, KuMemo& memo) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "quotient basis needs k >= 1");
  if (k == 1) return {zero_lattice(q.dim())};
  return quotient_basis_exponents(q, k, memo, gamma_q_detailed(q, memo).gamma);
}

std::vector<LatticeVector> quotient_basis_exponents(const DualConeData& q, long k, KuMemo& memo,
                                                    const Rational& gamma) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "quotient basis needs k >= 1");
  const std::size_t d = q.dim();
  Rational bound = Rational(k - 1) + gamma;
  if (k == 1 || bound == 0) return {zero_lattice(d)};
  std::vector<RationalVector> corners = {RationalVector(d, Rational(0))};
  for (const auto& w : q.rays()) corners.push_back(bound * to_rational(w));
  Polytope region = Polytope::from_points(corners);
  std::vector<LatticeVector> out;
  for (auto& e : lattice_points(region)) {
    if (w_max(q, e) > bound) continue;
    if (k_u(q, e, memo) < k) out.push_back(std::move(e));
  }
  return out;
}

std::vector<LatticeVector> quotient_basis_exponents(const DualConeData& q, long k) {
  KuMemo memo;
  return quotient_basis_exponents(q, k, memo);
}

}  // namespace toricjet
